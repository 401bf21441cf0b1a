#include "xmod/word.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include "xmod/errors.hpp"

namespace xmod {

bool is_identifier(std::string_view id) {
  if (id.empty()) return false;
  auto head = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
  auto tail = [&](char c) { return head(c) || (c >= '0' && c <= '9') || c == '.' || c == '\''; };
  return head(id.front()) && std::all_of(id.begin() + 1, id.end(), tail);
}

FreeWord FreeWord::reduce(std::span<const Letter> raw) {
  FreeWord w;
  for (const Letter& l : raw) {
    const int unit = l.exponent > 0 ? 1 : -1;
    for (int k = 0; k < std::abs(l.exponent); ++k) {
      auto& out = w.letters_;
      if (!out.empty() && out.back().generator == l.generator && out.back().exponent == -unit)
        out.pop_back();
      else
        out.push_back({l.generator, unit});
    }
  }
  return w;
}

FreeWord reduce_free_word(std::span<const Letter> raw, std::span<const std::string> alphabet) {
  for (const Letter& l : raw)
    if (std::find(alphabet.begin(), alphabet.end(), l.generator) == alphabet.end())
      throw PreconditionError("unknown generator '" + l.generator + "'");
  return FreeWord::reduce(raw);
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back({it->generator, -it->exponent});
  return w;
}

FreeWord FreeWord::conjugated_by(const FreeWord& w) const { return w * *this * w.inverse(); }

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  std::vector<Letter> raw = a.letters_;
  raw.insert(raw.end(), b.letters_.begin(), b.letters_.end());
  return FreeWord::reduce(raw);
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (const Letter& l : letters_) {
    if (!out.empty()) out += ' ';
    out += l.generator;
    if (l.exponent < 0) out += "^-1";
  }
  return out;
}

FreeWord parse_free_word(std::string_view text, std::size_t line, const std::string& field) {
  std::vector<Letter> raw;
  std::size_t i = 0;
  bool identity_token = false;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t') ++j;
    const std::string_view token = text.substr(i, j - i);
    i = j;

    if (token == "1") {
      identity_token = true;
      continue;
    }
    const std::size_t caret = token.find('^');
    const std::string_view id = token.substr(0, caret);
    if (!is_identifier(id)) throw ParseError(line, field, "bad generator '" + std::string(token) + "'");
    int exponent = 1;
    if (caret != std::string_view::npos) {
      const std::string_view exp = token.substr(caret + 1);
      auto [ptr, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), exponent);
      if (ec != std::errc{} || ptr != exp.data() + exp.size())
        throw ParseError(line, field, "bad exponent in '" + std::string(token) + "'");
    }
    raw.push_back({std::string(id), exponent});
  }
  if (identity_token && !raw.empty()) throw ParseError(line, field, "'1' must stand alone");
  return FreeWord::reduce(raw);
}

CrossedWord::CrossedWord(std::vector<CrossedTerm> terms) : terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.sign != 1 && t.sign != -1) throw PreconditionError("crossed word term sign must be +1 or -1");
}

CrossedWord CrossedWord::cell(std::string id) { return CrossedWord({{FreeWord{}, std::move(id), 1}}); }

CrossedWord CrossedWord::inverse() const {
  CrossedWord w;
  w.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) w.terms_.push_back({it->conjugator, it->cell, -it->sign});
  return w;
}

CrossedWord CrossedWord::acted_on_by(const FreeWord& w) const {
  CrossedWord out = *this;
  for (auto& t : out.terms_) t.conjugator = w * t.conjugator;
  return out;
}

CrossedWord operator*(const CrossedWord& a, const CrossedWord& b) {
  CrossedWord out = a;
  out.terms_.insert(out.terms_.end(), b.terms_.begin(), b.terms_.end());
  return out;
}

std::string CrossedWord::to_string() const {
  if (terms_.empty()) return "1";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += ' ';
    out += "(" + t.conjugator.to_string() + " ; " + t.cell + " ; " + (t.sign > 0 ? "+" : "-") + ")";
  }
  return out;
}

}  // namespace xmod
