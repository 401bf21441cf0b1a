#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "xmod/errors.hpp"
#include "xmod/presentation.hpp"

namespace xmod {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_ids(std::string_view s, std::size_t line, const std::string& field) {
  std::vector<std::string> ids;
  std::istringstream in{std::string(s)};
  std::string id;
  while (in >> id) {
    if (!is_identifier(id)) throw ParseError(line, field, "bad identifier '" + id + "'");
    ids.push_back(id);
  }
  return ids;
}

int parse_sign(std::string_view s, std::size_t line, const std::string& field) {
  s = trim(s);
  if (s == "+" || s == "+1") return 1;
  if (s == "-" || s == "-1") return -1;
  throw ParseError(line, field, "sign must be + or -, got '" + std::string(s) + "'");
}

CrossedWord parse_crossed_word(std::string_view s, std::size_t line, const std::string& field) {
  s = trim(s);
  if (s == "1" || s.empty()) return {};
  std::vector<CrossedTerm> terms;
  while (!s.empty()) {
    if (s.front() != '(') throw ParseError(line, field, "expected '(' to open a term");
    const std::size_t close = s.find(')');
    if (close == std::string_view::npos) throw ParseError(line, field, "unterminated term");
    const std::string_view body = s.substr(1, close - 1);
    const std::size_t a = body.find(';');
    const std::size_t b = a == std::string_view::npos ? a : body.find(';', a + 1);
    if (b == std::string_view::npos || body.find(';', b + 1) != std::string_view::npos)
      throw ParseError(line, field, "term must read (conjugator ; cell ; sign)");
    const std::string cell(trim(body.substr(a + 1, b - a - 1)));
    if (!is_identifier(cell)) throw ParseError(line, field, "bad cell id '" + cell + "'");
    terms.push_back({parse_free_word(body.substr(0, a), line, field), cell, parse_sign(body.substr(b + 1), line, field)});
    s = trim(s.substr(close + 1));
  }
  return CrossedWord(std::move(terms));
}

void check_letters(const CrossedPresentation& p, const FreeWord& w, std::size_t line, const std::string& field) {
  for (const Letter& l : w.letters())
    if (!p.has_generator(l.generator)) throw ParseError(line, field, "undeclared generator '" + l.generator + "'");
}

}  // namespace

PresentationFile parse_presentation(std::string_view text) {
  PresentationFile file;
  CrossedPresentation& p = file.presentation;
  enum class Stage { header, gens, cells, body } stage = Stage::header;
  std::set<std::string> bounded;

  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    const std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    if (line.empty() || line.front() == '#') continue;

    const std::size_t space = line.find_first_of(" \t");
    const std::string_view keyword = line.substr(0, space);
    const std::string_view rest = space == std::string_view::npos ? std::string_view{} : trim(line.substr(space));

    switch (stage) {
      case Stage::header:
        if (keyword != "pres" || rest != "v1") throw ParseError(number, "header", "expected 'pres v1'");
        stage = Stage::gens;
        continue;
      case Stage::gens:
        if (keyword != "gens") throw ParseError(number, "gens", "expected 'gens ...'");
        p.generators = split_ids(rest, number, "gens");
        stage = Stage::cells;
        continue;
      case Stage::cells:
        if (keyword != "cells") throw ParseError(number, "cells", "expected 'cells ...'");
        for (auto& id : split_ids(rest, number, "cells")) p.cells.push_back({id, {}});
        stage = Stage::body;
        continue;
      case Stage::body:
        break;
    }

    if (keyword == "bnd") {
      const std::size_t eq = rest.find('=');
      if (eq == std::string_view::npos) throw ParseError(number, "bnd", "expected 'bnd <cell> = <word>'");
      const std::string cell(trim(rest.substr(0, eq)));
      auto it = std::find_if(p.cells.begin(), p.cells.end(), [&](const CellGenerator& c) { return c.name == cell; });
      if (it == p.cells.end()) throw ParseError(number, "bnd", "undeclared cell '" + cell + "'");
      if (!bounded.insert(cell).second) throw ParseError(number, "bnd", "second boundary for '" + cell + "'");
      it->boundary = parse_free_word(rest.substr(eq + 1), number, "bnd " + cell);
      check_letters(p, it->boundary, number, "bnd " + cell);
    } else if (keyword == "rel") {
      if (rest.empty() || rest.front() != '=') throw ParseError(number, "rel", "expected 'rel = <terms>'");
      CrossedWord r = parse_crossed_word(rest.substr(1), number, "rel");
      for (const auto& t : r.terms()) {
        if (!p.find_cell(t.cell)) throw ParseError(number, "rel", "undeclared cell '" + t.cell + "'");
        check_letters(p, t.conjugator, number, "rel");
      }
      p.relations.push_back(std::move(r));
    } else if (keyword == "one_handles") {
      long long v = 0;
      auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
      if (ec != std::errc{} || ptr != rest.data() + rest.size() || v < 0)
        throw ParseError(number, "one_handles", "expected a non-negative integer");
      if (file.one_handles) throw ParseError(number, "one_handles", "given twice");
      file.one_handles = v;
    } else {
      throw ParseError(number, std::string(keyword), "unknown keyword");
    }
  }

  if (stage != Stage::body)
    throw ParseError(number, stage == Stage::header ? "header" : stage == Stage::gens ? "gens" : "cells",
                     "unexpected end of input");
  for (const auto& c : p.cells)
    if (!bounded.count(c.name)) throw ParseError(number, "bnd", "missing boundary for cell '" + c.name + "'");
  return file;
}

std::string print_presentation(const CrossedPresentation& p, std::optional<long long> one_handles) {
  std::ostringstream out;
  out << "pres v1\n";
  out << "gens";
  for (const auto& g : p.generators) out << ' ' << g;
  out << "\ncells";
  for (const auto& c : p.cells) out << ' ' << c.name;
  out << '\n';
  for (const auto& c : p.cells) out << "bnd " << c.name << " = " << c.boundary.to_string() << '\n';
  for (const auto& r : p.relations) out << "rel = " << r.to_string() << '\n';
  if (one_handles) out << "one_handles " << *one_handles << '\n';
  return out.str();
}

}  // namespace xmod
