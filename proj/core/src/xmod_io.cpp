#include "xmod/xmod_io.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

#include "xmod/errors.hpp"

namespace xmod {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

class Reader {
 public:
  explicit Reader(std::string_view text) {
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++number;
      auto tokens = split_ws(text.substr(start, end - start));
      if (!tokens.empty() && tokens.front().front() != '#') lines_.push_back({number, std::move(tokens)});
      last_line_ = number;
      start = end + 1;
    }
  }

  const Line& next(const std::string& field) {
    if (pos_ >= lines_.size()) throw ParseError(last_line_, field, "unexpected end of input");
    return lines_[pos_++];
  }
  bool done() const { return pos_ >= lines_.size(); }
  const Line& peek() const { return lines_[pos_]; }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  std::size_t last_line_ = 0;
};

std::size_t to_index(std::string_view token, std::size_t line, const std::string& field) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(line, field, "expected a non-negative integer, got '" + std::string(token) + "'");
  return value;
}

std::vector<Element> read_row(Reader& in, const std::string& field, std::size_t width, std::size_t bound) {
  const Line& line = in.next(field);
  if (line.tokens.size() != width)
    throw ParseError(line.number, field,
                     "expected " + std::to_string(width) + " entries, got " + std::to_string(line.tokens.size()));
  std::vector<Element> row;
  row.reserve(width);
  for (auto tok : line.tokens) {
    const std::size_t v = to_index(tok, line.number, field);
    if (v >= bound)
      throw ParseError(line.number, field, "entry " + std::to_string(v) + " out of range [0, " + std::to_string(bound) + ")");
    row.push_back(static_cast<Element>(v));
  }
  return row;
}

void expect_keyword(const Line& line, std::string_view keyword, std::size_t arity) {
  if (line.tokens.front() != keyword || line.tokens.size() != arity + 1)
    throw ParseError(line.number, std::string(keyword),
                     "expected '" + std::string(keyword) + (arity ? " <order>'" : "'"));
}

CayleyTable read_table(Reader& in, const std::string& section) {
  const Line& header = in.next(section);
  expect_keyword(header, section, 1);
  const std::size_t order = to_index(header.tokens[1], header.number, section);
  if (order == 0) throw ParseError(header.number, section, "order must be positive");
  CayleyTable table;
  for (std::size_t r = 0; r < order; ++r)
    table.push_back(read_row(in, section + " row " + std::to_string(r), order, order));
  return table;
}

}  // namespace

CrossedModuleTables parse_crossed_module(std::string_view text) {
  Reader in(text);
  const Line& header = in.next("header");
  if (header.tokens.size() != 2 || header.tokens[0] != "xmod" || header.tokens[1] != "v1")
    throw ParseError(header.number, "header", "expected 'xmod v1'");

  CrossedModuleTables t;
  t.base = read_table(in, "base");
  t.fiber = read_table(in, "fiber");
  expect_keyword(in.next("boundary"), "boundary", 0);
  t.boundary = read_row(in, "boundary", t.fiber.size(), t.base.size());
  expect_keyword(in.next("action"), "action", 0);
  for (std::size_t g = 0; g < t.base.size(); ++g)
    t.action.push_back(read_row(in, "action row " + std::to_string(g), t.fiber.size(), t.fiber.size()));
  if (!in.done()) throw ParseError(in.peek().number, "trailer", "unexpected content after action section");
  return t;
}

std::string write_crossed_module(const CrossedModuleTables& t) {
  std::ostringstream out;
  auto row = [&](const std::vector<Element>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? " " : "") << r[i];
    out << '\n';
  };
  out << "xmod v1\n";
  out << "base " << t.base.size() << '\n';
  for (const auto& r : t.base) row(r);
  out << "fiber " << t.fiber.size() << '\n';
  for (const auto& r : t.fiber) row(r);
  out << "boundary\n";
  row(t.boundary);
  out << "action\n";
  for (const auto& r : t.action) row(r);
  return out.str();
}

}  // namespace xmod
