#include <charconv>
#include <map>

#include "xmod/movie.hpp"

namespace xmod {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = s.find(sep, start);
    parts.push_back(trim(s.substr(start, at - start)));
    if (at == std::string_view::npos) return parts;
    start = at + 1;
  }
}

std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

class LineParser {
 public:
  LineParser(std::size_t line, std::string_view keyword) : line_(line), keyword_(keyword) {}

  [[noreturn]] void fail(const std::string& field, const std::string& message) const {
    throw ParseError(line_, field, message);
  }

  std::string id(std::string_view token, const std::string& field) const {
    if (!is_identifier(token)) fail(field, "bad identifier '" + std::string(token) + "'");
    return std::string(token);
  }

  int sign(std::string_view token, const std::string& field) const {
    if (token == "+" || token == "+1") return 1;
    if (token == "-" || token == "-1") return -1;
    fail(field, "sign must be + or -, got '" + std::string(token) + "'");
  }

  int rule(std::string_view token) const {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) fail(keyword_, "rule id must be an integer");
    return value;
  }

  /// Reads `key=value` tokens; every key must be in `allowed`.
  void read_keys(const std::vector<std::string_view>& tokens, std::size_t from,
                 std::initializer_list<std::string_view> allowed) {
    for (std::size_t i = from; i < tokens.size(); ++i) {
      const std::size_t eq = tokens[i].find('=');
      if (eq == std::string_view::npos) fail(keyword_, "expected key=value, got '" + std::string(tokens[i]) + "'");
      const std::string key(tokens[i].substr(0, eq));
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) fail(key, "unknown argument");
      if (!keys_.emplace(key, tokens[i].substr(eq + 1)).second) fail(key, "given twice");
    }
  }

  std::string required(const std::string& key) const {
    auto it = keys_.find(key);
    if (it == keys_.end()) fail(key, "missing argument");
    return id(it->second, key);
  }

  std::optional<std::string> optional(const std::string& key) const {
    if (!keys_.count(key)) return std::nullopt;
    return required(key);
  }

  std::optional<std::string_view> raw(const std::string& key) const {
    auto it = keys_.find(key);
    if (it == keys_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t line() const { return line_; }
  const std::string& keyword() const { return keyword_; }

 private:
  std::size_t line_;
  std::string keyword_;
  std::map<std::string, std::string_view> keys_;
};

std::vector<SpannerTerm> parse_spanner(std::string_view text, const LineParser& lp) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    lp.fail("spanner", "expected [(band,conjugator,sign);...]");
  text = trim(text.substr(1, text.size() - 2));
  std::vector<SpannerTerm> terms;
  if (text.empty()) return terms;
  for (std::string_view item : split(text, ';')) {
    if (item.size() < 2 || item.front() != '(' || item.back() != ')')
      lp.fail("spanner", "term must read (band,conjugator,sign)");
    const auto fields = split(item.substr(1, item.size() - 2), ',');
    if (fields.size() != 3) lp.fail("spanner", "term must read (band,conjugator,sign)");
    terms.push_back({lp.id(fields[0], "spanner"), parse_free_word(fields[1], lp.line(), "spanner"),
                     lp.sign(fields[2], "spanner")});
  }
  return terms;
}

EventData parse_event(std::string_view line, std::size_t number) {
  std::string_view spanner_text;
  bool has_spanner = false;
  if (const std::size_t at = line.find("spanner="); at != std::string_view::npos) {
    spanner_text = line.substr(at + 8);
    line = trim(line.substr(0, at));
    has_spanner = true;
  }
  const auto tokens = words(line);
  LineParser lp(number, std::string(tokens.front()));
  const std::string& kw = lp.keyword();
  if (has_spanner && kw != "death") lp.fail("spanner", "only death takes a spanner");

  auto positional = [&](std::size_t count, const char* what) {
    if (tokens.size() < 1 + count) lp.fail(kw, std::string("missing ") + what);
  };

  if (kw == "birth") {
    positional(1, "arc id");
    lp.read_keys(tokens, 2, {"gen"});
    std::string arc = lp.id(tokens[1], "birth");
    std::string gen = lp.optional("gen").value_or(arc);
    return Birth{std::move(arc), std::move(gen)};
  }
  if (kw == "cross") {
    positional(1, "sign");
    lp.read_keys(tokens, 2, {"over", "in", "out"});
    return Cross{lp.sign(tokens[1], "cross"), lp.required("over"), lp.required("in"), lp.required("out")};
  }
  if (kw == "sb") {
    positional(1, "rule id");
    lp.read_keys(tokens, 2, {"band", "strand", "out"});
    const int rule = lp.rule(tokens[1]);
    if (rule != 1 && rule != 3 && rule != 4 && rule != 6) lp.fail("sb", "strand/band rules are 1, 3, 4, 6");
    return StrandBand{rule, lp.required("band"), lp.required("strand"), lp.optional("out")};
  }
  if (kw == "bb") {
    positional(1, "rule id");
    lp.read_keys(tokens, 2, {"mover", "fixed", "out"});
    const int rule = lp.rule(tokens[1]);
    if (rule != 2 && rule != 5) lp.fail("bb", "band/band rules are 2, 5");
    return BandBand{rule, lp.required("mover"), lp.required("fixed"), lp.optional("out")};
  }
  if (kw == "saddle") {
    lp.read_keys(tokens, 1, {"cell", "u", "v", "band", "merged"});
    Saddle s{lp.required("cell"), lp.required("u"), lp.required("v"), lp.required("band"), {}};
    if (auto merged = lp.raw("merged")) {
      for (std::string_view item : split(*merged, ',')) {
        const std::size_t colon = item.find(':');
        std::string arc = lp.id(item.substr(0, colon), "merged");
        std::string source = colon == std::string_view::npos ? s.u : lp.id(item.substr(colon + 1), "merged");
        s.merged.push_back({std::move(arc), std::move(source)});
      }
    }
    return s;
  }
  if (kw == "death") {
    lp.read_keys(tokens, 1, {"circle"});
    auto circle = lp.raw("circle");
    if (!circle) lp.fail("circle", "missing argument");
    Death d;
    for (std::string_view arc : split(*circle, ',')) d.circle.push_back(lp.id(arc, "circle"));
    if (has_spanner) d.spanner = parse_spanner(spanner_text, lp);
    return d;
  }
  if (kw == "end") {
    if (tokens.size() != 1) lp.fail("end", "takes no arguments");
    return End{};
  }
  lp.fail(kw, "unknown keyword");
}

}  // namespace

MovieScript parse_movie_script(std::string_view text, std::string name) {
  MovieScript script{std::move(name), {}};
  std::size_t number = 0;
  std::size_t start = 0;
  bool ended = false;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    const std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    if (line.empty() || line.front() == '#') continue;
    if (ended) throw ParseError(number, "end", "event after end");
    script.events.push_back({parse_event(line, number), number});
    ended = script.events.back().kind() == EventKind::end;
  }
  if (!ended) throw ParseError(number, "end", "missing end");
  return script;
}

}  // namespace xmod
