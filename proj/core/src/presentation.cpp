#include "xmod/presentation.hpp"

#include <algorithm>
#include <set>

#include "xmod/errors.hpp"

namespace xmod {

const CellGenerator* CrossedPresentation::find_cell(std::string_view name) const {
  auto it = std::find_if(cells.begin(), cells.end(), [&](const CellGenerator& c) { return c.name == name; });
  return it == cells.end() ? nullptr : &*it;
}

bool CrossedPresentation::has_generator(std::string_view name) const {
  return std::find(generators.begin(), generators.end(), name) != generators.end();
}

FreeWord boundary_of_crossed_word(const CrossedPresentation& p, const CrossedWord& cw) {
  FreeWord result;
  for (const CrossedTerm& t : cw.terms()) {
    const CellGenerator* cell = p.find_cell(t.cell);
    if (!cell) throw PreconditionError("unknown cell '" + t.cell + "'");
    FreeWord factor = cell->boundary.conjugated_by(t.conjugator);
    result = result * (t.sign > 0 ? factor : factor.inverse());
  }
  return result;
}

ValidationReport validate_presentation(const CrossedPresentation& p) {
  ValidationReport report;
  std::set<std::string> seen;
  auto check_id = [&](const std::string& id, const char* kind) {
    if (!is_identifier(id)) report.add("id-syntax", {id}, std::string(kind) + " id is not an identifier");
    if (!seen.insert(id).second) report.add("id-duplicate", {id}, std::string(kind) + " id declared twice");
  };
  for (const auto& g : p.generators) check_id(g, "generator");
  for (const auto& c : p.cells) check_id(c.name, "cell");

  auto check_word = [&](const FreeWord& w, const std::string& where) {
    for (const Letter& l : w.letters())
      if (!p.has_generator(l.generator)) report.add("unknown-generator", {l.generator, where});
  };
  for (const auto& c : p.cells) check_word(c.boundary, "bnd " + c.name);

  for (std::size_t r = 0; r < p.relations.size(); ++r) {
    const std::string where = "rel " + std::to_string(r);
    bool cells_known = true;
    for (const auto& t : p.relations[r].terms()) {
      check_word(t.conjugator, where);
      if (!p.find_cell(t.cell)) {
        report.add("unknown-cell", {t.cell, where});
        cells_known = false;
      }
    }
    if (!cells_known) continue;
    const FreeWord b = boundary_of_crossed_word(p, p.relations[r]);
    if (!b.empty()) report.add("relation-boundary", {where, b.to_string()}, "relation boundary is not trivial");
  }
  return report;
}

namespace {

std::vector<std::string> all_ids(const CrossedPresentation& p) {
  std::vector<std::string> ids = p.generators;
  for (const auto& c : p.cells) ids.push_back(c.name);
  return ids;
}

}  // namespace

CrossedPresentation free_product(const CrossedPresentation& first, const CrossedPresentation& second) {
  const auto taken_list = all_ids(first);
  const std::set<std::string> taken(taken_list.begin(), taken_list.end());
  const auto incoming = all_ids(second);

  std::string suffix;
  for (int k = 2;; ++k) {
    suffix = "." + std::to_string(k);
    bool clash = false;
    for (const auto& id : incoming) clash = clash || taken.count(id + suffix);
    if (!clash) break;
  }
  auto rename = [&](const std::string& id) { return id + suffix; };
  auto rename_word = [&](const FreeWord& w) {
    std::vector<Letter> raw;
    for (const Letter& l : w.letters()) raw.push_back({rename(l.generator), l.exponent});
    return FreeWord::reduce(raw);
  };

  CrossedPresentation out = first;
  for (const auto& g : second.generators) out.generators.push_back(rename(g));
  for (const auto& c : second.cells) out.cells.push_back({rename(c.name), rename_word(c.boundary)});
  for (const auto& r : second.relations) {
    std::vector<CrossedTerm> terms;
    for (const auto& t : r.terms()) terms.push_back({rename_word(t.conjugator), rename(t.cell), t.sign});
    out.relations.emplace_back(std::move(terms));
  }
  return out;
}

CrossedPresentation stabilize(const CrossedPresentation& p) {
  const auto ids = all_ids(p);
  const std::set<std::string> taken(ids.begin(), ids.end());
  int k = 1;
  while (taken.count("S" + std::to_string(k)) || taken.count("s" + std::to_string(k))) ++k;
  CrossedPresentation out = p;
  const std::string gen = "S" + std::to_string(k);
  out.generators.push_back(gen);
  out.cells.push_back({"s" + std::to_string(k), FreeWord::generator(gen)});
  return out;
}

CrossedPresentation free_disk_presentation() {
  return CrossedPresentation{{"X"}, {{"e", FreeWord::generator("X")}}, {}};
}

}  // namespace xmod
