#include "xmod/movie.hpp"

#include <algorithm>
#include <set>

namespace xmod {

namespace {

class Replay {
 public:
  Replay(const DiagramState& state, const Event& ev) : s_(state), ev_(ev) { ++s_.events_applied; }

  DiagramState run() && {
    if (s_.ended) fail("event after end");
    std::visit([this](const auto& e) { apply(e); }, ev_.data);
    return std::move(s_);
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ReplayError(s_.events_applied, ev_.line, message);
  }

  const FreeWord& strand(const std::string& id) const {
    auto it = s_.strand_arcs.find(id);
    if (it == s_.strand_arcs.end()) fail("no live strand arc '" + id + "'");
    return it->second;
  }

  const BandArc& band(const std::string& id) const {
    auto it = s_.band_arcs.find(id);
    if (it == s_.band_arcs.end()) fail("no live band '" + id + "'");
    return it->second;
  }

  void require_fresh_arc(const std::string& id) const {
    if (s_.strand_arcs.count(id) || s_.band_arcs.count(id)) fail("arc id '" + id + "' is already live");
  }

  void require_fresh_generator(const std::string& id) const {
    const auto& p = s_.emitted;
    if (p.has_generator(id) || p.find_cell(id)) fail("generator id '" + id + "' is already used");
  }

  FreeWord band_boundary(const BandArc& b) const { return boundary_of_crossed_word(s_.emitted, b.label); }

  void set_band(const std::string& source, const std::optional<std::string>& out, CrossedWord label) {
    BandArc b{std::move(label), band(source).cell};
    if (out) {
      require_fresh_arc(*out);
      s_.band_arcs.emplace(*out, std::move(b));
    } else {
      s_.band_arcs[source] = std::move(b);
    }
  }

  void apply(const Birth& e) {
    require_fresh_arc(e.arc);
    require_fresh_generator(e.generator);
    s_.emitted.generators.push_back(e.generator);
    s_.strand_arcs.emplace(e.arc, FreeWord::generator(e.generator));
    ++s_.births;
  }

  void apply(const Cross& e) {
    const FreeWord& over = strand(e.over);
    const FreeWord& in = strand(e.in);
    const FreeWord label = e.sign > 0 ? over.inverse() * in * over : over * in * over.inverse();
    if (e.in == e.over) fail("an arc cannot cross itself");

    auto live = s_.strand_arcs.find(e.out);
    if (live == s_.strand_arcs.end()) {
      require_fresh_arc(e.out);
      s_.strand_arcs.emplace(e.out, label);
      s_.crossings.push_back({e.over, e.in, e.out});
      return;
    }
    if (live->second != label)
      fail("undoing into '" + e.out + "' needs label " + live->second.to_string() + ", got " + label.to_string());
    for (const auto& c : s_.crossings)
      if (c.over == e.in) fail("arc '" + e.in + "' still passes over another crossing");
    std::erase_if(s_.crossings, [&](const Crossing& c) { return c.in == e.in || c.out == e.in; });
    s_.strand_arcs.erase(e.in);
  }

  void apply(const StrandBand& e) {
    const BandArc& b = band(e.band);
    switch (e.rule) {
      case 1:
      case 3: {
        if (!e.out) fail("strand rule needs out=");
        const FreeWord d = band_boundary(b);
        const FreeWord& x = strand(e.strand);
        FreeWord label = e.rule == 1 ? d * x * d.inverse() : d.inverse() * x * d;
        require_fresh_arc(*e.out);
        s_.strand_arcs.emplace(*e.out, std::move(label));
        break;
      }
      case 4:
        set_band(e.band, e.out, b.label.acted_on_by(strand(e.strand).inverse()));
        break;
      case 6:
        set_band(e.band, e.out, b.label.acted_on_by(strand(e.strand)));
        break;
      default:
        fail("rule " + std::to_string(e.rule) + " is not a strand/band rule");
    }
  }

  void apply(const BandBand& e) {
    if (e.mover == e.fixed) fail("a band cannot pass under itself");
    const CrossedWord& f = band(e.mover).label;
    const CrossedWord& fixed = band(e.fixed).label;
    switch (e.rule) {
      case 2: set_band(e.mover, e.out, fixed * f * fixed.inverse()); break;
      case 5: set_band(e.mover, e.out, fixed.inverse() * f * fixed); break;
      default: fail("rule " + std::to_string(e.rule) + " is not a band/band rule");
    }
  }

  void apply(const Saddle& e) {
    const FreeWord boundary = strand(e.u) * strand(e.v).inverse();
    require_fresh_generator(e.cell);
    s_.emitted.cells.push_back({e.cell, boundary});

    std::vector<std::pair<std::string, FreeWord>> pieces;
    std::map<std::string, std::string> first_piece;
    for (const auto& m : e.merged) {
      if (m.source != e.u && m.source != e.v) fail("merged arc '" + m.arc + "' must come from u or v");
      pieces.emplace_back(m.arc, strand(m.source));
      first_piece.emplace(m.source, m.arc);
    }
    for (const auto& [source, piece] : first_piece) {
      s_.strand_arcs.erase(source);
      for (auto& c : s_.crossings)
        for (std::string* end : {&c.over, &c.in, &c.out})
          if (*end == source) *end = piece;
    }
    for (auto& [arc, label] : pieces) {
      require_fresh_arc(arc);
      s_.strand_arcs.emplace(arc, std::move(label));
    }
    require_fresh_arc(e.band);
    s_.band_arcs.emplace(e.band, BandArc{CrossedWord::cell(e.cell), e.cell});
  }

  void apply(const Death& e) {
    const std::set<std::string> circle(e.circle.begin(), e.circle.end());
    if (circle.size() != e.circle.size()) fail("circle lists an arc twice");
    for (const auto& a : circle) strand(a);
    for (const auto& c : s_.crossings) {
      const int inside = circle.count(c.over) + circle.count(c.in) + circle.count(c.out);
      if (inside != 0 && inside != 3)
        fail("crossing of '" + c.in + "' under '" + c.over + "' links the circle to another strand");
    }
    std::erase_if(s_.crossings, [&](const Crossing& c) { return circle.count(c.over) != 0; });
    for (const auto& a : circle) s_.strand_arcs.erase(a);

    CrossedWord relation;
    for (const auto& t : e.spanner) {
      for (const Letter& l : t.conjugator.letters())
        if (!s_.emitted.has_generator(l.generator)) fail("conjugator uses unknown generator '" + l.generator + "'");
      const CrossedWord moved = band(t.band).label.acted_on_by(t.conjugator);
      relation = relation * (t.sign > 0 ? moved : moved.inverse());
    }
    const FreeWord b = boundary_of_crossed_word(s_.emitted, relation);
    if (!b.empty()) fail("death relation has boundary " + b.to_string() + ", expected 1");

    if (relation.empty()) return;
    const CrossedWord inverse = relation.inverse();
    for (const auto& r : s_.emitted.relations)
      if (r == relation || r == inverse) return;
    s_.emitted.relations.push_back(std::move(relation));
  }

  void apply(const End&) {
    if (!s_.strand_arcs.empty()) fail("strand arc '" + s_.strand_arcs.begin()->first + "' is still alive at end");
    s_.ended = true;
  }

  DiagramState s_;
  const Event& ev_;
};

}  // namespace

DiagramState apply_event(const DiagramState& state, const Event& ev) { return Replay(state, ev).run(); }

CompiledComplement compile_movie(const MovieScript& script) {
  DiagramState state;
  for (const Event& ev : script.events) state = apply_event(state, ev);
  if (!state.ended) throw ReplayError(state.events_applied + 1, 0, "script has no end event");
  return {std::move(state.emitted), state.births};
}

}  // namespace xmod
