#include "instances.hpp"

#include <cstdlib>
#include <functional>

namespace xmod::testing {

std::uint64_t test_seed() {
  if (const char* raw = std::getenv("XMOD_TEST_SEED")) return std::strtoull(raw, nullptr, 10);
  return kDefaultSeed;
}

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

int random_sign(Rng& rng) { return coin(rng) ? 1 : -1; }

CrossedWord random_block(Rng& rng, const CrossedPresentation& p) {
  const auto& cells = p.cells;
  auto pick = [&]() -> const CellGenerator& { return cells[uniform(rng, 0, cells.size() - 1)]; };
  auto word = [&] { return random_word(rng, p.generators, 2); };

  std::vector<const CellGenerator*> flat;
  for (const auto& c : cells)
    if (c.boundary.empty()) flat.push_back(&c);
  std::vector<std::pair<const CellGenerator*, const CellGenerator*>> twins;
  for (const auto& a : cells)
    for (const auto& b : cells)
      if (&a != &b && a.boundary == b.boundary) twins.emplace_back(&a, &b);

  for (;;) {
    switch (uniform(rng, 0, 4)) {
      case 0:
        if (flat.empty()) break;
        return CrossedWord({{word(), flat[uniform(rng, 0, flat.size() - 1)]->name, random_sign(rng)}});
      case 1: {
        if (twins.empty()) break;
        const auto [a, b] = twins[uniform(rng, 0, twins.size() - 1)];
        const FreeWord w = word();
        return CrossedWord({{w, a->name, 1}, {w, b->name, -1}});
      }
      case 2: {
        const CellGenerator& m = pick();
        const CellGenerator& n = pick();
        const FreeWord u = word(), v = word();
        const FreeWord a = m.boundary.conjugated_by(u);
        return CrossedWord({{u, m.name, 1}, {v, n.name, 1}, {u, m.name, -1}, {a * v, n.name, -1}});
      }
      case 3: {
        const CellGenerator& m = pick();
        const FreeWord u = word();
        const int s = random_sign(rng);
        const FreeWord a = m.boundary.conjugated_by(u);
        return CrossedWord({{u, m.name, s}, {(s > 0 ? a : a.inverse()) * u, m.name, -s}});
      }
      default: {
        const CellGenerator& m = pick();
        const FreeWord u = word();
        const int s = random_sign(rng);
        return CrossedWord({{u, m.name, s}, {u, m.name, -s}});
      }
    }
  }
}

CayleyTable product_table(std::size_t n, const std::function<Element(Element, Element)>& mul) {
  CayleyTable t(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) t[a][b] = mul(a, b);
  return t;
}

CayleyTable cyclic(std::size_t n) { return build_cyclic_group(n).table(); }

/// Z2 x Z2 with index a + 2b.
CayleyTable klein() {
  return product_table(4, [](Element x, Element y) { return x ^ y; });
}

FiniteCrossedModule from_tables(CayleyTable base, CayleyTable fiber, std::vector<Element> boundary,
                                const std::function<Element(Element, Element)>& act, std::string name) {
  CrossedModuleTables t{std::move(base), std::move(fiber), std::move(boundary), {}};
  t.action.assign(t.base.size(), std::vector<Element>(t.fiber.size()));
  for (Element g = 0; g < t.base.size(); ++g)
    for (Element e = 0; e < t.fiber.size(); ++e) t.action[g][e] = act(g, e);
  return FiniteCrossedModule::create(std::move(t), std::move(name));
}

std::vector<FiniteCrossedModule> build_pool() {
  std::vector<FiniteCrossedModule> pool;
  const FiniteGroup s3 = build_symmetric_group(3);
  for (std::size_t n = 1; n <= 6; ++n)
    pool.push_back(build_conjugation_crossed_module(build_cyclic_group(n), "conj_z" + std::to_string(n)));
  pool.push_back(build_conjugation_crossed_module(s3, "conj_s3"));

  for (unsigned p : {2u, 3u, 5u, 7u})
    pool.push_back(build_group_algebra_crossed_module(build_cyclic_group(1), p, "z1_f" + std::to_string(p)));
  pool.push_back(build_group_algebra_crossed_module(build_cyclic_group(2), 2, "z2_f2"));
  pool.push_back(build_group_algebra_crossed_module(build_cyclic_group(3), 2, "z3_f2"));

  std::vector<Element> a3, s3_identity{s3.identity()};
  for (Element x = 0; x < s3.order(); ++x)
    if (s3.pow(x, 3) == s3.identity()) a3.push_back(x);
  pool.push_back(normal_subgroup_module(s3, a3, "s3_a3"));
  pool.push_back(normal_subgroup_module(s3, s3_identity, "s3_1"));
  pool.push_back(normal_subgroup_module(build_cyclic_group(4), {0, 2}, "z4_2z4"));
  pool.push_back(normal_subgroup_module(build_cyclic_group(6), {0, 2, 4}, "z6_2z6"));
  pool.push_back(normal_subgroup_module(build_cyclic_group(6), {0, 3}, "z6_3z6"));

  auto trivial_action = [](Element, Element e) { return e; };
  pool.push_back(from_tables(cyclic(2), cyclic(4), {0, 1, 0, 1}, trivial_action, "z2_z4_mod2"));
  pool.push_back(from_tables(cyclic(2), cyclic(4), {0, 0, 0, 0},
                             [](Element g, Element e) { return g ? (4 - e) % 4 : e; }, "z2_z4_inv"));
  pool.push_back(from_tables(cyclic(2), cyclic(3), {0, 0, 0},
                             [](Element g, Element e) { return g ? (3 - e) % 3 : e; }, "z2_z3_inv"));
  pool.push_back(from_tables(cyclic(4), cyclic(3), {0, 0, 0},
                             [](Element g, Element e) { return g % 2 ? (3 - e) % 3 : e; }, "z4_z3_inv"));
  pool.push_back(from_tables(cyclic(4), cyclic(2), {0, 2}, trivial_action, "z4_z2_half"));
  pool.push_back(from_tables(cyclic(6), cyclic(2), {0, 0}, trivial_action, "z6_z2_triv"));
  pool.push_back(from_tables(cyclic(1), cyclic(4), {0, 0, 0, 0}, trivial_action, "z1_z4"));
  pool.push_back(from_tables(cyclic(1), klein(), {0, 0, 0, 0}, trivial_action, "z1_klein"));
  // (a, b) -> (b, a + b) has order 3.
  auto rotate = [](Element e) -> Element { return (e >> 1) | (((e & 1) ^ (e >> 1)) << 1); };
  pool.push_back(from_tables(cyclic(3), klein(), {0, 0, 0, 0},
                             [&](Element g, Element e) {
                               for (Element k = 0; k < g; ++k) e = rotate(e);
                               return e;
                             },
                             "z3_klein_rot"));
  pool.push_back(from_tables(s3.table(), cyclic(3), {0, 0, 0},
                             [&](Element g, Element e) {
                               const bool odd = g != s3.identity() && s3.mul(g, g) == s3.identity();
                               return odd ? (3 - e) % 3 : e;
                             },
                             "s3_z3_sign"));
  return pool;
}

}  // namespace

FreeWord random_word(Rng& rng, const std::vector<std::string>& alphabet, std::size_t max_length) {
  if (alphabet.empty()) return {};
  std::vector<Letter> raw(uniform(rng, 0, max_length));
  for (auto& l : raw) l = {alphabet[uniform(rng, 0, alphabet.size() - 1)], random_sign(rng)};
  return FreeWord::reduce(raw);
}

CrossedPresentation random_presentation(Rng& rng, const PresentationBounds& bounds) {
  CrossedPresentation p;
  const std::size_t gens = uniform(rng, 0, bounds.max_generators);
  const std::size_t cells = uniform(rng, 0, bounds.max_cells);
  for (std::size_t i = 0; i < gens; ++i) p.generators.push_back("X" + std::to_string(i));
  for (std::size_t i = 0; i < cells; ++i) {
    FreeWord boundary;
    if (!p.cells.empty() && coin(rng, 0.25))
      boundary = p.cells[uniform(rng, 0, p.cells.size() - 1)].boundary;
    else if (!coin(rng, 1.0 / 3))
      boundary = random_word(rng, p.generators, 3);
    p.cells.push_back({"e" + std::to_string(i), boundary});
  }
  if (p.cells.empty()) return p;
  const std::size_t relations = uniform(rng, 0, bounds.max_relations);
  for (std::size_t r = 0; r < relations; ++r) {
    CrossedWord rel = random_block(rng, p);
    if (coin(rng)) rel = rel * random_block(rng, p);
    p.relations.push_back(rel.acted_on_by(random_word(rng, p.generators, 2)));
  }
  return p;
}

const std::vector<FiniteCrossedModule>& module_pool() {
  static const std::vector<FiniteCrossedModule> pool = build_pool();
  return pool;
}

FiniteCrossedModule normal_subgroup_module(const FiniteGroup& g, const std::vector<Element>& subgroup,
                                           std::string name) {
  std::vector<Element> position(g.order(), 0);
  for (Element i = 0; i < subgroup.size(); ++i) position[subgroup[i]] = i;
  const CayleyTable fiber = product_table(subgroup.size(), [&](Element a, Element b) {
    return position[g.mul(subgroup[a], subgroup[b])];
  });
  return from_tables(g.table(), fiber, subgroup,
                     [&](Element x, Element e) { return position[g.mul(g.mul(x, subgroup[e]), g.inv(x))]; },
                     std::move(name));
}

Corruption corrupt_one_entry(const CrossedModuleTables& tables, Rng& rng) {
  Corruption c{tables, {}};
  const std::size_t ng = tables.base.size(), ne = tables.fiber.size();
  for (;;) {
    const std::size_t which = uniform(rng, 0, 3);
    const std::size_t range = which == 1 || which == 3 ? ne : ng;
    if (range < 2) continue;
    Element* slot = nullptr;
    std::string where;
    switch (which) {
      case 0: {
        const std::size_t a = uniform(rng, 0, ng - 1), b = uniform(rng, 0, ng - 1);
        slot = &c.tables.base[a][b];
        where = "base[" + std::to_string(a) + "][" + std::to_string(b) + "]";
        break;
      }
      case 1: {
        const std::size_t a = uniform(rng, 0, ne - 1), b = uniform(rng, 0, ne - 1);
        slot = &c.tables.fiber[a][b];
        where = "fiber[" + std::to_string(a) + "][" + std::to_string(b) + "]";
        break;
      }
      case 2: {
        const std::size_t e = uniform(rng, 0, ne - 1);
        slot = &c.tables.boundary[e];
        where = "boundary[" + std::to_string(e) + "]";
        break;
      }
      default: {
        const std::size_t g = uniform(rng, 0, ng - 1), e = uniform(rng, 0, ne - 1);
        slot = &c.tables.action[g][e];
        where = "action[" + std::to_string(g) + "][" + std::to_string(e) + "]";
        break;
      }
    }
    const Element old = *slot;
    const Element replacement = static_cast<Element>((old + uniform(rng, 1, range - 1)) % range);
    *slot = replacement;
    c.where = where + ": " + std::to_string(old) + " -> " + std::to_string(replacement);
    return c;
  }
}

}  // namespace xmod::testing
