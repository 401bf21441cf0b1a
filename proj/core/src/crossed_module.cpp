#include "xmod/crossed_module.hpp"

#include <string>

#include "xmod/errors.hpp"

namespace xmod {

namespace {

std::string str(std::size_t v) { return std::to_string(v); }

Element find_identity(const CayleyTable& t) {
  for (Element e = 0; e < t.size(); ++e)
    if (t[e][e] == e) return e;
  return 0;
}

std::vector<Element> inverses(const CayleyTable& t, Element identity) {
  std::vector<Element> inv(t.size());
  for (Element a = 0; a < t.size(); ++a)
    for (Element b = 0; b < t.size(); ++b)
      if (t[a][b] == identity) inv[a] = b;
  return inv;
}

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

ValidationReport validate_crossed_module(const CrossedModuleTables& t) {
  ValidationReport report;
  const bool base_shaped = check_group_table(t.base, "base", report);
  const bool fiber_shaped = check_group_table(t.fiber, "fiber", report);
  if (!base_shaped || !fiber_shaped) return report;

  const std::size_t ng = t.base.size();
  const std::size_t ne = t.fiber.size();
  bool shaped = true;
  if (t.boundary.size() != ne) {
    report.add("shape", {"boundary"}, "expected " + str(ne) + " entries, got " + str(t.boundary.size()));
    shaped = false;
  } else {
    for (std::size_t e = 0; e < ne; ++e)
      if (t.boundary[e] >= ng) {
        report.add("shape", {"boundary", str(e)}, "entry out of range");
        shaped = false;
      }
  }
  if (t.action.size() != ng) {
    report.add("shape", {"action"}, "expected " + str(ng) + " rows, got " + str(t.action.size()));
    shaped = false;
  } else {
    for (std::size_t g = 0; g < ng; ++g) {
      if (t.action[g].size() != ne) {
        report.add("shape", {"action", str(g)}, "expected " + str(ne) + " entries");
        shaped = false;
        continue;
      }
      for (std::size_t e = 0; e < ne; ++e)
        if (t.action[g][e] >= ne) {
          report.add("shape", {"action", str(g), str(e)}, "entry out of range");
          shaped = false;
        }
    }
  }
  // The remaining checks need genuine groups (identities and inverses).
  if (!shaped || !report.ok()) return report;

  const auto& G = t.base;
  const auto& E = t.fiber;
  const auto& d = t.boundary;
  const auto& act = t.action;
  const Element g1 = find_identity(G);
  const auto ginv = inverses(G, g1);
  const auto einv = inverses(E, find_identity(E));

  for (Element e = 0; e < ne; ++e)
    for (Element f = 0; f < ne; ++f)
      if (d[E[e][f]] != G[d[e]][d[f]]) report.add("boundary-hom", {str(e), str(f)});

  for (Element e = 0; e < ne; ++e)
    if (act[g1][e] != e) report.add("action-unit", {str(g1), str(e)});

  for (Element g = 0; g < ng; ++g) {
    std::vector<bool> seen(ne);
    for (Element e = 0; e < ne; ++e) {
      if (seen[act[g][e]]) report.add("action-bijective", {str(g), str(e)});
      seen[act[g][e]] = true;
    }
    for (Element h = 0; h < ng; ++h)
      for (Element e = 0; e < ne; ++e)
        if (act[G[g][h]][e] != act[g][act[h][e]]) report.add("action-compose", {str(g), str(h), str(e)});
    for (Element e = 0; e < ne; ++e)
      for (Element f = 0; f < ne; ++f)
        if (act[g][E[e][f]] != E[act[g][e]][act[g][f]]) report.add("action-hom", {str(g), str(e), str(f)});
  }

  for (Element g = 0; g < ng; ++g)
    for (Element e = 0; e < ne; ++e)
      if (d[act[g][e]] != G[G[g][d[e]]][ginv[g]]) report.add("CM1", {str(g), str(e)});

  for (Element e = 0; e < ne; ++e)
    for (Element f = 0; f < ne; ++f)
      if (act[d[e]][f] != E[E[e][f]][einv[e]]) report.add("CM2", {str(e), str(f)});

  return report;
}

FiniteCrossedModule::FiniteCrossedModule(FiniteGroup base, FiniteGroup fiber, CrossedModuleTables tables,
                                         std::string name)
    : base_(std::move(base)), fiber_(std::move(fiber)), tables_(std::move(tables)), name_(std::move(name)) {
  action_.reserve(base_.order() * fiber_.order());
  for (const auto& row : tables_.action) action_.insert(action_.end(), row.begin(), row.end());
}

FiniteCrossedModule FiniteCrossedModule::create(CrossedModuleTables tables, std::string name) {
  ValidationReport report = validate_crossed_module(tables);
  if (!report.ok()) throw AxiomViolation(std::move(report));
  FiniteGroup base = FiniteGroup::from_table(tables.base);
  FiniteGroup fiber = FiniteGroup::from_table(tables.fiber);
  return FiniteCrossedModule(std::move(base), std::move(fiber), std::move(tables), std::move(name));
}

bool FiniteCrossedModule::boundary_is_trivial() const {
  for (Element b : tables_.boundary)
    if (b != base_.identity()) return false;
  return true;
}

std::size_t FiniteCrossedModule::kernel_order() const {
  std::size_t n = 0;
  for (Element b : tables_.boundary) n += b == base_.identity();
  return n;
}

FiniteCrossedModule build_conjugation_crossed_module(const FiniteGroup& g, std::string name) {
  const std::size_t n = g.order();
  CrossedModuleTables t{g.table(), g.table(), std::vector<Element>(n), CayleyTable(n, std::vector<Element>(n))};
  for (Element x = 0; x < n; ++x) {
    t.boundary[x] = x;
    for (Element e = 0; e < n; ++e) t.action[x][e] = g.mul(g.mul(x, e), g.inv(x));
  }
  return FiniteCrossedModule::create(std::move(t), std::move(name));
}

FiniteCrossedModule build_group_algebra_crossed_module(const FiniteGroup& g, unsigned p, std::string name) {
  if (!is_prime(p)) throw PreconditionError("group algebra coefficient field needs a prime, got " + str(p));
  const std::size_t dim = g.order();
  std::size_t order = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    order *= p;
    if (order > kMaxGroupAlgebraOrder)
      throw PreconditionError("group algebra of order " + str(p) + "^" + str(dim) + " is too large to tabulate");
  }

  auto digits = [&](std::size_t v) {
    std::vector<unsigned> c(dim);
    for (std::size_t i = 0; i < dim; ++i, v /= p) c[i] = static_cast<unsigned>(v % p);
    return c;
  };
  auto encode = [&](const std::vector<unsigned>& c) {
    std::size_t v = 0;
    for (std::size_t i = dim; i-- > 0;) v = v * p + c[i];
    return static_cast<Element>(v);
  };

  CrossedModuleTables t;
  t.base = g.table();
  t.fiber.assign(order, std::vector<Element>(order));
  for (std::size_t a = 0; a < order; ++a) {
    const auto ca = digits(a);
    for (std::size_t b = 0; b < order; ++b) {
      auto cb = digits(b);
      for (std::size_t i = 0; i < dim; ++i) cb[i] = (ca[i] + cb[i]) % p;
      t.fiber[a][b] = encode(cb);
    }
  }
  t.boundary.assign(order, g.identity());
  // X acting on sum_Y c_Y Y gives sum_Y c_Y (XY).
  t.action.assign(dim, std::vector<Element>(order));
  for (Element x = 0; x < dim; ++x)
    for (std::size_t v = 0; v < order; ++v) {
      const auto c = digits(v);
      std::vector<unsigned> moved(dim);
      for (Element y = 0; y < dim; ++y) moved[g.mul(x, y)] = c[y];
      t.action[x][v] = encode(moved);
    }
  return FiniteCrossedModule::create(std::move(t), std::move(name));
}

std::vector<std::vector<Element>> boundary_fibers(const FiniteCrossedModule& cm) {
  std::vector<std::vector<Element>> fibers(cm.base().order());
  for (Element e = 0; e < cm.fiber().order(); ++e) fibers[cm.boundary(e)].push_back(e);
  return fibers;
}

std::vector<FiniteCrossedModule> standard_battery() {
  std::vector<FiniteCrossedModule> battery;
  battery.push_back(build_conjugation_crossed_module(build_symmetric_group(3), "s3_conj"));
  battery.push_back(build_group_algebra_crossed_module(build_cyclic_group(2), 2, "z2_f2"));
  battery.push_back(build_group_algebra_crossed_module(build_cyclic_group(3), 2, "z3_f2"));
  return battery;
}

}  // namespace xmod
