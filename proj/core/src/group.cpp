#include "xmod/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "xmod/errors.hpp"

namespace xmod {

std::string Violation::to_string() const {
  std::ostringstream out;
  out << axiom << " (";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) out << ", ";
    out << witness[i];
  }
  out << ")";
  if (!detail.empty()) out << ": " << detail;
  return out.str();
}

void ValidationReport::add(std::string axiom, std::vector<std::string> witness, std::string detail) {
  violations.push_back({std::move(axiom), std::move(witness), std::move(detail)});
}

std::string ValidationReport::to_string() const {
  if (ok()) return "ok";
  std::ostringstream out;
  out << violations.size() << " violation(s); first: " << violations.front().to_string();
  return out.str();
}

namespace {

std::string str(std::size_t v) { return std::to_string(v); }

}  // namespace

bool check_group_table(const CayleyTable& table, const std::string& label, ValidationReport& report) {
  const std::size_t n = table.size();
  if (n == 0) {
    report.add(label + ".shape", {}, "empty table");
    return false;
  }
  bool shaped = true;
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) {
      report.add(label + ".shape", {str(a)}, "row length " + str(table[a].size()) + ", expected " + str(n));
      shaped = false;
      continue;
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] >= n) {
        report.add(label + ".shape", {str(a), str(b)}, "entry " + str(table[a][b]) + " out of range");
        shaped = false;
      }
    }
  }
  if (!shaped) return false;

  // Each row and column must be a permutation (cancellation).
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> row(n), col(n);
    for (std::size_t b = 0; b < n; ++b) {
      if (row[table[a][b]]) report.add(label + ".latin", {"row", str(a), str(b)}, "repeated entry");
      row[table[a][b]] = true;
      if (col[table[b][a]]) report.add(label + ".latin", {"column", str(a), str(b)}, "repeated entry");
      col[table[b][a]] = true;
    }
  }

  std::size_t identity = n;
  for (std::size_t e = 0; e < n && identity == n; ++e) {
    bool unit = true;
    for (std::size_t x = 0; x < n && unit; ++x) unit = table[e][x] == x && table[x][e] == x;
    if (unit) identity = e;
  }
  if (identity == n) {
    report.add(label + ".identity", {}, "no two-sided unit");
  } else {
    for (std::size_t a = 0; a < n; ++a) {
      bool has_inverse = false;
      for (std::size_t b = 0; b < n && !has_inverse; ++b)
        has_inverse = table[a][b] == identity && table[b][a] == identity;
      if (!has_inverse) report.add(label + ".inverse", {str(a)}, "no two-sided inverse");
    }
  }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          report.add(label + ".assoc", {str(a), str(b), str(c)});
  return true;
}

FiniteGroup FiniteGroup::from_table(const CayleyTable& table, std::vector<std::string> names) {
  ValidationReport report;
  check_group_table(table, "group", report);
  if (!report.ok()) throw AxiomViolation(std::move(report));
  if (!names.empty() && names.size() != table.size())
    throw PreconditionError("element name count does not match group order");

  FiniteGroup g;
  g.order_ = table.size();
  g.product_.reserve(g.order_ * g.order_);
  for (const auto& row : table) g.product_.insert(g.product_.end(), row.begin(), row.end());
  for (Element e = 0; e < g.order_; ++e) {
    if (g.mul(e, e) == e) {  // the only idempotent of a group
      g.identity_ = e;
      break;
    }
  }
  g.inverse_.resize(g.order_);
  for (Element a = 0; a < g.order_; ++a)
    for (Element b = 0; b < g.order_; ++b)
      if (g.mul(a, b) == g.identity_) g.inverse_[a] = b;
  g.names_ = std::move(names);
  return g;
}

Element FiniteGroup::pow(Element a, long long n) const {
  if (n < 0) {
    a = inv(a);
    n = -n;
  }
  Element result = identity_;
  for (long long i = 0; i < n; ++i) result = mul(result, a);
  return result;
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order_; ++a)
    for (Element b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::string FiniteGroup::name(Element a) const {
  return names_.empty() ? std::to_string(a) : names_[a];
}

CayleyTable FiniteGroup::table() const {
  CayleyTable t(order_, std::vector<Element>(order_));
  for (Element a = 0; a < order_; ++a)
    for (Element b = 0; b < order_; ++b) t[a][b] = mul(a, b);
  return t;
}

FiniteGroup build_cyclic_group(std::size_t n) {
  if (n == 0) throw PreconditionError("cyclic group order must be positive");
  CayleyTable t(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = static_cast<Element>((i + j) % n);
  return FiniteGroup::from_table(t);
}

FiniteGroup build_symmetric_group(std::size_t n) {
  if (n == 0 || n > 5) throw PreconditionError("symmetric group supported for 1 <= n <= 5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  // (a*b)(i) = a(b(i)).
  const std::size_t order = perms.size();
  CayleyTable t(order, std::vector<Element>(order));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < order; ++a) {
    std::string name = "[";
    for (std::size_t i = 0; i < n; ++i) name += std::to_string(perms[a][i]) + (i + 1 < n ? "," : "]");
    names.push_back(name);
    for (std::size_t b = 0; b < order; ++b) {
      std::vector<int> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = static_cast<Element>(std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return FiniteGroup::from_table(t, std::move(names));
}

}  // namespace xmod
