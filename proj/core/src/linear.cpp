#include "xmod/linear.hpp"

#include <utility>

namespace xmod {

namespace {

unsigned pow_mod(unsigned base, unsigned exp, unsigned p) {
  unsigned long long result = 1, b = base % p;
  while (exp) {
    if (exp & 1u) result = result * b % p;
    b = b * b % p;
    exp >>= 1u;
  }
  return static_cast<unsigned>(result);
}

std::size_t element_order(const FiniteGroup& g, Element a) {
  std::size_t n = 1;
  for (Element x = a; x != g.identity(); x = g.mul(x, a)) ++n;
  return n;
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

std::size_t rank_mod_p(std::vector<std::vector<unsigned>> rows, unsigned p) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const unsigned inv = pow_mod(rows[rank][c], p - 2, p);
    for (auto& v : rows[rank]) v = static_cast<unsigned>(1ull * v * inv % p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const unsigned factor = rows[r][c];
      for (std::size_t k = c; k < cols; ++k)
        rows[r][k] = static_cast<unsigned>((rows[r][k] + 1ull * (p - factor) * rows[rank][k]) % p);
    }
    ++rank;
  }
  return rank;
}

std::optional<ElementaryAbelianBasis> elementary_abelian_basis(const FiniteGroup& group) {
  ElementaryAbelianBasis out;
  const std::size_t n = group.order();
  out.coords.assign(n, {});
  if (n == 1) return out;
  if (!group.is_abelian()) return std::nullopt;

  const Element first = group.identity() == 0 ? 1 : 0;
  const std::size_t p = element_order(group, first);
  if (!is_prime(p)) return std::nullopt;
  for (Element a = 0; a < n; ++a)
    if (a != group.identity() && element_order(group, a) != p) return std::nullopt;
  out.p = static_cast<unsigned>(p);

  std::vector<bool> in_span(n, false);
  std::vector<Element> span{group.identity()};
  in_span[group.identity()] = true;
  for (Element a = 0; a < n && span.size() < n; ++a) {
    if (in_span[a]) continue;
    const std::size_t d = out.basis.size();
    out.basis.push_back(a);
    std::vector<Element> grown;
    for (Element s : span) {
      Element x = s;
      for (unsigned k = 0; k < p; ++k, x = group.mul(x, a)) {
        if (k > 0) {
          out.coords[x] = out.coords[s];
          out.coords[x].resize(d + 1, 0);
          out.coords[x][d] = k;
          in_span[x] = true;
        }
        grown.push_back(x);
      }
    }
    span = std::move(grown);
  }
  for (auto& c : out.coords) c.resize(out.basis.size(), 0);
  return out;
}

}  // namespace xmod
