#include "xmod/counter.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <thread>
#include <unordered_map>

#include "xmod/errors.hpp"
#include "xmod/linear.hpp"

namespace xmod {

std::string format_rational(const ExactRational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

Element evaluate_free_word(const FreeWord& w, const Assignment& a, const FiniteCrossedModule& cm) {
  const FiniteGroup& g = cm.base();
  Element result = g.identity();
  for (const Letter& l : w.letters()) {
    auto it = a.phi.find(l.generator);
    if (it == a.phi.end()) throw PreconditionError("generator '" + l.generator + "' is not assigned");
    if (it->second >= g.order()) throw PreconditionError("generator '" + l.generator + "' assigned out of range");
    for (int k = 0; k < std::abs(l.exponent); ++k)
      result = g.mul(result, l.exponent > 0 ? it->second : g.inv(it->second));
  }
  return result;
}

Element evaluate_crossed_word(const CrossedWord& cw, const Assignment& a, const FiniteCrossedModule& cm) {
  const FiniteGroup& e = cm.fiber();
  Element result = e.identity();
  for (const CrossedTerm& t : cw.terms()) {
    auto it = a.psi.find(t.cell);
    if (it == a.psi.end()) throw PreconditionError("cell '" + t.cell + "' is not assigned");
    if (it->second >= e.order()) throw PreconditionError("cell '" + t.cell + "' assigned out of range");
    const Element moved = cm.act(evaluate_free_word(t.conjugator, a, cm), it->second);
    result = e.mul(result, t.sign > 0 ? moved : e.inv(moved));
  }
  return result;
}

std::string_view to_string(CountMethod m) {
  switch (m) {
    case CountMethod::automatic: return "auto";
    case CountMethod::backtracking: return "backtracking";
    case CountMethod::naive: return "naive";
    case CountMethod::linear: return "linear";
  }
  return "?";
}

std::optional<CountMethod> parse_count_method(std::string_view name) {
  for (CountMethod m : {CountMethod::automatic, CountMethod::backtracking, CountMethod::naive, CountMethod::linear})
    if (to_string(m) == name) return m;
  return std::nullopt;
}

namespace {

struct IndexedLetter {
  std::uint32_t generator;
  bool inverse;
};
using IndexedWord = std::vector<IndexedLetter>;

struct IndexedTerm {
  IndexedWord conjugator;
  std::uint32_t cell;
  bool inverse;
};

struct IndexedRelation {
  std::vector<IndexedTerm> terms;
  int last_cell = -1;  // highest cell index used, -1 for an empty relation
};

/// The presentation with every id replaced by its declaration index.
struct IndexedPresentation {
  std::size_t generators = 0;
  std::size_t cells = 0;
  std::vector<IndexedWord> boundaries;
  std::vector<IndexedRelation> relations;
  std::vector<std::vector<std::size_t>> relations_closing_at;  // by last cell
  std::vector<bool> free_suffix;  // free_suffix[i]: no relation closes at a cell >= i
};

IndexedPresentation index_presentation(const CrossedPresentation& p) {
  const ValidationReport report = validate_presentation(p);
  if (!report.ok()) throw PreconditionError("invalid presentation: " + report.to_string());

  std::unordered_map<std::string, std::uint32_t> gen, cell;
  for (std::uint32_t i = 0; i < p.generators.size(); ++i) gen[p.generators[i]] = i;
  for (std::uint32_t i = 0; i < p.cells.size(); ++i) cell[p.cells[i].name] = i;
  auto index_word = [&](const FreeWord& w) {
    IndexedWord out;
    for (const Letter& l : w.letters()) out.push_back({gen.at(l.generator), l.exponent < 0});
    return out;
  };

  IndexedPresentation ip;
  ip.generators = p.generators.size();
  ip.cells = p.cells.size();
  for (const auto& c : p.cells) ip.boundaries.push_back(index_word(c.boundary));
  ip.relations_closing_at.resize(ip.cells);
  for (const auto& r : p.relations) {
    IndexedRelation ir;
    for (const auto& t : r.terms()) {
      ir.terms.push_back({index_word(t.conjugator), cell.at(t.cell), t.sign < 0});
      ir.last_cell = std::max(ir.last_cell, static_cast<int>(cell.at(t.cell)));
    }
    // Empty relations always hold and are dropped.
    if (ir.last_cell >= 0) {
      ip.relations_closing_at[ir.last_cell].push_back(ip.relations.size());
      ip.relations.push_back(std::move(ir));
    }
  }
  ip.free_suffix.assign(ip.cells + 1, true);
  for (std::size_t i = ip.cells; i-- > 0;)
    ip.free_suffix[i] = ip.free_suffix[i + 1] && ip.relations_closing_at[i].empty();
  return ip;
}

Element eval_word(const IndexedWord& w, const std::vector<Element>& phi, const FiniteGroup& g) {
  Element x = g.identity();
  for (const auto& l : w) x = g.mul(x, l.inverse ? g.inv(phi[l.generator]) : phi[l.generator]);
  return x;
}

/// Shared step budget. Workers flush their local tallies in batches.
class StepBudget {
 public:
  explicit StepBudget(std::uint64_t cap) : cap_(cap) {}

  void charge(std::uint64_t steps) {
    if (used_.fetch_add(steps, std::memory_order_relaxed) + steps > cap_) {
      exhausted_.store(true, std::memory_order_relaxed);
      throw WorkCapExceeded(cap_);
    }
  }
  bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }

 private:
  std::uint64_t cap_;
  std::atomic<std::uint64_t> used_{0};
  std::atomic<bool> exhausted_{false};
};

class LocalSteps {
 public:
  explicit LocalSteps(StepBudget& budget) : budget_(budget) {}
  ~LocalSteps() = default;

  void tick() {
    if (++pending_ == kBatch) flush();
  }
  void flush() {
    if (budget_.exhausted()) throw WorkCapExceeded(0);
    budget_.charge(pending_);
    pending_ = 0;
  }

 private:
  static constexpr std::uint64_t kBatch = 4096;
  StepBudget& budget_;
  std::uint64_t pending_ = 0;
};

/// Runs `work(first_value)` for every value of the first generator (or once
/// with nullopt when there are no generators) and sums the results.
template <typename Work>
BigInt run_partitions(std::size_t generators, std::size_t base_order, unsigned threads, Work work) {
  if (generators == 0) return work(std::optional<Element>{});
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, base_order));

  BigInt total = 0;
  if (threads <= 1) {
    for (Element v = 0; v < base_order; ++v) total += work(std::optional<Element>{v});
    return total;
  }
  std::atomic<Element> next{0};
  std::vector<std::future<BigInt>> futures;
  for (unsigned t = 0; t < threads; ++t) {
    futures.push_back(std::async(std::launch::async, [&] {
      BigInt sum = 0;
      for (Element v = next++; v < base_order; v = next++) sum += work(std::optional<Element>{v});
      return sum;
    }));
  }
  std::exception_ptr failure;
  for (auto& f : futures) {
    try {
      total += f.get();
    } catch (...) {
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return total;
}

/// Advances phi[from..] as an odometer; false once it wraps.
bool advance(std::vector<Element>& phi, std::size_t from, std::size_t order) {
  for (std::size_t i = phi.size(); i-- > from;) {
    if (++phi[i] < order) return true;
    phi[i] = 0;
  }
  return false;
}

class Backtracker {
 public:
  Backtracker(const IndexedPresentation& ip, const FiniteCrossedModule& cm, StepBudget& budget,
              const std::function<void(const std::vector<Element>&, const std::vector<Element>&)>* visit)
      : ip_(ip), cm_(cm), fibers_(boundary_fibers(cm)), steps_(budget), visit_(visit) {
    phi_.assign(ip.generators, 0);
    psi_.assign(ip.cells, 0);
    fiber_of_cell_.resize(ip.cells);
    for (const auto& r : ip.relations) term_values_.emplace_back(r.terms.size());
  }

  BigInt run(std::optional<Element> first) {
    total_ = 0;
    leaves_ = 0;
    const std::size_t from = first ? 1 : 0;
    std::fill(phi_.begin(), phi_.end(), 0);
    if (first) phi_[0] = *first;
    do {
      steps_.tick();
      visit_phi();
    } while (advance(phi_, from, cm_.base().order()));
    steps_.flush();
    return total_ + leaves_;
  }

 private:
  void visit_phi() {
    const FiniteGroup& g = cm_.base();
    for (std::size_t m = 0; m < ip_.cells; ++m) {
      fiber_of_cell_[m] = &fibers_[eval_word(ip_.boundaries[m], phi_, g)];
      if (fiber_of_cell_[m]->empty()) return;
    }
    for (std::size_t r = 0; r < ip_.relations.size(); ++r)
      for (std::size_t t = 0; t < ip_.relations[r].terms.size(); ++t)
        term_values_[r][t] = eval_word(ip_.relations[r].terms[t].conjugator, phi_, g);
    descend(0);
  }

  void descend(std::size_t i) {
    if (!visit_ && ip_.free_suffix[i]) {
      BigInt product = 1;
      for (std::size_t m = i; m < ip_.cells; ++m) product *= fiber_of_cell_[m]->size();
      total_ += product;
      return;
    }
    if (i == ip_.cells) {
      ++leaves_;
      if (visit_) (*visit_)(phi_, psi_);
      return;
    }
    for (Element e : *fiber_of_cell_[i]) {
      steps_.tick();
      psi_[i] = e;
      if (relations_hold(i)) descend(i + 1);
    }
  }

  bool relations_hold(std::size_t cell) const {
    const FiniteGroup& E = cm_.fiber();
    for (std::size_t r : ip_.relations_closing_at[cell]) {
      const auto& terms = ip_.relations[r].terms;
      Element x = E.identity();
      for (std::size_t t = 0; t < terms.size(); ++t) {
        const Element moved = cm_.act(term_values_[r][t], psi_[terms[t].cell]);
        x = E.mul(x, terms[t].inverse ? E.inv(moved) : moved);
      }
      if (x != E.identity()) return false;
    }
    return true;
  }

  const IndexedPresentation& ip_;
  const FiniteCrossedModule& cm_;
  std::vector<std::vector<Element>> fibers_;
  LocalSteps steps_;
  const std::function<void(const std::vector<Element>&, const std::vector<Element>&)>* visit_;

  std::vector<Element> phi_;
  std::vector<Element> psi_;
  std::vector<const std::vector<Element>*> fiber_of_cell_;
  std::vector<std::vector<Element>> term_values_;
  BigInt total_;
  std::uint64_t leaves_ = 0;
};

}  // namespace

BigInt count_homomorphisms(const CrossedPresentation& p, const FiniteCrossedModule& cm, const CountOptions& options) {
  const IndexedPresentation ip = index_presentation(p);
  StepBudget budget(options.work_cap);
  return run_partitions(ip.generators, cm.base().order(), options.threads, [&](std::optional<Element> first) {
    Backtracker search(ip, cm, budget, nullptr);
    return search.run(first);
  });
}

void for_each_homomorphism(const CrossedPresentation& p, const FiniteCrossedModule& cm,
                           const std::function<void(const Assignment&)>& visit, const CountOptions& options) {
  const IndexedPresentation ip = index_presentation(p);
  StepBudget budget(options.work_cap);
  const std::function<void(const std::vector<Element>&, const std::vector<Element>&)> adapter =
      [&](const std::vector<Element>& phi, const std::vector<Element>& psi) {
        Assignment a;
        for (std::size_t i = 0; i < phi.size(); ++i) a.phi[p.generators[i]] = phi[i];
        for (std::size_t i = 0; i < psi.size(); ++i) a.psi[p.cells[i].name] = psi[i];
        visit(a);
      };
  Backtracker search(ip, cm, budget, &adapter);
  if (ip.generators == 0) {
    search.run(std::nullopt);
    return;
  }
  for (Element v = 0; v < cm.base().order(); ++v) search.run(v);
}

BigInt count_homomorphisms_naive(const CrossedPresentation& p, const FiniteCrossedModule& cm,
                                 const CountOptions& options) {
  const ValidationReport report = validate_presentation(p);
  if (!report.ok()) throw PreconditionError("invalid presentation: " + report.to_string());

  const std::size_t ng = cm.base().order();
  const std::size_t ne = cm.fiber().order();
  BigInt space = 1;
  for (std::size_t i = 0; i < p.generators.size(); ++i) space *= ng;
  for (std::size_t i = 0; i < p.cells.size(); ++i) space *= ne;
  if (space > options.work_cap)
    throw SearchSpaceTooLarge("naive enumeration over " + space.str() + " assignments exceeds cap " +
                              std::to_string(options.work_cap));

  std::vector<Element> values(p.generators.size() + p.cells.size(), 0);
  std::vector<std::size_t> radix(p.generators.size(), ng);
  radix.resize(values.size(), ne);

  BigInt count = 0;
  Assignment a;
  while (true) {
    for (std::size_t i = 0; i < p.generators.size(); ++i) a.phi[p.generators[i]] = values[i];
    for (std::size_t i = 0; i < p.cells.size(); ++i) a.psi[p.cells[i].name] = values[p.generators.size() + i];

    bool ok = true;
    for (const auto& c : p.cells)
      ok = ok && cm.boundary(a.psi[c.name]) == evaluate_free_word(c.boundary, a, cm);
    for (const auto& r : p.relations)
      ok = ok && evaluate_crossed_word(r, a, cm) == cm.fiber().identity();
    if (ok) ++count;

    std::size_t i = values.size();
    while (i > 0 && ++values[i - 1] == radix[i - 1]) values[--i] = 0;
    if (i == 0) break;
  }
  return count;
}

bool linear_fastpath_applies(const FiniteCrossedModule& cm) {
  return cm.boundary_is_trivial() && elementary_abelian_basis(cm.fiber()).has_value();
}

BigInt count_linear_fastpath(const CrossedPresentation& p, const FiniteCrossedModule& cm,
                             const CountOptions& options) {
  if (!cm.boundary_is_trivial()) throw PreconditionError("linear fast path needs a trivial boundary");
  const auto basis = elementary_abelian_basis(cm.fiber());
  if (!basis) throw PreconditionError("linear fast path needs an elementary abelian fiber");
  const IndexedPresentation ip = index_presentation(p);

  const unsigned prime = basis->p;
  const std::size_t d = basis->dimension();
  const std::size_t unknowns = d * ip.cells;
  const FiniteGroup& g = cm.base();

  // matrices[x][i][j]: coordinate i of x acting on basis vector j.
  std::vector<std::vector<std::vector<unsigned>>> matrices(g.order(), std::vector<std::vector<unsigned>>(d, std::vector<unsigned>(d)));
  for (Element x = 0; x < g.order(); ++x)
    for (std::size_t j = 0; j < d; ++j) {
      const auto& column = basis->coords[cm.act(x, basis->basis[j])];
      for (std::size_t i = 0; i < d; ++i) matrices[x][i][j] = column[i];
    }

  StepBudget budget(options.work_cap);
  return run_partitions(ip.generators, g.order(), options.threads, [&](std::optional<Element> first) {
    LocalSteps steps(budget);
    std::vector<Element> phi(ip.generators, 0);
    if (first) phi[0] = *first;
    BigInt sum = 0;
    do {
      steps.tick();
      bool boundaries_trivial = true;
      for (const auto& b : ip.boundaries) boundaries_trivial = boundaries_trivial && eval_word(b, phi, g) == g.identity();
      if (!boundaries_trivial) continue;

      std::vector<std::vector<unsigned>> rows;
      for (const auto& r : ip.relations) {
        std::vector<std::vector<unsigned>> block(d, std::vector<unsigned>(unknowns, 0));
        for (const auto& t : r.terms) {
          const auto& m = matrices[eval_word(t.conjugator, phi, g)];
          for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
              unsigned& slot = block[i][t.cell * d + j];
              slot = (slot + (t.inverse ? prime - m[i][j] : m[i][j])) % prime;
            }
        }
        rows.insert(rows.end(), block.begin(), block.end());
      }
      const std::size_t rank = rank_mod_p(std::move(rows), prime);
      sum += boost::multiprecision::pow(BigInt(prime), static_cast<unsigned>(unknowns - rank));
    } while (advance(phi, first ? 1 : 0, g.order()));
    steps.flush();
    return sum;
  });
}

ExactRational invariant_from_count(const BigInt& count, std::size_t fiber_order, long long one_handles) {
  if (one_handles < 0) throw PreconditionError("one_handles must be non-negative");
  const BigInt denominator = boost::multiprecision::pow(BigInt(fiber_order), static_cast<unsigned>(one_handles));
  return ExactRational(count, denominator);
}

std::string CountReport::to_string(bool with_timing) const {
  std::string out = "count " + count.str() + "\n";
  out += "one_handles " + std::to_string(one_handles) + "\n";
  out += "invariant " + format_rational(invariant) + "\n";
  out += "method " + std::string(xmod::to_string(method)) + "\n";
  if (with_timing) out += "elapsed_ms " + std::to_string(elapsed.count()) + "\n";
  return out;
}

CountReport compute_invariant(const CrossedPresentation& p, const FiniteCrossedModule& cm, long long one_handles,
                              CountMethod method, const CountOptions& options) {
  if (one_handles < 0) throw PreconditionError("one_handles must be non-negative");
  if (method == CountMethod::automatic)
    method = linear_fastpath_applies(cm) ? CountMethod::linear : CountMethod::backtracking;

  const auto start = std::chrono::steady_clock::now();
  CountReport report;
  switch (method) {
    case CountMethod::naive: report.count = count_homomorphisms_naive(p, cm, options); break;
    case CountMethod::linear: report.count = count_linear_fastpath(p, cm, options); break;
    default: report.count = count_homomorphisms(p, cm, options); break;
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  report.method = method;
  report.one_handles = one_handles;
  report.invariant = invariant_from_count(report.count, cm.fiber().order(), one_handles);
  return report;
}

}  // namespace xmod
