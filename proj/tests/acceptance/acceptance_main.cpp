// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
// Usage: xmod_acceptance [--seed N]

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "instances.hpp"
#include "oracles.hpp"
#include "xmod/counter.hpp"
#include "xmod/fixtures.hpp"

namespace {

using namespace xmod;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::vector<FiniteCrossedModule> battery() {
  std::vector<FiniteCrossedModule> out;
  for (const auto& name : fixture_module_names()) out.push_back(load_fixture_module(name));
  return out;
}

std::string str(const ExactRational& r) { return format_rational(r); }

ExactRational fixture_invariant(std::string_view movie, const FiniteCrossedModule& cm,
                                CountMethod method = CountMethod::automatic) {
  const auto c = compile_movie(load_fixture_movie(movie));
  return compute_invariant(c.presentation, cm, c.one_handles, method).invariant;
}

bool abelian_trivial_boundary(const FiniteCrossedModule& cm) {
  return cm.boundary_is_trivial() && cm.base().is_abelian() && cm.fiber().is_abelian();
}

/// Group algebra F2[Z_n] modules only: the bit-mask oracles model exactly these.
bool is_cyclic_f2_algebra(const FiniteCrossedModule& cm) { return cm.name() == "z2_f2" || cm.name() == "z3_f2"; }

void unknotted_sphere(Outcome& o) {
  for (const auto& cm : battery())
    for (const char* movie : {"trivial1", "trivial2", "trivial3", "trivial4"}) {
      const auto start = Clock::now();
      const ExactRational got = fixture_invariant(movie, cm);
      const ExactRational want(cm.base().order(), cm.fiber().order());
      o.expect(got == want, std::string(movie) + " on " + cm.name() + ": " + str(got) + " != " + str(want));
      o.expect(Clock::now() - start < std::chrono::seconds(1), std::string(movie) + " took over 1 s");
    }
}

void two_spheres(Outcome& o) {
  for (const auto& cm : battery()) {
    const ExactRational r(cm.base().order(), cm.fiber().order());
    const ExactRational got = fixture_invariant("two_spheres", cm);
    o.expect(got == r * r, cm.name() + ": " + str(got) + " != " + str(r * r));
  }
}

void two_tori(Outcome& o) {
  for (const auto& cm : battery()) {
    const std::size_t g = cm.base().order(), e = cm.fiber().order(), k = cm.kernel_order();
    ExactRational want;
    if (abelian_trivial_boundary(cm)) {
      want = ExactRational(g * g * e * e);
    } else {
      const ExactRational r(g * k * k, e);
      want = r * r;
    }
    const ExactRational got = fixture_invariant("two_tori", cm);
    o.expect(got == want, cm.name() + ": " + str(got) + " != " + str(want));
  }
}

void spun_hopf(Outcome& o) {
  const auto cm = load_fixture_module("z2_f2");
  const ExactRational compiled = fixture_invariant("spun_hopf", cm, CountMethod::naive);
  const ExactRational direct(testing::oracle::spun_hopf_first_form(2));
  o.expect(compiled == direct, "compiled " + str(compiled) + " != enumerated " + str(direct));
  o.expect(compiled != ExactRational(64), "spun Hopf equals the two-tori value 64");
}

CrossedPresentation link_presentation(bool second_form) {
  auto w = [](std::string_view t) { return parse_free_word(t); };
  CrossedPresentation p{{"X", "Y"}, {{"f", {}}, {"h", {}}}, {}};
  if (second_form)
    p.relations.push_back(CrossedWord({{{}, "h", 1}, {{}, "f", -1}, {w("Y"), "f", 1}, {w("X"), "h", -1}}));
  else
    p.relations.push_back(CrossedWord({{{}, "f", -1}, {w("X"), "f", 1}, {{}, "h", -1}, {w("Y"), "h", 1}}));
  return p;
}

void spun_hopf_cross_check(Outcome& o) {
  for (const auto& cm : battery()) {
    if (!abelian_trivial_boundary(cm)) continue;
    const BigInt first = count_homomorphisms_naive(link_presentation(false), cm);
    const BigInt second = count_homomorphisms_naive(link_presentation(true), cm);
    o.expect(first == second, cm.name() + ": " + first.str() + " != " + second.str());
    if (is_cyclic_f2_algebra(cm)) {
      const unsigned n = static_cast<unsigned>(cm.base().order());
      o.expect(first == testing::oracle::spun_hopf_first_form(n), cm.name() + ": library disagrees with oracle");
      o.expect(testing::oracle::spun_hopf_first_form(n) == testing::oracle::spun_hopf_second_form(n),
               cm.name() + ": oracle forms disagree");
    }
  }
}

void spun_trefoil(Outcome& o) {
  const auto c = compile_movie(load_fixture_movie("spun_trefoil"));
  const auto& p = c.presentation;
  o.expect(p.generators.size() == 2 && p.cells.size() == 2 && p.relations.size() == 1, "wrong shape");
  if (!o.ok) return;
  const std::string X = p.generators[0], Y = p.generators[1], f = p.cells[1].name;
  auto word = [](std::initializer_list<Letter> letters) { return FreeWord::reduce(letters); };
  const FreeWord a = word({{X, 1}, {Y, 1}, {X, 1}, {Y, 1}, {X, -1}, {Y, -1}, {X, -1}});
  o.expect(p.cells[0].boundary == FreeWord::generator(X) * a.inverse(), "boundary of e");
  o.expect(p.cells[1].boundary.empty(), "boundary of f");
  const CrossedWord want({{word({{X, -1}}), f, -1}, {word({{Y, -1}, {X, -1}}), f, 1},
                          {word({{X, -1}, {Y, -1}, {X, -1}}), f, -1}});
  o.expect(p.relations[0] == want, "relation " + p.relations[0].to_string());

  const auto cm = load_fixture_module("z3_f2");
  const ExactRational got = compute_invariant(p, cm, c.one_handles, CountMethod::naive).invariant;
  const ExactRational formula(testing::oracle::spun_trefoil_pairs(3), cm.fiber().order());
  o.expect(got == formula, str(got) + " != " + str(formula));
  o.expect(got != ExactRational(3, 8), "equals the unknotted value 3/8");
}

void free_products(Outcome& o, std::uint64_t seed) {
  testing::Rng rng(seed);
  const auto modules = battery();
  for (int i = 0; i < 200 && o.ok; ++i) {
    const auto p = testing::random_presentation(rng);
    const auto q = testing::random_presentation(rng);
    for (const auto& cm : modules) {
      const BigInt joint = count_homomorphisms(free_product(p, q), cm);
      const BigInt split = count_homomorphisms(p, cm) * count_homomorphisms(q, cm);
      o.expect(joint == split, "pair " + std::to_string(i) + " on " + cm.name() + ": " + joint.str() + " != " +
                                   split.str() + "\n" + print_presentation(p) + print_presentation(q));
    }
  }
}

void stabilization(Outcome& o, std::uint64_t seed) {
  testing::Rng rng(seed);
  const auto modules = battery();
  for (int i = 0; i < 200 && o.ok; ++i) {
    const auto p = testing::random_presentation(rng);
    testing::random_presentation(rng);  // keep the stream aligned with the free-product pairs
    const long long h = static_cast<long long>(p.generators.size());
    for (const auto& cm : modules) {
      const BigInt base = count_homomorphisms(p, cm);
      o.expect(count_homomorphisms(stabilize(p), cm) == base * cm.fiber().order(),
               "count, instance " + std::to_string(i) + " on " + cm.name());
      o.expect(invariant(stabilize(p), cm, h + 1) == invariant(p, cm, h),
               "invariant, instance " + std::to_string(i) + " on " + cm.name());
    }
  }
}

void oracle_equivalence(Outcome& o, std::uint64_t seed) {
  testing::Rng rng(seed);
  const auto& pool = testing::module_pool();
  for (int i = 0; i < 500 && o.ok; ++i) {
    const auto p = testing::random_presentation(rng);
    const auto& cm = pool[rng() % pool.size()];
    const BigInt naive = count_homomorphisms_naive(p, cm);
    const BigInt fast = count_homomorphisms(p, cm);
    o.expect(fast == naive, "instance " + std::to_string(i) + " on " + cm.name() + ": " + fast.str() + " != " +
                                naive.str() + "\n" + print_presentation(p));
    if (linear_fastpath_applies(cm)) {
      const BigInt linear = count_linear_fastpath(p, cm);
      o.expect(linear == naive, "linear, instance " + std::to_string(i) + " on " + cm.name());
    }
  }
}

void axiom_suite(Outcome& o, std::uint64_t seed) {
  const auto modules = battery();
  for (const auto& cm : modules) o.expect(validate_crossed_module(cm).ok(), cm.name() + " rejected");
  testing::Rng rng(seed);
  for (int i = 0; i < 50; ++i) {
    const auto& cm = modules[i % modules.size()];
    const auto bad = testing::corrupt_one_entry(cm.tables(), rng);
    const auto report = validate_crossed_module(bad.tables);
    o.expect(!report.ok(), cm.name() + " accepted corruption " + bad.where);
    o.expect(report.ok() || !report.violations.front().witness.empty(), "violation without witness: " + bad.where);
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = testing::test_seed();
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) {
      seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      std::cerr << "usage: " << argv[0] << " [--seed N]\n";
      return 2;
    }
  }

  struct Criterion {
    const char* name;
    std::chrono::milliseconds budget;
    std::function<void(Outcome&)> run;
  };
  using std::chrono::milliseconds;
  const std::vector<Criterion> criteria = {
      {"unknotted sphere: four movies give #G/#E", milliseconds(4 * 3 * 1000), unknotted_sphere},
      {"two unknotted spheres give (#G/#E)^2", milliseconds(1000), two_spheres},
      {"two unknotted tori closed forms", milliseconds(5000), two_tori},
      {"spun Hopf link differs from two tori", milliseconds(10000), spun_hopf},
      {"spun Hopf relation forms agree", milliseconds(10000), spun_hopf_cross_check},
      {"spun trefoil presentation and invariant", milliseconds(10000), spun_trefoil},
      {"free products multiply counts", milliseconds(60000), [&](Outcome& o) { free_products(o, seed); }},
      {"stabilization multiplies by #E", milliseconds(60000), [&](Outcome& o) { stabilization(o, seed); }},
      {"backtracking and linear counts match naive", milliseconds(120000),
       [&](Outcome& o) { oracle_equivalence(o, seed + 1); }},
      {"axiom suite rejects single-entry corruptions", milliseconds(10000),
       [&](Outcome& o) { axiom_suite(o, seed + 2); }},
  };

  std::cout << "seed " << seed << "\n";
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    const auto start = Clock::now();
    try {
      criteria[i].run(outcome);
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const auto elapsed = std::chrono::duration_cast<milliseconds>(Clock::now() - start);
    if (outcome.ok && elapsed > criteria[i].budget) {
      outcome.ok = false;
      outcome.detail = "over the " + std::to_string(criteria[i].budget.count()) + " ms budget";
    }
    std::cout << (outcome.ok ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].name << " (" << elapsed.count()
              << " ms)";
    if (!outcome.ok) std::cout << ": " << outcome.detail;
    std::cout << "\n";
    failures += !outcome.ok;
  }
  return failures == 0 ? 0 : 1;
}
