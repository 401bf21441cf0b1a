#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "xmod/fixtures.hpp"
#include "xmod/movie.hpp"
#include "xmod/xmod_io.hpp"

namespace xmod::cli {

namespace {

/// Input that cannot be read at all (missing file, unknown fixture).
class InputError : public Error {
 public:
  using Error::Error;
};

struct Source {
  std::string label;
  std::string text;
  bool fixture = false;
};

Source read_input(const std::string& input, bool module) {
  if (!input.empty() && input.front() == '@') {
    const std::string name = input.substr(1);
    if (module ? !has_fixture_module(name) : !has_fixture_movie(name))
      throw InputError(std::string("unknown ") + (module ? "module" : "fixture") + " '" + name + "'");
    return {name, std::string(module ? fixture_module_text(name) : fixture_movie_text(name)), true};
  }
  std::ifstream in(input, std::ios::binary);
  if (!in) throw InputError("cannot read '" + input + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return {input, text.str(), false};
}

FiniteCrossedModule load_module(const std::string& input) {
  const Source s = read_input(input, true);
  return FiniteCrossedModule::create(parse_crossed_module(s.text), s.label);
}

bool is_presentation_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return line.compare(first, 4, "pres") == 0;
  }
  return false;
}

struct LoadedPresentation {
  CrossedPresentation presentation;
  long long one_handles = 0;
};

LoadedPresentation load_presentation(const std::string& input, std::optional<long long> override) {
  const Source s = read_input(input, false);
  LoadedPresentation out;
  if (!s.fixture && is_presentation_text(s.text)) {
    PresentationFile file = parse_presentation(s.text);
    out.one_handles = file.one_handles.value_or(static_cast<long long>(file.presentation.generators.size()));
    out.presentation = std::move(file.presentation);
  } else {
    CompiledComplement c = compile_movie(parse_movie_script(s.text, s.label));
    out.presentation = std::move(c.presentation);
    out.one_handles = c.one_handles;
  }
  if (override) out.one_handles = *override;
  return out;
}

template <typename Body>
CommandOutcome guarded(Body body) {
  CommandOutcome outcome;
  try {
    body(outcome);
  } catch (const InputError& e) {
    outcome = {kExitUsage, outcome.out, std::string("error: ") + e.what() + "\n"};
  } catch (const ParseError& e) {
    outcome = {kExitUsage, outcome.out, std::string("parse error: ") + e.what() + "\n"};
  } catch (const WorkCapExceeded& e) {
    outcome = {kExitTooLarge, outcome.out, std::string("error: ") + e.what() + "\n"};
  } catch (const SearchSpaceTooLarge& e) {
    outcome = {kExitTooLarge, outcome.out, std::string("error: ") + e.what() + "\n"};
  } catch (const ReplayError& e) {
    outcome = {kExitFailed, outcome.out, std::string("replay error: ") + e.what() + "\n"};
  } catch (const AxiomViolation& e) {
    std::string err;
    for (const auto& v : e.report().violations) err += "violation " + v.to_string() + "\n";
    outcome = {kExitFailed, outcome.out, err};
  } catch (const Error& e) {
    outcome = {kExitFailed, outcome.out, std::string("error: ") + e.what() + "\n"};
  }
  return outcome;
}

std::string pad(const std::string& s, std::size_t width) { return s + std::string(width - s.size(), ' '); }

std::string format_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      out += i + 1 == row.size() ? row[i] : pad(row[i], widths[i]) + "  ";
    out += '\n';
  }
  return out;
}

}  // namespace

std::uint64_t work_cap_from_env() {
  const char* raw = std::getenv("XMOD_WORK_CAP");
  if (!raw) return kDefaultWorkCap;
  const std::string_view s(raw);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || value == 0) return kDefaultWorkCap;
  return value;
}

CommandOutcome cmd_validate(const std::string& module_input) {
  return guarded([&](CommandOutcome& o) {
    const Source s = read_input(module_input, true);
    const ValidationReport report = validate_crossed_module(parse_crossed_module(s.text));
    if (report.ok()) {
      o.out = "ok\n";
      return;
    }
    o.out = "violations " + std::to_string(report.violations.size()) + "\n";
    for (const auto& v : report.violations) o.out += "violation " + v.to_string() + "\n";
    o.exit_code = kExitFailed;
  });
}

CommandOutcome cmd_count(const std::string& input, const std::string& module_input, const CountFlags& flags) {
  return guarded([&](CommandOutcome& o) {
    const FiniteCrossedModule cm = load_module(module_input);
    const LoadedPresentation p = load_presentation(input, flags.one_handles);
    const CountReport r = compute_invariant(p.presentation, cm, p.one_handles, flags.method, flags.options);
    o.out = "count " + r.count.str() + "\nmethod " + std::string(to_string(r.method)) + "\n";
    if (flags.timing) o.out += "elapsed_ms " + std::to_string(r.elapsed.count()) + "\n";
  });
}

CommandOutcome cmd_invariant(const std::string& input, const std::string& module_input, const CountFlags& flags) {
  return guarded([&](CommandOutcome& o) {
    const FiniteCrossedModule cm = load_module(module_input);
    const LoadedPresentation p = load_presentation(input, flags.one_handles);
    o.out = compute_invariant(p.presentation, cm, p.one_handles, flags.method, flags.options).to_string(flags.timing);
  });
}

CommandOutcome cmd_compile(const std::string& movie_input) {
  return guarded([&](CommandOutcome& o) {
    const Source s = read_input(movie_input, false);
    const CompiledComplement c = compile_movie(parse_movie_script(s.text, s.label));
    o.out = print_presentation(c.presentation, c.one_handles);
  });
}

CommandOutcome cmd_examples(const std::string& name, const CountFlags& flags) {
  return guarded([&](CommandOutcome& o) {
    std::vector<std::string> movies;
    if (name.empty() || name == "all") {
      movies = fixture_movie_names();
    } else {
      if (!has_fixture_movie(name)) throw InputError("unknown fixture '" + name + "'");
      movies = {name};
    }
    std::vector<FiniteCrossedModule> modules;
    for (const auto& m : fixture_module_names()) modules.push_back(load_fixture_module(m));

    std::vector<std::vector<std::string>> rows{{"fixture", "module", "count", "one_handles", "invariant"}};
    for (const auto& movie : movies) {
      const CompiledComplement c = compile_movie(load_fixture_movie(movie));
      const long long h = flags.one_handles.value_or(c.one_handles);
      for (const auto& cm : modules) {
        const CountReport r = compute_invariant(c.presentation, cm, h, flags.method, flags.options);
        rows.push_back({movie, cm.name(), r.count.str(), std::to_string(h), format_rational(r.invariant)});
      }
    }
    o.out = format_table(rows);
  });
}

CommandOutcome cmd_selftest() {
  return guarded([&](CommandOutcome& o) {
    std::size_t checks = 0;
    std::vector<std::string> failures;
    auto check = [&](bool ok, const std::string& what) {
      ++checks;
      if (!ok) failures.push_back(what);
    };

    std::vector<FiniteCrossedModule> modules;
    for (const auto& m : fixture_module_names()) {
      modules.push_back(load_fixture_module(m));
      check(validate_crossed_module(modules.back()).ok(), "module " + m + " validates");
    }
    for (const auto& movie : fixture_movie_names()) {
      const CompiledComplement c = compile_movie(load_fixture_movie(movie));
      check(validate_presentation(c.presentation).ok(), movie + " presentation validates");
      check(c.one_handles == static_cast<long long>(c.presentation.generators.size()), movie + " one_handles");
      for (const auto& cm : modules) {
        const BigInt fast = count_homomorphisms(c.presentation, cm);
        check(fast == count_homomorphisms_naive(c.presentation, cm), movie + " on " + cm.name() + ": naive");
        if (linear_fastpath_applies(cm))
          check(fast == count_linear_fastpath(c.presentation, cm), movie + " on " + cm.name() + ": linear");
      }
    }
    for (const auto& f : failures) o.err += "FAIL " + f + "\n";
    o.out = "checks " + std::to_string(checks) + "\nfailed " + std::to_string(failures.size()) + "\n";
    if (!failures.empty()) o.exit_code = kExitFailed;
  });
}

CommandOutcome run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Crossed-module invariants of knotted surfaces", "xmod"};
  app.require_subcommand(1);

  std::string input, module_input, example_name;
  std::string method_name = "auto";
  long long one_handles = -1;
  unsigned threads = 1;
  bool no_timing = false;

  auto add_count_flags = [&](CLI::App* sub) {
    sub->add_option("input", input, "presentation or movie file, or @fixture")->required();
    sub->add_option("module", module_input, "crossed-module file, or @module")->required();
    sub->add_option("--method", method_name, "auto, naive, backtracking or linear")
        ->check(CLI::IsMember({"auto", "naive", "backtracking", "linear"}));
    sub->add_option("--one-handles", one_handles, "number of 1-handles in the denominator")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--threads", threads, "worker threads, 0 for all cores");
    sub->add_flag("--no-timing", no_timing, "omit elapsed_ms");
  };

  CLI::App* validate = app.add_subcommand("validate", "check the crossed-module axioms");
  validate->add_option("module", module_input, "crossed-module file, or @module")->required();
  CLI::App* count = app.add_subcommand("count", "count morphisms into a crossed module");
  add_count_flags(count);
  CLI::App* inv = app.add_subcommand("invariant", "count morphisms and normalise by the 1-handles");
  add_count_flags(inv);
  CLI::App* compile = app.add_subcommand("compile", "compile a movie into a presentation");
  compile->add_option("movie", input, "movie file, or @fixture")->required();
  CLI::App* examples = app.add_subcommand("examples", "invariants of the shipped fixtures");
  examples->add_option("name", example_name, "fixture name or all");
  examples->add_option("--method", method_name, "auto, naive, backtracking or linear")
      ->check(CLI::IsMember({"auto", "naive", "backtracking", "linear"}));
  examples->add_option("--threads", threads, "worker threads, 0 for all cores");
  CLI::App* selftest = app.add_subcommand("selftest", "cross-check every counter on the fixtures");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    return {code == 0 ? kExitOk : kExitUsage, out.str(), err.str()};
  }

  CountFlags flags;
  flags.method = *parse_count_method(method_name);
  if (one_handles >= 0) flags.one_handles = one_handles;
  flags.options.threads = threads;
  flags.options.work_cap = work_cap_from_env();
  flags.timing = !no_timing;

  if (validate->parsed()) return cmd_validate(module_input);
  if (count->parsed()) return cmd_count(input, module_input, flags);
  if (inv->parsed()) return cmd_invariant(input, module_input, flags);
  if (compile->parsed()) return cmd_compile(input);
  if (examples->parsed()) return cmd_examples(example_name, flags);
  if (selftest->parsed()) return cmd_selftest();
  return {kExitUsage, "", "no subcommand\n"};
}

}  // namespace xmod::cli
