#include "xmod/fixtures.hpp"

#include <algorithm>

#include "xmod/errors.hpp"
#include "xmod/xmod_io.hpp"

namespace xmod {

namespace {

constexpr std::string_view kMovieOrder[] = {"trivial1", "trivial2",  "trivial3",  "trivial4",
                                            "two_spheres", "two_tori", "spun_hopf", "spun_trefoil"};

std::vector<std::string> names_with_ext(std::string_view ext) {
  std::vector<std::string> names;
  for (const auto& f : detail::embedded_files())
    if (f.ext == ext) names.emplace_back(f.name);
  std::sort(names.begin(), names.end());
  return names;
}

const detail::EmbeddedFile* find_file(std::string_view name, std::string_view ext) {
  for (const auto& f : detail::embedded_files())
    if (f.name == name && f.ext == ext) return &f;
  return nullptr;
}

std::string_view text_of(std::string_view name, std::string_view ext, const char* kind) {
  const auto* f = find_file(name, ext);
  if (!f) throw PreconditionError(std::string("unknown ") + kind + " '" + std::string(name) + "'");
  return f->content;
}

}  // namespace

std::vector<std::string> fixture_movie_names() {
  std::vector<std::string> all = names_with_ext(".movie");
  std::vector<std::string> out;
  for (std::string_view n : kMovieOrder)
    if (std::find(all.begin(), all.end(), n) != all.end()) out.emplace_back(n);
  for (const auto& n : all)
    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
  return out;
}

std::vector<std::string> fixture_module_names() { return names_with_ext(".xmod"); }

bool has_fixture_movie(std::string_view name) { return find_file(name, ".movie") != nullptr; }
bool has_fixture_module(std::string_view name) { return find_file(name, ".xmod") != nullptr; }

std::string_view fixture_movie_text(std::string_view name) { return text_of(name, ".movie", "fixture movie"); }
std::string_view fixture_module_text(std::string_view name) { return text_of(name, ".xmod", "fixture module"); }

MovieScript load_fixture_movie(std::string_view name) {
  return parse_movie_script(fixture_movie_text(name), std::string(name));
}

FiniteCrossedModule load_fixture_module(std::string_view name) {
  return FiniteCrossedModule::create(parse_crossed_module(fixture_module_text(name)), std::string(name));
}

}  // namespace xmod
