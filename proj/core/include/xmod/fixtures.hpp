#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "xmod/crossed_module.hpp"
#include "xmod/movie.hpp"

namespace xmod {

namespace detail {

struct EmbeddedFile {
  const char* name;
  const char* ext;  // ".movie" or ".xmod"
  const char* content;
};

/// Every file of data/movies and data/modules, compiled into the library.
const std::vector<EmbeddedFile>& embedded_files();

}  // namespace detail

/// Shipped movie names: trivial1..4, two_spheres, two_tori, spun_hopf,
/// spun_trefoil, then any others alphabetically.
std::vector<std::string> fixture_movie_names();
/// Shipped crossed-module names, alphabetical.
std::vector<std::string> fixture_module_names();

bool has_fixture_movie(std::string_view name);
bool has_fixture_module(std::string_view name);

/// Raw text. Throws PreconditionError for an unknown name.
std::string_view fixture_movie_text(std::string_view name);
std::string_view fixture_module_text(std::string_view name);

MovieScript load_fixture_movie(std::string_view name);
FiniteCrossedModule load_fixture_module(std::string_view name);

}  // namespace xmod
