#pragma once

// JSON carriers for matrices, symbols and run configuration.
//
// Matrix file: {"rows": r, "cols": c, "data": [[re, im], ...]} in row-major
// order. Objects are written with lexicographic keys and shortest
// round-trip float formatting, so equal inputs give byte-identical output.

#include <cstdint>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "gammaop/hardy.hpp"
#include "gammaop/types.hpp"

namespace gammaop::io {

using Json = nlohmann::json;

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// {"coeffs": [matrix, ...]} with coefficient k of z^k at index k.
Json symbol_to_json(const SymbolPoly& s);
SymbolPoly symbol_from_json(const Json& j);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

Matrix read_matrix(const std::filesystem::path& path);
void write_matrix(const std::filesystem::path& path, const Matrix& m);

/// Deterministic text form: two-space indent, trailing newline.
std::string dump(const Json& j);

struct RunConfig {
  Tolerance tol;
  Index truncation = 32;
  std::uint64_t seed = 20240601;
  Index boundary_grid = 64;
  Index numrad_grid = 720;

  void validate() const;
};

/// Keys: rank_tol, residual_tol, convergence_tol, wr_slack, truncation,
/// seed, boundary_grid, numrad_grid. Missing keys keep their defaults.
RunConfig config_from_json(const Json& j);
Json config_to_json(const RunConfig& c);

/// Environment variable naming the default config file.
inline constexpr const char* kConfigEnv = "GAMMAOP_CONFIG";

}  // namespace gammaop::io
