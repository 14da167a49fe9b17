#include "gammaop/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace gammaop::io {

Json matrix_to_json(const Matrix& m) {
  Json data = Json::array();
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) data.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
  return Json{{"cols", m.cols()}, {"data", std::move(data)}, {"rows", m.rows()}};
}

Matrix matrix_from_json(const Json& j) {
  try {
    const auto rows = j.at("rows").get<Index>();
    const auto cols = j.at("cols").get<Index>();
    const Json& data = j.at("data");
    if (rows < 0 || cols < 0) throw Error(ErrorKind::ParseError, "matrix: negative dimension");
    if (!data.is_array() || static_cast<Index>(data.size()) != rows * cols)
      throw Error(ErrorKind::ParseError, "matrix: data length must equal rows * cols");
    Matrix m(rows, cols);
    for (Index k = 0; k < rows * cols; ++k) {
      const Json& e = data[static_cast<std::size_t>(k)];
      if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::ParseError, "matrix: entries must be [re, im]");
      const Complex z(e[0].get<Real>(), e[1].get<Real>());
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw Error(ErrorKind::ParseError, "matrix: non-finite entry");
      m(k / cols, k % cols) = z;
    }
    return m;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("matrix: ") + e.what());
  }
}

Json symbol_to_json(const SymbolPoly& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(matrix_to_json(c));
  return Json{{"coeffs", std::move(coeffs)}};
}

SymbolPoly symbol_from_json(const Json& j) {
  try {
    std::vector<Matrix> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(matrix_from_json(c));
    return SymbolPoly(std::move(coeffs));
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("symbol: ") + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, path.string() + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path.string());
  out << dump(j);
}

Matrix read_matrix(const std::filesystem::path& path) { return matrix_from_json(read_json_file(path)); }

void write_matrix(const std::filesystem::path& path, const Matrix& m) { write_json_file(path, matrix_to_json(m)); }

void RunConfig::validate() const {
  tol.validate();
  if (truncation < 2) throw Error(ErrorKind::InvalidArgument, "config: truncation must be >= 2");
  if (boundary_grid < 1 || numrad_grid < 3) throw Error(ErrorKind::InvalidArgument, "config: grid sizes too small");
}

RunConfig config_from_json(const Json& j) {
  RunConfig c;
  try {
    c.tol.rank_tol = j.value("rank_tol", c.tol.rank_tol);
    c.tol.residual_tol = j.value("residual_tol", c.tol.residual_tol);
    c.tol.convergence_tol = j.value("convergence_tol", c.tol.convergence_tol);
    c.tol.wr_slack = j.value("wr_slack", c.tol.wr_slack);
    c.truncation = j.value("truncation", c.truncation);
    c.seed = j.value("seed", c.seed);
    c.boundary_grid = j.value("boundary_grid", c.boundary_grid);
    c.numrad_grid = j.value("numrad_grid", c.numrad_grid);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("config: ") + e.what());
  }
  c.validate();
  return c;
}

Json config_to_json(const RunConfig& c) {
  return Json{{"boundary_grid", c.boundary_grid},   {"convergence_tol", c.tol.convergence_tol},
              {"numrad_grid", c.numrad_grid},       {"rank_tol", c.tol.rank_tol},
              {"residual_tol", c.tol.residual_tol}, {"seed", c.seed},
              {"truncation", c.truncation},         {"wr_slack", c.tol.wr_slack}};
}

}  // namespace gammaop::io
