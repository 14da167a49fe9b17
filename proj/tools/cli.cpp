#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "gammaop/blh.hpp"
#include "gammaop/classify.hpp"
#include "gammaop/defect.hpp"
#include "gammaop/dilation.hpp"
#include "gammaop/gamma_point.hpp"
#include "gammaop/io.hpp"
#include "gammaop/linalg.hpp"
#include "gammaop/numrad.hpp"
#include "gammaop/suite.hpp"

namespace gammaop::cli {
namespace {

using io::Json;
namespace fs = std::filesystem;

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

// "re" or "re,im".
Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  try {
    std::size_t used = 0;
    const std::string re_part = text.substr(0, comma);
    const Real re = std::stod(re_part, &used);
    if (used != re_part.size()) throw std::invalid_argument(text);
    Real im = 0;
    if (comma != std::string::npos) {
      const std::string im_part = text.substr(comma + 1);
      im = std::stod(im_part, &used);
      if (used != im_part.size()) throw std::invalid_argument(text);
    }
    return {re, im};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::ParseError, "not a complex number (expected re or re,im): " + text);
  }
}

Json checks_json(const std::vector<NamedCheck>& checks) {
  Json out = Json::array();
  for (const auto& c : checks)
    out.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"threshold", c.threshold}, {"value", c.value}});
  return out;
}

io::RunConfig load_config(const std::string& flag) {
  std::string path = flag;
  if (path.empty()) {
    if (const char* env = std::getenv(io::kConfigEnv)) path = env;
  }
  if (path.empty()) return io::RunConfig{};
  return io::config_from_json(io::read_json_file(path));
}

OperatorPair read_pair(const std::string& s_path, const std::string& p_path) {
  return make_operator_pair(io::read_matrix(s_path), io::read_matrix(p_path));
}

struct Options {
  std::string config;
  std::string s, p, a, theta, out_dir;
  std::string point_s, point_p;
  bool schaffer = false;
  bool nf_ay = false;
  std::optional<Index> truncation;
  std::optional<std::uint64_t> seed;
  std::vector<int> only;
};

Json cmd_point(const Options& o, const io::RunConfig& cfg) {
  const GammaPoint pt{parse_complex(o.point_s), parse_complex(o.point_p)};
  const auto [r1, r2] = gamma_roots(pt);
  const BetaSolution b = beta_solve(pt, cfg.tol.residual_tol);
  return Json{{"beta", complex_json(b.beta)},
              {"beta_exact", b.exact},
              {"beta_residual", b.residual},
              {"inside", in_gamma(pt, cfg.tol.residual_tol)},
              {"p", complex_json(pt.p)},
              {"roots", Json::array({complex_json(r1), complex_json(r2)})},
              {"s", complex_json(pt.s)}};
}

Json cmd_classify(const Options& o, const io::RunConfig& cfg) {
  const ClassificationReport r = classify(read_pair(o.s, o.p), cfg.tol);
  return Json{{"checks", checks_json(r.checks)},
              {"fundamental_op", r.fundamental_op ? io::matrix_to_json(*r.fundamental_op) : Json(nullptr)},
              {"fundamental_residual", r.fundamental_residual},
              {"kind", std::string(to_string(r.kind))},
              {"wA", r.wA}};
}

Json cmd_fundamental(const Options& o, const io::RunConfig& cfg) {
  const FundamentalOp f = fundamental_op(read_pair(o.s, o.p), cfg.tol);
  const Real w = f.F.size() == 0 ? Real(0) : numerical_radius(f.F, {cfg.numrad_grid}).value;
  return Json{{"A", io::matrix_to_json(f.F)},
              {"basis", io::matrix_to_json(f.basis)},
              {"residual", f.residual},
              {"wA", w}};
}

Json cmd_numrad(const Options& o, const io::RunConfig& cfg) {
  const NumRadResult r = numerical_radius(io::read_matrix(o.a), {cfg.numrad_grid});
  return Json{{"argmax_angle", r.argmax_angle}, {"certificate", io::matrix_to_json(r.certificate)}, {"value", r.value}};
}

Json write_outputs(const fs::path& dir, const std::vector<std::pair<std::string, const Matrix*>>& mats) {
  fs::create_directories(dir);
  Json files = Json::object();
  for (const auto& [name, m] : mats) {
    const fs::path path = dir / (name + ".json");
    io::write_matrix(path, *m);
    files[name] = path.string();
  }
  return files;
}

Json cmd_dilate(const Options& o, const io::RunConfig& cfg) {
  const OperatorPair pair = read_pair(o.s, o.p);
  const fs::path dir = o.out_dir;
  if (o.schaffer) {
    const SchafferPair sb = schaffer_build(pair, o.truncation.value_or(cfg.truncation), cfg.tol);
    const Real res_v = op_norm((sb.V.adjoint() * sb.embed - sb.embed * pair.P.adjoint()).eval());
    const Real res_w = op_norm((sb.W.adjoint() * sb.embed - sb.embed * pair.S.adjoint()).eval());
    const PredicateReport iso = is_gamma_isometry(sb.as_pair(), cfg.tol);
    return Json{{"defect_dim", sb.defect_dim},
                {"files", write_outputs(dir, {{"V", &sb.V}, {"W", &sb.W}, {"embed", &sb.embed}, {"A", &sb.A_used}})},
                {"gamma_isometry", iso.holds},
                {"kind", "schaffer"},
                {"residual_P", res_v},
                {"residual_S", res_w},
                {"truncation", sb.n}};
  }
  const NfAyModel m = nf_ay_build(pair, o.truncation.value_or(0), cfg.tol);
  return Json{{"files", write_outputs(dir, {{"S_model", &m.S_model},
                                            {"P_model", &m.P_model},
                                            {"basis", &m.model_space.basis},
                                            {"A", &m.symbol_A}})},
              {"kind", "nf-ay"},
              {"residual_P", m.residual_P},
              {"residual_S", m.residual_S},
              {"trunc_error", m.model_space.trunc_error},
              {"truncation", m.model_space.n}};
}

Json cmd_blh_solve(const Options& o, const io::RunConfig& cfg) {
  const BlhProblem prob(io::read_matrix(o.a), io::symbol_from_json(io::read_json_file(o.theta)));
  const BlhResult r = blh_solve(prob, cfg.tol);
  if (const auto* sol = std::get_if<BlhSolution>(&r)) {
    return Json{{"B", io::matrix_to_json(sol->B)},       {"inner_residual", prob.inner_residual},
                {"kernel_dim", sol->kernel_dim},          {"residual", sol->residual},
                {"solvable", true},                       {"unique", sol->unique},
                {"wB", sol->wB}};
  }
  const auto& ns = std::get<NoSolution>(r);
  return Json{{"B", io::matrix_to_json(ns.B)},
              {"inner_residual", prob.inner_residual},
              {"residual", ns.residual},
              {"solvable", false}};
}

Json cmd_blh_check(const Options& o, const io::RunConfig& cfg) {
  const Matrix a = io::read_matrix(o.a);
  const SymbolPoly theta = io::symbol_from_json(io::read_json_file(o.theta));
  const Index n = o.truncation.value_or(theta.degree() + 3);
  const InvarianceResult r = invariance_check(a, theta, n, cfg.tol);
  return Json{{"invariant", r.invariant}, {"residual", r.residual}, {"truncation", n}};
}

int cmd_suite(const Options& o, const io::RunConfig& cfg, std::ostream& out) {
  SuiteOptions so;
  so.seed = o.seed.value_or(cfg.seed);
  so.tol = cfg.tol;
  so.boundary_grid = cfg.boundary_grid;
  out << "generator mt19937_64 seed " << so.seed << "\n";
  int failed = 0;
  for (const auto& c : suite_criteria()) {
    if (!o.only.empty() && std::find(o.only.begin(), o.only.end(), c.id) == o.only.end()) continue;
    const CriterionResult r = run_criterion(c, so);
    if (!r.passed) ++failed;
    out << (r.passed ? "PASS" : "FAIL") << "  [" << std::setw(2) << r.id << "] " << r.name << ": " << r.detail
        << "\n";
  }
  out << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gamma-contraction toolkit", "gammaop"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--config", o.config, "RunConfig JSON file (default: $GAMMAOP_CONFIG)");

  auto* point = app.add_subcommand("point", "Membership of (s, p) in the symmetrized bidisc, with beta");
  point->add_option("--s", o.point_s, "s as re or re,im")->required();
  point->add_option("--p", o.point_p, "p as re or re,im")->required();

  auto add_pair = [&o](CLI::App* sub) {
    sub->add_option("--S", o.s, "matrix file for S")->required();
    sub->add_option("--P", o.p, "matrix file for P")->required();
  };
  auto* cls = app.add_subcommand("classify", "Classification report of (S, P)");
  add_pair(cls);
  auto* fund = app.add_subcommand("fundamental", "Fundamental operator of (S, P)");
  add_pair(fund);

  auto* numrad = app.add_subcommand("numrad", "Numerical radius of a matrix");
  numrad->add_option("--A", o.a, "matrix file")->required();

  auto* dilate = app.add_subcommand("dilate", "Dilation matrices written to --out, residuals on stdout");
  add_pair(dilate);
  auto* flag_s = dilate->add_flag("--schaffer", o.schaffer, "isometric Schaffer dilation");
  auto* flag_n = dilate->add_flag("--nf-ay", o.nf_ay, "functional model on the model space");
  flag_s->excludes(flag_n);
  dilate->add_option("--out", o.out_dir, "output directory")->required();
  dilate->add_option("--truncation", o.truncation,
                     "degree N (Schaffer default: config truncation, model default: chosen from ||P||)");

  auto* blh = app.add_subcommand("blh", "Intertwining of pencils by an inner symbol");
  blh->require_subcommand(1);
  auto* blh_solve_cmd = blh->add_subcommand("solve", "Solve for B");
  auto* blh_check_cmd = blh->add_subcommand("check", "Invariance test of Theta H^2");
  for (auto* sub : {blh_solve_cmd, blh_check_cmd}) {
    sub->add_option("--A", o.a, "matrix file for A")->required();
    sub->add_option("--theta", o.theta, "symbol file for Theta")->required();
  }
  blh_check_cmd->add_option("--truncation", o.truncation, "degree N (default: deg Theta + 3)");

  auto* suite = app.add_subcommand("suite", "Run the seeded property suite");
  suite->add_option("--seed", o.seed, "seed (default: config seed)");
  suite->add_option("--only", o.only, "criterion ids to run");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (dilate->parsed() && o.schaffer == o.nf_ay)
      throw CLI::ValidationError("dilate", "exactly one of --schaffer and --nf-ay is required");
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const io::RunConfig cfg = load_config(o.config);
    if (suite->parsed()) return cmd_suite(o, cfg, out);
    Json result;
    if (point->parsed()) result = cmd_point(o, cfg);
    else if (cls->parsed()) result = cmd_classify(o, cfg);
    else if (fund->parsed()) result = cmd_fundamental(o, cfg);
    else if (numrad->parsed()) result = cmd_numrad(o, cfg);
    else if (dilate->parsed()) result = cmd_dilate(o, cfg);
    else if (blh_solve_cmd->parsed()) result = cmd_blh_solve(o, cfg);
    else result = cmd_blh_check(o, cfg);
    out << io::dump(result);
    return 0;
  } catch (const Error& e) {
    err << io::dump(Json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}});
  } catch (const std::exception& e) {
    err << io::dump(Json{{"error", "Internal"}, {"message", e.what()}});
  }
  return 1;
}

}  // namespace gammaop::cli
