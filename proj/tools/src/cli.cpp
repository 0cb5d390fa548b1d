#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "json_out.hpp"
#include "model_file.hpp"
#include "mrig/errors.hpp"
#include "mrig/gstz.hpp"
#include "mrig/integrals.hpp"
#include "mrig/random.hpp"

namespace mrig::cli {

namespace {

struct Options {
  std::string model;
  std::optional<unsigned> threads;
  std::vector<double> at;
  std::vector<double> s;
  std::vector<double> given;
  std::vector<double> theta;
  std::size_t count = 0;
  std::size_t keep = 0;
  std::size_t samples = 1'000'000;
  std::uint64_t seed = 1;
  std::string out_format = "jsonl";
  std::string identity;
  std::string method = "conv";
  double tol = 5e-3;
  double q = 0.5;
};

void require_length(const std::vector<double>& v, std::size_t n, const char* flag) {
  if (v.size() != n)
    throw DimensionError(std::string(flag) + " expects " + std::to_string(n) + " values, got " +
                         std::to_string(v.size()));
}

// x_i = (1 + sum_j w_ij) / 2, where M_x = I + (graph Laplacian) is positive definite.
Vector default_point(const WeightMatrix& w) {
  Vector x(w.size(), 0.5);
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) x[i] += 0.5 * w(i, j);
  return x;
}

Vector squares(const Vector& a) {
  Vector y(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) y[i] = a[i] * a[i];
  return y;
}

McOptions mc_options(const Options& o) { return {o.seed, o.samples, resolve_threads(o.threads)}; }

std::string edge_list(const WeightMatrix& w) {
  std::string s = "[";
  for (std::size_t k = 0; k < w.edges().size(); ++k) {
    const Edge& e = w.edges()[k];
    if (k) s += ',';
    s += '[' + std::to_string(e.i) + ',' + std::to_string(e.j) + ',' + json_number(e.w) + ']';
  }
  return s + ']';
}

int cmd_density(const GstzParams& p, const Options& o, std::ostream& out, std::ostream& err) {
  require_length(o.at, p.dim(), "--at");
  auto tested = ConePoint::test(p.weights(), o.at);
  if (auto* rej = std::get_if<ConeRejection>(&tested)) {
    out << JsonObject().raw("log_density", "null").boolean("in_cone", false).str() << '\n';
    err << "point is not in the cone (pivot " << rej->pivot << ")\n";
    return kNotInCone;
  }
  const double ld = log_density(p, std::get<ConePoint>(tested));
  out << JsonObject().number("log_density", ld).boolean("in_cone", true).str() << '\n';
  return kOk;
}

int cmd_sample(const GstzParams& p, const Options& o, std::ostream& out) {
  const Matrix x = sample_streams(p, o.seed, o.count, resolve_threads(o.threads));
  if (o.out_format == "csv") {
    for (std::size_t j = 0; j < p.dim(); ++j) out << (j ? ",x" : "x") << j;
    out << '\n';
    for (std::size_t i = 0; i < x.rows(); ++i) {
      for (std::size_t j = 0; j < x.cols(); ++j) out << (j ? "," : "") << json_number(x(i, j));
      out << '\n';
    }
  } else {
    for (std::size_t i = 0; i < x.rows(); ++i) out << json_array(x.row(i)) << '\n';
  }
  return kOk;
}

int cmd_laplace(const GstzParams& p, const Options& o, std::ostream& out) {
  require_length(o.s, p.dim(), "--s");
  out << JsonObject().number("value", laplace(p, o.s)).str() << '\n';
  return kOk;
}

int cmd_moments(const GstzParams& p, std::ostream& out) {
  const GstzMoments m = moments(p);
  out << JsonObject().array("mean", m.mean).raw("cov", json_matrix(m.cov)).str() << '\n';
  return kOk;
}

int cmd_marginalize(const GstzParams& p, const Options& o, std::ostream& out) {
  out << model_json(marginalize(p, o.keep)) << '\n';
  return kOk;
}

int cmd_condition(const GstzParams& p, const Options& o, std::ostream& out) {
  const std::size_t k = o.given.size();
  if (k < 1 || k >= p.dim())
    throw DimensionError("--given expects between 1 and " + std::to_string(p.dim() - 1) + " values");
  const ConePoint head = ConePoint::make(p.weights().leading(k), o.given);
  const ConditionalResult c = condition(p, head);
  out << JsonObject()
             .array("alpha", c.tail.a())
             .array("beta", c.tail.b())
             .array("gamma", c.shift)
             .raw("w_tilde", edge_list(c.tail.weights()))
             .str()
      << '\n';
  return kOk;
}

struct Verdict {
  double lhs;
  double rhs;
  double error;
  bool pass;
};

bool within_rel(double lhs, double rhs, double tol) { return std::abs(lhs - rhs) <= tol * std::abs(rhs); }

Verdict verify_quadrature(const Estimate& lhs, double rhs, double tol) {
  return {lhs.value, rhs, lhs.error, within_rel(lhs.value, rhs, tol)};
}

Verdict verify_mc(const Estimate& lhs, double rhs) {
  return {lhs.value, rhs, lhs.error, std::abs(lhs.value - rhs) <= 3.0 * lhs.error};
}

Verdict run_identity(const GstzParams& p, const Options& o) {
  const WeightMatrix& w = p.weights();
  const std::size_t n = p.dim();
  const Vector y = squares(p.a());

  if (o.identity == "gstz") {
    const double rhs = gstz_rhs(p.a(), p.b());
    if (n <= kMaxQuadratureDim) return verify_quadrature(quad_gstz_lhs(w, p.a(), p.b()), rhs, o.tol);
    return verify_mc(mc_gstz_lhs(w, p.a(), p.b(), mc_options(o)), rhs);
  }
  if (o.identity == "stz") {
    const double rhs = stz_rhs(w, y);
    if (n <= kMaxQuadratureDim) return verify_quadrature(quad_stz_lhs(w, y), rhs, o.tol);
    // With b = 0 the Monte Carlo integrand carries an extra exp(sum_{i<j} w_ij a_i a_j).
    const Vector zero(n, 0.0);
    Estimate e = mc_gstz_lhs(w, p.a(), zero, mc_options(o));
    const double scale = std::exp(-w.half_form(p.a(), p.a()));
    e.value *= scale;
    e.error *= scale;
    return verify_mc(e, rhs);
  }
  if (o.identity == "tree") {
    if (!w.is_tree()) throw ModelError("the tree identity needs W to be a spanning tree");
    return verify_quadrature(quad_tree_integral(w, y, o.q), tree_integral_closed_y(w, y, o.q), o.tol);
  }

  const Vector x = o.at.empty() ? default_point(w) : o.at;
  require_length(x, n, "--at");
  if (o.identity == "orthant") {
    const ConePoint point = ConePoint::make(w, x);
    const Estimate conv = orthant_via_convolution(w, point);
    const Estimate mc = orthant_mc(w, point, mc_options(o));
    const double err = std::hypot(conv.error, mc.error);
    return {conv.value, mc.value, err, std::abs(conv.value - mc.value) <= 3.0 * err};
  }
  if (o.identity == "arccos") {
    if (n != 2) throw DimensionError("the arccos identity needs a 2-dimensional model");
    const ConePoint point = ConePoint::make(w, x);
    return verify_quadrature(orthant_via_convolution(w, point), orthant_arccos(w, point), o.tol);
  }
  if (o.identity == "hhh") {
    const Vector theta = o.theta.empty() ? Vector(n, 1.0) : o.theta;
    require_length(theta, n, "--theta");
    const LaplaceCheck c = orthant_laplace_check(w, y, theta, mc_options(o));
    if (c.lhs.method == EstimateMethod::Quadrature) return verify_quadrature(c.lhs, c.rhs, o.tol);
    return verify_mc(c.lhs, c.rhs);
  }
  throw CLI::ValidationError("--identity", "unknown identity " + o.identity);
}

int cmd_verify(const GstzParams& p, const Options& o, std::ostream& out, std::ostream& err) {
  const Verdict v = run_identity(p, o);
  out << JsonObject().number("lhs", v.lhs).number("rhs", v.rhs).number("error", v.error).boolean("pass", v.pass).str()
      << '\n';
  if (!v.pass) {
    err << "verification failed: " << o.identity << '\n';
    return kVerificationFailed;
  }
  return kOk;
}

int cmd_tree_integral(const GstzParams& p, const Options& o, std::ostream& out, std::ostream& err) {
  const WeightMatrix& w = p.weights();
  if (!w.is_tree()) throw ModelError("tree-integral needs W to be a spanning tree");
  const Vector y = squares(p.a());
  const double closed = tree_integral_closed_y(w, y, o.q);
  const Estimate quad = quad_tree_integral(w, y, o.q);
  const bool pass = within_rel(quad.value, closed, o.tol);
  out << JsonObject()
             .number("closed_form", closed)
             .number("quadrature", quad.value)
             .number("error", quad.error)
             .boolean("pass", pass)
             .str()
      << '\n';
  if (!pass) {
    err << "tree integral quadrature disagrees with the closed form\n";
    return kVerificationFailed;
  }
  return kOk;
}

int cmd_orthant(const GstzParams& p, const Options& o, std::ostream& out) {
  const WeightMatrix& w = p.weights();
  const Vector x = o.at.empty() ? default_point(w) : o.at;
  require_length(x, p.dim(), "--at");
  const ConePoint point = ConePoint::make(w, x);
  const Estimate e = o.method == "mc" ? orthant_mc(w, point, mc_options(o)) : orthant_via_convolution(w, point);
  out << JsonObject().number("value", e.value).number("error", e.error).str() << '\n';
  return kOk;
}

CLI::App* add_command(CLI::App& app, const char* name, const char* about, Options& o) {
  CLI::App* sub = app.add_subcommand(name, about);
  sub->add_option("--model", o.model, "model file (JSON)")->required()->check(CLI::ExistingFile);
  sub->add_option("--threads", o.threads, "worker threads (default: MRIG_THREADS, else 1)")->check(CLI::PositiveNumber);
  return sub;
}

void add_list(CLI::App* sub, const char* flag, std::vector<double>& target, const char* about, bool required) {
  auto* opt = sub->add_option(flag, target, about)->delimiter(',')->allow_extra_args(false);
  if (required) opt->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Multivariate reciprocal inverse Gaussian laws: densities, sampling and integral checks", "mrig");
  app.require_subcommand(1);
  Options o;

  auto* density = add_command(app, "density", "log density at a point", o);
  add_list(density, "--at", o.at, "point x1,..,xn", true);

  auto* sample = add_command(app, "sample", "draw samples", o);
  sample->add_option("--count", o.count, "number of draws")->required();
  sample->add_option("--seed", o.seed, "master seed");
  sample->add_option("--out", o.out_format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}));

  auto* lap = add_command(app, "laplace", "Laplace transform E exp(-<s, X>)", o);
  add_list(lap, "--s", o.s, "argument s1,..,sn", true);

  auto* mom = add_command(app, "moments", "mean vector and covariance matrix", o);

  auto* marg = add_command(app, "marginalize", "model of the leading k coordinates", o);
  marg->add_option("--keep", o.keep, "number of leading coordinates")->required();

  auto* cond = add_command(app, "condition", "conditional law given the leading coordinates", o);
  add_list(cond, "--given", o.given, "values x1,..,xk", true);

  auto* verify = add_command(app, "verify", "check an integral identity numerically", o);
  verify->add_option("--identity", o.identity, "identity to check")
      ->required()
      ->check(CLI::IsMember({"gstz", "stz", "tree", "orthant", "hhh", "arccos"}));
  verify->add_option("--tol", o.tol, "relative tolerance for quadrature checks");
  verify->add_option("--seed", o.seed, "master seed for Monte Carlo checks");
  verify->add_option("--samples", o.samples, "Monte Carlo sample count")->check(CLI::Range(2ul, 1ul << 40));
  verify->add_option("--q", o.q, "exponent for the tree identity")->check(CLI::PositiveNumber);
  add_list(verify, "--theta", o.theta, "theta1,..,thetan for the hhh identity (default all 1)", false);
  add_list(verify, "--at", o.at, "point x1,..,xn for orthant identities", false);

  auto* tree = add_command(app, "tree-integral", "tree integral: closed form against quadrature", o);
  tree->add_option("--q", o.q, "exponent q > 0")->check(CLI::PositiveNumber);
  tree->add_option("--tol", o.tol, "relative tolerance");

  auto* orth = add_command(app, "orthant", "Gaussian orthant probability Pr(B > 0), B ~ N(0, M_x)", o);
  add_list(orth, "--at", o.at, "point x1,..,xn (default: a fixed interior point)", false);
  orth->add_option("--method", o.method, "conv or mc")->check(CLI::IsMember({"conv", "mc"}));
  orth->add_option("--seed", o.seed, "master seed for mc");
  orth->add_option("--samples", o.samples, "Monte Carlo sample count")->check(CLI::Range(2ul, 1ul << 40));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const GstzParams p = load_model(o.model);
    if (density->parsed()) return cmd_density(p, o, out, err);
    if (sample->parsed()) return cmd_sample(p, o, out);
    if (lap->parsed()) return cmd_laplace(p, o, out);
    if (mom->parsed()) return cmd_moments(p, out);
    if (marg->parsed()) return cmd_marginalize(p, o, out);
    if (cond->parsed()) return cmd_condition(p, o, out);
    if (verify->parsed()) return cmd_verify(p, o, out, err);
    if (tree->parsed()) return cmd_tree_integral(p, o, out, err);
    if (orth->parsed()) return cmd_orthant(p, o, out);
    err << "no subcommand\n";
    return kUsage;
  } catch (const ModelError& e) {
    err << "invalid model: " << e.what() << '\n';
    return kInvalidModel;
  } catch (const NotInConeError& e) {
    err << "not in cone: " << e.what() << '\n';
    return kNotInCone;
  } catch (const CLI::Error& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace mrig::cli
