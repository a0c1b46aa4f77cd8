#include "yaxter/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "yaxter/baxterize.hpp"
#include "yaxter/braidgens.hpp"
#include "yaxter/dynamics.hpp"
#include "yaxter/hamiltonians.hpp"
#include "yaxter/spectra_berry.hpp"

namespace yaxter::cli {

using nlohmann::json;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadParams:
    case ErrorKind::UnknownFamily:
    case ErrorKind::InvalidEpsilon:
    case ErrorKind::DegenerateQ:
    case ErrorKind::StepTooSmall:
    case ErrorKind::StepsTooFew:
    case ErrorKind::BondOutOfRange:
    case ErrorKind::SiteOutOfRange:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::OutOfRange:
      return kBadInput;
    case ErrorKind::IoError:
      return kIoError;
    default:
      return kDomainError;
  }
}

double hard_tolerance_from_env() {
  const char* raw = std::getenv("YAXTER_TOL");
  if (raw == nullptr || *raw == '\0') return kDefaultHardTolerance;
  char* end = nullptr;
  const double tol = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(tol > 0.0) || !std::isfinite(tol)) {
    throw Error(ErrorKind::BadParams, std::string("YAXTER_TOL is not a positive number: ") + raw);
  }
  return tol;
}

double round_sig(double x, int digits) {
  if (!std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round_sig(x);
}

namespace {

std::string format_sig(double x) {
  if (std::isnan(x)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", round_sig(x));
  return buf;
}

json matrix_json(const ComplexMatrix& m) {
  json entries = json::array();
  for (const Complex& z : m.entries()) entries.push_back(json::array({number(z.real()), number(z.imag())}));
  return entries;
}

Check hard_check(std::string name, double residual, double tol, std::string note = {}) {
  return {std::move(name), residual, tol, true, std::move(note)};
}

Check report_check(std::string name, double residual, double tol, std::string note) {
  return {std::move(name), residual, tol, false, std::move(note)};
}

void add_ybe_check(std::vector<Check>& checks, std::string name, const RMatrixFamily& fam, double flux, bool hard,
                   std::optional<CompositionRule> rule = std::nullopt, std::string note = {}) {
  const GridResidual g = ybe_grid_residual(fam, default_spectral_grid(fam), flux, rule);
  std::string full = std::string(to_string(rule.value_or(fam.rule))) + " rule, 5x5 grid";
  if (g.skipped > 0) full += ", " + std::to_string(g.skipped) + " singular pairs skipped";
  if (!note.empty()) full += "; " + note;
  checks.push_back({std::move(name), g.max_residual, kYbeTolerance, hard, full});
}

void add_unitarity_check(std::vector<Check>& checks, const RMatrixFamily& fam, double tol) {
  checks.push_back(hard_check("unitarity_r", unitarity_residual(fam, default_unitarity_grid(fam)), tol,
                              "spectral grid x 6 flux values"));
}

double tl_projector_residual(const ComplexMatrix& u, double d) {
  const ComplexMatrix p = u * Complex(1.0 / d);
  return distance(p * p, p);
}

std::vector<Check> verify_mtype(const VerifyParams& p, double tol) {
  const Epsilon eps(p.epsilon);
  const ComplexMatrix b = b_half(p.phi, eps);
  std::vector<Check> checks;
  checks.push_back(hard_check("braid_relations", check_braid_relations(b, p.sites), tol));
  checks.push_back(hard_check("hecke", distance(b * b - b * Complex(std::sqrt(2.0)), -ComplexMatrix::identity(4)), tol,
                              "B^2 - sqrt2 B + 1 = 0"));
  checks.push_back(hard_check("unitarity_braid", unitarity_defect(b), tol));
  const ExtraSpecialResidual es = check_extraspecial(p.phi, eps, p.sites);
  checks.push_back(hard_check("extraspecial_square", es.square, tol, "M_i^2 = -1"));
  checks.push_back(hard_check("extraspecial_distant_commute", es.distant_commute, tol, "|i-j| >= 2"));
  checks.push_back(report_check("extraspecial_adjacent_anticommute", es.adjacent_anti, tol,
                                "bondwise embedding of M; reported only"));
  const RMatrixFamily fam = m_family(eps);
  add_ybe_check(checks, "ybe_multiplicative", fam, p.phi, true);
  add_ybe_check(checks, "ybe_additive", fam, p.phi, false, CompositionRule::Additive,
                "composition-rule probe, reported only");
  add_unitarity_check(checks, fam, tol);
  double inversion = 0.0;
  for (Complex x : default_spectral_grid(fam)) {
    inversion = std::max(inversion, distance(fam.at(x, p.phi) * fam.at(1.0 / x, p.phi), ComplexMatrix::identity(4)));
  }
  checks.push_back(hard_check("spectral_inversion", inversion, tol, "R(x) R(1/x) = 1"));
  checks.push_back(hard_check("asymptotic_braid", asymptotic_braid_distance(fam, 1e6, p.phi), kAsymptoticTolerance,
                              "x = 1e6, up to global phase"));
  return checks;
}

std::vector<Check> verify_sixvertex(const VerifyParams& p, double tol) {
  const ComplexMatrix b = six_vertex_b(p.q, p.eta_phase);
  const ComplexMatrix u = tl_u_sixvertex(p.q, p.eta_phase);
  const ComplexMatrix id = ComplexMatrix::identity(4);
  const double d = p.q + 1.0 / p.q;
  std::vector<Check> checks;
  checks.push_back(hard_check("braid_relations", check_braid_relations(b, p.sites), tol, "B = q - U"));
  checks.push_back(hard_check("characteristic", frobenius_norm((b - id * Complex(p.q)) * (b + id * Complex(1.0 / p.q))),
                              tol, "(B - q)(B + 1/q) = 0"));
  checks.push_back(hard_check("tl_relations", check_temperley_lieb(u, d, p.sites), tol, "d = q + 1/q"));
  checks.push_back(hard_check("tl_projector", tl_projector_residual(u, d), tol));
  const RMatrixFamily fam = six_vertex_family(p.q);
  add_ybe_check(checks, "ybe_multiplicative", fam, p.eta_phase, true);
  add_ybe_check(checks, "ybe_symmetrized", symmetrized_six_vertex_family(p.q), p.eta_phase, true);
  add_unitarity_check(checks, fam, tol);
  double conj_inverse = 0.0;
  double literal = 0.0;
  for (Complex x : default_spectral_grid(fam)) {
    try {
      const ComplexMatrix r = fam.at(x, p.eta_phase);
      conj_inverse = std::max(conj_inverse, distance(r * fam.at(1.0 / x, p.eta_phase), id));
      literal = std::max(literal, distance(r * fam.at(-x, p.eta_phase), id));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NormalizationSingular) throw;
    }
  }
  checks.push_back(hard_check("inverse_conjugate", conj_inverse, tol, "R(x) R(1/x) = 1 on |x| = 1"));
  checks.push_back(report_check("inverse_minus_x", literal, tol, "R(x) R(-x) = 1; reported only"));
  checks.push_back(hard_check("asymptotic_braid", asymptotic_braid_distance(fam, Complex(0.0, 1e6), p.eta_phase),
                              kAsymptoticTolerance, "x = 1e6 i, up to global phase"));
  const Complex x = std::polar(1.0, 0.5);
  const ComplexMatrix s = symmetrize(trig_baxterize_sixvertex(x, p.q, p.eta_phase), x);
  checks.push_back(report_check("symmetrized_offdiagonal", std::abs(s(1, 2) - s(2, 1)), tol,
                                "x = exp(0.5i); equal entries need eta^2 = 1; reported only"));
  return checks;
}

std::vector<Check> verify_tl(const VerifyParams& p, double tol, Family family) {
  const Epsilon eps(p.epsilon);
  const BraidGenerator g{.family = family, .phi = p.phi, .epsilon = eps};
  const ComplexMatrix u = g.materialize();
  const double d = g.tl_loop_value();
  std::vector<Check> checks;
  checks.push_back(hard_check("tl_relations", check_temperley_lieb(u, d, p.sites), tol, "d = 2 epsilon"));
  checks.push_back(hard_check("tl_projector", tl_projector_residual(u, d), tol));
  checks.push_back(hard_check("braid_relations", check_braid_relations(g, p.sites), tol, "B = 1 - epsilon U"));
  if (family == Family::TLMid) {
    checks.push_back(hard_check("matches_sixvertex_u", distance(u, tl_u_sixvertex(p.epsilon, p.phi)), tol,
                                "q = epsilon, eta phase = phi"));
  }
  return checks;
}

std::vector<Check> verify_permutation(const VerifyParams& p, double tol) {
  const ComplexMatrix pm = permutation_p();
  std::vector<Check> checks;
  checks.push_back(hard_check("braid_relations", check_braid_relations(pm, p.sites), tol));
  checks.push_back(hard_check("involution", distance(pm * pm, ComplexMatrix::identity(4)), tol, "P^2 = 1"));
  checks.push_back(hard_check("unitarity_braid", unitarity_defect(pm), tol));
  return checks;
}

std::vector<Check> verify_rational_yang(const VerifyParams& p, double tol) {
  const RMatrixFamily fam = rational_yang_family(p.c);
  std::vector<Check> checks;
  add_ybe_check(checks, "ybe_additive", fam, 0.0, true);
  add_unitarity_check(checks, fam, tol);
  checks.push_back(hard_check("reduces_to_p", distance(rational_r_yang(0.7, 0.0), permutation_p()), tol, "c = 0"));
  return checks;
}

std::vector<Check> verify_rational_tl(const VerifyParams& p, double tol) {
  const RMatrixFamily fam = rational_tl_family(p.a, Epsilon(p.epsilon));
  std::vector<Check> checks;
  add_ybe_check(checks, "ybe_additive", fam, p.phi, true);
  add_unitarity_check(checks, fam, tol);
  double flip = 0.0;
  for (Complex u : default_spectral_grid(fam)) {
    try {
      flip = std::max(flip, distance(fam.at(u, p.phi) * fam.at(-u, p.phi), ComplexMatrix::identity(4)));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SingularDenominator) throw;
    }
  }
  checks.push_back(hard_check("unitarity_flip", flip, tol, "R(u) R(-u) = 1"));
  return checks;
}

std::string timestamp_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

bool VerificationReport::passed() const {
  for (const auto& c : checks)
    if (c.hard && !c.passed()) return false;
  return true;
}

json VerificationReport::to_json(bool with_timestamp) const {
  json out;
  out["command"] = "verify";
  out["family"] = family;
  json list = json::array();
  for (const auto& c : checks) {
    list.push_back({{"name", c.name},
                    {"residual", number(c.residual)},
                    {"tolerance", number(c.tolerance)},
                    {"passed", c.passed()},
                    {"hard", c.hard},
                    {"note", c.note}});
  }
  out["checks"] = std::move(list);
  out["passed"] = passed();
  json meta = {{"version", std::string(kVersion)}, {"parameters", parameters}};
  if (with_timestamp) meta["timestamp"] = timestamp_now();
  out["metadata"] = std::move(meta);
  return out;
}

VerificationReport verify_family(const std::string& family, const VerifyParams& p, double tol) {
  static const std::map<std::string, int> known = {{"mtype", 0},       {"sixvertex", 1},     {"tldiag", 2},
                                                   {"tlmid", 3},       {"permutation", 4},   {"rational-yang", 5},
                                                   {"rational-tl", 6}};
  const auto it = known.find(family);
  if (it == known.end()) throw Error(ErrorKind::UnknownFamily, "unknown family '" + family + "'");
  if (p.sites < 3 || p.sites > 10) throw Error(ErrorKind::BadParams, "sites must lie in [3, 10]");
  if (p.epsilon != 1 && p.epsilon != -1) throw Error(ErrorKind::BadParams, "epsilon must be +1 or -1");

  VerificationReport report;
  report.family = family;
  json params = {{"sites", p.sites}};
  switch (it->second) {
    case 0:
      params["phi"] = number(p.phi);
      params["epsilon"] = p.epsilon;
      report.checks = verify_mtype(p, tol);
      break;
    case 1:
      if (p.q == 0.0 || !std::isfinite(p.q)) throw Error(ErrorKind::BadParams, "q must be a nonzero number");
      params["q"] = number(p.q);
      params["eta_phase"] = number(p.eta_phase);
      report.checks = verify_sixvertex(p, tol);
      break;
    case 2:
    case 3:
      params["phi"] = number(p.phi);
      params["epsilon"] = p.epsilon;
      report.checks = verify_tl(p, tol, it->second == 2 ? Family::TLDiag : Family::TLMid);
      break;
    case 4:
      report.checks = verify_permutation(p, tol);
      break;
    case 5:
      params["c"] = number(p.c);
      report.checks = verify_rational_yang(p, tol);
      break;
    case 6:
      params["a"] = number(p.a);
      params["phi"] = number(p.phi);
      params["epsilon"] = p.epsilon;
      report.checks = verify_rational_tl(p, tol);
      break;
  }
  params["hard_tolerance"] = number(tol);
  report.parameters = std::move(params);
  return report;
}

std::string scan_csv(const std::vector<ScanRecord>& records) {
  std::ostringstream os;
  os << "theta,q,gap,concurrence,berry_plus,energy_split\n";
  for (const auto& r : records) {
    os << format_sig(r.theta) << ',' << (r.q ? format_sig(*r.q) : "") << ',' << format_sig(r.gap) << ','
       << format_sig(r.concurrence) << ',' << format_sig(r.berry_plus) << ',' << format_sig(r.energy_split) << '\n';
  }
  return os.str();
}

namespace {

ModelKind parse_model(const std::string& name, bool allow_all = true) {
  if (name == "h1") return ModelKind::H1;
  if (name == "h2") return ModelKind::H2;
  if (allow_all && name == "h3") return ModelKind::H3;
  if (allow_all && name == "h4") return ModelKind::H4;
  throw Error(ErrorKind::BadParams, "unknown model '" + name + "'");
}

BandLabel parse_band(const std::string& name) {
  if (name == "plus") return BandLabel::Plus;
  if (name == "minus") return BandLabel::Minus;
  throw Error(ErrorKind::BadParams, "band must be plus or minus");
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::IoError, "cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw Error(ErrorKind::IoError, "failed writing '" + path + "'");
}

std::vector<double> grid(double lo, double hi, int steps, const char* what) {
  if (steps <= 0) throw Error(ErrorKind::BadParams, std::string(what) + " steps must be positive");
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw Error(ErrorKind::BadParams, std::string(what) + " bounds");
  std::vector<double> out;
  for (int k = 0; k < steps; ++k) out.push_back(steps == 1 ? lo : lo + (hi - lo) * k / (steps - 1));
  return out;
}

struct Options {
  // verify
  std::string family;
  VerifyParams verify;
  // shared model options
  std::string model = "h1";
  double theta = 0.0;
  double phi = 0.0;
  double omega = 1.0;
  double q = 2.0;
  int epsilon = 1;
  bool numeric = false;
  double step = kDefaultFdStep;
  std::string band = "plus";
  std::size_t loop_points = kDefaultLoopPoints;
  std::string method = "both";
  double theta_min = 0.0, theta_max = 1.2;
  int theta_steps = 7;
  double q_min = 0.5, q_max = 2.0;
  int q_steps = 4;
  double g = 50.0;
  std::size_t steps = 10000;
  std::string out_path;
  bool timestamp = false;
};

HamiltonianModel make_model(const Options& o) {
  HamiltonianModel m;
  m.kind = parse_model(o.model);
  m.theta = o.theta;
  m.omega = o.omega;
  m.q = o.q;
  if (m.kind == ModelKind::H2 && o.q == 0.0) throw Error(ErrorKind::BadParams, "q must be nonzero");
  if (o.epsilon != 1 && o.epsilon != -1) throw Error(ErrorKind::BadParams, "epsilon must be +1 or -1");
  m.epsilon = Epsilon(o.epsilon);
  return m;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int cmd_verify(const Options& o, std::ostream& out) {
  const VerificationReport report = verify_family(o.family, o.verify, hard_tolerance_from_env());
  write_output(dump(report.to_json(o.timestamp)), o.out_path, out);
  return report.passed() ? kPass : kCheckFailure;
}

int cmd_derive(const Options& o, std::ostream& out) {
  const HamiltonianModel model = make_model(o);
  const ComplexMatrix h = model.materialize(o.phi);
  json j;
  j["command"] = "derive";
  j["model"] = o.model;
  j["parameters"] = {{"theta", number(o.theta)}, {"phi", number(o.phi)}, {"omega", number(o.omega)}};
  if (model.kind == ModelKind::H2) j["parameters"]["q"] = number(o.q);
  if (model.kind == ModelKind::H3) j["parameters"]["epsilon"] = o.epsilon;
  j["rows"] = h.rows();
  j["cols"] = h.cols();
  j["matrix"] = matrix_json(h);
  if (o.numeric) {
    RMatrixFamily fam;
    switch (model.kind) {
      case ModelKind::H1: fam = m_family(model.epsilon); break;
      case ModelKind::H2: fam = symmetrized_six_vertex_family(o.q); break;
      case ModelKind::H3: fam = rational_tl_family(1.0, model.epsilon, Family::TLDiag); break;
      default: fam = rational_tl_family(1.0, model.epsilon, Family::TLMid); break;
    }
    const DerivedHamiltonian d = derive_h_numeric(fam, o.theta, o.phi, o.omega, o.step);
    const auto exact = eig_hermitian(h).values;
    const auto approx = eig_hermitian(d.matrix).values;
    double spectral = 0.0;
    for (std::size_t i = 0; i < exact.size(); ++i) spectral = std::max(spectral, std::abs(exact[i] - approx[i]));
    j["numeric"] = {{"family", fam.name},
                    {"step", number(o.step)},
                    {"matrix", matrix_json(d.matrix)},
                    {"anti_hermitian", number(d.anti_hermitian)}};
    j["fd_distance"] = number(distance(d.matrix, h));
    j["spectral_distance"] = number(spectral);
    if (model.kind == ModelKind::H2) {
      const H2Compatibility c = h2_compatibility(o.theta, o.phi, o.omega, o.q);
      j["h2_compatibility"] = {{"antidiagonal_gauge_offset_minus", number(c.antidiagonal_minus)},
                               {"antidiagonal_gauge_offset_plus", number(c.antidiagonal_plus)},
                               {"diagonal_gauge_offset_minus", number(c.diagonal_minus)},
                               {"diagonal_gauge_offset_plus", number(c.diagonal_plus)}};
    }
  }
  write_output(dump(j), o.out_path, out);
  return kPass;
}

int cmd_berry(const Options& o, std::ostream& out) {
  const HamiltonianModel model = make_model(o);
  const BandLabel band = parse_band(o.band);
  if (o.method != "analytic" && o.method != "wilson" && o.method != "both") {
    throw Error(ErrorKind::BadParams, "method must be analytic, wilson or both");
  }
  const int sign = band == BandLabel::Plus ? 1 : -1;
  json j;
  j["command"] = "berry";
  j["model"] = o.model;
  j["theta"] = number(o.theta);
  if (model.kind == ModelKind::H2) j["q"] = number(o.q);
  j["band"] = o.band;
  j["method"] = o.method;
  std::optional<double> analytic;
  std::optional<double> wilson;
  if (o.method != "wilson") {
    analytic = model.kind == ModelKind::H2 ? berry_analytic_h2(o.theta, o.q, sign).unwrapped
                                           : berry_analytic_h1(o.theta, sign).unwrapped;
  }
  if (o.method != "analytic") {
    wilson = berry_wilson_loop(model, band, o.loop_points).unwrapped;
    j["loop_points"] = o.loop_points;
  }
  j["phase_analytic"] = analytic ? number(*analytic) : json(nullptr);
  j["phase_wilson"] = wilson ? number(*wilson) : json(nullptr);
  if (analytic && wilson) {
    const bool same_sign = (*analytic >= 0.0) == (*wilson >= 0.0) || std::abs(*analytic) < 1e-12 ||
                           std::abs(*wilson) < 1e-12;
    j["difference"] = number(std::abs(std::abs(*wilson) - std::abs(*analytic)));
    j["sign_note"] = same_sign ? "signs agree; difference compares magnitudes"
                               : "signs differ; difference compares magnitudes";
  } else {
    j["difference"] = nullptr;
    j["sign_note"] = "single method";
  }
  write_output(dump(j), o.out_path, out);
  return kPass;
}

int cmd_scan(const Options& o, std::ostream& out) {
  const ModelKind kind = parse_model(o.model, false);
  const auto thetas = grid(o.theta_min, o.theta_max, o.theta_steps, "theta");
  std::vector<double> qs;
  if (kind == ModelKind::H2) {
    qs = grid(o.q_min, o.q_max, o.q_steps, "q");
    for (double q : qs)
      if (q == 0.0) throw Error(ErrorKind::BadParams, "q grid contains 0");
  }
  if (o.loop_points < 8) throw Error(ErrorKind::BadParams, "loop points must be at least 8");
  write_output(scan_csv(criticality_scan(thetas, qs, o.omega, o.loop_points)), o.out_path, out);
  return kPass;
}

int cmd_evolve(const Options& o, std::ostream& out) {
  const HamiltonianModel model = make_model(o);
  const BandLabel band = parse_band(o.band);
  if (!(o.g > 0.0)) throw Error(ErrorKind::BadParams, "g must be positive");
  const AdiabaticRow row = adiabatic_report(model, {o.g}, o.steps, band).front();
  json j;
  j["command"] = "evolve";
  j["model"] = o.model;
  j["theta"] = number(o.theta);
  j["omega"] = number(o.omega);
  if (model.kind == ModelKind::H2) j["q"] = number(o.q);
  j["g"] = number(o.g);
  j["steps"] = o.steps;
  j["band"] = o.band;
  j["fidelity"] = number(row.fidelity);
  j["geometric_phase"] = number(row.geometric_phase);
  j["analytic_phase"] = number(row.analytic_phase);
  j["deviation"] = number(row.deviation);
  if (!std::isfinite(row.geometric_phase)) j["note"] = "state did not return (fidelity below 0.9)";
  write_output(dump(j), o.out_path, out);
  return kPass;
}

json error_json(const Error& e) {
  std::string message = e.what();
  const std::string prefix = std::string(to_string(e.kind())) + ": ";
  if (message.rfind(prefix, 0) == 0) message = message.substr(prefix.size());
  return {{"error", std::string(to_string(e.kind()))}, {"message", message}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Yang-Baxter systems laboratory", "yaxter"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));
  Options o;

  auto add_model_opts = [&o](CLI::App* sub) {
    sub->add_option("model", o.model, "h1, h2, h3 or h4")->required();
    sub->add_option("--theta", o.theta, "theta (radians)");
    sub->add_option("--omega", o.omega, "drive frequency");
    sub->add_option("--q", o.q, "deformation parameter (h2)");
    sub->add_option("--epsilon", o.epsilon, "+1 or -1 (h3)");
  };

  auto* verify = app.add_subcommand("verify", "check braid/TL/YBE/unitarity relations of a family");
  verify->add_option("family", o.family, "mtype, sixvertex, tldiag, tlmid, permutation, rational-yang, rational-tl")
      ->required();
  verify->add_option("--phi", o.verify.phi, "flux (radians)");
  verify->add_option("--epsilon", o.verify.epsilon, "+1 or -1");
  verify->add_option("--q", o.verify.q, "six-vertex q");
  verify->add_option("--eta-phase", o.verify.eta_phase, "phase of eta (radians)");
  verify->add_option("--c", o.verify.c, "rational Yang constant");
  verify->add_option("--a", o.verify.a, "rational TL constant");
  verify->add_option("--sites", o.verify.sites, "chain length for the algebra checks");

  auto* derive = app.add_subcommand("derive", "print a model Hamiltonian");
  add_model_opts(derive);
  derive->add_option("--phi", o.phi, "flux (radians)");
  derive->add_flag("--numeric", o.numeric, "also derive H = i dR/dt R^dagger by finite differences");
  derive->add_option("--step", o.step, "finite-difference step (radians)");

  auto* berry = app.add_subcommand("berry", "Berry phase of a band");
  add_model_opts(berry);
  berry->add_option("--band", o.band, "plus or minus");
  berry->add_option("--loop-points", o.loop_points, "Wilson loop points");
  berry->add_option("--method", o.method, "analytic, wilson or both");

  auto* scan = app.add_subcommand("scan", "criticality scan as CSV");
  scan->add_option("--model", o.model, "h1 or h2");
  scan->add_option("--theta-min", o.theta_min);
  scan->add_option("--theta-max", o.theta_max);
  scan->add_option("--theta-steps", o.theta_steps);
  scan->add_option("--q-min", o.q_min);
  scan->add_option("--q-max", o.q_max);
  scan->add_option("--q-steps", o.q_steps);
  scan->add_option("--omega", o.omega);
  scan->add_option("--loop-points", o.loop_points);

  auto* evolve = app.add_subcommand("evolve", "RK4 evolution over one drive period");
  add_model_opts(evolve);
  evolve->add_option("--g", o.g, "energy scale replacing omega in the prefactor");
  evolve->add_option("--steps", o.steps, "RK4 steps");
  evolve->add_option("--band", o.band, "plus or minus");

  for (auto* sub : {verify, derive, berry, scan, evolve}) {
    sub->add_option("--out", o.out_path, "write output to this file");
    sub->add_flag("--timestamp", o.timestamp, "include a timestamp in report metadata");
  }

  std::vector<std::string> argv_store{"yaxter"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kBadInput;
  }

  try {
    if (verify->parsed()) return cmd_verify(o, out);
    if (derive->parsed()) return cmd_derive(o, out);
    if (berry->parsed()) return cmd_berry(o, out);
    if (scan->parsed()) return cmd_scan(o, out);
    return cmd_evolve(o, out);
  } catch (const Error& e) {
    out << dump(error_json(e));
    err << "yaxter: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
}

}  // namespace yaxter::cli
