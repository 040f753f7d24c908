#include "gelfand/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <variant>

#include "gelfand/errors.hpp"
#include "gelfand/extension.hpp"
#include "gelfand/spherical.hpp"
#include "gelfand/su2_reps.hpp"
#include "gelfand/transform.hpp"
#include "gelfand/verify.hpp"

namespace gelfand {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double x = 0;
  try {
    x = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != v.size() || !std::isfinite(x)) throw InvalidArgument(key + ": not a number: '" + v + "'");
  return x;
}

int parse_int(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  int x = 0;
  try {
    x = std::stoi(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != v.size()) throw InvalidArgument(key + ": not an integer: '" + v + "'");
  return x;
}

// "a:b:step"
void parse_range(const std::string& key, const std::string& v, double& lo, double& hi, double& step) {
  const auto p1 = v.find(':'), p2 = v.rfind(':');
  if (p1 == std::string::npos || p1 == p2) throw InvalidArgument(key + ": expected a:b:step, got '" + v + "'");
  lo = parse_double(key, v.substr(0, p1));
  hi = parse_double(key, v.substr(p1 + 1, p2 - p1 - 1));
  step = parse_double(key, v.substr(p2 + 1));
}

std::vector<double> range(double lo, double hi, double step) {
  std::vector<double> v;
  const int count = int(std::floor((hi - lo) / step + 1e-9));
  for (int i = 0; i <= count; ++i) v.push_back(lo + i * step);
  return v;
}

void set_key(RunConfig& c, const std::string& key, const std::string& v) {
  if (key == "n") c.n = parse_int(key, v);
  else if (key == "m") c.m = parse_int(key, v);
  else if (key == "quadrature.order") c.quadrature_order = parse_int(key, v);
  else if (key == "quadrature.tolerance") c.quadrature_tolerance = parse_double(key, v);
  else if (key == "radial.truncation_tol") c.radial_truncation_tol = parse_double(key, v);
  else if (key == "jet.max_degree") c.jet_max_degree = parse_int(key, v);
  else if (key == "bump.support") c.bump_support = parse_double(key, v);
  else if (key == "bump.plateau") c.bump_plateau = parse_double(key, v);
  else if (key == "output.format") c.format = v;
  else if (key == "output.path") c.out = v;
  else if (key == "function") c.function = v;
  else if (key == "tolerance") c.tolerance = parse_double(key, v);
  else if (key == "xi") parse_range(key, v, c.xi_min, c.xi_max, c.xi_step);
  else if (key == "r") parse_range(key, v, c.r_min, c.r_max, c.r_step);
  else if (key == "spherical.xi") c.at_xi = parse_double(key, v);
  else if (key == "verify.n_max") c.n_max = parse_int(key, v);
  else if (key == "verify.tolerance_scale") c.tolerance_scale = parse_double(key, v);
  else throw InvalidArgument("unknown config key '" + key + "'");
}

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// A table that renders to CSV, JSON or a line plot.
using Cell = std::variant<long long, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string csv_cell(const Cell& c) {
  if (auto i = std::get_if<long long>(&c)) return std::to_string(*i);
  if (auto d = std::get_if<double>(&c)) return num(*d);
  const std::string& s = std::get<std::string>(c);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

std::string to_csv(const Table& t) {
  std::string s;
  for (std::size_t i = 0; i < t.columns.size(); ++i) s += (i ? "," : "") + t.columns[i];
  s += "\n";
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + csv_cell(r[i]);
    s += "\n";
  }
  return s;
}

nlohmann::json to_json(const Table& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : t.rows) {
    nlohmann::json o = nlohmann::json::object();
    for (std::size_t i = 0; i < r.size(); ++i) std::visit([&](const auto& v) { o[t.columns[i]] = v; }, r[i]);
    rows.push_back(o);
  }
  return {{"columns", t.columns}, {"rows", rows}};
}

struct Series {
  std::string label;
  std::vector<double> x, y;
};

std::string to_svg(const std::string& title, const std::string& xlabel, const std::vector<Series>& series) {
  const double W = 640, H = 420, L = 60, R = 20, T = 40, B = 50;
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (const auto& s : series)
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      x0 = std::min(x0, s.x[i]), x1 = std::max(x1, s.x[i]);
      y0 = std::min(y0, s.y[i]), y1 = std::max(y1, s.y[i]);
    }
  if (x0 > x1) x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (x1 == x0) x1 = x0 + 1;
  if (y1 == y0) y0 -= 0.5, y1 += 0.5;
  auto px = [&](double x) { return L + (x - x0) / (x1 - x0) * (W - L - R); };
  auto py = [&](double y) { return H - B - (y - y0) / (y1 - y0) * (H - T - B); };
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf"};
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W
    << " " << H << "\">\n";
  o << "<rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << W - L - R << "\" height=\"" << H - T - B
    << "\" fill=\"none\" stroke=\"#444\"/>\n";
  o << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">" << title << "</text>\n";
  o << "<text x=\"" << W / 2 << "\" y=\"" << H - 12 << "\" text-anchor=\"middle\" font-size=\"12\">" << xlabel
    << "</text>\n";
  o << "<text x=\"" << L << "\" y=\"" << H - B + 16 << "\" font-size=\"10\">" << num(x0) << "</text>\n";
  o << "<text x=\"" << W - R << "\" y=\"" << H - B + 16 << "\" text-anchor=\"end\" font-size=\"10\">" << num(x1)
    << "</text>\n";
  o << "<text x=\"" << L - 4 << "\" y=\"" << H - B << "\" text-anchor=\"end\" font-size=\"10\">" << num(y0)
    << "</text>\n";
  o << "<text x=\"" << L - 4 << "\" y=\"" << T + 10 << "\" text-anchor=\"end\" font-size=\"10\">" << num(y1)
    << "</text>\n";
  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    const char* c = colors[k % 7];
    o << "<polyline fill=\"none\" stroke=\"" << c << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) o << (i ? " " : "") << px(s.x[i]) << "," << py(s.y[i]);
    o << "\"/>\n";
    o << "<text x=\"" << W - R - 4 << "\" y=\"" << T + 14 + 14 * k << "\" text-anchor=\"end\" font-size=\"11\" fill=\""
      << c << "\">" << s.label << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

EquivariantFunction test_function(const RunConfig& c) {
  std::vector<ClosedForm> g(c.n + 1);
  if (c.function == "gaussian") {
    g[0].terms.push_back({1.0, 0, 0.5});
  } else if (c.function == "l2") {
    if (c.n < 2) throw InvalidArgument("function l2 needs n >= 2");
    g[2].terms.push_back({1.0, 0, 0.5});
  } else if (c.function != "zero") {
    throw InvalidArgument("unknown function '" + c.function + "' (gaussian, zero, l2)");
  }
  return EquivariantFunction::from_profiles(c.n, g);
}

struct Output {
  std::string text;
  int code = 0;
};

Output cmd_spectrum(const RunConfig& c) {
  const int m = c.m.value_or(c.n);
  Table t{{"n", "j", "t_j", "xi1", "xi2", "xi3", "xi4"}, {}};
  std::vector<Series> rays;
  const auto xi = range(c.xi_min, c.xi_max, c.xi_step);
  for (const auto& ray : spectrum_rays(c.n)) {
    Series s{"t = " + std::to_string(ray.slope), {}, {}};
    for (double x : xi) {
      const SpectrumPoint4 p = embed4(m, c.n, x, ray.j);
      t.rows.push_back({(long long)c.n, (long long)ray.j, (long long)ray.slope, p.xi1, p.xi2 + 0.0, p.xi3, p.xi4});
      s.x.push_back(p.xi1);
      s.y.push_back(p.xi2);
    }
    rays.push_back(s);
  }
  if (c.format == "svg") return {to_svg("spectrum rays, n = " + std::to_string(c.n), "xi1 (xi2 vertical)", rays)};
  if (c.format == "json") return {to_json(t).dump(2) + "\n"};
  return {to_csv(t)};
}

Output cmd_spherical(const RunConfig& c) {
  SphericalOptions so{c.quadrature_tolerance, c.quadrature_order};
  Table t{{"n", "j", "xi", "r", "k", "re", "im"}, {}};
  std::vector<Series> plot;
  const auto rs = range(c.r_min, c.r_max, c.r_step);
  std::vector<std::vector<EndMatrix>> vals;
  for (double r : rs) vals.push_back(matrix_spherical_all(c.n, c.at_xi, {0.0, r}, so));
  for (int j = 0; j <= c.n; ++j)
    for (int k = 0; k <= c.n; ++k) {
      Series s{"j=" + std::to_string(j) + " k=" + std::to_string(k), {}, {}};
      for (std::size_t i = 0; i < rs.size(); ++i) {
        const cdouble v = vals[i][j](k, k);
        t.rows.push_back({(long long)c.n, (long long)j, c.at_xi, rs[i], (long long)k, v.real(), v.imag()});
        s.x.push_back(rs[i]);
        s.y.push_back(v.real());
      }
      plot.push_back(s);
    }
  if (c.format == "svg") return {to_svg("diagonal of Phi(r b), Re", "r", plot)};
  if (c.format == "json") return {to_json(t).dump(2) + "\n"};
  return {to_csv(t)};
}

Output cmd_transform(const RunConfig& c) {
  const double tol = c.tolerance.value_or(1e-8);
  const auto f = test_function(c);
  const auto ex = forward_transform_exact(f);
  TransformOptions to;
  to.truncation = c.radial_truncation_tol;
  const auto xi = range(c.xi_min, c.xi_max, c.xi_step);
  std::vector<double> rho;
  for (double x : xi) rho.push_back(std::sqrt(x));
  const auto num_d = fourier_diagonals(f, rho, to);
  Table t{{"n", "j", "xi", "closed_form", "numeric", "error"}, {}};
  std::vector<Series> plot;
  double worst = 0;
  for (int j = 0; j <= c.n; ++j) {
    Series s{"j = " + std::to_string(j), {}, {}};
    for (std::size_t i = 0; i < xi.size(); ++i) {
      const double a = ex(j, xi[i]), b = num_d[i][j];
      const double e = std::abs(a - b);
      worst = std::max(worst, e / (1 + std::abs(a)));
      t.rows.push_back({(long long)c.n, (long long)j, xi[i], a, b, e});
      s.x.push_back(xi[i]);
      s.y.push_back(a);
    }
    plot.push_back(s);
  }
  Output o;
  if (c.format == "svg") o.text = to_svg("G_n F on the rays", "xi", plot);
  else if (c.format == "json") o.text = to_json(t).dump(2) + "\n";
  else o.text = to_csv(t);
  o.code = worst <= tol ? 0 : 1;
  return o;
}

ExtensionOptions extension_options(const RunConfig& c) {
  ExtensionOptions eo;
  eo.max_degree = c.jet_max_degree;
  eo.phi = BumpFunction{c.bump_support, c.bump_plateau};
  return eo;
}

void add_report_rows(Table& t, const ExtensionReport& rep) {
  t.rows.push_back({std::string("restriction_error"), -1LL, 0.0, 0.0, rep.restriction_error, rep.restriction_error});
  t.rows.push_back({std::string("smoothness_order"), -1LL, 0.0, 0.0, double(rep.smoothness_order), 0.0});
  for (std::size_t i = 0; i < rep.decay.size(); ++i)
    t.rows.push_back({std::string("decay"), -1LL, double(rep.decay_orders[i]), 0.0, rep.decay[i], 0.0});
}

Output cmd_roundtrip(const RunConfig& c) {
  const double tol = c.tolerance.value_or(1e-5);
  const auto f = test_function(c);
  const auto xi = range(c.xi_min, c.xi_max, c.xi_step);
  TransformOptions to;
  to.truncation = c.radial_truncation_tol;
  const auto fwd = forward_transform(f, xi, to);
  const InverseTransform inv(transform_plane_exact(f), c.n);
  const auto back = forward_transform(inv.sampled(), xi, to);

  // kind, j, xi, reference, computed, error; report rows use the xi column
  // for the decay order.
  Table t{{"kind", "j", "xi", "reference", "computed", "error"}, {}};
  std::vector<Series> plot;
  double worst = 0;
  for (int j = 0; j <= c.n; ++j) {
    Series s{"error j = " + std::to_string(j), {}, {}};
    for (double x : xi) {
      const double a = fwd(j, x), b = back(j, x), e = std::abs(a - b);
      worst = std::max(worst, e);
      t.rows.push_back({std::string("roundtrip"), (long long)j, x, a, b, e});
      s.x.push_back(x);
      s.y.push_back(e);
    }
    plot.push_back(s);
  }
  const auto ext = schwartz_extend(forward_transform_exact(f), c.n, extension_options(c));
  add_report_rows(t, ext.report);

  Output o;
  if (c.format == "svg") {
    o.text = to_svg("forward / inverse / forward error", "xi", plot);
  } else if (c.format == "json") {
    nlohmann::json j = to_json(t);
    j["max_roundtrip_error"] = worst;
    j["restriction_error"] = ext.report.restriction_error;
    j["tolerance"] = tol;
    o.text = j.dump(2) + "\n";
  } else {
    o.text = to_csv(t);
  }
  o.code = worst <= tol && ext.report.restriction_error <= tol ? 0 : 1;
  return o;
}

Output cmd_extend(const RunConfig& c) {
  if (c.format == "svg") throw InvalidArgument("extend has no svg output");
  const double tol = c.tolerance.value_or(1e-5);
  const auto f = test_function(c);
  const auto ext = schwartz_extend(forward_transform_exact(f), c.n, extension_options(c));
  // kind, index, degree, q, value, error: jet rows carry a_{d-q,q}, ray_jet
  // rows the d-th derivative of ray `index` at 0.
  Table t{{"kind", "index", "xi", "q", "value", "error"}, {}};
  for (int d = 0; d <= ext.jet.degree; ++d)
    for (int q = 0; q <= d; ++q) t.rows.push_back({std::string("jet"), (long long)d, double(d), double(q), ext.jet.a(d - q, q), 0.0});
  const auto& rj = ext.report.ray_jet;
  for (std::size_t d = 0; d < rj.size(); ++d)
    for (std::size_t j = 0; j < rj[d].size(); ++j)
      t.rows.push_back({std::string("ray_jet"), (long long)j, double(d), 0.0, rj[d][j], 0.0});
  add_report_rows(t, ext.report);
  Output o{c.format == "json" ? to_json(t).dump(2) + "\n" : to_csv(t), 0};
  o.code = ext.report.restriction_error <= tol ? 0 : 1;
  return o;
}

Output cmd_verify(const RunConfig& c) {
  if (c.format == "svg") throw InvalidArgument("verify has no svg output");
  const auto checks = run_verification({c.n_max, c.tolerance_scale});
  int passed = 0;
  for (const auto& r : checks) passed += r.passed;
  Output o;
  o.code = passed == int(checks.size()) ? 0 : 1;
  if (c.format == "csv") {
    Table t{{"name", "module", "paper_ref", "passed", "error", "tolerance", "message"}, {}};
    for (const auto& r : checks)
      t.rows.push_back({r.name, r.module, r.paper_ref, (long long)r.passed, r.error, r.tolerance, r.message});
    o.text = to_csv(t);
    return o;
  }
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : checks) {
    nlohmann::json j = {{"name", r.name},     {"module", r.module}, {"paper_ref", r.paper_ref},
                        {"passed", r.passed}, {"tolerance", r.tolerance}};
    // inf is not JSON; a check that threw reports null and its message.
    j["error"] = std::isfinite(r.error) ? nlohmann::json(r.error) : nlohmann::json(nullptr);
    if (!r.message.empty()) j["message"] = r.message;
    arr.push_back(j);
  }
  nlohmann::json rep = {{"checks", arr},
                        {"summary",
                         {{"total", checks.size()},
                          {"passed", passed},
                          {"failed", int(checks.size()) - passed},
                          {"n_max", c.n_max}}}};
  o.text = rep.dump(2) + "\n";
  return o;
}

std::filesystem::path output_path(const std::string& out) {
  std::filesystem::path p(out);
  if (p.is_relative())
    if (const char* dir = std::getenv("GELFAND_OUTPUT_DIR"); dir && *dir) p = std::filesystem::path(dir) / p;
  return p;
}

}  // namespace

void apply_config_text(const std::string& text, RunConfig& cfg) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InvalidArgument("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw InvalidArgument("config line " + std::to_string(lineno) + ": empty key or value");
    set_key(cfg, key, value);
  }
}

void validate(const RunConfig& c) {
  if (c.n < 0) throw InvalidArgument("n must be >= 0");
  try {
    validate(RepIndex{c.m.value_or(c.n), c.n});
  } catch (const InvalidRepIndex& e) {
    throw InvalidArgument(std::string("(m, n) is not a valid index: ") + e.what());
  }
  if (c.quadrature_order < 1) throw InvalidArgument("quadrature.order must be >= 1");
  if (!(c.quadrature_tolerance > 0) || !(c.radial_truncation_tol > 0)) throw InvalidArgument("tolerances must be > 0");
  if (c.tolerance && !(*c.tolerance > 0)) throw InvalidArgument("tolerance must be > 0");
  if (!(c.tolerance_scale > 0)) throw InvalidArgument("verify.tolerance_scale must be > 0");
  if (c.jet_max_degree < 0 || c.jet_max_degree > 16) throw InvalidArgument("jet.max_degree must lie in [0, 16]");
  BumpFunction{c.bump_support, c.bump_plateau}.validate();
  if (c.format != "csv" && c.format != "json" && c.format != "svg")
    throw InvalidArgument("output.format must be csv, json or svg");
  if (!(c.xi_step > 0) || c.xi_min < 0 || c.xi_max < c.xi_min) throw InvalidArgument("xi range must be 0 <= a <= b, step > 0");
  if (!(c.r_step > 0) || c.r_min < 0 || c.r_max < c.r_min) throw InvalidArgument("r range must be 0 <= a <= b, step > 0");
  if ((c.xi_max - c.xi_min) / c.xi_step > 1e5 || (c.r_max - c.r_min) / c.r_step > 1e5)
    throw InvalidArgument("range has too many points");
  if (c.at_xi < 0) throw InvalidArgument("spherical.xi must be >= 0");
  if (c.n_max < 0) throw InvalidArgument("verify.n_max must be >= 0");
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matrix spherical transforms for (U(2) x C^2, U(2))"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, format, out_path, xi, r;
  int n = 0, m = 0, n_max = 0, jet_degree = 0;
  double tolerance = 0, tolerance_scale = 0, at_xi = 0;
  std::string function;
  auto* o_config = app.add_option("--config", config_path, "key = value config file");
  auto* o_n = app.add_option("--n", n, "representation degree n");
  auto* o_m = app.add_option("--m", m, "central weight m (default n)");
  auto* o_format = app.add_option("--format", format, "csv | json | svg");
  auto* o_out = app.add_option("--out", out_path, "output file (relative to GELFAND_OUTPUT_DIR when set)");
  auto* o_tol = app.add_option("--tolerance", tolerance, "pass/fail tolerance");
  auto* o_xi = app.add_option("--xi", xi, "spectral grid a:b:step");

  auto* spectrum = app.add_subcommand("spectrum", "ray slopes and the 4-D embedding");
  auto* spherical = app.add_subcommand("spherical", "diagonal of Phi_{xi,j}(r b)");
  auto* o_r = spherical->add_option("--r", r, "radial grid a:b:step");
  auto* o_at = spherical->add_option("--at-xi", at_xi, "spectral parameter xi");
  auto* transform = app.add_subcommand("transform", "closed-form vs numeric transform of a test function");
  auto* roundtrip = app.add_subcommand("roundtrip", "forward, inverse, forward, then Schwartz extension");
  auto* extend = app.add_subcommand("extend", "Schwartz extension report for a test function");
  auto* verify = app.add_subcommand("verify", "all module invariant checks");
  auto* o_nmax = verify->add_option("--n-max", n_max, "largest n checked");
  auto* o_scale = verify->add_option("--tolerance-scale", tolerance_scale, "multiplies every floating tolerance");
  std::vector<CLI::Option*> fn_opts, deg_opts;
  for (auto* s : {transform, roundtrip, extend})
    fn_opts.push_back(s->add_option("--function", function, "gaussian | zero | l2"));
  for (auto* s : {roundtrip, extend}) deg_opts.push_back(s->add_option("--jet-degree", jet_degree, "jet degree D"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  RunConfig cfg;
  Output result;
  try {
    if (o_config->count()) {
      std::ifstream in(config_path);
      if (!in) throw InvalidArgument("cannot read config file '" + config_path + "'");
      std::stringstream buf;
      buf << in.rdbuf();
      apply_config_text(buf.str(), cfg);
    }
    if (o_n->count()) cfg.n = n;
    if (o_m->count()) cfg.m = m;
    if (o_format->count()) cfg.format = format;
    if (o_out->count()) cfg.out = out_path;
    if (o_tol->count()) cfg.tolerance = tolerance;
    if (o_xi->count()) parse_range("--xi", xi, cfg.xi_min, cfg.xi_max, cfg.xi_step);
    if (o_r->count()) parse_range("--r", r, cfg.r_min, cfg.r_max, cfg.r_step);
    if (o_at->count()) cfg.at_xi = at_xi;
    if (o_nmax->count()) cfg.n_max = n_max;
    if (o_scale->count()) cfg.tolerance_scale = tolerance_scale;
    for (auto* o : fn_opts)
      if (o->count()) cfg.function = function;
    for (auto* o : deg_opts)
      if (o->count()) cfg.jet_max_degree = jet_degree;
    if (verify->parsed() && !o_format->count()) cfg.format = "json";
    validate(cfg);
    if (!verify->parsed() && cfg.function != "gaussian") test_function(cfg);
  } catch (const Error& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (spectrum->parsed()) result = cmd_spectrum(cfg);
    else if (spherical->parsed()) result = cmd_spherical(cfg);
    else if (transform->parsed()) result = cmd_transform(cfg);
    else if (roundtrip->parsed()) result = cmd_roundtrip(cfg);
    else if (extend->parsed()) result = cmd_extend(cfg);
    else result = cmd_verify(cfg);
  } catch (const InvalidArgument& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (cfg.out.empty()) {
    out << result.text;
  } else {
    const auto p = output_path(cfg.out);
    std::ofstream f(p);
    if (!f || !(f << result.text)) {
      err << "error: cannot write '" << p.string() << "'\n";
      return 2;
    }
  }
  if (result.code != 0) err << "tolerance check failed\n";
  return result.code;
}

}  // namespace gelfand
