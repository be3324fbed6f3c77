// delange: command-line front end over the C interface.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli_support.hpp"
#include "delange/delange.h"

using delange_cli::format_double;
using delange_cli::RunConfig;
using nlohmann::json;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public std::runtime_error {
 public:
  DomainError(dl_status s, const std::string& what) : std::runtime_error(what), status(s) {}
  dl_status status;
};

void check(dl_status s) {
  if (s != DL_OK) throw DomainError(s, std::string(dl_status_name(s)) + ": " + dl_last_error_message());
}

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
};
using FamilyHandle = Handle<dl_family, dl_family_free>;
using CoeffsHandle = Handle<dl_coeffs, dl_coeffs_free>;
using ZerosHandle = Handle<dl_zeroset, dl_zeroset_free>;
using ContourHandle = Handle<dl_contour, dl_contour_free>;

// One subcommand: string-valued options so the recorded config is exactly
// what was parsed.
struct Command {
  std::string name;
  CLI::App* app = nullptr;
  std::map<std::string, std::string> values;
  std::map<std::string, bool> flags;

  void option(const std::string& key, const std::string& def, const std::string& help, bool required = false) {
    values[key] = def;
    auto* o = app->add_option("--" + key, values[key], help);
    if (required) o->required();
    else o->capture_default_str();
  }
  void flag(const std::string& key, const std::string& help) {
    flags[key] = false;
    app->add_flag("--" + key, flags[key], help);
  }

  const std::string& str(const std::string& key) const { return values.at(key); }
  bool has(const std::string& key) const { return !values.at(key).empty(); }

  double num(const std::string& key) const {
    const std::string& s = values.at(key);
    try {
      const auto slash = s.find('/');
      if (slash != std::string::npos)
        return delange_cli::parse_double(s.substr(0, slash)) / delange_cli::parse_double(s.substr(slash + 1));
      return delange_cli::parse_double(s);
    } catch (const delange_cli::FormatError&) {
      throw UsageError("--" + key + ": expected a number, got '" + s + "'");
    }
  }

  std::int64_t integer(const std::string& key) const {
    const double v = num(key);
    if (!(std::floor(v) == v && std::abs(v) <= 9.007199254740992e15))
      throw UsageError("--" + key + ": expected an integer, got '" + values.at(key) + "'");
    return std::int64_t(v);
  }

  std::uint64_t u64(const std::string& key) const { return parse_u64(key, values.at(key)); }

  std::uint64_t parse_u64(const std::string& key, const std::string& s) const {
    std::uint64_t v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && p == s.data() + s.size()) return v;
    double d = 0.0;
    try {
      d = delange_cli::parse_double(s);
    } catch (const delange_cli::FormatError&) {
      throw UsageError("--" + key + ": expected a nonnegative integer, got '" + s + "'");
    }
    if (!(d >= 0.0 && std::floor(d) == d && d <= 9.007199254740992e15))
      throw UsageError("--" + key + ": expected a nonnegative integer, got '" + s + "'");
    return std::uint64_t(d);
  }

  std::vector<std::uint64_t> u64_list(const std::string& key) const {
    std::vector<std::uint64_t> out;
    std::stringstream ss(values.at(key));
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      out.push_back(parse_u64(key, item));
    }
    if (out.empty()) throw UsageError("--" + key + ": empty list");
    return out;
  }

  RunConfig config() const {
    RunConfig cfg(values.begin(), values.end());
    for (const auto& [k, v] : flags) cfg[k] = v ? "true" : "false";
    cfg["subcommand"] = name;
    return cfg;
  }

  std::string format(const std::string& fallback, std::initializer_list<const char*> allowed) const {
    const std::string f = str("format").empty() ? fallback : str("format");
    for (const char* a : allowed)
      if (f == a) return f;
    throw UsageError("--format: '" + f + "' is not supported by " + name);
  }
};

json complex_json(dl_complex z) { return json{{"re", z.re}, {"im", z.im}}; }

std::string complex_text(dl_complex z) {
  if (z.im == 0.0) return format_double(z.re);
  return format_double(z.re) + " " + format_double(z.im);
}

void emit_json(const Command& c, json doc) {
  doc["config"] = delange_cli::config_json(c.config());
  delange_cli::emit(c.str("out"), [&](std::ostream& os) { delange_cli::write_json(os, doc); });
}

dl_quadrature quadrature(const Command& c) {
  dl_quadrature q = dl_quadrature_defaults();
  q.nodes_per_unit = int(c.integer("nodes"));
  const std::string& s = c.str("scheme");
  if (s == "trapezoid") q.scheme = DL_QUAD_TRAPEZOID;
  else if (s == "gauss" || s == "gauss_segment") q.scheme = DL_QUAD_GAUSS_SEGMENT;
  else throw UsageError("--scheme: expected trapezoid or gauss_segment, got '" + s + "'");
  q.abs_tol = c.num("abs-tol");
  return q;
}

dl_remainder_params remainder(const Command& c) { return {c.num("a1"), c.num("a2"), c.num("M")}; }

void parse_family(const Command& c, FamilyHandle& fam) { check(dl_family_parse(c.str("family").c_str(), &fam.p)); }

int run_coeffs(const Command& c) {
  c.format("json", {"json"});
  FamilyHandle fam;
  parse_family(c, fam);
  CoeffsHandle co;
  check(dl_coeffs_compute(fam.p, int(c.integer("J")), &co.p));
  json doc;
  double kappa = 0.0;
  dl_complex w{};
  check(dl_family_kappa(fam.p, &kappa, &w));
  doc["family"] = dl_family_spec(fam.p);
  doc["kappa"] = kappa;
  doc["w"] = json::array({w.re, w.im});
  doc["J"] = dl_coeffs_order(co.p);
  const std::pair<const char*, dl_coeff_kind> kinds[] = {
      {"gamma_j", DL_COEFF_GAMMA}, {"g_l", DL_COEFF_G}, {"lambda_l", DL_COEFF_LAMBDA}};
  for (const auto& [key, kind] : kinds) {
    json pairs = json::array();
    for (int l = 0; l <= dl_coeffs_order(co.p); ++l) {
      dl_complex z{};
      check(dl_coeffs_get(co.p, kind, l, &z));
      pairs.push_back(json::array({z.re, z.im}));
    }
    doc[key] = pairs;
  }
  emit_json(c, doc);
  return 0;
}

int run_sum(const Command& c) {
  const std::string fmt = c.format(c.has("out") ? "json" : "text", {"text", "json"});
  FamilyHandle fam;
  parse_family(c, fam);
  dl_complex s{};
  check(dl_exact_sum(fam.p, c.u64("x"), c.u64("y"), unsigned(c.integer("workers")), &s));
  if (fmt == "text") {
    delange_cli::emit(c.str("out"), [&](std::ostream& os) { os << complex_text(s) << '\n'; });
    return 0;
  }
  emit_json(c, json{{"family", dl_family_spec(fam.p)}, {"sum", complex_json(s)}});
  return 0;
}

std::uint64_t window_y(const Command& c, std::uint64_t x) {
  if (c.has("y")) return c.u64("y");
  if (!c.has("theta")) throw UsageError("--y or --theta is required");
  std::uint64_t y = 0;
  check(dl_window_length(x, c.num("theta"), &y));
  return y;
}

int run_predict(const Command& c) {
  const std::string fmt = c.format("json", {"text", "json"});
  FamilyHandle fam;
  parse_family(c, fam);
  CoeffsHandle co;
  check(dl_coeffs_compute(fam.p, int(c.integer("J")), &co.p));
  const std::uint64_t x = c.u64("x");
  const std::uint64_t y = window_y(c, x);
  const int N = int(c.integer("N"));
  dl_complex pred{};
  double bound = 0.0;
  const dl_remainder_params rp = remainder(c);
  check(dl_predict(co.p, x, y, N, &pred));
  check(dl_remainder_bound(co.p, x, y, N, &rp, &bound));
  json doc{{"family", dl_family_spec(fam.p)}, {"x", x}, {"y", y}, {"N", N},
           {"predicted", complex_json(pred)}, {"remainder_bound", bound}};
  dl_complex exact{};
  if (c.flags.at("exact")) {
    check(dl_exact_sum(fam.p, x, y, unsigned(c.integer("workers")), &exact));
    doc["exact"] = complex_json(exact);
    doc["rel_error"] = std::hypot(exact.re - pred.re, exact.im - pred.im) / std::hypot(pred.re, pred.im);
  }
  if (fmt == "text") {
    delange_cli::emit(c.str("out"), [&](std::ostream& os) {
      os << "predicted=" << complex_text(pred) << " remainder_bound=" << format_double(bound);
      if (c.flags.at("exact")) os << " exact=" << complex_text(exact);
      os << '\n';
    });
    return 0;
  }
  emit_json(c, doc);
  return 0;
}

int run_theta(const Command& c) {
  const std::string fmt = c.format(c.has("out") ? "json" : "text", {"text", "json"});
  dl_theta_result r{};
  const double kappa = c.num("kappa");
  const double delta = c.num("delta");
  check(dl_theta(kappa, delta, c.str("regime").c_str(), c.num("eta1"), c.num("eps"), c.num("B"), &r));
  double prior = 0.0;
  check(dl_prior_theta_bound(kappa, delta, &prior));
  if (fmt == "text") {
    delange_cli::emit(c.str("out"), [&](std::ostream& os) {
      os << "theta=" << format_double(r.value) << " branch=" << dl_theta_branch_name(r.branch)
         << " kappa_split=" << format_double(r.kappa_split) << " prior=" << format_double(prior) << '\n';
    });
    return 0;
  }
  emit_json(c, json{{"theta", r.value},
                    {"branch", dl_theta_branch_name(r.branch)},
                    {"kappa_split", std::isinf(r.kappa_split) ? json("inf") : json(r.kappa_split)},
                    {"prior_bound", prior}});
  return 0;
}

int run_experiment(const Command& c) {
  const std::string fmt = c.format("csv", {"csv", "json"});
  FamilyHandle fam;
  parse_family(c, fam);
  const auto grid = c.u64_list("x-grid");
  const dl_remainder_params rp = remainder(c);
  std::vector<dl_experiment_record> raw(grid.size());
  check(dl_run_experiment(fam.p, grid.data(), grid.size(), c.num("theta"), int(c.integer("N")), int(c.integer("J")),
                          &rp, unsigned(c.integer("workers")), raw.data()));
  std::vector<delange_cli::CsvRecord> recs;
  for (const auto& r : raw)
    recs.push_back({dl_family_spec(fam.p), r.x, r.y, r.N, r.exact.re, r.exact.im, r.predicted.re, r.predicted.im,
                    r.remainder_bound, r.rel_error});
  if (fmt == "csv") {
    delange_cli::emit(c.str("out"), [&](std::ostream& os) { delange_cli::write_csv(os, c.config(), recs); });
    return 0;
  }
  json rows = json::array();
  for (const auto& r : recs)
    rows.push_back(json{{"family", r.family},
                        {"x", r.x},
                        {"y", r.y},
                        {"N", r.N},
                        {"exact_re", r.exact_re},
                        {"exact_im", r.exact_im},
                        {"predicted_re", r.predicted_re},
                        {"predicted_im", r.predicted_im},
                        {"remainder_bound", r.remainder_bound},
                        {"rel_error", r.rel_error}});
  emit_json(c, json{{"records", rows}});
  return 0;
}

void load_zero_set(const Command& c, double T, ZerosHandle& zs) {
  if (c.has("zeros") && c.has("seed")) throw UsageError("--zeros and --seed are mutually exclusive");
  if (c.has("zeros")) check(dl_zeroset_load(c.str("zeros").c_str(), T, &zs.p));
  else if (c.has("seed")) check(dl_zeroset_synthetic(c.u64("seed"), T, c.num("alpha"), &zs.p));
  else check(dl_zeroset_parse("", T, &zs.p));
}

int run_contour(const Command& c) {
  c.format("json", {"json"});
  const double T = c.num("T");
  const double alpha = c.num("alpha");
  ZerosHandle zs;
  load_zero_set(c, T, zs);
  ContourHandle path;
  check(dl_contour_build(zs.p, T, alpha, c.num("eta"), c.num("cstar"), std::log(c.num("x")), c.num("corner-eps"),
                         &path.p));
  dl_contour_report rep{};
  check(dl_contour_validate(path.p, zs.p, alpha, &rep));
  json v = json::object(), h = json::object();
  for (int k = 0; k < DL_VCASE_COUNT; ++k) {
    v[dl_vcase_name(k)] = rep.v_tally[k];
    h[dl_vcase_name(k)] = rep.h_tally[k];
  }
  json doc{{"zeros", dl_zeroset_size(zs.p)},
           {"piece_count", dl_contour_piece_count(path.p)},
           {"validation",
            {{"symmetric", bool(rep.symmetric)},
             {"connected", bool(rep.connected)},
             {"axis_parallel", bool(rep.axis_parallel)},
             {"clearance", bool(rep.clearance)},
             {"offending_zeros", rep.offending}}},
           {"v_cases", v},
           {"h_cases", h}};
  if (!c.flags.at("summary")) {
    // vertices[k] -> vertices[k + 1] is piece k with labels[k]
    json vertices = json::array(), labels = json::array();
    for (std::size_t i = 0; i < dl_contour_piece_count(path.p); ++i) {
      dl_complex a{}, b{};
      const char* label = nullptr;
      check(dl_contour_piece(path.p, i, &a, &b, &label));
      if (i == 0) vertices.push_back(json::array({a.re, a.im}));
      vertices.push_back(json::array({b.re, b.im}));
      labels.push_back(label);
    }
    doc["vertices"] = vertices;
    doc["labels"] = labels;
  }
  if (c.has("emit-csv")) {
    delange_cli::emit(c.str("emit-csv"), [&](std::ostream& os) {
      for (const auto& [k, v] : c.config()) os << "# " << k << '=' << v << '\n';
      os << "piece,label,a_re,a_im,b_re,b_im\n";
      for (std::size_t i = 0; i < dl_contour_piece_count(path.p); ++i) {
        dl_complex a{}, b{};
        const char* label = nullptr;
        check(dl_contour_piece(path.p, i, &a, &b, &label));
        os << i << ',' << label << ',' << format_double(a.re) << ',' << format_double(a.im) << ','
           << format_double(b.re) << ',' << format_double(b.im) << '\n';
      }
    });
  }
  if (c.has("sigma")) {
    dl_density_report d{};
    check(dl_zero_density(zs.p, c.num("sigma"), T, c.num("cstar"), c.num("density-eps"), &d));
    doc["density"] = json{{"sigma", d.sigma},
                          {"count", d.count},
                          {"huxley_bound", d.huxley_bound},
                          {"ratio", d.ratio},
                          {"sigma_exceptional", d.sigma_exceptional},
                          {"exceptional_count", d.exceptional_count},
                          {"t_eps", d.t_eps},
                          {"exceptional_ratio", d.exceptional_ratio}};
  }
  emit_json(c, doc);
  return 0;
}

int run_perron(const Command& c) {
  c.format("json", {"json"});
  FamilyHandle fam;
  parse_family(c, fam);
  const std::uint64_t x = c.u64("x");
  const std::uint64_t y = c.u64("y");
  const double T = c.num("T");
  ZerosHandle zs;
  if (c.has("zeros")) check(dl_zeroset_load(c.str("zeros").c_str(), 2.0 * T, &zs.p));
  const dl_quadrature q = quadrature(c);
  dl_perron_report r{};
  check(dl_perron_line_sum(fam.p, x, y, T, &q, c.num("b-shift"), zs.p, &r));
  dl_complex exact{};
  check(dl_exact_sum(fam.p, x, y, unsigned(c.integer("workers")), &exact));
  const double dev = std::hypot(r.value.re - exact.re, r.value.im - exact.im);
  emit_json(c, json{{"value_re", r.value.re},
                    {"value_im", r.value.im},
                    {"reference", exact.re},
                    {"reference_im", exact.im},
                    {"abs_dev", dev},
                    {"rel_dev", dev / std::hypot(exact.re, exact.im)},
                    {"nodes", r.nodes},
                    {"T", r.T},
                    {"nudged", bool(r.nudged)},
                    {"b", r.b},
                    {"step_change", r.step_change}});
  return 0;
}

int run_hankel(const Command& c) {
  c.format("json", {"json"});
  const dl_quadrature q = quadrature(c);
  const double kappa = c.num("kappa");
  const int l = int(c.integer("l"));
  dl_loop_report r{};
  const std::string& mode = c.str("mode");
  if (mode == "hankel") {
    const double u = c.num("u");
    const double radius = c.has("r") ? c.num("r") : 1.0 / std::log(u);
    check(dl_hankel_main_term(u, kappa, l, radius, &q, c.num("eta"), &r));
  } else if (mode == "ml") {
    if (!c.has("x") || !c.has("y")) throw UsageError("--mode ml needs --x and --y");
    check(dl_ml_integral_check(kappa, l, c.u64("x"), c.u64("y"), &q, c.num("eta"), &r));
  } else {
    throw UsageError("--mode: expected hankel or ml, got '" + mode + "'");
  }
  emit_json(c, json{{"value_re", r.value.re},
                    {"value_im", r.value.im},
                    {"reference", r.reference},
                    {"rel_dev", r.rel_dev},
                    {"nodes", r.nodes},
                    {"step_change", r.step_change}});
  return 0;
}

void output_options(Command& c) {
  c.option("out", "", "output file ('-' or empty for stdout)");
  c.option("format", "", "output format");
}

void quadrature_options(Command& c) {
  c.option("nodes", "200", "quadrature nodes per unit length");
  c.option("scheme", "gauss_segment", "trapezoid or gauss_segment");
  c.option("abs-tol", "1e-3", "step-halving tolerance");
}

void remainder_options(Command& c) {
  c.option("a1", "1", "remainder constant a1");
  c.option("a2", "0.5", "remainder constant a2");
  c.option("M", "1", "remainder constant M");
}

// "--config FILE" is removed from args; its keys become flags unless the
// command line already sets them.
std::vector<std::string> merge_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw UsageError("--config: missing file name");
      path = args[i + 1];
      args.erase(args.begin() + long(i), args.begin() + long(i) + 2);
      break;
    }
    if (args[i].starts_with("--config=")) {
      path = args[i].substr(9);
      args.erase(args.begin() + long(i));
      break;
    }
  }
  if (path.empty()) return args;
  RunConfig cfg;
  try {
    cfg = delange_cli::read_config_file(path);
  } catch (const delange_cli::FormatError& e) {
    throw UsageError(std::string("--config: ") + e.what());
  }
  for (const auto& [key, value] : cfg) {
    if (key == "subcommand") continue;
    bool given = false;
    for (const auto& a : args)
      if (a == "--" + key || a.starts_with("--" + key + "=")) given = true;
    if (!given) args.push_back("--" + key + "=" + value);
  }
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Short-interval sums of multiplicative functions: coefficients, predictions and numerical checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", dl_version());

  std::vector<std::unique_ptr<Command>> commands;
  auto add = [&](const std::string& name, const std::string& help) -> Command& {
    auto c = std::make_unique<Command>();
    c->name = name;
    c->app = app.add_subcommand(name, help);
    commands.push_back(std::move(c));
    return *commands.back();
  };

  Command& coeffs = add("coeffs", "expansion coefficients gamma_j, g_l, lambda_l");
  coeffs.option("family", "", "family spec, e.g. divisor:2", true);
  coeffs.option("J", "24", "series order");
  output_options(coeffs);

  Command& sum = add("sum", "exact sum over (x, x+y]");
  sum.option("family", "", "family spec", true);
  sum.option("x", "", "window start", true);
  sum.option("y", "", "window length", true);
  sum.option("workers", "0", "sieve workers (0 = hardware)");
  output_options(sum);

  Command& predict = add("predict", "truncated expansion and remainder bound");
  predict.option("family", "", "family spec", true);
  predict.option("x", "", "window start", true);
  predict.option("y", "", "window length");
  predict.option("theta", "", "window exponent, y = ceil(x^theta)");
  predict.option("N", "1", "truncation order");
  predict.option("J", "24", "series order");
  remainder_options(predict);
  predict.flag("exact", "also compute the exact sum");
  predict.option("workers", "0", "sieve workers (0 = hardware)");
  output_options(predict);

  Command& theta = add("theta", "admissible short-interval exponent");
  theta.option("kappa", "", "kappa", true);
  theta.option("delta", "0", "delta");
  theta.option("regime", "unconditional", "unconditional, zdh or lindelof");
  theta.option("eta1", "1/3", "eta1 in (0, 1/3]");
  theta.option("eps", "0.01", "epsilon in (0, 0.05]");
  theta.option("B", "20", "parameter bound");
  output_options(theta);

  Command& experiment = add("experiment", "exact vs predicted over an x grid");
  experiment.option("family", "", "family spec", true);
  experiment.option("x-grid", "", "comma-separated x values", true);
  experiment.option("theta", "0.8", "window exponent");
  experiment.option("N", "1", "truncation order");
  experiment.option("J", "24", "series order");
  remainder_options(experiment);
  experiment.option("workers", "0", "sieve workers (0 = hardware)");
  output_options(experiment);

  Command& contour = add("contour", "build and validate the zero-avoiding contour");
  contour.option("zeros", "", "zero file (ordinates, or 'beta gamma' pairs)");
  contour.option("seed", "", "synthetic zero set seed");
  contour.option("T", "65536", "height");
  contour.option("alpha", "0.6", "contour abscissa alpha");
  contour.option("eta", "0.05", "eta");
  contour.option("cstar", "1", "clearance constant C*");
  contour.option("x", "1e6", "x, sets the loop radius 1/log x");
  contour.option("corner-eps", "0", "junction overlap (0 = H/100 per block)");
  contour.option("sigma", "", "also report zero density at sigma");
  contour.option("density-eps", "0.01", "epsilon for the exceptional count");
  contour.flag("summary", "omit the vertex list");
  contour.option("emit-csv", "", "also write the pieces as a polyline CSV");
  output_options(contour);

  Command& perron = add("perron-check", "truncated Perron integral against the exact sum");
  perron.option("family", "", "family spec (needs a closed form)", true);
  perron.option("x", "", "window start", true);
  perron.option("y", "", "window length", true);
  perron.option("T", "", "truncation height", true);
  perron.option("b-shift", "20", "b = 1 + b_shift/log x");
  perron.option("zeros", "", "ordinate table for nudging T");
  perron.option("workers", "0", "sieve workers (0 = hardware)");
  quadrature_options(perron);
  output_options(perron);

  Command& hankel = add("hankel-check", "Hankel loop quadrature against its closed form");
  hankel.option("mode", "hankel", "hankel (u^{s-1}) or ml (window kernel)");
  hankel.option("u", "1e6", "u for hankel mode");
  hankel.option("kappa", "0.5", "kappa");
  hankel.option("l", "0", "l");
  hankel.option("r", "", "loop radius (default 1/log u)");
  hankel.option("x", "", "window start for ml mode");
  hankel.option("y", "", "window length for ml mode");
  hankel.option("eta", "0.05", "legs end at Re s = 1/2 + eta");
  quadrature_options(hankel);
  output_options(hankel);

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    args = merge_config(std::move(args));
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const delange_cli::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }

  try {
    for (const auto& c : commands) {
      if (!c->app->parsed()) continue;
      if (c->name == "coeffs") return run_coeffs(*c);
      if (c->name == "sum") return run_sum(*c);
      if (c->name == "predict") return run_predict(*c);
      if (c->name == "theta") return run_theta(*c);
      if (c->name == "experiment") return run_experiment(*c);
      if (c->name == "contour") return run_contour(*c);
      if (c->name == "perron-check") return run_perron(*c);
      if (c->name == "hankel-check") return run_hankel(*c);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const delange_cli::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}
