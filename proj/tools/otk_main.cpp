#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#include <orthokit.h>

#include "emit.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitDomainError = 2;
constexpr int kExitUsage = 3;

struct Options {
  double absolute_eps = 1e-9;
  double relative_eps = 1e-9;
  int precision = 12;

  std::vector<double> coords;  // centers

  double R = 2.0;  // construct
  double theta = 0.0;

  std::vector<double> radii{2.0};  // locus
  int n = 720;
  std::string what = "incenter";
  std::string format = "csv";
  std::string out;

  std::uint64_t seed = 0;  // verify
  long samples = 100000;
  double identity_threshold = 1e-8;
  double min_angle = 1e-4;

  std::string golden;  // prove

  bool as_json = false;
};

class Context {
 public:
  explicit Context(const Options& opt) : ptr_(otk_context_new()) {
    if (ptr_) {
      otk_context_set_tolerance(ptr_, opt.absolute_eps, opt.relative_eps);
    }
  }
  ~Context() { otk_context_free(ptr_); }
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;

  const otk_context* get() const { return ptr_; }

 private:
  otk_context* ptr_;
};

int fail_domain(otk_status status, const std::string& what) {
  std::cerr << "error: " << what << ": " << otk_status_name(status) << "\n";
  return kExitDomainError;
}

bool write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return true;
  }
  std::ofstream file(path, std::ios::binary);
  file << content;
  return file.good();
}

std::string fmt_point(otk_point p, int precision) {
  return "(" + emit::fmt_num(p.x, precision) + ", " +
         emit::fmt_num(p.y, precision) + ")";
}

nlohmann::ordered_json point_json(otk_point p) {
  return {{"x", p.x}, {"y", p.y}};
}

nlohmann::ordered_json centers_json(const otk_center_set& cs) {
  nlohmann::ordered_json j;
  j["centroid"] = point_json(cs.centroid);
  j["circumcenter"] = point_json(cs.circumcircle.center);
  j["circumradius"] = cs.circumcircle.radius;
  j["orthocenter"] = point_json(cs.orthocenter);
  j["incenter"] = point_json(cs.incircle.center);
  j["inradius"] = cs.incircle.radius;
  j["nine_point_center"] = point_json(cs.nine_point_center);
  j["excenters"] = {point_json(cs.excenters[0]), point_json(cs.excenters[1]),
                    point_json(cs.excenters[2])};
  j["fermat"] = point_json(cs.fermat);
  return j;
}

void print_centers_text(const otk_center_set& cs, int precision) {
  const int p = precision;
  std::cout << "centroid          " << fmt_point(cs.centroid, p) << "\n";
  std::cout << "circumcenter      " << fmt_point(cs.circumcircle.center, p)
            << "  radius " << emit::fmt_num(cs.circumcircle.radius, p)
            << "\n";
  std::cout << "orthocenter       " << fmt_point(cs.orthocenter, p) << "\n";
  std::cout << "incenter          " << fmt_point(cs.incircle.center, p)
            << "  radius " << emit::fmt_num(cs.incircle.radius, p) << "\n";
  std::cout << "nine_point_center " << fmt_point(cs.nine_point_center, p)
            << "\n";
  std::cout << "excenter_a        " << fmt_point(cs.excenters[0], p) << "\n";
  std::cout << "excenter_b        " << fmt_point(cs.excenters[1], p) << "\n";
  std::cout << "excenter_c        " << fmt_point(cs.excenters[2], p) << "\n";
  std::cout << "fermat            " << fmt_point(cs.fermat, p) << "\n";
}

int run_centers(const Options& opt) {
  const Context ctx(opt);
  const otk_triangle tri{{opt.coords[0], opt.coords[1]},
                         {opt.coords[2], opt.coords[3]},
                         {opt.coords[4], opt.coords[5]}};
  otk_center_set cs;
  const otk_status status = otk_triangle_centers(ctx.get(), &tri, &cs);
  if (status != OTK_OK) return fail_domain(status, "centers");
  if (opt.as_json) {
    std::cout << centers_json(cs).dump(2) << "\n";
  } else {
    print_centers_text(cs, opt.precision);
  }
  return kExitOk;
}

int run_construct(const Options& opt) {
  const Context ctx(opt);
  otk_triangle tri;
  int branch = 0;
  otk_status status = otk_construct(ctx.get(), opt.R, opt.theta, &tri,
                                    &branch);
  if (status != OTK_OK) return fail_domain(status, "construct");
  otk_center_set cs;
  status = otk_triangle_centers(ctx.get(), &tri, &cs);
  if (status != OTK_OK) return fail_domain(status, "construct centers");

  if (opt.as_json) {
    nlohmann::ordered_json j;
    j["R"] = opt.R;
    j["theta"] = opt.theta;
    j["branch"] = branch;
    j["triangle"] = {{"a", point_json(tri.a)},
                     {"b", point_json(tri.b)},
                     {"c", point_json(tri.c)}};
    j["centers"] = centers_json(cs);
    std::cout << j.dump(2) << "\n";
  } else {
    const int p = opt.precision;
    std::cout << "apex   " << fmt_point(tri.a, p) << "\n";
    std::cout << "base_b " << fmt_point(tri.b, p) << "\n";
    std::cout << "base_c " << fmt_point(tri.c, p) << "\n";
    std::cout << "branch " << branch << "\n";
    print_centers_text(cs, p);
  }
  return kExitOk;
}

const char* kind_name(otk_locus_kind kind) {
  switch (kind) {
    case OTK_KIND_BELL: return "bell";
    case OTK_KIND_CLOSED_AT_H: return "closed_at_orthocenter";
    case OTK_KIND_LOBE: return "lobe";
  }
  return "unknown";
}

int run_locus(const Options& opt) {
  const Context ctx(opt);
  const otk_locus_what what = opt.what == "fermat" ? OTK_LOCUS_FERMAT
                                                   : OTK_LOCUS_INCENTER;
  std::vector<emit::TraceRow> all_rows;
  std::vector<emit::TracePath> paths;
  nlohmann::ordered_json traces_json = nlohmann::ordered_json::array();

  for (const double R : opt.radii) {
    otk_trace* trace = nullptr;
    const otk_status status =
        otk_trace_new(ctx.get(), R, opt.n, what, &trace);
    if (status != OTK_OK) {
      return fail_domain(status,
                         "locus at R=" + emit::fmt_num(R, opt.precision));
    }

    emit::TracePath path;
    path.gap_break = 1.5 * 2.0 * std::acos(-1.0) / opt.n;
    path.label = "R=" + emit::fmt_num(R, 6) + " " + opt.what;
    nlohmann::ordered_json points = nlohmann::ordered_json::array();
    for (size_t i = 0; i < otk_trace_count(trace); ++i) {
      double theta = 0.0;
      otk_point p{0.0, 0.0};
      int branch = 0;
      otk_trace_get(trace, i, &theta, &p, &branch);
      const emit::TraceRow row{R, theta, p.x, p.y, branch};
      all_rows.push_back(row);
      path.rows.push_back(row);
      if (opt.format == "json") {
        points.push_back({{"theta", theta},
                          {"x", p.x},
                          {"y", p.y},
                          {"branch", branch}});
      }
    }
    if (opt.format == "json") {
      traces_json.push_back({{"R", R},
                            {"n", opt.n},
                            {"what", opt.what},
                            {"kind", kind_name(otk_trace_kind(trace))},
                            {"rejected", otk_trace_rejected(trace)},
                            {"points", points}});
    }
    paths.push_back(std::move(path));
    otk_trace_free(trace);
  }

  std::string content;
  if (opt.format == "csv") {
    content = emit::trace_csv(all_rows, opt.precision);
  } else if (opt.format == "svg") {
    content = emit::traces_svg(paths, opt.precision);
  } else {
    content = nlohmann::ordered_json{{"traces", traces_json}}.dump(2) + "\n";
  }
  if (!write_output(opt.out, content)) {
    std::cerr << "error: cannot write " << opt.out << "\n";
    return kExitDomainError;
  }
  return kExitOk;
}

int run_verify(const Options& opt) {
  const Context ctx(opt);
  otk_verify_config cfg;
  otk_verify_config_default(&cfg);
  cfg.seed = opt.seed;
  cfg.samples = opt.samples;
  cfg.identity_threshold = opt.identity_threshold;
  cfg.min_angle = opt.min_angle;

  otk_verify* report = nullptr;
  const otk_status status = otk_verify_run(ctx.get(), &cfg, &report);
  if (status != OTK_OK) return fail_domain(status, "verify");

  const std::string json_text = otk_verify_json(report);
  const auto parsed = nlohmann::json::parse(json_text);
  for (const auto& identity : parsed["identities"]) {
    std::cout << (identity["pass"].get<bool>() ? "pass " : "FAIL ")
              << "identity " << identity["name"].get<std::string>()
              << "  max_scaled_residual="
              << emit::fmt_num(identity["max_scaled_residual"].get<double>(),
                               6)
              << "  threshold="
              << emit::fmt_num(identity["threshold"].get<double>(), 6)
              << "\n";
  }
  for (const auto& check : parsed["checks"]) {
    std::cout << (check["pass"].get<bool>() ? "pass " : "FAIL ") << "check "
              << check["name"].get<std::string>() << "  counterexamples="
              << check["counterexamples"].get<long>() << "\n";
  }

  int passed = 0;
  otk_verify_passed(report, &passed);
  std::cout << (passed ? "verify: pass" : "verify: FAIL") << "\n";

  bool write_ok = true;
  if (!opt.out.empty()) write_ok = write_output(opt.out, json_text);
  otk_verify_free(report);
  if (!write_ok) {
    std::cerr << "error: cannot write " << opt.out << "\n";
    return kExitDomainError;
  }
  return passed ? kExitOk : kExitCheckFailed;
}

int run_prove(const Options& opt) {
  otk_proof* proof = nullptr;
  const otk_status status = otk_prove(&proof);
  if (status != OTK_OK) return fail_domain(status, "prove");

  int equal = 0, homogeneous = 0, sos = 0, passed = 0;
  otk_proof_equal(proof, &equal);
  otk_proof_homogeneous(proof, &homogeneous);
  otk_proof_sum_of_squares(proof, &sos);
  otk_proof_passed(proof, &passed);
  const std::string expansion = otk_proof_expansion(proof);
  otk_proof_free(proof);

  std::cout << (equal ? "pass " : "FAIL ")
            << "expanded witness equals factorization (exact)\n";
  std::cout << (homogeneous ? "pass " : "FAIL ")
            << "both sides homogeneous of degree 7\n";
  std::cout << (sos ? "pass " : "FAIL ")
            << "quartic factor is a sum of two squares\n";

  if (!opt.out.empty() && !write_output(opt.out, expansion)) {
    std::cerr << "error: cannot write " << opt.out << "\n";
    return kExitDomainError;
  }

  bool golden_ok = true;
  if (!opt.golden.empty()) {
    std::ifstream file(opt.golden, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot read " << opt.golden << "\n";
      return kExitDomainError;
    }
    std::ostringstream buf;
    buf << file.rdbuf();
    golden_ok = buf.str() == expansion;
    std::cout << (golden_ok ? "pass " : "FAIL ")
              << "expansion matches golden file\n";
  }

  return (passed && golden_ok) ? kExitOk : kExitCheckFailed;
}

// Values from --config land as option defaults; explicit flags still win.
bool load_config(const std::string& path, Options& opt, std::string& err) {
  std::ifstream file(path);
  if (!file) {
    err = "cannot read config " + path;
    return false;
  }
  nlohmann::json j;
  try {
    file >> j;
  } catch (const nlohmann::json::exception& e) {
    err = "config parse failure: " + std::string(e.what());
    return false;
  }
  try {
    if (j.contains("absolute_eps")) opt.absolute_eps = j["absolute_eps"];
    if (j.contains("relative_eps")) opt.relative_eps = j["relative_eps"];
    if (j.contains("precision")) opt.precision = j["precision"];
    if (j.contains("R")) {
      opt.radii.clear();
      if (j["R"].is_array()) {
        for (const auto& v : j["R"]) opt.radii.push_back(v);
      } else {
        opt.radii.push_back(j["R"]);
      }
    }
    if (j.contains("n")) opt.n = j["n"];
    if (j.contains("what")) opt.what = j["what"];
    if (j.contains("format")) opt.format = j["format"];
    if (j.contains("seed")) opt.seed = j["seed"];
    if (j.contains("samples")) opt.samples = j["samples"];
    if (j.contains("identity_threshold")) {
      opt.identity_threshold = j["identity_threshold"];
    }
    if (j.contains("min_angle")) opt.min_angle = j["min_angle"];
  } catch (const nlohmann::json::exception& e) {
    err = "config type failure: " + std::string(e.what());
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;

  // The config file provides defaults, so it must load before the parse.
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    std::string path;
    if (arg == "--config" && i + 1 < argc) {
      path = argv[i + 1];
    } else if (arg.rfind("--config=", 0) == 0) {
      path = arg.substr(9);
    }
    if (!path.empty()) {
      std::string err;
      if (!load_config(path, opt, err)) {
        std::cerr << "error: " << err << "\n";
        return kExitUsage;
      }
    }
  }

  CLI::App app{"Euler-line triangle construction and locus kernel"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON file with option defaults");
  app.add_option("--absolute-eps", opt.absolute_eps,
                 "absolute tolerance, length units")
      ->capture_default_str();
  app.add_option("--relative-eps", opt.relative_eps, "relative tolerance")
      ->capture_default_str();
  app.add_option("--precision", opt.precision,
                 "significant digits for text output")
      ->check(CLI::Range(6, 17))
      ->capture_default_str();

  CLI::App* centers = app.add_subcommand(
      "centers", "classical centers of an explicit triangle");
  centers->add_option("coords", opt.coords,
                      "vertex coordinates: ax ay bx by cx cy")
      ->expected(6);
  centers->add_flag("--json", opt.as_json, "JSON output");

  CLI::App* construct = app.add_subcommand(
      "construct",
      "triangle with circumradius R and apex angle theta on the fixed "
      "Euler-line frame");
  construct->add_option("--R", opt.R, "circumradius, must exceed 1")
      ->required();
  construct->add_option("--theta", opt.theta, "apex angle in radians")
      ->required();
  construct->add_flag("--json", opt.as_json, "JSON output");

  CLI::App* locus = app.add_subcommand(
      "locus", "sweep apex angles and trace a center family");
  locus->add_option("--R", opt.radii, "circumradius list")
      ->delimiter(',')
      ->capture_default_str();
  locus->add_option("--n", opt.n, "sweep resolution")
      ->check(CLI::Range(16, 10000000))
      ->capture_default_str();
  locus->add_option("--what", opt.what, "incenter or fermat")
      ->check(CLI::IsMember({"incenter", "fermat"}))
      ->capture_default_str();
  locus->add_option("--format", opt.format, "csv, svg or json")
      ->check(CLI::IsMember({"csv", "svg", "json"}))
      ->capture_default_str();
  locus->add_option("--out", opt.out, "output path, - for stdout");

  CLI::App* verify = app.add_subcommand(
      "verify", "batch identity and position verification");
  verify->add_option("--seed", opt.seed, "sampler seed")
      ->capture_default_str();
  verify->add_option("--samples", opt.samples, "sample count")
      ->check(CLI::Range(static_cast<long>(10), static_cast<long>(100000000)))
      ->capture_default_str();
  verify->add_option("--tol", opt.identity_threshold,
                     "scaled residual threshold")
      ->capture_default_str();
  verify->add_option("--min-angle", opt.min_angle,
                     "smallest sampled angle, radians")
      ->capture_default_str();
  verify->add_option("--out", opt.out, "write the JSON report here");

  CLI::App* prove = app.add_subcommand(
      "prove", "exact expansion of the positivity factorization");
  prove->add_option("--out", opt.out, "write the expansion here");
  prove->add_option("--golden", opt.golden,
                    "compare the expansion against this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*centers) return run_centers(opt);
  if (*construct) return run_construct(opt);
  if (*locus) return run_locus(opt);
  if (*verify) return run_verify(opt);
  if (*prove) return run_prove(opt);
  return kExitUsage;
}
