// Command-line front end; talks to the library exclusively through the C API.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "quasiprob.h"

namespace {

struct Config {
  int grid_points = 4097;
  double mass_tol = 0.0;  // 0 = per-check defaults
  int series_order = 64;
};

// Precedence: CLI flags > config file > built-in defaults. The config file is
// ./quasiprob.json unless QUASIPROB_CONFIG points elsewhere.
Config load_config() {
  Config cfg;
  std::string path = "quasiprob.json";
  if (const char* env = std::getenv("QUASIPROB_CONFIG")) path = env;
  std::ifstream f(path);
  if (!f) return cfg;
  nlohmann::json j;
  try {
    f >> j;
  } catch (const std::exception& e) {
    throw CLI::ValidationError("config", std::string("cannot parse ") + path + ": " + e.what());
  }
  if (j.contains("grid_points")) cfg.grid_points = j["grid_points"].get<int>();
  if (j.contains("mass_tol")) cfg.mass_tol = j["mass_tol"].get<double>();
  if (j.contains("series_order")) cfg.series_order = j["series_order"].get<int>();
  return cfg;
}

int fail(qp_status st) {
  std::cerr << "error: " << qp_last_error() << "\n";
  return st == QP_ERR_INVALID ? 2 : 1;
}

int write_or_print(const std::string& out_path, char* text) {
  std::string s(text);
  qp_free(text);
  if (out_path.empty()) {
    std::cout << s;
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 2;
  }
  f << s;
  return 0;
}

int grid_output(qp_grid* g, const std::string& out_path, const std::string& format) {
  char* text = nullptr;
  qp_status st = (format == "json") ? qp_grid_to_json(g, &text) : qp_grid_to_csv(g, &text);
  qp_grid_free(g);
  if (st != QP_OK) return fail(st);
  return write_or_print(out_path, text);
}

int run_verify(const std::string& suite, double tol, const std::string& out_path) {
  char* json = nullptr;
  int all_pass = 0;
  qp_status st = qp_verify(suite.c_str(), tol, &json, &all_pass);
  if (st != QP_OK) return fail(st);
  int rc = write_or_print(out_path, json);
  if (rc != 0) return rc;
  return all_pass ? 0 : 1;
}

bool read_density_csv(const std::string& path, std::vector<double>& x, std::vector<double>& v) {
  std::ifstream f(path);
  if (!f) return false;
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty() || std::isalpha(static_cast<unsigned char>(line[0]))) continue;
    std::istringstream ss(line);
    std::string a, b;
    if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',')) return false;
    x.push_back(std::stod(a));
    v.push_back(std::stod(b));
  }
  return x.size() >= 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quasi-probability toolkit: signed mixtures, dual densities, Wigner functions"};
  app.require_subcommand(1);

  Config cfg;
  try {
    cfg = load_config();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::string out_path, format = "csv";
  // verify
  auto* sc_verify = app.add_subcommand("verify", "run identity-check suites");
  std::string suite = "all";
  double tol = cfg.mass_tol;
  sc_verify->add_option("--suite", suite, "series|transforms|mixtures|quasibayes|wigner|all");
  sc_verify->add_option("--tol", tol, "override every check tolerance");
  sc_verify->add_option("--out", out_path, "write JSON report here (default stdout)");

  // emit
  auto* sc_emit = app.add_subcommand("emit", "emit catalog objects as plot-ready data");
  std::string object, family = "laplace", state = "gaussian";
  int order = cfg.series_order;
  int grid = cfg.grid_points;
  double extent = 8.0, alpha = 1.0;
  sc_emit->add_option("object", object, "halfcoin|dual|wigner|feynman|linnik|<family name>")
      ->required();
  sc_emit->add_option("--order", order, "series truncation order");
  sc_emit->add_option("--family", family, "catalog family for dual");
  sc_emit->add_option("--state", state, "wigner state");
  sc_emit->add_option("--alpha", alpha, "linnik index");
  sc_emit->add_option("--grid", grid, "output grid points (odd)");
  sc_emit->add_option("--format", format, "csv|json");
  sc_emit->add_option("--out", out_path, "output path (default stdout)");

  // dual
  auto* sc_dual = app.add_subcommand("dual", "dual density of a sampled density");
  std::string in_path;
  int dual_grid = cfg.grid_points;
  double dual_extent = 8.0;
  sc_dual->add_option("--in", in_path, "input CSV (x,value)")->required();
  sc_dual->add_option("--out", out_path, "output path (default stdout)");
  sc_dual->add_option("--grid", dual_grid, "output grid points (odd)");
  sc_dual->add_option("--extent", dual_extent, "output half-width");
  sc_dual->add_option("--format", format, "csv|json");

  // halfcoin
  auto* sc_half = app.add_subcommand("halfcoin", "half-coin pgf coefficients");
  int hc_order = cfg.series_order;
  sc_half->add_option("--order", hc_order, "truncation order");
  sc_half->add_option("--out", out_path, "output path (default stdout)");

  // feynman
  auto* sc_feyn = app.add_subcommand("feynman", "Feynman-table marginals");
  sc_feyn->add_option("--format", format, "csv|json");
  sc_feyn->add_option("--out", out_path, "output path (default stdout)");

  // diffusion
  auto* sc_diff = app.add_subcommand("diffusion", "absorbing-rod sine-series profile");
  std::string init = "bump";
  double tval = 0.1;
  int diff_grid = cfg.grid_points;
  sc_diff->add_option("--init", init, "bump|sine");
  sc_diff->add_option("--t", tval, "time");
  sc_diff->add_option("--grid", diff_grid, "output points");
  sc_diff->add_option("--out", out_path, "output path (default stdout)");

  // wigner
  auto* sc_wig = app.add_subcommand("wigner", "Wigner function matrix");
  std::string wstate = "gaussian";
  int wgrid = 1025;
  sc_wig->add_option("--state", wstate, "gaussian|hermite1|squeezed:<sigma>");
  sc_wig->add_option("--grid", wgrid, "points per axis (odd)");
  sc_wig->add_option("--out", out_path, "output path (default stdout)");

  // linnik
  auto* sc_lin = app.add_subcommand("linnik", "Linnik density by charfn inversion");
  double lalpha = 1.0, lextent = 8.0;
  int lgrid = cfg.grid_points;
  sc_lin->add_option("--alpha", lalpha, "index in (0, 4]");
  sc_lin->add_option("--grid", lgrid, "output grid points (odd)");
  sc_lin->add_option("--extent", lextent, "output half-width");
  sc_lin->add_option("--format", format, "csv|json");
  sc_lin->add_option("--out", out_path, "output path (default stdout)");

  // cmtest
  auto* sc_cm = app.add_subcommand("cmtest", "complete-monotonicity report");
  std::string fn = "exp";
  int cm_order = 8;
  sc_cm->add_option("--fn", fn, "exp|exp_sqrt|geometric|gauss");
  sc_cm->add_option("--order", cm_order, "max difference order (<= 10)");
  sc_cm->add_option("--out", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (sc_verify->parsed()) return run_verify(suite, tol, out_path);

  if (sc_emit->parsed()) {
    if (object == "halfcoin") {
      char* text = nullptr;
      qp_status st = qp_halfcoin_csv(order, &text);
      if (st != QP_OK) return fail(st);
      return write_or_print(out_path, text);
    }
    if (object == "dual") {
      qp_grid *in = nullptr, *dual = nullptr;
      qp_status st = qp_grid_family(family.c_str(), 48.0, 160001, &in);
      if (st != QP_OK) return fail(st);
      st = qp_grid_dual(in, extent, grid, &dual);
      qp_grid_free(in);
      if (st != QP_OK) return fail(st);
      return grid_output(dual, out_path, format);
    }
    if (object == "wigner") {
      char* text = nullptr;
      qp_status st = qp_wigner_csv(state.c_str(), grid > 2048 ? 1025 : grid | 1, &text);
      if (st != QP_OK) return fail(st);
      return write_or_print(out_path, text);
    }
    if (object == "feynman") {
      char* text = nullptr;
      qp_status st = qp_feynman(format.c_str(), &text);
      if (st != QP_OK) return fail(st);
      return write_or_print(out_path, text);
    }
    if (object == "linnik") {
      qp_grid* g = nullptr;
      qp_status st = qp_grid_linnik(alpha, extent, grid, &g);
      if (st != QP_OK) return fail(st);
      return grid_output(g, out_path, format);
    }
    // Catalog family density.
    qp_grid* g = nullptr;
    qp_status st = qp_grid_family(object.c_str(), extent, grid, &g);
    if (st != QP_OK) return fail(st);
    return grid_output(g, out_path, format);
  }

  if (sc_dual->parsed()) {
    std::vector<double> x, v;
    if (!read_density_csv(in_path, x, v)) {
      std::cerr << "error: cannot read density CSV " << in_path << "\n";
      return 2;
    }
    qp_grid *in = nullptr, *dual = nullptr;
    qp_status st = qp_grid_from_samples(x.data(), v.data(), static_cast<int>(x.size()), &in);
    if (st != QP_OK) return fail(st);
    st = qp_grid_dual(in, dual_extent, dual_grid, &dual);
    qp_grid_free(in);
    if (st != QP_OK) return fail(st);
    return grid_output(dual, out_path, format);
  }

  if (sc_half->parsed()) {
    char* text = nullptr;
    qp_status st = qp_halfcoin_csv(hc_order, &text);
    if (st != QP_OK) return fail(st);
    return write_or_print(out_path, text);
  }

  if (sc_feyn->parsed()) {
    char* text = nullptr;
    qp_status st = qp_feynman(format.c_str(), &text);
    if (st != QP_OK) return fail(st);
    return write_or_print(out_path, text);
  }

  if (sc_diff->parsed()) {
    char* text = nullptr;
    qp_status st = qp_diffusion_csv(init.c_str(), tval, diff_grid, &text);
    if (st != QP_OK) return fail(st);
    return write_or_print(out_path, text);
  }

  if (sc_wig->parsed()) {
    char* text = nullptr;
    qp_status st = qp_wigner_csv(wstate.c_str(), wgrid, &text);
    if (st != QP_OK) return fail(st);
    return write_or_print(out_path, text);
  }

  if (sc_lin->parsed()) {
    qp_grid* g = nullptr;
    qp_status st = qp_grid_linnik(lalpha, lextent, lgrid, &g);
    if (st != QP_OK) return fail(st);
    return grid_output(g, out_path, format);
  }

  if (sc_cm->parsed()) {
    char* text = nullptr;
    int pass = 0;
    qp_status st = qp_cmtest(fn.c_str(), cm_order, &text, &pass);
    if (st != QP_OK) return fail(st);
    return write_or_print(out_path, text);
  }

  return 2;
}
