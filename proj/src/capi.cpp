#include "quasiprob.h"

#include <cstdlib>
#include <cstring>
#include <numbers>
#include <string>

#include "quasiprob/io.hpp"
#include "quasiprob/mixtures.hpp"
#include "quasiprob/quasibayes.hpp"
#include "quasiprob/series.hpp"
#include "quasiprob/transforms.hpp"
#include "quasiprob/verify.hpp"
#include "quasiprob/wigner.hpp"

struct qp_grid {
  quasiprob::GridDensity d;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <typename Fn>
qp_status guarded(Fn&& fn) {
  try {
    fn();
    return QP_OK;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return QP_ERR_INVALID;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return QP_ERR_DOMAIN;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QP_ERR_INTERNAL;
  }
}

quasiprob::GridDensity sample_family(const std::string& name, double extent, int points) {
  const quasiprob::SmnFamily& fam = quasiprob::smn_family(name);
  if (!fam.density_closed_form)
    throw std::invalid_argument("family has no closed-form density: " + name);
  quasiprob::GridDensity d;
  d.x.resize(points);
  d.values.resize(points);
  const double h = 2.0 * extent / (points - 1);
  const int mid = (points - 1) / 2;
  for (int i = 0; i < points; ++i) {
    d.x[i] = (i - mid) * h;
    d.values[i] = fam.density_closed_form(d.x[i]);
  }
  d.x[mid] = 0.0;
  return d;
}

}  // namespace

extern "C" {

const char* qp_last_error(void) { return g_last_error.c_str(); }

void qp_free(void* p) { std::free(p); }

qp_status qp_grid_from_samples(const double* x, const double* v, int n, qp_grid** out) {
  return guarded([&] {
    if (!x || !v || !out || n < 2) throw std::invalid_argument("qp_grid_from_samples: bad args");
    auto* g = new qp_grid;
    g->d.x.assign(x, x + n);
    g->d.values.assign(v, v + n);
    g->d.validate();
    *out = g;
  });
}

qp_status qp_grid_family(const char* name, double extent, int points, qp_grid** out) {
  return guarded([&] {
    if (!name || !out || points < 3 || points % 2 == 0 || extent <= 0.0)
      throw std::invalid_argument("qp_grid_family: bad args");
    auto* g = new qp_grid;
    g->d = sample_family(name, extent, points);
    *out = g;
  });
}

qp_status qp_grid_dual(const qp_grid* in, double extent, int points, qp_grid** out) {
  return guarded([&] {
    if (!in || !out || points < 9 || points % 2 == 0 || extent <= 0.0)
      throw std::invalid_argument("qp_grid_dual: bad args");
    auto* g = new qp_grid;
    g->d = quasiprob::dual_density(in->d, {extent, points}, quasiprob::TailModel::Auto);
    *out = g;
  });
}

qp_status qp_grid_linnik(double alpha, double extent, int points, qp_grid** out) {
  return guarded([&] {
    if (!out || points < 3 || points % 2 == 0 || extent <= 0.0)
      throw std::invalid_argument("qp_grid_linnik: bad args");
    auto* g = new qp_grid;
    g->d = quasiprob::linnik_grid(alpha, {extent, points});
    *out = g;
  });
}

qp_status qp_grid_to_csv(const qp_grid* g, char** csv_out) {
  return guarded([&] {
    if (!g || !csv_out) throw std::invalid_argument("qp_grid_to_csv: bad args");
    *csv_out = dup_string(quasiprob::to_csv(g->d));
  });
}

qp_status qp_grid_to_json(const qp_grid* g, char** json_out) {
  return guarded([&] {
    if (!g || !json_out) throw std::invalid_argument("qp_grid_to_json: bad args");
    *json_out = dup_string(quasiprob::to_json(g->d));
  });
}

void qp_grid_free(qp_grid* g) { delete g; }

qp_status qp_verify(const char* suite, double tol_override, char** json_out, int* all_pass) {
  return guarded([&] {
    if (!suite || !json_out || !all_pass) throw std::invalid_argument("qp_verify: bad args");
    std::vector<quasiprob::CheckResult> res = quasiprob::verify_suite(suite, tol_override);
    *json_out = dup_string(quasiprob::to_json(res));
    *all_pass = quasiprob::all_pass(res) ? 1 : 0;
  });
}

qp_status qp_halfcoin_csv(int order, char** csv_out) {
  return guarded([&] {
    if (!csv_out || order < 0) throw std::invalid_argument("qp_halfcoin_csv: bad args");
    *csv_out = dup_string(quasiprob::to_csv(quasiprob::halfcoin_coeffs(order)));
  });
}

qp_status qp_feynman(const char* format, char** out) {
  return guarded([&] {
    if (!format || !out) throw std::invalid_argument("qp_feynman: bad args");
    quasiprob::ConditionalTable tbl = quasiprob::feynman_table();
    quasiprob::SignedPmf m = quasiprob::total_probability(tbl);
    const std::string fmt(format);
    if (fmt == "csv") {
      *out = dup_string(quasiprob::to_csv(m, tbl.states));
    } else if (fmt == "json") {
      std::string j = "{";
      for (std::size_t i = 0; i < m.atoms.size(); ++i) {
        j += (i ? ", " : "") + ("\"" + tbl.states[i] + "\": ") +
             quasiprob::format_double(m.atoms[i].second);
      }
      j += "}\n";
      *out = dup_string(j);
    } else {
      throw std::invalid_argument("qp_feynman: format must be csv or json");
    }
  });
}

qp_status qp_diffusion_csv(const char* init, double t, int points, char** csv_out) {
  return guarded([&] {
    if (!init || !csv_out || points < 2 || t < 0.0)
      throw std::invalid_argument("qp_diffusion_csv: bad args");
    const std::string which(init);
    quasiprob::SineSeriesSolution sol;
    if (which == "bump") {
      sol = quasiprob::bump_solution(64);
    } else if (which == "sine") {
      sol.coeffs = {1.0};
    } else {
      throw std::invalid_argument("qp_diffusion_csv: init must be bump or sine");
    }
    std::string out = "x,value\n";
    const double pi = std::numbers::pi;
    for (int i = 0; i < points; ++i) {
      const double x = pi * i / (points - 1);
      out += quasiprob::format_double(x) + "," +
             quasiprob::format_double(quasiprob::evolve_and_eval(sol, x, t)) + "\n";
    }
    *csv_out = dup_string(out);
  });
}

qp_status qp_wigner_csv(const char* state, int points, char** csv_out) {
  return guarded([&] {
    if (!state || !csv_out || points < 3 || points % 2 == 0)
      throw std::invalid_argument("qp_wigner_csv: bad args");
    quasiprob::SymmetricGrid g{8.0, points};
    const std::string spec(state);
    if (spec.rfind("squeezed:", 0) == 0 && std::stod(spec.substr(9)) > 1.2) g.extent = 16.0;
    quasiprob::WaveFunction psi = quasiprob::make_state(spec, g);
    quasiprob::WignerGrid W = quasiprob::wigner_transform(psi, g);
    *csv_out = dup_string(quasiprob::to_csv(W));
  });
}

qp_status qp_cmtest(const char* fn_name, int order, char** json_out, int* pass) {
  return guarded([&] {
    if (!fn_name || !json_out || !pass) throw std::invalid_argument("qp_cmtest: bad args");
    const std::string name(fn_name);
    std::function<double(double)> f;
    if (name == "exp") {
      f = [](double x) { return std::exp(-x); };
    } else if (name == "exp_sqrt") {
      f = [](double x) { return std::exp(-std::sqrt(x)); };
    } else if (name == "geometric") {
      f = [](double x) { return 1.0 / (1.0 + x); };
    } else if (name == "gauss") {
      f = [](double x) { return std::exp(-x * x); };
    } else {
      throw std::invalid_argument("qp_cmtest: unknown function '" + name + "'");
    }
    quasiprob::CmReport rep = quasiprob::completely_monotone_test(f, 0.1, 10.0, order);
    std::string j = "{\"function\": \"" + name + "\", \"order\": " + std::to_string(order) +
                    ", \"pass\": " + (rep.pass ? "true" : "false");
    if (!rep.pass) {
      j += ", \"x_violation\": " + quasiprob::format_double(rep.x_violation) +
           ", \"order_violation\": " + std::to_string(rep.order_violation) +
           ", \"worst_value\": " + quasiprob::format_double(rep.worst_value);
    }
    j += "}\n";
    *json_out = dup_string(j);
    *pass = rep.pass ? 1 : 0;
  });
}

}  // extern "C"
