#include "quasiprob/io.hpp"

#include <cstdio>
#include <fstream>

namespace quasiprob {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_csv(const PowerSeries& s) {
  std::string out = "index,coefficient\n";
  for (int k = 0; k <= s.order(); ++k)
    out += std::to_string(k) + "," + format_double(s[k]) + "\n";
  return out;
}

std::string to_csv(const GridDensity& d) {
  std::string out = "x,value\n";
  for (std::size_t i = 0; i < d.x.size(); ++i)
    out += format_double(d.x[i]) + "," + format_double(d.values[i]) + "\n";
  return out;
}

std::string to_csv(const CharFn& phi) {
  std::string out = "t,re,im\n";
  for (std::size_t i = 0; i < phi.t.size(); ++i)
    out += format_double(phi.t[i]) + "," + format_double(phi.values[i].real()) + "," +
           format_double(phi.values[i].imag()) + "\n";
  return out;
}

std::string to_csv(const SignedPmf& p, const std::vector<std::string>& labels) {
  std::string out = "state,probability\n";
  for (std::size_t i = 0; i < p.atoms.size(); ++i) {
    const std::string label = i < labels.size() ? labels[i] : std::to_string(p.atoms[i].first);
    out += label + "," + format_double(p.atoms[i].second) + "\n";
  }
  return out;
}

std::string to_csv(const WignerGrid& W) {
  std::string out = "x\\p";
  for (double p : W.p) out += "," + format_double(p);
  out += "\n";
  for (std::size_t i = 0; i < W.x.size(); ++i) {
    out += format_double(W.x[i]);
    for (std::size_t j = 0; j < W.p.size(); ++j) out += "," + format_double(W.at(i, j));
    out += "\n";
  }
  return out;
}

std::string to_json(const GridDensity& d) {
  std::string out = "{\"grid\": [";
  for (std::size_t i = 0; i < d.x.size(); ++i)
    out += (i ? ", " : "") + format_double(d.x[i]);
  out += "], \"values\": [";
  for (std::size_t i = 0; i < d.values.size(); ++i)
    out += (i ? ", " : "") + format_double(d.values[i]);
  out += "], \"normalized\": ";
  out += d.normalized ? "true" : "false";
  out += "}\n";
  return out;
}

std::string to_json(const std::vector<CheckResult>& checks) {
  std::string out = "[\n";
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const CheckResult& c = checks[i];
    out += "  {\"check\": \"" + c.check + "\", \"lhs\": " + format_double(c.lhs) +
           ", \"rhs\": " + format_double(c.rhs) + ", \"abs_err\": " + format_double(c.abs_err) +
           ", \"tol\": " + format_double(c.tol) + ", \"pass\": " + (c.pass ? "true" : "false") +
           "}";
    if (i + 1 < checks.size()) out += ",";
    out += "\n";
  }
  out += "]\n";
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << content;
  if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace quasiprob
