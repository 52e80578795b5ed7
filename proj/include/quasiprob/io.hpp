#pragma once

#include <string>

#include "quasiprob/types.hpp"
#include "quasiprob/verify.hpp"
#include "quasiprob/wigner.hpp"

namespace quasiprob {

// 17 significant digits, shortest stable form; identical inputs give
// byte-identical text.
std::string format_double(double v);

std::string to_csv(const PowerSeries& s);                 // index,coefficient
std::string to_csv(const GridDensity& d);                 // x,value
std::string to_csv(const CharFn& phi);                    // t,re,im
std::string to_csv(const SignedPmf& p,
                   const std::vector<std::string>& labels);  // state,probability
std::string to_csv(const WignerGrid& W);  // header row of p values, rows x,W...

std::string to_json(const GridDensity& d);
std::string to_json(const std::vector<CheckResult>& checks);

void write_file(const std::string& path, const std::string& content);

}  // namespace quasiprob
