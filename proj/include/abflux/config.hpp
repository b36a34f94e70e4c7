#pragma once

#include <string>
#include <vector>

#include "abflux/extension.hpp"

namespace abflux::cli {

struct GridSpec {
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 0;
  std::string spacing;
  std::vector<double> nodes() const;
};

struct RunConfig {
  double alpha = 0.5;
  bool unitary_form = true;
  Matrix2 u = -Matrix2::Identity();
  Matrix2 c = Matrix2::Zero();
  Matrix2 d = Matrix2::Zero();
  GridSpec kappa{1e-3, 1e3, 61, "log"};
  GridSpec x{-50.0, 50.0, 201, "tanh"};
  std::vector<std::string> outputs;
  std::string format = "csv";
  double wave_kappa = 1.0;
  unsigned long long seed = 20240611ULL;

  ExtensionPair pair() const;
};

// Flat key/value document ("key = value", '#' comments).  Keys:
//   alpha; U.ij or C.ij / D.ij (i,j in {1,2}) as "re, im";
//   kappa.{min,max,count,spacing}; x.{min,max,count,spacing};
//   outputs (comma list); format; wavesymbol.kappa; seed.
// A JSON document carrying a "config" object (as written by run) is also accepted.
RunConfig parse_config(const std::string& text);

// Validate cross-field invariants; throws ConfigError.
void validate(const RunConfig& cfg);

}  // namespace abflux::cli
