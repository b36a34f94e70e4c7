#pragma once

#include <functional>
#include <string>
#include <vector>

#include "abflux/flux.hpp"
#include "abflux/types.hpp"
#include "abflux/waveop.hpp"

namespace abflux::verify {

inline constexpr const char* schema_version = "abflux/1";

struct OracleReport {
  std::string name;
  cplx target{};
  cplx computed{};
  double tolerance = 0.0;
  bool passed = false;
  std::string metadata;          // regularization parameters and notes
  std::vector<double> sequence;  // error ladder for limit checks
};

// |computed - target| <= tolerance * max(1, |target|)
bool within(const OracleReport& r);

// int_0^inf r |H_nu(k r)|^2 dr vs 1/(pi cos(pi nu/2)), k = e^{i pi/4} or e^{3 i pi/4}.
OracleReport hankel_norm_check(double nu, bool upper_left = false);

// Bump normalised to f(kappa) = 1 and supported in [0.8 kappa, 1.25 kappa].
struct TestFunction {
  std::function<double(double)> f;
  double lo, hi;
};
TestFunction default_bump(double kappa);
TestFunction bump_on(double lo, double hi, double peak_at);

// Regularized pairing eps <(X^2 - z)^{-1} ..., f> along the eps ladder vs
// i e^{i pi nu/2} (-1)^{|m|} f(kappa).  Support must lie in [0.55 kappa, 1.3 kappa].
OracleReport dirac_limit_check(int m, double nu, double kappa, const std::vector<double>& eps,
                               const TestFunction& test);
OracleReport dirac_limit_check(int m, double nu, double kappa, const std::vector<double>& eps);

// Symbol values from products of Mellin integrals of J (and H^(1)) vs the closed forms.
OracleReport mellin_pair_check(SymbolVariant variant, int m, const Flux& alpha, const std::vector<double>& xs);

// weyl_m at lambda +- i eps vs the boundary values, eps in {1e-4, 1e-6, 1e-8}.
OracleReport boundary_value_check(const Flux& alpha, double lambda);

// mellin_action of phi_m^- on a log-Gaussian bump vs the Hankel-transform
// composition; computed holds the relative L2 deviation, target is zero.
OracleReport hankel_composition_check(int m, const Flux& alpha);

}  // namespace abflux::verify
