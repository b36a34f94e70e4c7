#pragma once

#include <functional>
#include <vector>

#include "abflux/extension.hpp"
#include "abflux/flux.hpp"

namespace abflux {

enum class SymbolVariant { PhiPlus, PhiMinus, PhiTilde };

// Symbol on the spectral axis of the dilation generator; x = +-infinity is
// accepted and returns the endpoint limit.
class ChannelSymbol {
public:
  static constexpr double envelope = 1e5;

  ChannelSymbol(int m, SymbolVariant variant, const Flux& alpha);

  int m() const { return m_; }
  SymbolVariant variant() const { return variant_; }
  const Flux& flux() const { return alpha_; }
  cplx operator()(double x) const;

private:
  int m_;
  SymbolVariant variant_;
  Flux alpha_;
};

cplx phi_pm(const ChannelSymbol& c, double x);
cplx phi_tilde(const ChannelSymbol& c, double x);

// diag(phi_0^-, phi_{-1}^-) + diag(phi~_0, phi~_{-1}) S~(kappa)
Matrix2 wave_symbol(const ExtensionPair& pair, const Flux& alpha, double x, double kappa);

// Uniform grid in t = ln r: r_j = r0 e^{j step}.
struct LogGrid {
  double r0 = 1.0;
  double step = 0.01;
  std::size_t n = 0;
  double r(std::size_t j) const;
};

// phi(A) f for f sampled on the grid, through the Mellin (log-Fourier) representation.
std::vector<cplx> mellin_action(const std::function<cplx(double)>& symbol, const std::vector<cplx>& f,
                                const LogGrid& grid);
std::vector<cplx> mellin_action(const ChannelSymbol& c, const std::vector<cplx>& f, const LogGrid& grid);

// Grids on the x axis.
std::vector<double> tanh_grid(double xmax, std::size_t n);
std::vector<double> linear_grid(double lo, double hi, std::size_t n);
std::vector<double> log_grid(double lo, double hi, std::size_t n);

}  // namespace abflux
