#include "abflux/waveop.hpp"
#include "abflux/errors.hpp"
#include "abflux/scattering.hpp"
#include "abflux/specfun.hpp"

#include <unsupported/Eigen/FFT>
#include <cmath>
#include <limits>

namespace abflux {

namespace {

using ld = long double;
constexpr ld two_pi_l = 6.28318530717958647692528676655900577L;

// 2 Im log Gamma(a + i x/2), extended precision
ld twice_arg_gamma(double a, double x)
{
  return 2.0L * specfun::log_gamma_extended(cplx(a, 0.5 * x)).imag();
}

void check_envelope(double x)
{
  if (std::isnan(x) || (std::isfinite(x) && std::abs(x) > ChannelSymbol::envelope))
    throw DomainError("symbol argument outside |x| <= 1e5");
}

}  // namespace

ChannelSymbol::ChannelSymbol(int m, SymbolVariant variant, const Flux& alpha)
    : m_(m), variant_(variant), alpha_(alpha)
{
  if (variant == SymbolVariant::PhiTilde && m != 0 && m != -1)
    throw DomainError("phi-tilde is defined for m in {0, -1} only");
}

cplx ChannelSymbol::operator()(double x) const
{
  return variant_ == SymbolVariant::PhiTilde ? phi_tilde(*this, x) : phi_pm(*this, x);
}

cplx phi_pm(const ChannelSymbol& c, double x)
{
  if (c.variant() == SymbolVariant::PhiTilde) throw DomainError("phi_pm called with a phi-tilde symbol");
  check_envelope(x);
  const int am = std::abs(c.m());
  const double mu = std::abs(c.m() + c.flux().value());
  const double sg = c.variant() == SymbolVariant::PhiPlus ? -1.0 : 1.0;  // e^{-+ i delta}
  const double delta = ab_phase(c.m(), c.flux());
  if (std::isinf(x)) {
    const double side = x > 0 ? 1.0 : -1.0;
    return std::polar(1.0, sg * delta + side * 0.5 * pi * (am - mu));
  }
  ld ph = twice_arg_gamma(0.5 * (am + 1.0), x) - twice_arg_gamma(0.5 * (mu + 1.0), x);
  ph = std::fmod(ph, two_pi_l);
  return std::polar(1.0, static_cast<double>(ph) + sg * delta);
}

cplx phi_tilde(const ChannelSymbol& c, double x)
{
  if (c.variant() != SymbolVariant::PhiTilde) throw DomainError("phi_tilde called with a phi-plus/minus symbol");
  check_envelope(x);
  if (std::isinf(x)) return x > 0 ? 1.0 : 0.0;
  const int am = std::abs(c.m());
  const double mu = std::abs(c.m() + c.flux().value());
  const auto g1 = specfun::log_gamma_extended(cplx(0.5 * (1.0 + mu), -0.5 * x));
  const auto g2 = specfun::log_gamma_extended(cplx(0.5 * (1.0 - mu), -0.5 * x));
  const ld re = -std::log(two_pi_l) + 0.5L * static_cast<ld>(pi) * x + g1.real() + g2.real();
  ld im = -0.5L * static_cast<ld>(pi) * am + twice_arg_gamma(0.5 * (am + 1.0), x) + g1.imag() + g2.imag();
  im = std::fmod(im, two_pi_l);
  return std::polar(static_cast<double>(std::exp(re)), static_cast<double>(im));
}

Matrix2 wave_symbol(const ExtensionPair& pair, const Flux& alpha, double x, double kappa)
{
  const ChannelSymbol m0(0, SymbolVariant::PhiMinus, alpha), m1(-1, SymbolVariant::PhiMinus, alpha);
  const ChannelSymbol t0(0, SymbolVariant::PhiTilde, alpha), t1(-1, SymbolVariant::PhiTilde, alpha);
  Matrix2 w = Matrix2::Zero();
  w(0, 0) = m0(x);
  w(1, 1) = m1(x);
  const Matrix2 st = s_tilde(pair, alpha, kappa);
  w.row(0) += t0(x) * st.row(0);
  w.row(1) += t1(x) * st.row(1);
  return w;
}

double LogGrid::r(std::size_t j) const { return r0 * std::exp(static_cast<double>(j) * step); }

std::vector<cplx> mellin_action(const std::function<cplx(double)>& symbol, const std::vector<cplx>& f,
                                const LogGrid& grid)
{
  const std::size_t n = grid.n;
  if (f.size() != n || n < 8) throw DomainError("mellin_action: sample count does not match grid");
  // work with g(t) = r f(r) so the transform is unitary in dt
  std::vector<cplx> g(n);
  double peak = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    g[j] = grid.r(j) * f[j];
    peak = std::max(peak, std::abs(g[j]));
  }
  const std::size_t edge = std::max<std::size_t>(1, n / 20);
  for (std::size_t j = 0; j < edge; ++j) {
    if (std::abs(g[j]) > 1e-10 * peak || std::abs(g[n - 1 - j]) > 1e-10 * peak)
      throw AliasingError("mellin_action: input support reaches the grid edges");
  }
  std::size_t np = 1;
  while (np < 4 * n) np <<= 1;
  // centre the data in the padded buffer
  const std::size_t off = (np - n) / 2;
  std::vector<cplx> buf(np, 0.0), spec;
  for (std::size_t j = 0; j < n; ++j) buf[off + j] = g[j];
  Eigen::FFT<double> fft;
  fft.fwd(spec, buf);
  const double dx = 2.0 * pi / (np * grid.step);
  for (std::size_t k = 0; k < np; ++k) {
    const double kk = k < np / 2 ? double(k) : double(k) - double(np);
    spec[k] *= symbol(kk * dx);
  }
  fft.inv(buf, spec);
  std::vector<cplx> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = buf[off + j] / grid.r(j);
  return out;
}

std::vector<cplx> mellin_action(const ChannelSymbol& c, const std::vector<cplx>& f, const LogGrid& grid)
{
  return mellin_action([&](double x) { return c(x); }, f, grid);
}

std::vector<double> tanh_grid(double xmax, std::size_t n)
{
  // x_j = xmax * tanh(u_j) / tanh(u_max), u uniform in [-3, 3]
  std::vector<double> x(n);
  const double um = 3.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double u = n == 1 ? 0.0 : -um + 2.0 * um * j / (n - 1.0);
    x[j] = xmax * std::tanh(u) / std::tanh(um);
  }
  return x;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t n)
{
  std::vector<double> x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = n == 1 ? lo : lo + (hi - lo) * j / (n - 1.0);
  return x;
}

std::vector<double> log_grid(double lo, double hi, std::size_t n)
{
  std::vector<double> x(n);
  const double a = std::log(lo), b = std::log(hi);
  for (std::size_t j = 0; j < n; ++j) x[j] = n == 1 ? lo : std::exp(a + (b - a) * j / (n - 1.0));
  return x;
}

}  // namespace abflux
