#include "abflux/verify.hpp"
#include "abflux/errors.hpp"
#include "abflux/quadrature.hpp"
#include "abflux/scattering.hpp"
#include "abflux/specfun.hpp"
#include "abflux/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace abflux::verify {

namespace {

const cplx I1(0.0, 1.0);

std::string fmt(double v)
{
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

bool strictly_decreasing(const std::vector<double>& v)
{
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] < v[i - 1])) return false;
  return true;
}

// int_0^inf s^{w-1} g(s) ds along the real axis for w = 1 + i y
cplx mellin_integral(const std::function<cplx(double)>& g, double y, std::string& md)
{
  auto integrand = [&](double s) { return std::exp(cplx(0.0, y * std::log(s))) * g(s); };
  const quad::Result r = quad::adaptive_quadrature(integrand, 1e-9, 1.0);
  md = r.metadata;
  return r.value;
}

}  // namespace

bool within(const OracleReport& r)
{
  return std::abs(r.computed - r.target) <= r.tolerance * std::max(1.0, std::abs(r.target));
}

OracleReport hankel_norm_check(double nu, bool upper_left)
{
  if (!(nu >= 0.1 && nu <= 0.9)) throw DomainError("hankel_norm_check: nu must lie in [0.1, 0.9]");
  OracleReport rep;
  rep.name = "hankel_norm(nu=" + fmt(nu) + (upper_left ? ",k=e^{3i pi/4})" : ",k=e^{i pi/4})");
  rep.target = 1.0 / (pi * std::cos(0.5 * pi * nu));
  rep.tolerance = 1e-6;
  const cplx k = std::polar(1.0, upper_left ? 0.75 * pi : 0.25 * pi);
  auto f = [&](double r) -> cplx { return std::norm(std::sqrt(r) * specfun::hankel1(nu, k * r)); };
  try {
    const quad::Result q = quad::adaptive_quadrature(f, 1e-10, 0.0);
    rep.computed = q.value;
    rep.metadata = q.metadata;
  } catch (const AccuracyError& e) {
    rep.computed = e.best_estimate();
    rep.metadata = std::string("accuracy failure: ") + e.what();
  }
  rep.passed = within(rep);
  return rep;
}

TestFunction bump_on(double lo, double hi, double peak_at)
{
  auto raw = [lo, hi](double r) {
    if (r <= lo || r >= hi) return 0.0;
    const double t = (r - lo) / (hi - lo);
    return std::exp(-1.0 / (t * (1.0 - t)));
  };
  const double norm = raw(peak_at);
  return {[raw, norm](double r) { return raw(r) / norm; }, lo, hi};
}

TestFunction default_bump(double kappa) { return bump_on(0.8 * kappa, 1.25 * kappa, kappa); }

OracleReport dirac_limit_check(int m, double nu, double kappa, const std::vector<double>& eps,
                               const TestFunction& test)
{
  if (!(nu > 0.0 && nu < 1.0) || !(kappa > 0.0)) throw DomainError("dirac_limit_check: bad parameters");
  if (test.lo < 0.55 * kappa || test.hi > 1.3 * kappa)
    throw DomainError("dirac_limit_check: test function support must lie in [0.55 kappa, 1.3 kappa]");
  OracleReport rep;
  rep.name = "dirac_limit(m=" + std::to_string(m) + ",nu=" + fmt(nu) + ",kappa=" + fmt(kappa) + ")";
  const int am = std::abs(m);
  const double a = 0.5 * (am + nu), b = 0.5 * (am - nu), c = am + 1.0;
  const double fk = (kappa > test.lo && kappa < test.hi) ? test.f(kappa) : 0.0;
  rep.target = I1 * std::polar(1.0, 0.5 * pi * nu) * (am % 2 ? -1.0 : 1.0) * fk;
  rep.tolerance = 5e-2;
  const cplx d = -(2.0 / (I1 * pi)) * std::polar(1.0, -0.5 * pi * nu) * std::tgamma(a + 1.0) *
                 std::tgamma(b + 1.0) / std::tgamma(am + 1.0);
  const double lam = kappa * kappa;
  std::ostringstream md;
  for (double e : eps) {
    const cplx z(lam, e), zb = std::conj(z);
    const cplx sq = specfun::sqrt_upper(zb);
    // singular factor eps / ((r^2 - zb)(r^2 - z)) kept outside the 2F1
    auto g = [&](double r) -> cplx {
      const double r2 = r * r;
      const cplx hyp = specfun::gauss_2f1(a, b, c, r2 / zb);
      return -d * e / ((r2 - zb) * (r2 - z)) * (zb / r2) * std::pow(sq / r, -2.0 - am) * hyp;
    };
    auto integrand = [&](double r) -> cplx { return r * std::conj(g(r)) * test.f(r); };
    const double w = 10.0 * e / (2.0 * kappa);
    std::vector<double> br = {test.lo, test.hi};
    for (double p : {kappa - w, kappa, kappa + w})
      if (p > test.lo && p < test.hi) br.push_back(p);
    std::sort(br.begin(), br.end());
    cplx total = 0.0;
    int panels = 0;
    for (std::size_t i = 0; i + 1 < br.size(); ++i) {
      const quad::Result q = quad::integrate(integrand, br[i], br[i + 1], 1e-10, 1e-10, 20000);
      total += q.value;
      panels += std::stoi(q.metadata.substr(q.metadata.find('=') + 1));
    }
    rep.computed = total;
    rep.sequence.push_back(std::abs(total - rep.target) / std::max(1.0, std::abs(rep.target)));
    md << "eps=" << e << ":panels=" << panels << ";";
  }
  const bool mono = strictly_decreasing(rep.sequence);
  if (!mono) md << "non-monotone error sequence;";
  rep.metadata = md.str();
  rep.passed = mono && within(rep);
  return rep;
}

OracleReport dirac_limit_check(int m, double nu, double kappa, const std::vector<double>& eps)
{
  return dirac_limit_check(m, nu, kappa, eps, default_bump(kappa));
}

OracleReport mellin_pair_check(SymbolVariant variant, int m, const Flux& alpha, const std::vector<double>& xs)
{
  const ChannelSymbol sym(m, variant, alpha);
  if (variant == SymbolVariant::PhiPlus) throw DomainError("mellin_pair_check: use phi-minus or phi-tilde");
  OracleReport rep;
  rep.name = std::string(variant == SymbolVariant::PhiMinus ? "mellin_phi_minus" : "mellin_phi_tilde") +
             "(m=" + std::to_string(m) + ",alpha=" + fmt(alpha.value()) + ")";
  rep.tolerance = 1e-4;
  const int am = std::abs(m);
  const double mu = std::abs(m + alpha.value());
  const double delta = ab_phase(m, alpha);
  double worst = -1.0;
  std::string md;
  try {
    for (double x : xs) {
      if (std::abs(x) > 5.0) throw DomainError("mellin_pair_check: grid must lie in |x| <= 5");
      cplx q;
      if (variant == SymbolVariant::PhiMinus) {
        const cplx k1 = mellin_integral([&](double s) -> cplx { return specfun::bessel_j(mu, s); }, -x, md);
        const cplx k2 = mellin_integral([&](double s) -> cplx { return specfun::bessel_j(am, s); }, x, md);
        q = std::polar(1.0, delta) * k1 * k2;
      } else {
        const cplx k1 = mellin_integral([&](double s) -> cplx { return specfun::bessel_j(am, s); }, x, md);
        const cplx k2 = mellin_integral([&](double s) { return specfun::hankel1(mu, cplx(s, 0.0)); }, -x, md);
        q = 0.5 * std::polar(1.0, -delta) * k1 * k2;
      }
      const cplx target = sym(x);
      const double dev = std::abs(q - target) / std::max(1.0, std::abs(target));
      rep.sequence.push_back(dev);
      if (dev > worst) {
        worst = dev;
        rep.computed = q;
        rep.target = target;
      }
    }
    rep.metadata = md + ",points=" + std::to_string(xs.size()) + ",max_dev=" + fmt(worst);
    rep.passed = within(rep);
  } catch (const AccuracyError& e) {
    rep.metadata = std::string("regularization failure: ") + e.what();
    rep.passed = false;
  }
  return rep;
}

OracleReport boundary_value_check(const Flux& alpha, double lambda)
{
  if (!(lambda >= 1e-2 && lambda <= 1e2)) throw DomainError("boundary_value_check: lambda must lie in [1e-2, 1e2]");
  OracleReport rep;
  rep.name = "boundary_value(alpha=" + fmt(alpha.value()) + ",lambda=" + fmt(lambda) + ")";
  rep.tolerance = 1e-5;
  const Matrix2 mp = weyl_m(alpha, SpectralPoint::boundary(lambda, Side::Plus));
  const Matrix2 mm = weyl_m(alpha, SpectralPoint::boundary(lambda, Side::Minus));
  for (double e : {1e-4, 1e-6, 1e-8}) {
    const Matrix2 ap = weyl_m(alpha, SpectralPoint::off_axis(cplx(lambda, e)));
    const Matrix2 am = weyl_m(alpha, SpectralPoint::off_axis(cplx(lambda, -e)));
    double err = 0.0;
    for (int ch = 0; ch < 2; ++ch) {
      for (const auto& [approx, exact] : {std::pair{ap, mp}, std::pair{am, mm}}) {
        const double d = std::abs(approx(ch, ch) - exact(ch, ch)) / std::max(1.0, std::abs(exact(ch, ch)));
        if (d >= err) {
          err = d;
          rep.computed = approx(ch, ch);
          rep.target = exact(ch, ch);
        }
      }
    }
    rep.sequence.push_back(err);
  }
  const bool mono = strictly_decreasing(rep.sequence);
  rep.metadata = mono ? "eps=1e-4,1e-6,1e-8" : "eps=1e-4,1e-6,1e-8;non-monotone error sequence";
  rep.passed = mono && within(rep);
  return rep;
}

OracleReport hankel_composition_check(int m, const Flux& alpha)
{
  OracleReport rep;
  rep.name = "hankel_composition(m=" + std::to_string(m) + ",alpha=" + fmt(alpha.value()) + ")";
  rep.tolerance = 1e-4;
  const double sigma = 0.5;
  auto f = [&](double s) { return std::exp(-std::pow(std::log(s), 2) / (2.0 * sigma * sigma)); };
  const int am = std::abs(m);
  const double mu = std::abs(m + alpha.value());

  // Mellin route
  LogGrid grid{std::exp(-20.0), 40.0 / 2047.0, 2048};
  std::vector<cplx> samples(grid.n);
  for (std::size_t j = 0; j < grid.n; ++j) samples[j] = f(grid.r(j));
  const std::vector<cplx> out = mellin_action(ChannelSymbol(m, SymbolVariant::PhiMinus, alpha), samples, grid);

  // Hankel composition: F(kappa) = int s J_|m|(s kappa) f(s) ds on composite Gauss-Legendre nodes
  const double kmax = 30.0;
  const int panels = 600;
  static const double gx[8] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
                               0.1834346424956498,  0.5255324099163290,  0.7966664774136267,  0.9602898564975363};
  static const double gw[8] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873, 0.3626837833783620,
                               0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};
  std::vector<double> kn, kw;
  const double hk = kmax / panels;
  for (int p = 0; p < panels; ++p)
    for (int i = 0; i < 8; ++i) {
      kn.push_back(hk * (p + 0.5 + 0.5 * gx[i]));
      kw.push_back(0.5 * hk * gw[i]);
    }
  std::vector<double> fk(kn.size());
  const double slo = std::exp(-3.5), shi = std::exp(3.5);
  for (std::size_t i = 0; i < kn.size(); ++i) {
    const double kk = kn[i];
    auto g = [&](double s) -> cplx { return s * specfun::bessel_j(am, s * kk) * f(s); };
    fk[i] = quad::integrate(g, slo, shi, 1e-12, 1e-10, 20000).value.real();
  }
  const cplx phase = std::polar(1.0, ab_phase(m, alpha));
  double num = 0.0, den = 0.0;
  for (std::size_t j = 0; j < grid.n; j += 8) {
    const double r = grid.r(j);
    if (r < std::exp(-3.0) || r > std::exp(3.0)) continue;
    double acc = 0.0;
    for (std::size_t i = 0; i < kn.size(); ++i) acc += kw[i] * kn[i] * specfun::bessel_j(mu, kn[i] * r) * fk[i];
    const cplx ref = phase * acc;
    // weight r^2 dt = r dr on the log grid
    num += std::norm(out[j] - ref) * r * r;
    den += std::norm(ref) * r * r;
  }
  // the report compares the relative L2 deviation against zero
  const double rel = std::sqrt(num / den);
  rep.computed = rel;
  rep.target = 0.0;
  rep.sequence.push_back(rel);
  rep.metadata = "grid=2048,t=[-20,20],kappa_max=30,sigma=0.5,rel_L2=" + fmt(rel);
  rep.passed = within(rep);
  return rep;
}

}  // namespace abflux::verify
