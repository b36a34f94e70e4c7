#include "abflux/quadrature.hpp"
#include "abflux/errors.hpp"

#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

namespace abflux::quad {

namespace {

constexpr double xgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                           0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                           0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                           0.207784955007898467600689403773245, 0.0};
constexpr double wgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                           0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                           0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                           0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                          0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  cplx value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const Integrand& f, double a, double b)
{
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const cplx fc = f(c);
  cplx k = wgk[7] * fc, g = wg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const cplx s = f(c - h * xgk[i]) + f(c + h * xgk[i]);
    k += wgk[i] * s;
    if (i % 2 == 1) g += wg[i / 2] * s;
  }
  return {a, b, k * h, std::abs((k - g) * h)};
}

}  // namespace

Result integrate(const Integrand& f, double a, double b, double abs_tol, double rel_tol, int max_panels)
{
  Result res;
  if (a == b) return res;
  std::priority_queue<Panel> heap;
  Panel first = gk15(f, a, b);
  heap.push(first);
  cplx total = first.value;
  double err = first.error;
  res.evaluations = 15;
  int panels = 1;
  for (;;) {
    if (!std::isfinite(err) || !std::isfinite(total.real()) || !std::isfinite(total.imag()))
      throw AccuracyError("integrate: non-finite integrand values", total, err);
    if (err <= std::max(abs_tol, rel_tol * std::abs(total))) break;
    if (panels >= max_panels) {
      throw AccuracyError("integrate: panel budget exhausted", total, err);
    }
    Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      throw AccuracyError("integrate: interval underflow", total, err);
    }
    Panel l = gk15(f, worst.a, mid), r = gk15(f, mid, worst.b);
    res.evaluations += 30;
    total += l.value + r.value - worst.value;
    err += l.error + r.error - worst.error;
    heap.push(l);
    heap.push(r);
    ++panels;
  }
  // recompute the sum to avoid drift from incremental updates
  cplx sum = 0.0;
  double esum = 0.0;
  while (!heap.empty()) {
    sum += heap.top().value;
    esum += heap.top().error;
    heap.pop();
  }
  res.value = sum;
  res.error = esum;
  std::ostringstream md;
  md << "panels=" << panels;
  res.metadata = md.str();
  return res;
}

Result integrate_tanh_sinh(const Integrand& f, double a, double b, double tol)
{
  const double half = 0.5 * (b - a);
  auto level_sum = [&](double h, long& evals) {
    cplx sum = 0.0;
    const int kmax = static_cast<int>(std::ceil(4.5 / h));
    for (int k = -kmax; k <= kmax; ++k) {
      const double t = k * h;
      const double s = 0.5 * M_PI * std::sinh(t);
      const double ch = std::cosh(s);
      if (!std::isfinite(ch * ch)) continue;
      const double w = half * 0.5 * M_PI * std::cosh(t) / (ch * ch);
      const double delta = (b - a) / (1.0 + std::exp(2.0 * std::abs(s)));
      if (delta == 0.0) continue;
      const double x = t < 0 ? a + delta : b - delta;
      if (x <= a || x >= b) continue;
      sum += w * f(x);
      ++evals;
    }
    return sum * h;
  };
  Result res;
  double h = 0.5;
  cplx prev = level_sum(h, res.evaluations);
  for (int lvl = 0; lvl < 8; ++lvl) {
    h *= 0.5;
    const cplx cur = level_sum(h, res.evaluations);
    const double diff = std::abs(cur - prev);
    prev = cur;
    // error roughly squares per halving, as for exp-sinh below
    if (diff <= std::sqrt(tol) * std::abs(cur) * 1e-2 || diff < 1e-300) {
      res.value = cur;
      res.error = diff * diff / std::max(std::abs(cur), 1e-300);
      return res;
    }
  }
  throw AccuracyError("integrate_tanh_sinh: no convergence", prev, std::abs(prev) * tol);
}

Result integrate_exp_sinh(const Integrand& f, double tol)
{
  auto level_sum = [&](double h, long& evals) {
    cplx sum = 0.0;
    const int kmax = static_cast<int>(std::ceil(6.5 / h));
    for (int k = -kmax; k <= kmax; ++k) {
      const double t = k * h;
      const double u = std::exp(0.5 * M_PI * std::sinh(t));
      if (u > 1e300 || u < 1e-300) continue;
      sum += 0.5 * M_PI * std::cosh(t) * u * f(u);
      ++evals;
    }
    return sum * h;
  };
  Result res;
  double h = 0.5;
  cplx prev = level_sum(h, res.evaluations);
  for (int lvl = 0; lvl < 8; ++lvl) {
    h *= 0.5;
    const cplx cur = level_sum(h, res.evaluations);
    const double diff = std::abs(cur - prev);
    prev = cur;
    // the DE error roughly squares per halving; once the difference is at
    // the square root of the target the current level is already converged
    if (diff <= std::sqrt(tol) * std::abs(cur) * 1e-2 || diff < 1e-300) {
      res.value = cur;
      res.error = diff * diff / std::max(std::abs(cur), 1e-300);
      return res;
    }
  }
  throw AccuracyError("integrate_exp_sinh: no convergence", prev, std::abs(prev) * tol);
}

Result adaptive_quadrature(const Integrand& f, double abs_tol, double frequency,
                           const OscillatoryOptions& opts)
{
  const double r0 = opts.near_zero;
  const double piece_tol = abs_tol / 4.0;
  Result res;

  // (0, r0]: s = r0 e^{-t}, t = v / (1 - v)
  auto near = [&](double v) -> cplx {
    const double t = v / (1.0 - v);
    const double s = r0 * std::exp(-t);
    if (s == 0.0) return 0.0;
    return f(s) * s / ((1.0 - v) * (1.0 - v));
  };
  Result a = integrate(near, 0.0, 1.0, piece_tol, 0.0, 20000);
  res.value = a.value;
  res.error = a.error;
  res.evaluations = a.evaluations;

  std::ostringstream md;
  if (frequency <= 0.0) {
    auto far = [&](double v) -> cplx {
      const double r = r0 + v / (1.0 - v);
      return f(r) / ((1.0 - v) * (1.0 - v));
    };
    Result b = integrate(far, 0.0, 1.0, piece_tol, 0.0, 20000);
    res.value += b.value;
    res.error += b.error;
    res.evaluations += b.evaluations;
    md << "near_zero=" << r0 << ",path=mapped";
    res.metadata = md.str();
  } else {
    const double half_period = M_PI / frequency;
    const double radius = std::max(opts.radius > 0.0 ? opts.radius : 200.0 / frequency, 2.0 * r0);
    const int nb = std::max(1, static_cast<int>(std::ceil((radius - r0) / half_period)));
    const double step = (radius - r0) / nb;
    for (int i = 0; i < nb; ++i) {
      Result p = integrate(f, r0 + i * step, r0 + (i + 1) * step, piece_tol / nb, 0.0, 2000);
      res.value += p.value;
      res.error += p.error;
      res.evaluations += p.evaluations;
    }
    const int K = opts.averaging_levels;
    std::vector<cplx> partial(K + 2);
    partial[0] = 0.0;
    for (int j = 1; j < K + 2; ++j) {
      const double lo = radius + (j - 1) * half_period;
      Result p = integrate(f, lo, lo + half_period, piece_tol / (K + 1), 0.0, 2000);
      partial[j] = partial[j - 1] + p.value;
      res.error += p.error;
      res.evaluations += p.evaluations;
    }
    for (int lvl = 0; lvl < K; ++lvl)
      for (int j = 0; j + 1 < K + 2 - lvl; ++j) partial[j] = 0.5 * (partial[j] + partial[j + 1]);
    res.value += partial[1];
    res.error += std::abs(partial[1] - partial[0]);
    md << "near_zero=" << r0 << ",R=" << radius << ",K=" << K << ",panels=" << nb + K + 1;
    res.metadata = md.str();
  }
  if (res.error > abs_tol) throw AccuracyError("adaptive_quadrature: tolerance not met", res.value, res.error);
  return res;
}

}  // namespace abflux::quad
