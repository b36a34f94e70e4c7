#include "abflux/scattering.hpp"
#include "abflux/errors.hpp"

#include <cmath>

namespace abflux {

namespace {

const cplx I1(0.0, 1.0);

Matrix2 diag(cplx a, cplx b)
{
  Matrix2 m = Matrix2::Zero();
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

// log b_1, log b_2 with b_1 = Gamma(1-a) 2^{-a} kappa^a, b_2 = Gamma(a) 2^{a-1} kappa^{1-a}
std::pair<double, double> log_b(const Flux& alpha, double kappa)
{
  const double a = alpha.value(), lk = std::log(kappa), l2 = std::log(2.0);
  return {std::lgamma(1.0 - a) - a * l2 + a * lk, std::lgamma(a) - (1.0 - a) * l2 + (1.0 - a) * lk};
}

// Phi = diag(e^{-i pi a / 2}, e^{-i pi (1-a) / 2})
Matrix2 phi(const Flux& alpha)
{
  return diag(std::polar(1.0, -0.5 * pi * alpha.value()), std::polar(1.0, -0.5 * pi * alpha.conjugate()));
}

Matrix2 jmat() { return diag(1.0, -1.0); }

bool on_axis(const Vector2& v, int axis) { return std::abs(v(1 - axis)) <= 1e-10 * v.norm(); }

cplx cayley(double lam, double s) { return cplx(lam, s) / cplx(lam, -s); }

// det D != 0
Matrix2 s_invertible(const TripleReduction& t, const Flux& alpha, double b1, double b2)
{
  const double s = alpha.sin_pi(), c = alpha.cos_pi();
  const double f = pi / (2.0 * s);
  double a11 = t.block(0, 0).real(), a22 = t.block(1, 1).real();
  cplx a12 = t.block(0, 1);
  // snap A to exact rank one (or zero) when an eigenvalue is negligible
  const double mean = 0.5 * (a11 + a22);
  const double rad = std::hypot(0.5 * (a11 - a22), std::abs(a12));
  const double big = mean >= 0 ? mean + rad : mean - rad;
  double det_a = a11 * a22 - std::norm(a12);
  if (big == 0.0 || std::abs(det_a / big) <= 1e-12 * std::abs(big)) {
    det_a = 0.0;
    if (big != 0.0) {
      Vector2 v(a12, big - a11);
      Vector2 v2(big - a22, std::conj(a12));
      if (v2.norm() > v.norm()) v = v2;
      v.normalize();
      a11 = big * std::norm(v(0));
      a22 = big * std::norm(v(1));
      a12 = big * v(0) * std::conj(v(1));
    } else {
      a11 = a22 = 0.0;
      a12 = 0.0;
    }
  }
  const double l11 = f * a11, l22 = f * a22, det_l = f * f * det_a;
  const cplx l12 = f * a12;
  const double ib1 = 1.0 / (b1 * b1), ib2 = 1.0 / (b2 * b2);
  const double x11 = l11 * ib1 + c, x22 = l22 * ib2 - c;
  const cplx x12 = l12 / (b1 * b2);
  const double det_x = det_l * ib1 * ib2 + c * (l22 * ib2 - l11 * ib1) - c * c;

  const double xm = 0.5 * (x11 + x22);
  const double xr = std::hypot(0.5 * (x11 - x22), std::abs(x12));
  const double lb = xm >= 0 ? xm + xr : xm - xr;
  const double ls = lb != 0.0 ? det_x / lb : 0.0;
  Vector2 v(x12, lb - x11);
  Vector2 v2(lb - x22, std::conj(x12));
  if (v2.norm() > v.norm()) v = v2;
  if (v.norm() == 0.0)
    v = Vector2(1.0, 0.0);
  else
    v.normalize();
  const Vector2 w(-std::conj(v(1)), std::conj(v(0)));
  const Matrix2 core = cayley(lb, s) * v * v.adjoint() + cayley(ls, s) * w * w.adjoint();
  const Matrix2 ph = phi(alpha);
  return ph * core * ph * jmat();
}

// dim ker D = 1
Matrix2 s_rank_one(const ExtensionPair& pair, const TripleReduction& t, const Flux& alpha, double b1, double b2)
{
  const double s = alpha.sin_pi(), a = alpha.value();
  const Vector2 q = t.ident.col(0);  // spans ker D^perp
  double ell = (pi / (2.0 * s)) * t.block(0, 0).real();
  if ((pair.c() * q).norm() <= 1e-12 * pair.scale()) ell = 0.0;
  // |p_2|^2 = |q_1|^2 and |p_1|^2 = |q_2|^2 for p spanning ker D
  const cplx cc = b1 * b1 * std::norm(q(0)) * std::polar(1.0, -pi * a) -
                  b2 * b2 * std::norm(q(1)) * std::polar(1.0, pi * a);
  const Matrix2 p = q * q.adjoint();
  Matrix2 bpb;
  bpb << b1 * p(0, 0) * b1, b1 * p(0, 1) * b2, b2 * p(1, 0) * b1, b2 * p(1, 1) * b2;
  const Matrix2 core = Matrix2::Identity() + (2.0 * I1 * s / (cc + ell)) * bpb;
  const Matrix2 ph = phi(alpha);
  return ph * core * ph * jmat();
}

Matrix2 s_full(const ExtensionPair& pair, const Flux& alpha, double kappa, bool& saturated)
{
  if (!(kappa > 0.0) || !std::isfinite(kappa)) throw DomainError("s_matrix: kappa must be positive and finite");
  saturated = false;
  const TripleReduction t = reduce_to_triple(pair);
  if (t.dim == 0) return s_free(alpha);
  const auto [lb1, lb2] = log_b(alpha, kappa);
  if (std::max(std::abs(lb1), std::abs(lb2)) > 300.0) {
    saturated = true;
    return s_asymptotic(pair, alpha, kappa > 1.0 ? End::Infinity : End::Zero).limit;
  }
  const double b1 = std::exp(lb1), b2 = std::exp(lb2);
  if (t.dim == 2) return s_invertible(t, alpha, b1, b2);
  return s_rank_one(pair, t, alpha, b1, b2);
}

}  // namespace

double ScatteringResult::unitarity_defect() const
{
  return norm2(s.adjoint() * s - Matrix2::Identity());
}

double ab_phase(int m, const Flux& alpha)
{
  return m >= 0 ? -0.5 * pi * alpha.value() : 0.5 * pi * alpha.value();
}

cplx ab_channel_s(int m, const Flux& alpha) { return std::polar(1.0, 2.0 * ab_phase(m, alpha)); }

Matrix2 s_free(const Flux& alpha)
{
  return diag(std::polar(1.0, -pi * alpha.value()), std::polar(1.0, pi * alpha.value()));
}

Matrix2 s_tilde(const ExtensionPair& pair, const Flux& alpha, double kappa)
{
  bool sat;
  return s_full(pair, alpha, kappa, sat) - s_free(alpha);
}

Matrix2 s_tilde_raw(const ExtensionPair& pair, const Flux& alpha, double kappa)
{
  if (!(kappa > 0.0) || !std::isfinite(kappa)) throw DomainError("s_tilde_raw: kappa must be positive and finite");
  const double s = alpha.sin_pi();
  const auto [lb1, lb2] = log_b(alpha, kappa);
  const Matrix2 b = diag(std::exp(lb1), std::exp(lb2));
  const Matrix2 ph = phi(alpha);
  const Matrix2 inner = pair.d() * b * b * ph * ph + (pi / (2.0 * s)) * pair.c();
  return 2.0 * I1 * s * b * ph * inner.partialPivLu().solve(pair.d() * b * ph * jmat());
}

ScatteringResult s_matrix(const ExtensionPair& pair, const Flux& alpha, double kappa)
{
  ScatteringResult r;
  r.kappa = kappa;
  r.s = s_full(pair, alpha, kappa, r.saturated);
  return r;
}

AsymptoticClass s_asymptotic(const ExtensionPair& pair, const Flux& alpha, End end)
{
  const double a = alpha.value();
  const cplx em = std::polar(1.0, -pi * a), ep = std::polar(1.0, pi * a);
  const Matrix2 iJ = diag(I1, -I1);
  AsymptoticClass out{end, "", Matrix2::Zero()};
  if (end == End::Infinity) {
    const Kernel k = kernel_of(pair.d(), pair.scale());
    if (k.dim == 2) {
      out.label = "i";
      out.limit = diag(em, ep);
    } else if (k.dim == 0) {
      out.label = "ii";
      out.limit = diag(ep, em);
    } else if (alpha.is_half()) {
      out.label = "iii";
      const Matrix2 p = k.complement * k.complement.adjoint();
      out.limit = (2.0 * p - Matrix2::Identity()) * iJ;
    } else if (on_axis(k.vector, 0) || (a < 0.5 && !on_axis(k.vector, 1))) {
      out.label = "iv";
      out.limit = diag(em, em);
    } else {
      out.label = "v";
      out.limit = diag(ep, ep);
    }
  } else {
    const Kernel k = kernel_of(pair.c(), pair.scale());
    if (k.dim == 2) {
      out.label = "a";
      out.limit = diag(ep, em);
    } else if (k.dim == 0) {
      out.label = "b";
      out.limit = diag(em, ep);
    } else if (alpha.is_half()) {
      out.label = "c";
      const Matrix2 p = k.complement * k.complement.adjoint();
      out.limit = (Matrix2::Identity() - 2.0 * p) * iJ;
    } else if (on_axis(k.vector, 1) || (a > 0.5 && !on_axis(k.vector, 0))) {
      out.label = "d";
      out.limit = diag(em, em);
    } else {
      out.label = "e";
      out.limit = diag(ep, ep);
    }
  }
  return out;
}

std::optional<Matrix2> classify_energy_independent(const ExtensionPair& pair, const Flux& alpha)
{
  const double a = alpha.value();
  const cplx em = std::polar(1.0, -pi * a), ep = std::polar(1.0, pi * a);
  const Kernel kd = kernel_of(pair.d(), pair.scale());
  const Kernel kc = kernel_of(pair.c(), pair.scale());
  if (kd.dim == 2) return diag(em, ep);
  if (kc.dim == 2) return diag(ep, em);
  if (kd.dim == 1 && kc.dim == 1) {
    // both rank one: admissibility forces ker C = (ker D)^perp
    if (on_axis(kc.vector, 0)) return diag(ep, ep);
    if (on_axis(kc.vector, 1)) return diag(em, em);
    if (alpha.is_half()) {
      const Matrix2 p = kd.complement * kd.complement.adjoint();
      return I1 * (2.0 * p - Matrix2::Identity()) * jmat();
    }
  }
  return std::nullopt;
}

}  // namespace abflux
