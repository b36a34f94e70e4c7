#include "abflux/spectrum.hpp"
#include "abflux/errors.hpp"
#include "abflux/weyl.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <functional>

namespace abflux {

namespace {

// Eigenvalues (lo, hi) of the real symmetric-like Hermitian 2x2 [[p, q], [q*, r]].
std::pair<double, double> herm_eig(double p, double r, cplx q)
{
  const double mean = 0.5 * (p + r);
  const double rad = std::hypot(0.5 * (p - r), std::abs(q));
  const double det = p * r - std::norm(q);
  double lo = mean - rad, hi = mean + rad;
  if (mean > 0.0 && hi != 0.0)
    lo = det / hi;
  else if (mean < 0.0 && lo != 0.0)
    hi = det / lo;
  return {lo, hi};
}

// Channel entries of M at z = -e^t (real, negative).
std::pair<double, double> weyl_negative(const Flux& alpha, double t)
{
  const Matrix2 m = weyl_m(alpha, SpectralPoint::off_axis(-std::exp(t)));
  return {m(0, 0).real(), m(1, 1).real()};
}

// Root of a decreasing function g on [lo, hi] with g(lo) > 0 > g(hi), by bisection in t.
double bisect(const std::function<double(double)>& g, double lo, double hi)
{
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo) + std::abs(hi)); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

// Find the sign change of g on t in [-ln B, ln B], growing B geometrically.
double bracket_and_solve(const std::function<double(double)>& g)
{
  double lb = std::log(1e4);
  while (true) {
    if (g(-lb) > 0.0 && g(lb) < 0.0) return bisect(g, -lb, lb);
    lb *= 2.0;
    if (lb > std::log(1e300)) throw SearchError("bound state bracket exceeded [-1e300, -1e-300]");
  }
}

Vector2 null_vector(const Matrix2& m)
{
  Eigen::JacobiSVD<Matrix2> svd(m, Eigen::ComputeFullV);
  return fix_phase(svd.matrixV().col(1));
}

}  // namespace

cplx eigenvalue_determinant(const ExtensionPair& pair, const Flux& alpha, double z)
{
  if (!(z < 0.0)) throw DomainError("eigenvalue_determinant: z must be negative");
  const Matrix2 m = weyl_m(alpha, SpectralPoint::off_axis(z));
  return (pair.d() * m - pair.c()).determinant();
}

std::vector<BoundState> find_negative_eigenvalues(const ExtensionPair& pair, const Flux& alpha)
{
  const TripleReduction t = reduce_to_triple(pair);
  std::vector<double> roots;
  if (t.dim == 2) {
    const Eigen::MatrixXcd& a = t.block;
    const double cut = 1e-12 * a.norm();
    const auto [e_lo, e_hi] = herm_eig(-a(0, 0).real(), -a(1, 1).real(), -a(0, 1));
    // branch j of eig(M(z) - A) starts at eig_j(-A) and decreases in t
    for (int branch = 0; branch < 2; ++branch) {
      const double start = branch == 0 ? e_lo : e_hi;
      if (!(start > cut)) continue;
      auto g = [&, branch](double tt) {
        const auto [m0, m1] = weyl_negative(alpha, tt);
        const auto ev = herm_eig(m0 - a(0, 0).real(), m1 - a(1, 1).real(), -a(0, 1));
        return branch == 0 ? ev.first : ev.second;
      };
      roots.push_back(-std::exp(bracket_and_solve(g)));
    }
  } else if (t.dim == 1) {
    const double l = t.block(0, 0).real();
    const double w0 = std::norm(t.ident(0, 0)), w1 = std::norm(t.ident(1, 0));
    if (l < -1e-12 * pair.scale() / std::max(pair.d().norm(), 1e-300)) {
      auto g = [&](double tt) {
        const auto [m0, m1] = weyl_negative(alpha, tt);
        return w0 * m0 + w1 * m1 - l;
      };
      roots.push_back(-std::exp(bracket_and_solve(g)));
    }
  }
  std::sort(roots.begin(), roots.end());

  std::vector<BoundState> out;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const double z = roots[i];
    if (!out.empty() && std::abs(z - out.back().z) <= 1e-10 * std::abs(z)) {
      BoundState& b = out.back();
      b.multiplicity = 2;
      b.basis = {Vector2(1.0, 0.0), Vector2(0.0, 1.0)};
      continue;
    }
    BoundState b;
    b.z = z;
    const Matrix2 m = weyl_m(alpha, SpectralPoint::off_axis(z));
    b.basis = {null_vector(pair.d() * m - pair.c())};
    if (!out.empty() && std::abs(z - out.back().z) <= 1e-8 * std::abs(z)) {
      b.proximity_warning = true;
      out.back().proximity_warning = true;
    }
    out.push_back(b);
  }
  return out;
}

Vector2 eigenfunction_profile(const BoundState& b, const Flux& alpha, double r,
                              const std::optional<Vector2>& xi)
{
  Vector2 v = b.basis.empty() ? Vector2::Zero() : b.basis.front();
  if (xi) {
    v = *xi;
    Vector2 resid = v;
    for (const Vector2& e : b.basis) resid -= e.dot(v) * e;
    if (resid.norm() > 1e-8 * std::max(1.0, v.norm()))
      throw DomainError("eigenfunction_profile: xi is not in the eigenspace");
  }
  return gamma_field_profile(alpha, SpectralPoint::off_axis(b.z), v, r);
}

}  // namespace abflux
