#include "abflux/extension.hpp"
#include "abflux/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <sstream>

namespace abflux {

namespace {

Eigen::Matrix<cplx, 2, 4> stack(const Matrix2& c, const Matrix2& d)
{
  Eigen::Matrix<cplx, 2, 4> cd;
  cd << c, d;
  return cd;
}

}  // namespace

ExtensionPair::ExtensionPair(const Matrix2& c, const Matrix2& d) : c_(c), d_(d)
{
  if (!c.allFinite() || !d.allFinite()) throw AdmissibilityError("pair contains non-finite entries");
  const Matrix2 cd = c * d.adjoint();
  const double asym = norm2(cd - cd.adjoint());
  const double nc = norm2(c), nd = norm2(d);
  if (asym > hermitian_tol * (1.0 + nc * nd)) {
    std::ostringstream os;
    os << "CD* is not Hermitian (defect " << asym << ")";
    throw AdmissibilityError(os.str());
  }
  Eigen::JacobiSVD<Eigen::Matrix<cplx, 2, 4>> svd(stack(c, d));
  const auto sv = svd.singularValues();
  scale_ = sv(0);
  if (!(sv(0) > 0.0) || sv(1) < rank_tol * sv(0)) throw AdmissibilityError("rank (C|D) < 2");
}

ExtensionPair ExtensionPair::transformed(const Matrix2& l) const
{
  return ExtensionPair(l * c_, l * d_);
}

UnitaryParam::UnitaryParam(const Matrix2& u) : u_(u)
{
  if (!u.allFinite() || norm2(u.adjoint() * u - Matrix2::Identity()) > tol)
    throw AdmissibilityError("matrix is not unitary");
}

Vector2 fix_phase(Vector2 v)
{
  for (int i = 0; i < 2; ++i) {
    if (std::abs(v(i)) > 1e-12) {
      v *= std::conj(v(i)) / std::abs(v(i));
      v(i) = std::abs(v(i));
      break;
    }
  }
  return v;
}

Kernel kernel_of(const Matrix2& m, double scale, double cutoff)
{
  Kernel k;
  Eigen::JacobiSVD<Matrix2> svd(m, Eigen::ComputeFullV);
  const auto sv = svd.singularValues();
  const double thr = cutoff * scale;
  k.dim = (sv(0) <= thr) ? 2 : (sv(1) <= thr ? 1 : 0);
  if (k.dim == 1) {
    k.vector = fix_phase(svd.matrixV().col(1));
    k.complement = fix_phase(svd.matrixV().col(0));
  }
  return k;
}

Matrix2 TripleReduction::projector() const
{
  if (dim == 0) return Matrix2::Zero();
  return ident * ident.adjoint();
}

ExtensionPair from_unitary(const UnitaryParam& u)
{
  const Matrix2 one = Matrix2::Identity();
  const Matrix2& m = u.matrix();
  return ExtensionPair(0.5 * (one - m), cplx(0.0, 0.5) * (one + m));
}

UnitaryParam to_unitary(const ExtensionPair& p)
{
  // U = -(C - iD)^{-1}(C + iD); C - iD is invertible for every admissible pair
  const cplx i(0.0, 1.0);
  const Matrix2 minus = p.c() - i * p.d();
  const Matrix2 u = -minus.partialPivLu().solve(p.c() + i * p.d());
  // polish to exact unitarity: U (U*U)^{-1/2}
  Eigen::JacobiSVD<Matrix2> svd(u, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return UnitaryParam(svd.matrixU() * svd.matrixV().adjoint());
}

bool pairs_equivalent(const ExtensionPair& p, const ExtensionPair& q, double tol)
{
  // equal row spaces of (C|D): stacking must not raise the rank
  Eigen::Matrix<cplx, 4, 4> m;
  m << stack(p.c(), p.d()) / p.scale(), stack(q.c(), q.d()) / q.scale();
  Eigen::JacobiSVD<Eigen::Matrix<cplx, 4, 4>> svd(m);
  return svd.singularValues()(2) <= tol * svd.singularValues()(0);
}

TripleReduction reduce_to_triple(const ExtensionPair& p)
{
  TripleReduction t;
  const Kernel k = kernel_of(p.d(), p.scale());
  t.dim = 2 - k.dim;
  if (t.dim == 2) {
    t.ident = Eigen::MatrixXcd::Identity(2, 2);
    Matrix2 l = p.d().partialPivLu().solve(p.c());
    t.block = 0.5 * (l + l.adjoint());
  } else if (t.dim == 1) {
    t.ident = k.complement;
    const Vector2 di = p.d() * k.complement;
    const Vector2 ci = p.c() * k.complement;
    const cplx l = di.dot(ci) / di.squaredNorm();  // (DI)^+ CI
    t.block = Eigen::MatrixXcd::Constant(1, 1, cplx(l.real(), 0.0));
  } else {
    t.ident = Eigen::MatrixXcd(2, 0);
    t.block = Eigen::MatrixXcd(0, 0);
  }
  return t;
}

int negative_count(const ExtensionPair& p)
{
  Matrix2 h = p.c() * p.d().adjoint();
  h = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix2> es(h, Eigen::EigenvaluesOnly);
  const double cut = 1e-12 * p.scale() * p.scale();
  int n = 0;
  for (int i = 0; i < 2; ++i)
    if (es.eigenvalues()(i) < -cut) ++n;
  return n;
}

}  // namespace abflux
