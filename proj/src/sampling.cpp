#include "abflux/sampling.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

namespace abflux::sampling {

namespace {

Matrix2 ginibre(Rng& rng)
{
  std::normal_distribution<double> n(0.0, 1.0);
  Matrix2 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(i, j) = cplx(n(rng), n(rng));
  return m;
}

}  // namespace

Matrix2 random_unitary(Rng& rng)
{
  Eigen::HouseholderQR<Matrix2> qr(ginibre(rng));
  Matrix2 q = qr.householderQ();
  const Matrix2 r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < 2; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
  return q;
}

Matrix2 random_invertible(Rng& rng)
{
  for (;;) {
    Matrix2 m = ginibre(rng);
    Eigen::JacobiSVD<Matrix2> svd(m);
    if (svd.singularValues()(1) * 50.0 > svd.singularValues()(0)) return m;
  }
}

ExtensionPair random_pair(Rng& rng, int index)
{
  Matrix2 u = random_unitary(rng);
  if (index % 5 == 4) {
    // replace one eigenvalue by -1 or +1
    std::uniform_real_distribution<double> ph(0.0, 2.0 * pi);
    const Matrix2 v = random_unitary(rng);
    Matrix2 diag = Matrix2::Zero();
    diag(0, 0) = (index % 10 == 4) ? -1.0 : 1.0;
    diag(1, 1) = std::polar(1.0, ph(rng));
    u = v * diag * v.adjoint();
  }
  const ExtensionPair base = from_unitary(UnitaryParam(u));
  return base.transformed(random_invertible(rng));
}

}  // namespace abflux::sampling
