#include <doctest.h>

#include "abflux/errors.hpp"
#include "abflux/extension.hpp"
#include "abflux/sampling.hpp"

using namespace abflux;

namespace {

Matrix2 mat(cplx a, cplx b, cplx c, cplx d)
{
  Matrix2 m;
  m << a, b, c, d;
  return m;
}

const cplx I(0.0, 1.0);

}  // namespace

TEST_CASE("admissibility checks")
{
  CHECK_NOTHROW(ExtensionPair(Matrix2::Identity(), Matrix2::Zero()));
  CHECK_NOTHROW(ExtensionPair(-Matrix2::Identity(), Matrix2::Identity()));
  // CD* not Hermitian
  CHECK_THROWS_AS(ExtensionPair(mat(0, 1, 0, 0), Matrix2::Identity()), AdmissibilityError);
  // rank deficient
  CHECK_THROWS_AS(ExtensionPair(mat(1, 0, 0, 0), mat(0, 0, 0, 0)), AdmissibilityError);
  CHECK_THROWS_AS(ExtensionPair(Matrix2::Zero(), Matrix2::Zero()), AdmissibilityError);
}

TEST_CASE("U-form examples")
{
  const ExtensionPair p = from_unitary(UnitaryParam(-Matrix2::Identity()));
  CHECK((p.c() - Matrix2::Identity()).norm() < 1e-15);
  CHECK(p.d().norm() < 1e-15);
  const ExtensionPair q = from_unitary(UnitaryParam(Matrix2::Identity()));
  CHECK(q.c().norm() < 1e-15);
  CHECK((q.d() - I * Matrix2::Identity()).norm() < 1e-15);
  CHECK_THROWS_AS(UnitaryParam(2.0 * Matrix2::Identity()), AdmissibilityError);
}

TEST_CASE("to_unitary inverts from_unitary")
{
  sampling::Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    const Matrix2 u = sampling::random_unitary(rng);
    const Matrix2 back = to_unitary(from_unitary(UnitaryParam(u))).matrix();
    CHECK((back - u).norm() < 1e-12);
  }
}

TEST_CASE("to_unitary is invariant under pair equivalence")
{
  sampling::Rng rng(2);
  for (int i = 0; i < 50; ++i) {
    const ExtensionPair p = sampling::random_pair(rng, i);
    const ExtensionPair q = p.transformed(sampling::random_invertible(rng));
    CHECK((to_unitary(p).matrix() - to_unitary(q).matrix()).norm() < 1e-11);
    CHECK(pairs_equivalent(p, q));
  }
}

TEST_CASE("pair equivalence detects different extensions")
{
  const ExtensionPair a(Matrix2::Identity(), Matrix2::Zero());
  const ExtensionPair b(Matrix2::Zero(), Matrix2::Identity());
  const ExtensionPair c(-Matrix2::Identity(), Matrix2::Identity());
  CHECK_FALSE(pairs_equivalent(a, b));
  CHECK_FALSE(pairs_equivalent(a, c));
  CHECK(pairs_equivalent(c, ExtensionPair(3.0 * Matrix2::Identity(), -3.0 * Matrix2::Identity())));
}

TEST_CASE("triple reduction dimensions and blocks")
{
  const TripleReduction t0 = reduce_to_triple(ExtensionPair(Matrix2::Identity(), Matrix2::Zero()));
  CHECK(t0.dim == 0);
  CHECK(t0.projector().norm() == 0.0);
  const TripleReduction t2 = reduce_to_triple(ExtensionPair(-Matrix2::Identity(), Matrix2::Identity()));
  CHECK(t2.dim == 2);
  CHECK((t2.block + Eigen::MatrixXcd::Identity(2, 2)).norm() < 1e-15);
  // D = diag(1, 0), C = diag(-2, 1): dim ker D = 1, L = -2 on the first axis
  const TripleReduction t1 = reduce_to_triple(ExtensionPair(mat(-2, 0, 0, 1), mat(1, 0, 0, 0)));
  CHECK(t1.dim == 1);
  CHECK(std::abs(t1.block(0, 0) - cplx(-2.0)) < 1e-15);
  CHECK(std::abs(t1.ident(0, 0) - cplx(1.0)) < 1e-15);
}

TEST_CASE("triple reduction reproduces the Krein-type inverse")
{
  // (D K - C)^{-1} D = I (I* K I - L)^{-1} I* for Hermitian K with Im part
  sampling::Rng rng(4);
  for (int i = 0; i < 60; ++i) {
    const ExtensionPair p = sampling::random_pair(rng, i);
    const TripleReduction t = reduce_to_triple(p);
    Matrix2 k = sampling::random_invertible(rng);
    k = k + k.adjoint() + I * 3.0 * Matrix2::Identity();
    const Matrix2 lhs = (p.d() * k - p.c()).inverse() * p.d();
    Matrix2 rhs = Matrix2::Zero();
    if (t.dim > 0) {
      const Eigen::MatrixXcd inner = t.ident.adjoint() * k * t.ident - t.block;
      rhs = t.ident * inner.inverse() * t.ident.adjoint();
    }
    CHECK((lhs - rhs).norm() < 1e-10 * std::max(1.0, lhs.norm()));
    if (t.dim > 0) CHECK((t.block - t.block.adjoint()).norm() < 1e-12 * std::max(1.0, t.block.norm()));
  }
}

TEST_CASE("negative count")
{
  CHECK(negative_count(ExtensionPair(-Matrix2::Identity(), Matrix2::Identity())) == 2);
  CHECK(negative_count(ExtensionPair(Matrix2::Identity(), Matrix2::Identity())) == 0);
  CHECK(negative_count(ExtensionPair(Matrix2::Identity(), Matrix2::Zero())) == 0);
  CHECK(negative_count(ExtensionPair(mat(-1, 0, 0, 1), Matrix2::Identity())) == 1);
}

TEST_CASE("negative count is invariant under positive-definite rescaling")
{
  sampling::Rng rng(6);
  for (int i = 0; i < 50; ++i) {
    const ExtensionPair p = sampling::random_pair(rng, i);
    // L (C, D) with L positive definite preserves the inertia of C D*
    Matrix2 l = sampling::random_invertible(rng);
    l = l * l.adjoint();
    CHECK(negative_count(p) == negative_count(ExtensionPair(l * p.c(), l * p.d())));
    // congruence also preserves it
    const Matrix2 g = sampling::random_invertible(rng);
    CHECK(negative_count(p) == negative_count(p.transformed(g)));
  }
}

TEST_CASE("kernel phase convention")
{
  const Kernel k = kernel_of(mat(0, 0, 0, I), 1.0);
  CHECK(k.dim == 1);
  CHECK(std::abs(k.vector(0) - cplx(1.0)) < 1e-15);
  const Vector2 v = fix_phase(Vector2(cplx(0.0, 0.6), cplx(0.8, 0.0)));
  CHECK(v(0).imag() == 0.0);
  CHECK(v(0).real() > 0.0);
}
