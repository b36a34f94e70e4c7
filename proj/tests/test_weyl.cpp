#include <doctest.h>

#include <cmath>
#include <random>

#include "abflux/errors.hpp"
#include "abflux/sampling.hpp"
#include "abflux/specfun.hpp"
#include "abflux/weyl.hpp"

using namespace abflux;

namespace {
const cplx I(0.0, 1.0);
}

TEST_CASE("spectral point branches")
{
  const SpectralPoint p = SpectralPoint::off_axis(-4.0);
  CHECK(std::abs(p.k() - cplx(0.0, 2.0)) < 1e-15);
  const SpectralPoint q = SpectralPoint::off_axis(cplx(1.0, 1e-9));
  CHECK(q.k().imag() > 0.0);
  CHECK(q.k().real() > 0.0);
  const SpectralPoint r = SpectralPoint::off_axis(cplx(1.0, -1e-9));
  CHECK(r.k().real() < 0.0);
  CHECK_THROWS_AS(SpectralPoint::off_axis(2.0), DomainError);
  CHECK_THROWS_AS(SpectralPoint::boundary(-1.0, Side::Plus), DomainError);
  CHECK(std::abs(SpectralPoint::boundary(4.0, Side::Minus).k() - cplx(-2.0)) < 1e-15);
}

TEST_CASE("coefficients reproduce the small-r expansion of the Hankel function")
{
  const SpectralPoint p = SpectralPoint::off_axis(cplx(-0.3, 1.1));
  for (double nu : {0.2, 0.5, 0.8}) {
    const ChannelCoefficients c = coeff_ab(nu, p);
    const double r = 1e-5;
    const cplx h = specfun::hankel1(nu, p.k() * r);
    const cplx approx = c.a * std::pow(r, -nu) + c.b * std::pow(r, nu);
    // next correction is O(r^{2 - nu})
    CHECK(std::abs(h - approx) < 1e-8 * std::abs(h));
  }
}

TEST_CASE("closed-form Weyl function equals 2 nu b / a")
{
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (double a : {0.1, 0.3, 0.5, 0.77}) {
    const Flux f(a);
    for (int i = 0; i < 20; ++i) {
      const SpectralPoint p = SpectralPoint::off_axis(cplx(u(rng), u(rng)));
      const Matrix2 m = weyl_m(f, p);
      for (int ch = 0; ch < 2; ++ch) {
        const double nu = f.order(ch);
        const ChannelCoefficients c = coeff_ab(nu, p);
        CHECK(std::abs(m(ch, ch) - 2.0 * nu * c.b / c.a) < 1e-12 * std::abs(m(ch, ch)));
      }
      CHECK(m(0, 1) == cplx(0.0));
    }
  }
}

TEST_CASE("Weyl function on the negative axis")
{
  const Matrix2 m = weyl_m(Flux(0.5), SpectralPoint::off_axis(-9.0));
  CHECK(std::abs(m(0, 0) - cplx(-3.0)) < 1e-13);
  CHECK(std::abs(m(1, 1) - cplx(-3.0)) < 1e-13);
  const Flux f(0.3);
  const Matrix2 n = weyl_m(f, SpectralPoint::off_axis(-2.0));
  const double expect = -(2.0 / pi) * std::sin(0.3 * pi) * std::pow(std::tgamma(0.7), 2) * std::pow(4.0, -0.3) * std::pow(2.0, 0.3);
  CHECK(std::abs(n(0, 0).imag()) < 1e-15);
  CHECK(std::abs(n(0, 0).real() - expect) < 1e-13);
}

TEST_CASE("Weyl function is a Nevanlinna function")
{
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> u(-10.0, 10.0), v(1e-3, 10.0);
  for (int i = 0; i < 100; ++i) {
    const cplx z(u(rng), v(rng));
    const Matrix2 m = weyl_m(Flux(0.37), SpectralPoint::off_axis(z));
    CHECK(m(0, 0).imag() > 0.0);
    CHECK(m(1, 1).imag() > 0.0);
    const Matrix2 mc = weyl_m(Flux(0.37), SpectralPoint::off_axis(std::conj(z)));
    CHECK((mc - m.adjoint()).norm() < 1e-13 * m.norm());
  }
}

TEST_CASE("boundary values")
{
  const Flux f(0.3);
  const Matrix2 mp = weyl_m(f, SpectralPoint::boundary(1.0, Side::Plus));
  const Matrix2 mm = weyl_m(f, SpectralPoint::boundary(1.0, Side::Minus));
  CHECK((mp - mm.adjoint()).norm() < 1e-15);
  // plus side carries e^{-i pi alpha}
  const double mag = (2.0 / pi) * std::sin(0.3 * pi) * std::pow(std::tgamma(0.7), 2) * std::pow(4.0, -0.3);
  CHECK(std::abs(mp(0, 0) + mag * std::polar(1.0, -0.3 * pi)) < 1e-14);
  const Matrix2 near = weyl_m(f, SpectralPoint::off_axis(cplx(1.0, 1e-9)));
  CHECK((near - mp).norm() < 1e-8);
  CHECK(weyl_m(f, SpectralPoint::boundary(1e-30, Side::Plus)).norm() < 1e-8);
}

TEST_CASE("gamma field profile")
{
  const Flux f(0.4);
  const SpectralPoint p = SpectralPoint::off_axis(cplx(-1.0, 0.5));
  const Vector2 xi(cplx(1.0, 0.5), cplx(-0.3, 2.0));
  // gamma(z) xi ~ xi_0 r^{-alpha} near the origin in channel 0
  const double r = 1e-6;
  const Vector2 g = gamma_field_profile(f, p, xi, r);
  CHECK(std::abs(g(0) / (xi(0) * std::pow(r, -0.4)) - 1.0) < 1e-4);
  CHECK(std::abs(g(1) / (xi(1) * std::pow(r, -0.6)) - 1.0) < 1e-4);
  CHECK(gamma_field_profile(f, p, Vector2::Zero(), 1.0).norm() == 0.0);
  // exponential decay for z < 0
  const SpectralPoint neg = SpectralPoint::off_axis(-4.0);
  const Vector2 e(1.0, 0.0);
  const double slope = std::log(std::abs(gamma_field_profile(f, neg, e, 12.0)(0)) /
                                std::abs(gamma_field_profile(f, neg, e, 10.0)(0))) / 2.0;
  CHECK(std::abs(slope + 2.0 + 0.5 * std::log(1.2) / 2.0) < 1e-2);
}

TEST_CASE("Krein matrix forms agree")
{
  sampling::Rng rng(12);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 50; ++i) {
    const ExtensionPair p = sampling::random_pair(rng, i);
    const Flux f(0.25 + 0.01 * i);
    const SpectralPoint z = SpectralPoint::off_axis(cplx(u(rng), u(rng)));
    const Matrix2 k1 = krein_matrix(p, f, z), k2 = krein_matrix_adjoint_form(p, f, z);
    CHECK((k1 - k2).norm() < 1e-11 * std::max(1.0, k1.norm()));
  }
}

TEST_CASE("Krein matrix at the unperturbed extension and at eigenvalues")
{
  const Flux f(0.5);
  // D = 0: the Krein term vanishes
  CHECK(krein_matrix(ExtensionPair(Matrix2::Identity(), Matrix2::Zero()), f, SpectralPoint::off_axis(cplx(0, 1))).norm() == 0.0);
  // (-1, 1) at alpha = 1/2 has its double eigenvalue at z = -1
  const ExtensionPair p(-Matrix2::Identity(), Matrix2::Identity());
  CHECK_THROWS_AS(krein_matrix(p, f, SpectralPoint::off_axis(-1.0)), EigenvalueHit);
  CHECK_NOTHROW(krein_matrix(p, f, SpectralPoint::off_axis(-1.5)));
}

TEST_CASE("channel coefficients across the cut and on the negative axis")
{
  for (double nu : {0.3, 0.6}) {
    const cplx am = coeff_ab(nu, SpectralPoint::boundary(2.0, Side::Minus)).a;
    const cplx ap = coeff_ab(nu, SpectralPoint::boundary(2.0, Side::Plus)).a;
    CHECK(std::abs(am / ap - std::polar(1.0, -pi * nu)) < 1e-14);
    const ChannelCoefficients c = coeff_ab(nu, SpectralPoint::off_axis(-3.0));
    CHECK(std::abs((c.b / c.a).imag()) < 1e-15 * std::abs(c.b / c.a));
  }
}

TEST_CASE("Weyl function at alpha = 1/2, z = -1 and its conjugate boundary values")
{
  const Matrix2 m = weyl_m(Flux(0.5), SpectralPoint::off_axis(-1.0));
  CHECK((m + Matrix2::Identity()).norm() < 1e-15);
  const Flux f(0.3);
  CHECK((weyl_m(f, SpectralPoint::boundary(2.0, Side::Plus)) - weyl_m(f, SpectralPoint::boundary(2.0, Side::Minus)).adjoint()).norm() < 1e-15);
  CHECK(weyl_m(f, SpectralPoint::off_axis(-1e-24)).norm() < 1e-6);
}

TEST_CASE("Krein matrix for (-1, 1) at alpha = 1/2, z = -4")
{
  const ExtensionPair p(-Matrix2::Identity(), Matrix2::Identity());
  CHECK((krein_matrix(p, Flux(0.5), SpectralPoint::off_axis(-4.0)) - Matrix2::Identity()).norm() < 1e-14);
}

TEST_CASE("Krein adjoint identity at M(i)")
{
  sampling::Rng rng(13);
  const Matrix2 m = weyl_m(Flux(0.3), SpectralPoint::off_axis(cplx(0.0, 1.0)));
  for (int i = 0; i < 20; ++i) {
    const ExtensionPair p = sampling::random_pair(rng, i);
    const Matrix2 lhs = ((p.d() * m - p.c()).inverse() * p.d()).adjoint();
    const Matrix2 rhs = (p.d() * m.adjoint() - p.c()).inverse() * p.d();
    CHECK((lhs - rhs).norm() < 1e-12 * std::max(1.0, lhs.norm()));
  }
}
