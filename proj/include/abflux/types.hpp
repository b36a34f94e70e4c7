#pragma once

#include <complex>

#include <Eigen/Dense>

namespace abflux {

using cplx = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Vector2 = Eigen::Vector2cd;

inline constexpr double pi = 3.14159265358979323846264338327950288;

// Operator 2-norm of a 2x2 matrix.
double norm2(const Matrix2& m);

}  // namespace abflux
