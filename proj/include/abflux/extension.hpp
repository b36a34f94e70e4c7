#pragma once

#include "abflux/types.hpp"

namespace abflux {

// Admissible boundary pair (C,D): CD* Hermitian and rank (C|D) = 2.
class ExtensionPair {
public:
  static constexpr double hermitian_tol = 1e-10;
  static constexpr double rank_tol = 1e-10;

  // Throws AdmissibilityError if (C,D) fails either condition.
  ExtensionPair(const Matrix2& c, const Matrix2& d);

  const Matrix2& c() const { return c_; }
  const Matrix2& d() const { return d_; }
  // Largest singular value of the 2x4 block (C|D).
  double scale() const { return scale_; }

  // Left multiplication by an invertible L gives an equivalent pair.
  ExtensionPair transformed(const Matrix2& l) const;

private:
  Matrix2 c_, d_;
  double scale_;
};

// Unitary parameter U of the extension; validated on construction.
class UnitaryParam {
public:
  static constexpr double tol = 1e-10;
  explicit UnitaryParam(const Matrix2& u);
  const Matrix2& matrix() const { return u_; }

private:
  Matrix2 u_;
};

// Kernel of a 2x2 matrix with singular values below cutoff * scale.
struct Kernel {
  int dim = 0;
  Vector2 vector = Vector2::Zero();  // unit spanning vector when dim == 1
  Vector2 complement = Vector2::Zero();  // unit vector spanning the orthogonal complement
};

Kernel kernel_of(const Matrix2& m, double scale, double cutoff = 1e-12);

// Fix the phase so the first entry with modulus > 1e-12 is real positive.
Vector2 fix_phase(Vector2 v);

// Boundary triple reduction: identification I (2 x d) and self-adjoint block
// L (d x d) with (DK - C)^{-1} D = I (I* K I - L)^{-1} I*.
struct TripleReduction {
  int dim = 0;                // d = 2 - dim ker D
  Eigen::MatrixXcd ident;     // 2 x d, orthonormal columns
  Eigen::MatrixXcd block;     // d x d, Hermitian
  Matrix2 projector() const;  // I I*
};

ExtensionPair from_unitary(const UnitaryParam& u);
UnitaryParam to_unitary(const ExtensionPair& p);
bool pairs_equivalent(const ExtensionPair& p, const ExtensionPair& q, double tol = 1e-9);
TripleReduction reduce_to_triple(const ExtensionPair& p);
// Number of strictly negative eigenvalues of CD*.
int negative_count(const ExtensionPair& p);

}  // namespace abflux
