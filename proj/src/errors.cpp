#include "abflux/errors.hpp"
#include "abflux/types.hpp"

#include <Eigen/SVD>

namespace abflux {

double norm2(const Matrix2& m)
{
  Eigen::JacobiSVD<Matrix2> svd(m);
  return svd.singularValues()(0);
}

}  // namespace abflux
