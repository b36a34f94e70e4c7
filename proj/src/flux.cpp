#include "abflux/flux.hpp"
#include "abflux/errors.hpp"

#include <cmath>
#include <string>

namespace abflux {

Flux::Flux(double alpha) : alpha_(alpha)
{
  if (!(alpha > margin && alpha < 1.0 - margin))
    throw DomainError("flux alpha must lie in (0,1), got " + std::to_string(alpha));
}

double Flux::sin_pi() const
{
  return alpha_ <= 0.5 ? std::sin(M_PI * alpha_) : std::sin(M_PI * (1.0 - alpha_));
}

double Flux::cos_pi() const
{
  // cos(pi a) = sin(pi (1/2 - a)); exact zero at a = 1/2
  return std::sin(M_PI * (0.5 - alpha_));
}

}  // namespace abflux
