#pragma once

namespace abflux {

// Flux parameter alpha in (0,1).  Values within 1e-9 of an endpoint are rejected.
class Flux {
public:
  static constexpr double margin = 1e-9;

  explicit Flux(double alpha);

  double value() const { return alpha_; }
  double conjugate() const { return 1.0 - alpha_; }
  bool is_half() const { return alpha_ == 0.5; }
  // Channel order: 0 -> alpha, 1 -> 1-alpha.
  double order(int channel) const { return channel == 0 ? alpha_ : 1.0 - alpha_; }
  // sin(pi alpha) and cos(pi alpha); cos is exactly zero at alpha = 1/2.
  double sin_pi() const;
  double cos_pi() const;

private:
  double alpha_;
};

}  // namespace abflux
