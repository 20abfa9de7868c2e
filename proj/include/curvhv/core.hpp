#pragma once

#include <cmath>
#include <limits>
#include <vector>

namespace curvhv {

// Curvature of the sphere. lambda > 0 is a sphere of radius 1/sqrt(lambda);
// lambda == 0 is the flat plane (or line).
class CurvedParams {
 public:
  CurvedParams() = default;
  explicit CurvedParams(double lambda);

  double lambda() const { return lambda_; }
  bool flat() const { return lambda_ == 0.0; }
  // Infinite for the flat case.
  double radius() const;
  // sqrt(lambda), the conversion factor between arc length and angle.
  double inverse_radius() const { return std::sqrt(lambda_); }

 private:
  double lambda_ = 0.0;
};

// Point of the gnomonic chart in polar form, r = R tan(chi).
struct GnomonicPoint {
  double r = 0.0;
  double theta = 0.0;
};

// Same point in spherical angles (chi = colatitude measured from the point of tangency).
struct SphericalPoint {
  double chi = 0.0;
  double theta = 0.0;
};

// Cartesian coordinates of the point in the embedding space, q0 along the polar axis.
struct EmbeddingPoint {
  double q1 = 0.0;
  double q2 = 0.0;
  double q0 = 0.0;
};

// chi must lie in the open hemisphere [0, pi/2); throws DomainError otherwise.
GnomonicPoint project(double chi, double theta, const CurvedParams& params);
SphericalPoint unproject(const GnomonicPoint& p, const CurvedParams& params);

EmbeddingPoint embed(const GnomonicPoint& p, const CurvedParams& params);
// Inverse of embed on the sheet q0 > 0.
GnomonicPoint unembed(const EmbeddingPoint& q, const CurvedParams& params);

// (q0^2 + q1^2 + q2^2) * lambda - 1.
double constraint_residual(const EmbeddingPoint& q, const CurvedParams& params);

// Integer power that is exact for negative bases and negative exponents.
template <class Real>
Real ipow(Real x, int p) {
  if (p < 0) return Real(1) / ipow(x, -p);
  Real result(1);
  Real base = x;
  while (p > 0) {
    if (p & 1) result *= base;
    base *= base;
    p >>= 1;
  }
  return result;
}

struct PowerTerm {
  int power = 0;
  double coeff = 0.0;
};

// Finite sum of integer power laws, sum_p c_p r^p. Used for potentials and for
// the weight functions that multiply them in expectation values.
class PowerSeries {
 public:
  PowerSeries() = default;
  PowerSeries(std::initializer_list<PowerTerm> terms);

  // Accumulates into an existing power if present; drops exact zeros.
  PowerSeries& add(int power, double coeff);
  PowerSeries& add(const PowerSeries& other);

  const std::vector<PowerTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  int min_power() const;
  int max_power() const;

  PowerSeries derivative() const;
  // Multiply every term by c * r^shift.
  PowerSeries scaled(double c, int shift = 0) const;
  PowerSeries operator*(const PowerSeries& other) const;

  template <class Real>
  Real operator()(Real r) const {
    Real sum(0);
    for (const auto& t : terms_) sum += Real(t.coeff) * ipow(r, t.power);
    return sum;
  }

 private:
  std::vector<PowerTerm> terms_;
};

// The weight 1 + lambda r^2 as a power series.
PowerSeries curvature_weight(const CurvedParams& params);

}  // namespace curvhv
