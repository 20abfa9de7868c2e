#pragma once

#include <iosfwd>
#include <vector>

namespace curvhv {

// Truncated Taylor series c_0 + c_1 t + ... + c_J t^J of a function of one
// seed parameter around its current value. Coefficients are normalized
// (c_k = f^(k)/k!). Mixed-order arithmetic truncates to the smaller order.
class Jet {
 public:
  Jet() = default;
  // Constant jet of the given order.
  Jet(double value, int order);

  static Jet constant(double value, int order) { return Jet(value, order); }
  // The seed parameter itself: value x0, unit first coefficient.
  static Jet variable(double x0, int order);
  static Jet from_coeffs(std::vector<double> coeffs);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  double value() const { return c_.empty() ? 0.0 : c_[0]; }
  double operator[](int k) const { return c_.at(k); }
  const std::vector<double>& coeffs() const { return c_; }

  // k-th derivative at the expansion point, k! c_k.
  double derivative_value(int k) const;
  // d/dt, one order lower. Throws TruncationError on an order-0 jet.
  Jet derivative() const;
  Jet truncated(int order) const;

  bool is_zero() const;
  double max_abs() const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const Jet& o);
  Jet& operator/=(const Jet& o);
  Jet& operator+=(double s);
  Jet& operator-=(double s);
  Jet& operator*=(double s);
  Jet& operator/=(double s);
  Jet operator-() const;

 private:
  std::vector<double> c_;
};

Jet operator+(Jet a, const Jet& b);
Jet operator-(Jet a, const Jet& b);
Jet operator*(Jet a, const Jet& b);
Jet operator/(Jet a, const Jet& b);
Jet operator+(Jet a, double s);
Jet operator-(Jet a, double s);
Jet operator*(Jet a, double s);
Jet operator/(Jet a, double s);
Jet operator+(double s, Jet a);
Jet operator-(double s, const Jet& a);
Jet operator*(double s, Jet a);
Jet operator/(double s, const Jet& a);

// Requires a positive constant term.
Jet sqrt(const Jet& a);

std::ostream& operator<<(std::ostream& os, const Jet& a);

}  // namespace curvhv
