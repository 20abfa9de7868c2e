#include "curvhv/jet.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "curvhv/error.hpp"

namespace curvhv {

Jet::Jet(double value, int order) {
  if (order < 0) throw ConfigError("jet order must be >= 0");
  c_.assign(order + 1, 0.0);
  c_[0] = value;
}

Jet Jet::variable(double x0, int order) {
  Jet j(x0, order);
  if (order >= 1) j.c_[1] = 1.0;
  return j;
}

Jet Jet::from_coeffs(std::vector<double> coeffs) {
  if (coeffs.empty()) throw ConfigError("jet needs at least one coefficient");
  Jet j;
  j.c_ = std::move(coeffs);
  return j;
}

double Jet::derivative_value(int k) const {
  if (k < 0 || k > order()) {
    std::ostringstream msg;
    msg << "derivative of order " << k << " requested from a jet of order " << order();
    throw TruncationError(msg.str());
  }
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f * c_[k];
}

Jet Jet::derivative() const {
  if (order() < 1) throw TruncationError("cannot differentiate a jet of order 0");
  Jet d;
  d.c_.resize(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d.c_[k - 1] = static_cast<double>(k) * c_[k];
  return d;
}

Jet Jet::truncated(int order) const {
  if (order > this->order()) throw TruncationError("cannot raise the order of a jet");
  Jet t;
  t.c_.assign(c_.begin(), c_.begin() + order + 1);
  return t;
}

bool Jet::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](double v) { return v == 0.0; });
}

double Jet::max_abs() const {
  double m = 0.0;
  for (double v : c_) m = std::max(m, std::abs(v));
  return m;
}

Jet& Jet::operator+=(const Jet& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Jet& Jet::operator*=(const Jet& o) {
  const std::size_t n = std::min(c_.size(), o.c_.size());
  std::vector<double> r(n, 0.0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i <= k; ++i) r[k] += c_[i] * o.c_[k - i];
  c_ = std::move(r);
  return *this;
}

Jet& Jet::operator/=(const Jet& o) {
  if (o.c_.empty() || o.c_[0] == 0.0) throw NumericalError("jet division by a jet with zero constant term");
  const std::size_t n = std::min(c_.size(), o.c_.size());
  std::vector<double> q(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    double s = c_[k];
    for (std::size_t i = 1; i <= k; ++i) s -= o.c_[i] * q[k - i];
    q[k] = s / o.c_[0];
  }
  c_ = std::move(q);
  return *this;
}

Jet& Jet::operator+=(double s) {
  if (!c_.empty()) c_[0] += s;
  return *this;
}

Jet& Jet::operator-=(double s) {
  if (!c_.empty()) c_[0] -= s;
  return *this;
}

Jet& Jet::operator*=(double s) {
  for (double& v : c_) v *= s;
  return *this;
}

Jet& Jet::operator/=(double s) {
  if (s == 0.0) throw NumericalError("jet division by zero");
  for (double& v : c_) v /= s;
  return *this;
}

Jet Jet::operator-() const {
  Jet r = *this;
  for (double& v : r.c_) v = -v;
  return r;
}

Jet operator+(Jet a, const Jet& b) { return a += b; }
Jet operator-(Jet a, const Jet& b) { return a -= b; }
Jet operator*(Jet a, const Jet& b) { return a *= b; }
Jet operator/(Jet a, const Jet& b) { return a /= b; }
Jet operator+(Jet a, double s) { return a += s; }
Jet operator-(Jet a, double s) { return a -= s; }
Jet operator*(Jet a, double s) { return a *= s; }
Jet operator/(Jet a, double s) { return a /= s; }
Jet operator+(double s, Jet a) { return a += s; }
Jet operator-(double s, const Jet& a) { return -a + s; }
Jet operator*(double s, Jet a) { return a *= s; }
Jet operator/(double s, const Jet& a) { return Jet(s, a.order()) / a; }

Jet sqrt(const Jet& a) {
  const auto& c = a.coeffs();
  if (c.empty() || !(c[0] > 0.0)) throw DomainError("jet square root needs a positive constant term");
  // s^2 = a, solved coefficient by coefficient.
  std::vector<double> s(c.size(), 0.0);
  s[0] = std::sqrt(c[0]);
  for (std::size_t k = 1; k < c.size(); ++k) {
    double acc = c[k];
    for (std::size_t i = 1; i < k; ++i) acc -= s[i] * s[k - i];
    s[k] = acc / (2.0 * s[0]);
  }
  return Jet::from_coeffs(std::move(s));
}

std::ostream& operator<<(std::ostream& os, const Jet& a) {
  os << '[';
  for (int k = 0; k <= a.order(); ++k) os << (k ? ", " : "") << a[k];
  return os << ']';
}

}  // namespace curvhv
