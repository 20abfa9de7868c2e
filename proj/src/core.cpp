#include "curvhv/core.hpp"

#include <algorithm>
#include <numbers>
#include <sstream>

#include "curvhv/error.hpp"

namespace curvhv {

CurvedParams::CurvedParams(double lambda) : lambda_(lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    std::ostringstream msg;
    msg << "curvature must be finite and non-negative, got " << lambda;
    throw ConfigError(msg.str());
  }
}

double CurvedParams::radius() const {
  return flat() ? std::numeric_limits<double>::infinity() : 1.0 / std::sqrt(lambda_);
}

GnomonicPoint project(double chi, double theta, const CurvedParams& params) {
  if (params.flat()) throw DomainError("gnomonic projection needs lambda > 0");
  if (!(chi >= 0.0 && chi < std::numbers::pi / 2)) {
    std::ostringstream msg;
    msg << "colatitude " << chi << " outside the hemisphere covered by the gnomonic chart";
    throw DomainError(msg.str());
  }
  return {std::tan(chi) * params.radius(), theta};
}

SphericalPoint unproject(const GnomonicPoint& p, const CurvedParams& params) {
  if (params.flat()) throw DomainError("gnomonic projection needs lambda > 0");
  if (!(p.r >= 0.0) || !std::isfinite(p.r)) throw DomainError("projected radius must be finite and >= 0");
  return {std::atan(p.r * params.inverse_radius()), p.theta};
}

EmbeddingPoint embed(const GnomonicPoint& p, const CurvedParams& params) {
  if (params.flat()) throw DomainError("embedding needs lambda > 0");
  const double s = 1.0 / std::sqrt(1.0 + params.lambda() * p.r * p.r);
  return {p.r * std::cos(p.theta) * s, p.r * std::sin(p.theta) * s, params.radius() * s};
}

GnomonicPoint unembed(const EmbeddingPoint& q, const CurvedParams& params) {
  if (params.flat()) throw DomainError("embedding needs lambda > 0");
  if (!(q.q0 > 0.0)) throw DomainError("point is not on the sheet q0 > 0 covered by the chart");
  const double scale = params.radius() / q.q0;
  const double x1 = q.q1 * scale;
  const double x2 = q.q2 * scale;
  return {std::hypot(x1, x2), std::atan2(x2, x1)};
}

double constraint_residual(const EmbeddingPoint& q, const CurvedParams& params) {
  return (q.q0 * q.q0 + q.q1 * q.q1 + q.q2 * q.q2) * params.lambda() - 1.0;
}

PowerSeries::PowerSeries(std::initializer_list<PowerTerm> terms) {
  for (const auto& t : terms) add(t.power, t.coeff);
}

PowerSeries& PowerSeries::add(int power, double coeff) {
  auto it = std::find_if(terms_.begin(), terms_.end(), [&](const PowerTerm& t) { return t.power == power; });
  if (it != terms_.end()) {
    it->coeff += coeff;
    if (it->coeff == 0.0) terms_.erase(it);
  } else if (coeff != 0.0) {
    terms_.push_back({power, coeff});
    std::sort(terms_.begin(), terms_.end(), [](const PowerTerm& a, const PowerTerm& b) { return a.power < b.power; });
  }
  return *this;
}

PowerSeries& PowerSeries::add(const PowerSeries& other) {
  for (const auto& t : other.terms_) add(t.power, t.coeff);
  return *this;
}

int PowerSeries::min_power() const { return terms_.empty() ? 0 : terms_.front().power; }
int PowerSeries::max_power() const { return terms_.empty() ? 0 : terms_.back().power; }

PowerSeries PowerSeries::derivative() const {
  PowerSeries d;
  for (const auto& t : terms_) d.add(t.power - 1, t.coeff * t.power);
  return d;
}

PowerSeries PowerSeries::scaled(double c, int shift) const {
  PowerSeries s;
  for (const auto& t : terms_) s.add(t.power + shift, t.coeff * c);
  return s;
}

PowerSeries PowerSeries::operator*(const PowerSeries& other) const {
  PowerSeries prod;
  for (const auto& a : terms_)
    for (const auto& b : other.terms_) prod.add(a.power + b.power, a.coeff * b.coeff);
  return prod;
}

PowerSeries curvature_weight(const CurvedParams& params) { return PowerSeries{{0, 1.0}, {2, params.lambda()}}; }

}  // namespace curvhv
