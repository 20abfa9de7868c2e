#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "curvhv/error.hpp"

namespace curvhv {

// Symmetric tridiagonal matrix: diag[0..n-1], off[0..n-2].
template <class Real>
struct Tridiagonal {
  std::vector<Real> diag;
  std::vector<Real> off;

  std::size_t size() const { return diag.size(); }

  Real norm_inf() const {
    using std::abs;
    Real m(0);
    for (std::size_t i = 0; i < diag.size(); ++i) {
      Real s = abs(diag[i]);
      if (i > 0) s += abs(off[i - 1]);
      if (i + 1 < diag.size()) s += abs(off[i]);
      m = std::max(m, s);
    }
    return m;
  }

  void gershgorin(Real& lo, Real& hi) const {
    using std::abs;
    lo = std::numeric_limits<Real>::max();
    hi = -std::numeric_limits<Real>::max();
    for (std::size_t i = 0; i < diag.size(); ++i) {
      Real rad(0);
      if (i > 0) rad += abs(off[i - 1]);
      if (i + 1 < diag.size()) rad += abs(off[i]);
      lo = std::min(lo, Real(diag[i] - rad));
      hi = std::max(hi, Real(diag[i] + rad));
    }
  }

  // y = T x
  std::vector<Real> apply(const std::vector<Real>& x) const {
    const std::size_t n = diag.size();
    std::vector<Real> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      Real s = diag[i] * x[i];
      if (i > 0) s += off[i - 1] * x[i - 1];
      if (i + 1 < n) s += off[i] * x[i + 1];
      y[i] = s;
    }
    return y;
  }
};

// Number of eigenvalues strictly below x (Sturm sequence via LDL^T pivots).
template <class Real>
std::size_t sturm_count(const Tridiagonal<Real>& t, Real x) {
  using std::abs;
  const Real tiny = std::numeric_limits<Real>::min() / std::numeric_limits<Real>::epsilon();
  std::size_t count = 0;
  Real d = t.diag[0] - x;
  if (d == 0) d = -tiny;
  if (d < 0) ++count;
  for (std::size_t i = 1; i < t.diag.size(); ++i) {
    d = (t.diag[i] - x) - t.off[i - 1] * t.off[i - 1] / d;
    if (d == 0) d = -tiny;
    if (d < 0) ++count;
  }
  return count;
}

// The `count` lowest eigenvalues, ascending, by bisection.
template <class Real>
std::vector<Real> lowest_eigenvalues(const Tridiagonal<Real>& t, std::size_t count) {
  using std::abs;
  if (count > t.size()) throw ConfigError("more eigenvalues requested than the matrix has");
  Real glo, ghi;
  t.gershgorin(glo, ghi);
  const Real eps = std::numeric_limits<Real>::epsilon();
  const Real floor = eps * std::max(abs(glo), abs(ghi));
  std::vector<Real> out;
  Real lo = glo;
  for (std::size_t k = 0; k < count; ++k) {
    Real a = lo, b = ghi;
    for (int it = 0; it < 400; ++it) {
      const Real mid = (a + b) / 2;
      if (mid <= a || mid >= b) break;
      if (b - a <= 2 * eps * std::max(abs(a), abs(b)) + floor * eps) break;
      if (sturm_count(t, mid) > k)
        b = mid;
      else
        a = mid;
    }
    const Real ev = (a + b) / 2;
    out.push_back(ev);
    lo = a;
  }
  return out;
}

// Eigenvector for an accurate eigenvalue estimate by inverse iteration with a
// partially pivoted tridiagonal LU. Normalized to unit 2-norm, largest component positive.
template <class Real>
std::vector<Real> inverse_iteration(const Tridiagonal<Real>& t, Real ev, Real gap, int max_iter = 8) {
  using std::abs;
  using std::sqrt;
  const std::size_t n = t.size();
  const Real eps = std::numeric_limits<Real>::epsilon();
  const Real tnorm = t.norm_inf();

  // LU of (T - ev I) with row interchanges; U has two superdiagonals.
  std::vector<Real> u0(n), u1(n, Real(0)), u2(n, Real(0)), mult(n, Real(0));
  std::vector<char> swapped(n, 0);
  {
    Real d = t.diag[0] - ev;
    Real e = n > 1 ? t.off[0] : Real(0);
    Real f(0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const Real below = t.off[i];
      const Real next_d = t.diag[i + 1] - ev;
      const Real next_e = i + 2 < n ? t.off[i + 1] : Real(0);
      if (abs(d) >= abs(below)) {
        if (d == 0) d = eps * tnorm;
        const Real l = below / d;
        mult[i] = l;
        u0[i] = d;
        u1[i] = e;
        u2[i] = f;
        d = next_d - l * e;
        e = next_e - l * f;
        f = Real(0);
      } else {
        const Real l = d / below;
        mult[i] = l;
        swapped[i] = 1;
        u0[i] = below;
        u1[i] = next_d;
        u2[i] = next_e;
        const Real nd = e - l * next_d;
        const Real ne = f - l * next_e;
        d = nd;
        e = ne;
        f = Real(0);
      }
    }
    if (d == 0) d = eps * tnorm;
    u0[n - 1] = d;
  }

  auto solve = [&](std::vector<Real>& b) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (swapped[i]) std::swap(b[i], b[i + 1]);
      b[i + 1] -= mult[i] * b[i];
    }
    for (std::size_t ii = n; ii-- > 0;) {
      Real s = b[ii];
      if (ii + 1 < n) s -= u1[ii] * b[ii + 1];
      if (ii + 2 < n) s -= u2[ii] * b[ii + 2];
      b[ii] = s / u0[ii];
    }
  };

  auto normalize = [&](std::vector<Real>& v) {
    Real s(0);
    for (const auto& x : v) s += x * x;
    s = sqrt(s);
    std::size_t imax = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (abs(v[i]) > abs(v[imax])) imax = i;
    if (v[imax] < 0) s = -s;
    for (auto& x : v) x /= s;
  };

  std::vector<Real> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = Real(1) + Real(static_cast<double>(i % 7)) / 13;
  normalize(v);
  const Real tol = 64 * eps * tnorm * sqrt(Real(static_cast<double>(n)));
  Real res(0);
  for (int it = 0; it < max_iter; ++it) {
    solve(v);
    normalize(v);
    const std::vector<Real> tv = t.apply(v);
    res = Real(0);
    for (std::size_t i = 0; i < n; ++i) res = std::max(res, abs(tv[i] - ev * v[i]));
    if (it >= 1 && res <= tol) return v;
  }
  std::ostringstream msg;
  msg << "inverse iteration did not converge: residual " << static_cast<double>(res) << " (tolerance "
      << static_cast<double>(tol) << "), distance to the nearest other eigenvalue " << static_cast<double>(gap);
  throw ConvergenceError(msg.str());
}

}  // namespace curvhv
