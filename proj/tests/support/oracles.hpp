// Reference implementations used only by the tests. They trade speed for
// obviousness: dense matrices, triple loops, a different quadrature rule.
#pragma once

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<long long>>;

inline Matrix zeros(std::size_t n) { return Matrix(n, std::vector<long long>(n, 0)); }

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c = zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k])
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

/// [(A+A^T)^3]_ii / (2 [d_tot (d_tot - 1) - 2 (A^2)_ii]) with dense matrices;
/// zero when the denominator is not positive.
inline std::vector<double> clustering(const Matrix& a) {
  const std::size_t n = a.size();
  Matrix s = zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s[i][j] = a[i][j] + a[j][i];
  const Matrix s3 = multiply(multiply(s, s), s);
  const Matrix a2 = multiply(a, a);
  std::vector<double> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    long long d_tot = 0;
    for (std::size_t j = 0; j < n; ++j) d_tot += a[i][j] + a[j][i];
    const long long denom = 2 * (d_tot * (d_tot - 1) - 2 * a2[i][i]);
    c[i] = denom > 0 ? static_cast<double>(s3[i][i]) / static_cast<double>(denom) : 0.0;
  }
  return c;
}

/// All-pairs hop distances; -1 for unreachable.
inline std::vector<std::vector<int>> floyd_warshall(const Matrix& a) {
  const std::size_t n = a.size();
  constexpr int inf = std::numeric_limits<int>::max() / 4;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (a[i][j] && i != j) d[i][j] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  for (auto& row : d)
    for (int& v : row)
      if (v >= inf) v = -1;
  return d;
}

/// Tanh-sinh quadrature over u = ln x. The library uses Gauss-Kronrod, so the
/// two agree only if both are right.
inline double integrate(const std::function<double(double)>& f, double a, double b) {
  if (a == b) return 0.0;
  boost::math::quadrature::tanh_sinh<double> ts(15);
  auto g = [&](double u) {
    const double x = std::exp(u);
    return f(x) * x;
  };
  return ts.integrate(g, std::log(a), std::log(b), 1e-15);
}

/// Composite Simpson on a log grid, for a second opinion on wide ranges.
inline double simpson_log(const std::function<double(double)>& f, double a, double b, int panels = 200000) {
  const double la = std::log(a), lb = std::log(b), h = (lb - la) / panels;
  double s = 0.0;
  for (int i = 0; i <= panels; ++i) {
    const double u = la + i * h, x = std::exp(u);
    const double w = (i == 0 || i == panels) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    s += w * f(x) * x;
  }
  return s * h / 3.0;
}

inline double rel_err(double got, double want) {
  if (want == 0.0) return std::abs(got);
  return std::abs(got - want) / std::abs(want);
}

}  // namespace oracle
