#ifndef SMPR_NUMERIC_HPP
#define SMPR_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace smpr {

// Exact scalar for the small-degree oracle path.  Everything in the library
// that is algebraic (no exp/log) is templated on the scalar so the same code
// runs on doubles and on rationals.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

template <class T>
T scalar_abs(const T& x) {
  return x < T(0) ? T(-x) : x;
}

template <class T>
constexpr bool is_exact_scalar = false;
template <>
inline constexpr bool is_exact_scalar<Rational> = true;

template <class T>
T pow_int(const T& x, int n) {
  if (n < 0) return T(1) / pow_int(x, -n);
  T r(1), base = x;
  while (n > 0) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

template <class T>
T factorial(int n) {
  T r(1);
  for (int k = 2; k <= n; ++k) r *= T(k);
  return r;
}

// Row n of Pascal's triangle; orders here are small (< 70) so the direct
// multiplicative form is fine even in doubles.
template <class T>
std::vector<T> binomial_row(int n) {
  std::vector<T> row(static_cast<std::size_t>(n) + 1);
  row[0] = T(1);
  for (int k = 1; k <= n; ++k) row[k] = row[k - 1] * T(n - k + 1) / T(k);
  return row;
}

struct NonPositiveDefiniteMoments : std::runtime_error {
  explicit NonPositiveDefiniteMoments(const std::string& msg, int recoverable)
      : std::runtime_error(msg), recoverable_degree(recoverable) {}
  int recoverable_degree;  // largest degree with strictly positive norm
};

struct NonDiagonalizableOrDegenerate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnboundedSupportError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace smpr

#endif  // SMPR_NUMERIC_HPP
