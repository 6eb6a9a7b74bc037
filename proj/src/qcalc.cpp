#include "qosc/qcalc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qosc/errors.hpp"

namespace qosc {

namespace {

long long floor_mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

complex unit_root(long long k, long long m) {
  k = floor_mod(k, m);
  if (k == 0) return {1.0, 0.0};
  if (4 * k == m) return {0.0, 1.0};
  if (2 * k == m) return {-1.0, 0.0};
  if (4 * k == 3 * m) return {0.0, -1.0};
  // reflect into the upper half so conjugate pairs are exact conjugates
  if (2 * k > m) return std::conj(unit_root(m - k, m));
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
  return {std::cos(angle), std::sin(angle)};
}

QParameter QParameter::root_of_unity(int order) {
  if (order < 2) {
    throw Error(ErrorKind::InvalidParameter,
                "root order must be >= 2, got " + std::to_string(order));
  }
  QParameter p;
  p.mode_ = QMode::RootOfUnity;
  p.order_ = order;
  p.omega_table_.resize(2 * static_cast<std::size_t>(order));
  for (int k = 0; k < 2 * order; ++k) p.omega_table_[k] = unit_root(k, 2 * order);
  p.omega_ = p.omega_table_[1];
  p.q_ = p.omega_table_[2];
  return p;
}

QParameter QParameter::real(double value) {
  if (!(value > 0.0 && value < 1.0)) {
    throw Error(ErrorKind::InvalidParameter,
                "real deformation parameter must lie in (0,1), got " + std::to_string(value));
  }
  QParameter p;
  p.mode_ = QMode::RealDeformation;
  p.q_ = {value, 0.0};
  p.omega_ = {std::sqrt(value), 0.0};
  return p;
}

complex QParameter::q_pow(long long k) const {
  if (mode_ == QMode::RootOfUnity) return omega_table_[floor_mod(2 * k, 2LL * order_)];
  return {std::pow(q_.real(), static_cast<double>(k)), 0.0};
}

complex QParameter::omega_pow(long long m) const {
  if (mode_ == QMode::RootOfUnity) return omega_table_[floor_mod(m, 2LL * order_)];
  return {std::pow(omega_.real(), static_cast<double>(m)), 0.0};
}

QParameter q_from_root(int order) { return QParameter::root_of_unity(order); }

QParameter q_real(double value) { return QParameter::real(value); }

complex q_number(const QParameter& p, long long x) {
  if (x == 0) return {0.0, 0.0};
  return (p.q_pow(x) - 1.0) / (p.q() - 1.0);
}

complex q_factorial(const QParameter& p, int n) {
  if (n < 0) throw Error(ErrorKind::InvalidParameter, "q_factorial of negative n");
  complex acc{1.0, 0.0};
  for (int k = 1; k <= n; ++k) acc *= q_number(p, k);
  return acc;
}

complex q_exponential(const QParameter& p, complex x, int truncation) {
  if (p.is_root_of_unity()) {
    throw Error(ErrorKind::UnsupportedMode,
                "q-exponential is undefined at a root of unity (1/[n]! diverges)");
  }
  if (truncation < 1) throw Error(ErrorKind::InvalidParameter, "truncation must be >= 1");
  complex term{1.0, 0.0};
  complex sum = term;
  for (int n = 1; n <= truncation; ++n) {
    term *= x / q_number(p, n);
    sum += term;
  }
  return sum;
}

int jackson_truncation(const QParameter& p, double upper, double tail) {
  if (p.is_root_of_unity()) {
    throw Error(ErrorKind::UnsupportedMode, "Jackson truncation needs a real q");
  }
  const double k = std::ceil(std::log(tail / upper) / std::log(p.real_value()));
  return std::max(kDefaultTruncation, static_cast<int>(k));
}

complex jackson_integral(const QParameter& p, const std::function<complex(double)>& f,
                         double upper, int truncation) {
  if (p.is_root_of_unity()) {
    throw Error(ErrorKind::UnsupportedMode, "Jackson integral requires a real deformation");
  }
  if (!(upper > 0.0) || !std::isfinite(upper)) {
    throw Error(ErrorKind::InvalidParameter, "Jackson integral upper limit must be > 0");
  }
  if (truncation < 1) throw Error(ErrorKind::InvalidParameter, "truncation must be >= 1");
  const double q = p.real_value();
  complex sum{0.0, 0.0};
  double weight = 1.0;
  for (int k = 0; k <= truncation; ++k) {
    const complex value = f(upper * weight);
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
      throw Error(ErrorKind::Numeric,
                  "non-finite integrand at node k=" + std::to_string(k));
    }
    sum += weight * value;
    weight *= q;
  }
  return upper * (1.0 - q) * sum;
}

complex half_power(const QParameter& p, long long m) { return p.omega_pow(m); }

}  // namespace qosc
