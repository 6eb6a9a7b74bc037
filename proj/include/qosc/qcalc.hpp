#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace qosc {

using complex = std::complex<double>;

inline constexpr int kDefaultTruncation = 200;

enum class QMode { RootOfUnity, RealDeformation };

/// Deformation parameter q together with a fixed square root omega.
///
/// Every q-power and every half power q^{m/2} used anywhere in the library is
/// obtained from this object. In root-of-unity mode powers are table lookups
/// indexed modulo 2N, so q^N == 1 and [N] == 0 hold exactly rather than to
/// rounding.
class QParameter {
 public:
  static QParameter root_of_unity(int order);
  static QParameter real(double value);

  QMode mode() const noexcept { return mode_; }
  bool is_root_of_unity() const noexcept { return mode_ == QMode::RootOfUnity; }
  /// Root order N; 0 in real mode.
  int order() const noexcept { return order_; }
  complex q() const noexcept { return q_; }
  complex omega() const noexcept { return omega_; }
  /// Real value of q in real mode (undefined in root-of-unity mode).
  double real_value() const noexcept { return q_.real(); }

  complex q_pow(long long k) const;
  complex omega_pow(long long m) const;

 private:
  QParameter() = default;

  QMode mode_ = QMode::RealDeformation;
  int order_ = 0;
  complex q_{};
  complex omega_{};
  std::vector<complex> omega_table_;  // omega^k, k = 0..2N-1 (root mode)
};

QParameter q_from_root(int order);
QParameter q_real(double value);

/// e^{2 pi i k / m} with exact values on the quarter turns.
complex unit_root(long long k, long long m);

/// [x] = (q^x - 1)/(q - 1)
complex q_number(const QParameter& p, long long x);

/// [1][2]...[n], empty product 1.
complex q_factorial(const QParameter& p, int n);

/// Partial sum of x^n/[n]! for n = 0..K. Real mode only.
complex q_exponential(const QParameter& p, complex x, int truncation = kDefaultTruncation);

/// Jackson sum upper*(1-q)*sum_{k=0}^{K} q^k f(upper q^k). Real mode only.
/// Smallest K >= kDefaultTruncation whose Jackson tail bound upper * q^K
/// falls below `tail`. Real q only.
int jackson_truncation(const QParameter& p, double upper, double tail = 1e-14);

complex jackson_integral(const QParameter& p, const std::function<complex(double)>& f,
                         double upper, int truncation = kDefaultTruncation);

/// omega^m, i.e. q^{m/2} on the fixed branch.
complex half_power(const QParameter& p, long long m);

}  // namespace qosc
