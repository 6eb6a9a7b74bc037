#include "qosc/bargmann.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "qosc/errors.hpp"

namespace qosc {

namespace {

std::string tuple_label(std::span<const int> m) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
  os << ')';
  return os.str();
}

std::string decimal(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

std::string half_scale_symbol(int i) { return "Thalf" + std::to_string(i); }

RepAssignment build_bargmann_rep(const QParameter& p, int n_modes, int cutoff, std::size_t cap) {
  if (cutoff < 1) throw Error(ErrorKind::InvalidParameter, "polynomial cutoff must be >= 1");
  const MixedRadix basis(n_modes, cutoff + 1, cap);
  const std::size_t dim = basis.size();

  RepAssignment rep(p, n_modes, {BasisKind::Polynomial, n_modes, cutoff}, "bargmann");
  for (int i = 1; i <= n_modes; ++i) {
    Matrix a(dim), abar(dim), number(dim), scale(dim), half(dim);
    const std::size_t step = basis.stride(i);
    for (std::size_t r = 0; r < dim; ++r) {
      const auto m = basis.digits(r);
      const int mi = m[static_cast<std::size_t>(i - 1)];
      long long tail = 0;
      for (std::size_t k = static_cast<std::size_t>(i); k < m.size(); ++k) tail += m[k];
      // T_{i+1}^{1/2}...T_n^{1/2} on z^m; multiplying or dividing by z_i
      // leaves the exponents k > i untouched, so the factor is the same on
      // both sides of the shift
      const complex prefactor = p.omega_pow(tail);
      if (mi < cutoff) abar(r + step, r) = prefactor;
      if (mi > 0) a(r - step, r) = prefactor * q_number(p, mi);
      number(r, r) = static_cast<double>(mi);
      scale(r, r) = p.q_pow(mi);
      half(r, r) = p.omega_pow(mi);
    }
    rep.set(sym::a(i), std::move(a));
    rep.set(sym::abar(i), std::move(abar));
    rep.set(sym::number(i), std::move(number));
    rep.set("T" + std::to_string(i), scale);
    rep.set(sym::scale(i), std::move(scale));
    rep.set(half_scale_symbol(i), std::move(half));
  }
  rep.set_check_columns(interior_columns(n_modes, cutoff, 2));
  return rep;
}

std::vector<std::size_t> interior_columns(int n_modes, int cutoff, int margin) {
  const MixedRadix basis(n_modes, cutoff + 1, static_cast<std::size_t>(-1));
  std::vector<std::size_t> cols;
  for (std::size_t r = 0; r < basis.size(); ++r) {
    const auto m = basis.digits(r);
    if (std::all_of(m.begin(), m.end(), [&](int x) { return x <= cutoff - margin; })) {
      cols.push_back(r);
    }
  }
  return cols;
}

complex radial_moment(const QParameter& p, int m, int truncation) {
  if (p.is_root_of_unity()) {
    throw Error(ErrorKind::UnsupportedMode, "the Bargmann measure requires a real q");
  }
  const double q = p.real_value();
  auto integrand = [&](double x) {
    return std::pow(x, m) / q_exponential(p, complex{q * x, 0.0}, truncation);
  };
  return jackson_integral(p, integrand, 1.0 / (1.0 - q), truncation);
}

namespace {

std::vector<complex> radial_moments(const QParameter& p, int cutoff, int truncation) {
  std::vector<complex> moments(static_cast<std::size_t>(cutoff) + 1);
  for (int m = 0; m <= cutoff; ++m) moments[static_cast<std::size_t>(m)] = radial_moment(p, m, truncation);
  return moments;
}

// Sum over equal monomial pairs weighted by the product of radial moments.
complex pair_expansion(const std::vector<complex>& moments, int n_modes, int cutoff,
                       std::span<const complex> f, std::span<const complex> g) {
  const MixedRadix basis(n_modes, cutoff + 1, static_cast<std::size_t>(-1));
  if (f.size() != basis.size() || g.size() != basis.size()) {
    throw Error(ErrorKind::DimensionMismatch, "coefficient vector does not match the cutoff");
  }
  complex total{};
  for (std::size_t r = 0; r < basis.size(); ++r) {
    if (f[r] == complex{} || g[r] == complex{}) continue;
    complex weight{1.0, 0.0};
    for (int m : basis.digits(r)) weight *= moments[static_cast<std::size_t>(m)];
    total += std::conj(f[r]) * g[r] * weight;
  }
  return total;
}

}  // namespace

complex inner_product(const QParameter& p, int n_modes, int cutoff, std::span<const complex> f,
                      std::span<const complex> g, int truncation) {
  if (p.is_root_of_unity()) {
    throw Error(ErrorKind::UnsupportedMode, "the Bargmann inner product requires a real q");
  }
  return pair_expansion(radial_moments(p, cutoff, truncation), n_modes, cutoff, f, g);
}

std::vector<complex> orthonormal_monomial(const QParameter& p, int n_modes, int cutoff,
                                          std::span<const int> exponents) {
  if (p.is_root_of_unity()) {
    throw Error(ErrorKind::UnsupportedMode, "orthonormal monomials require a real q");
  }
  const MixedRadix basis(n_modes, cutoff + 1, static_cast<std::size_t>(-1));
  std::vector<complex> v(basis.size());
  double norm = 1.0;
  for (int m : exponents) norm *= std::sqrt(q_factorial(p, m).real());
  v[basis.rank(exponents)] = 1.0 / norm;
  return v;
}

std::vector<ResidualRecord> fock_agreement(const RepAssignment& bargmann,
                                           const RepAssignment& fock, double tolerance) {
  if (bargmann.basis().kind != BasisKind::Polynomial || fock.basis().kind != BasisKind::Fock) {
    throw Error(ErrorKind::InvalidParameter, "fock_agreement expects (bargmann, fock)");
  }
  const QParameter& p = bargmann.params();
  const int order = fock.basis().parameter;
  const int cutoff = bargmann.basis().parameter;
  if (!p.is_root_of_unity() || p.order() != order || bargmann.n_modes() != fock.n_modes()) {
    throw Error(ErrorKind::InvalidParameter,
                "agreement needs both realizations at the same root of unity and mode count");
  }
  if (cutoff < order - 1) {
    throw Error(ErrorKind::InvalidParameter, "cutoff must cover occupations up to N-1");
  }
  const int n = fock.n_modes();
  const MixedRadix poly(n, cutoff + 1, bargmann.dim());
  const MixedRadix occ(n, order, fock.dim());

  // z^m = s_m u_m with s_m = prod_i sqrt([1])...sqrt([m_i])
  std::vector<std::size_t> shared(occ.size());
  std::vector<complex> scale(occ.size());
  for (std::size_t r = 0; r < occ.size(); ++r) {
    const auto m = occ.digits(r);
    shared[r] = poly.rank(m);
    complex s{1.0, 0.0};
    for (int mi : m)
      for (int k = 1; k <= mi; ++k) s *= std::sqrt(q_number(p, k));
    scale[r] = s;
  }

  std::vector<ResidualRecord> out;
  for (int i = 1; i <= n; ++i) {
    for (const auto& symbol : {sym::a(i), sym::abar(i), sym::number(i), sym::scale(i)}) {
      Matrix transformed = submatrix(bargmann.at(symbol).matrix, shared);
      for (std::size_t r = 0; r < occ.size(); ++r)
        for (std::size_t c = 0; c < occ.size(); ++c)
          transformed(r, c) *= scale[r] / scale[c];
      out.push_back(make_record("agreement." + symbol, "bargmann-fock agreement", transformed,
                                fock.at(symbol).matrix, tolerance));
    }
  }
  return out;
}

std::vector<ResidualRecord> measure_identity_records(const QParameter& p, int n_modes,
                                                     int cutoff, int truncation) {
  if (p.is_root_of_unity()) {
    throw Error(ErrorKind::UnsupportedMode, "measure identities require a real q");
  }
  std::vector<ResidualRecord> out;
  const double q = p.real_value();

  for (double x : {0.1, 0.5, 1.0}) {
    const complex lhs = q_exponential(p, complex{q * x, 0.0}, truncation);
    const complex rhs = (1.0 - (1.0 - q) * x) * q_exponential(p, complex{x, 0.0}, truncation);
    out.push_back(scalar_record("qexp.recurrence.x=" + decimal(x), "q-exponential recurrence",
                                std::abs(lhs - rhs), 1e-10));
  }

  for (int m = 0; m <= 10; ++m) {
    const complex exact = q_factorial(p, m);
    const double rel = std::abs(radial_moment(p, m, truncation) - exact) / std::abs(exact);
    out.push_back(scalar_record("jackson.moment." + std::to_string(m), "Jackson moment", rel,
                                1e-8));
  }

  const int top = std::min(5, cutoff);
  const MixedRadix exps(n_modes, top + 1, static_cast<std::size_t>(-1));
  const auto moments = radial_moments(p, cutoff, truncation);
  std::vector<std::vector<complex>> u;
  u.reserve(exps.size());
  for (std::size_t r = 0; r < exps.size(); ++r)
    u.push_back(orthonormal_monomial(p, n_modes, cutoff, exps.digits(r)));
  for (std::size_t a = 0; a < exps.size(); ++a) {
    for (std::size_t b = 0; b < exps.size(); ++b) {
      const complex ip = pair_expansion(moments, n_modes, cutoff, u[a], u[b]);
      const double delta = a == b ? 1.0 : 0.0;
      out.push_back(scalar_record("orthonormal." + tuple_label(exps.digits(a)) + "." +
                                      tuple_label(exps.digits(b)),
                                  "orthonormality", std::abs(ip - delta), 1e-8));
    }
  }
  return out;
}

}  // namespace qosc
