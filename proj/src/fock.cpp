#include "qosc/fock.hpp"

#include <numeric>
#include <string>

#include "qosc/errors.hpp"

namespace qosc {

RepAssignment build_fock_rep(int n_modes, int order, std::size_t cap) {
  const QParameter p = q_from_root(order);
  const MixedRadix basis(n_modes, order, cap);
  const std::size_t dim = basis.size();

  RepAssignment rep(p, n_modes, {BasisKind::Fock, n_modes, order}, "fock");
  for (int i = 1; i <= n_modes; ++i) {
    Matrix a(dim), abar(dim), number(dim), scale(dim);
    const std::size_t step = basis.stride(i);
    for (std::size_t r = 0; r < dim; ++r) {
      const auto occ = basis.digits(r);
      const int ni = occ[static_cast<std::size_t>(i - 1)];
      const int tail = std::accumulate(occ.begin() + i, occ.end(), 0);
      const complex phase = p.omega_pow(tail);
      if (ni > 0) a(r - step, r) = phase * std::sqrt(q_number(p, ni));
      if (ni + 1 < order) abar(r + step, r) = phase * std::sqrt(q_number(p, ni + 1));
      number(r, r) = static_cast<double>(ni);
      scale(r, r) = p.q_pow(ni);
    }
    rep.set(sym::a(i), std::move(a));
    rep.set(sym::abar(i), std::move(abar));
    rep.set(sym::number(i), std::move(number));
    rep.set(sym::scale(i), std::move(scale));
  }
  return rep;
}

FockState build_state(const RepAssignment& rep, const FockIndex& index) {
  if (rep.basis().kind != BasisKind::Fock) {
    throw Error(ErrorKind::InvalidParameter, "build_state needs a Fock representation");
  }
  const int order = rep.basis().parameter;
  const MixedRadix basis(rep.n_modes(), order, rep.dim());
  const std::size_t target = basis.rank(index.entries);
  const QParameter& p = rep.params();

  std::vector<complex> v(rep.dim());
  v[0] = 1.0;
  complex norm{1.0, 0.0};
  for (int i = 1; i <= rep.n_modes(); ++i) {
    const Matrix& raise = rep.at(sym::abar(i)).matrix;
    const int k = index.entries[static_cast<std::size_t>(i - 1)];
    for (int s = 0; s < k; ++s) {
      v = apply_vector(raise, v);
      norm *= std::sqrt(q_number(p, s + 1));
    }
  }
  for (auto& x : v) x /= norm;
  FockState state{std::move(v), target, {}};
  state.phase = state.vector[target];
  return state;
}

}  // namespace qosc
