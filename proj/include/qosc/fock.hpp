#pragma once

#include <cstddef>
#include <vector>

#include "qosc/lattice.hpp"
#include "qosc/opcore.hpp"

namespace qosc {

/// Occupation numbers (n_1, ..., n_n), each in 0..N-1.
struct FockIndex {
  std::vector<int> entries;
};

/// Fock-space representation at q = e^{2 pi i/N} on span{|n_1...n_n>}, n_i < N.
///
/// a_i    |..n_i..> = w^{S_i} sqrt([n_i])   |..n_i-1..>
/// abar_i |..n_i..> = w^{S_i} sqrt([n_i+1]) |..n_i+1..>,   S_i = sum_{k>i} n_k
///
/// with w = e^{i pi/N} and the principal square root applied to [n] alone.
/// Raising out of n_i = N-1 gives zero since [N] = 0. N_i = diag(n_i) and
/// Q_i = diag(q^{n_i}).
RepAssignment build_fock_rep(int n_modes, int order, std::size_t cap = kDefaultDimensionCap);

struct FockState {
  std::vector<complex> vector;
  std::size_t rank = 0;
  /// Component of `vector` at `rank`; the state equals phase * e_rank.
  complex phase{1.0, 0.0};
};

/// abar_n^{k_n} ... abar_1^{k_1} |0> / sqrt([k_1]! ... [k_n]!), where
/// sqrt([k]!) is the product of principal roots sqrt([1])...sqrt([k]).
FockState build_state(const RepAssignment& rep, const FockIndex& index);

}  // namespace qosc
