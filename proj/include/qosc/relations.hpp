#pragma once

#include <optional>
#include <vector>

#include "qosc/opcore.hpp"

namespace qosc {

struct OscillatorSuiteOptions {
  int n_modes = 1;
  /// [N_i, a_j] and [N_i, abar_j] families.
  bool number_operators = true;
  /// Identities that involve the scale operators Q_i: the bilinear
  /// abar_i a_i in terms of Q, [a_i, abar_i] and the power commutators.
  bool scale_operators = true;
  /// Highest m in [a_i, abar_i^m] = q^{1-m}[m] Q_i...Q_n abar_i^{m-1};
  /// 0 disables the family.
  int max_commutator_power = 0;
  /// When set, adds a_i^N = 0 and the two readings of abar_i^N (0 and 1).
  std::optional<int> nilpotency_order;
  /// Include the abar_i^N readings alongside a_i^N = 0.
  bool creation_power_checks = true;
};

/// Default options for a given mode count and root order: full families,
/// commutator powers up to min(6, N-1) (6 without N).
OscillatorSuiteOptions default_oscillator_options(int n_modes, std::optional<int> order);

/// The covariant oscillator relations instantiated for `p`:
///   abar_i abar_j = w abar_j abar_i, a_i a_j = w^{-1} a_j a_i (i<j),
///   a_i abar_j = w abar_j a_i (i != j),
///   a_i abar_i = 1 + q abar_i a_i + (q-1) sum_{k>i} abar_k a_k,
///   [N_i, a_j] = -d_ij a_j, [N_i, abar_j] = d_ij abar_j,
/// plus the Q-operator identities and nilpotency checks selected in `options`.
/// w is the fixed square root of q.
std::vector<Relation> relation_suite_oscillator(const QParameter& p,
                                                const OscillatorSuiteOptions& options);

std::vector<Relation> relation_suite_oscillator(const QParameter& p, int n_modes,
                                                std::optional<int> nilpotency_order);

/// The exchange relations only (first four families, no number or scale
/// operators). Used to decide which cyclic exponent mode realizes the algebra.
std::vector<Relation> relation_suite_exchange(const QParameter& p, int n_modes);

}  // namespace qosc
