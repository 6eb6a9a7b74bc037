#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qosc/lattice.hpp"
#include "qosc/opcore.hpp"

namespace qosc {

/// Shift operators on the delta-function basis of S_N x ... x S_N, where
/// S_N = {1, q, ..., q^{N-1}} and delta_n sits at (q^{n_1}, ..., q^{n_n}):
///
///   h_i delta_n = delta_{n - e_i}
///   g_i delta_n = q^{n_i} delta_{n - e_{i+1} - ... - e_n}      (labels mod N)
///
/// Both are unit-modulus generalized permutations. They satisfy
/// h_i g_i = q g_i h_i, g_i g_j = q g_j g_i (i<j), g^N = h^N = 1, and h_i
/// commutes with g_j (i != j) and with h_j.
///
/// The assignment holds g_i, h_i, the coordinate X_i = diag(q^{n_i}) and the
/// scale operator Q_i = h_i.
RepAssignment build_shift_ops(const QParameter& p, int n_modes,
                              std::size_t cap = kDefaultDimensionCap);

std::string shift_g(int i);
std::string shift_h(int i);
std::string coordinate(int i);

/// h-g exchange, g-g exchange (i<j), N-th powers and the commuting families.
std::vector<Relation> relation_suite_shift(const QParameter& p, int n_modes);

/// Factor E_i in a_i = g_i^{-1} h_{i+1}^2 ... h_n^2 E_i / (1 - q).
enum class ExponentMode {
  SquaredDiff,  // (1 - h_i)^2
  SquaredH,     // 1 - h_i^2
  Linear,       // 1 - h_i
};

const char* to_string(ExponentMode mode);
/// Accepts "squared_diff", "squared_h", "linear"; throws Usage otherwise.
ExponentMode parse_exponent_mode(const std::string& name);
const std::vector<ExponentMode>& all_exponent_modes();

struct CyclicRealization {
  RepAssignment rep;
  ExponentMode mode;
  /// Exchange relations of the oscillator algebra checked on `rep`.
  std::vector<ResidualRecord> conformance;
  bool conforms = false;
  double max_residual = 0.0;
};

/// abar_i = g_i and a_i as above; Q_i = h_i. No number operators exist in
/// this realization (abar is invertible).
CyclicRealization build_cyclic_rep(const QParameter& p, int n_modes, ExponentMode mode,
                                   double tolerance = kDefaultTolerance,
                                   std::size_t cap = kDefaultDimensionCap);

struct ModeOutcome {
  ExponentMode mode;
  bool conforms = false;
  double max_residual = 0.0;
};

/// Runs build_cyclic_rep for each mode and reports which realize the algebra.
std::vector<ModeOutcome> compare_exponent_modes(const QParameter& p, int n_modes,
                                                const std::vector<ExponentMode>& modes,
                                                double tolerance = kDefaultTolerance,
                                                std::size_t cap = kDefaultDimensionCap);

}  // namespace qosc
