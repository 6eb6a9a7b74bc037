#pragma once

#include <map>
#include <string>
#include <vector>

#include "qosc/opcore.hpp"

namespace qosc {

/// l_m^{(i)} = abar_i^{m+1} a_i.
///
/// m >= -1 everywhere; any m on Grid bases, where abar^N = 1 makes
/// abar^{-1} = abar^{N-1}. Throws InvalidParameter for a negative power of a
/// nilpotent abar.
Matrix build_l(const RepAssignment& rep, int mode, int m);

/// Q_i Q_{i+1} ... Q_n.
Matrix scale_product(const RepAssignment& rep, int mode);

/// L_m^{(i)} = (Q_i ... Q_n)^{-1} l_m^{(i)}.
Matrix build_L(const RepAssignment& rep, int mode, int m);

/// Recovers l_m from L_m by multiplying back the scale product.
Matrix l_from_L(const RepAssignment& rep, int mode, const Matrix& big_l);

/// Generators of one mode over a window of m values.
struct VirasoroFamily {
  int mode = 1;
  bool rescaled = false;
  std::map<int, Matrix> generators;
};

VirasoroFamily build_family(const RepAssignment& rep, int mode, const std::vector<int>& window,
                            bool rescaled);

/// -1 .. min(4, N-2) on Fock bases, -1 .. 3 elsewhere.
std::vector<int> default_window(const RepAssignment& rep);

/// Ratio between the two orderings of a mixed-mode product, measured over
/// the entries where the reversed product is nonzero.
struct BraidingMeasurement {
  std::string relation_id;
  complex predicted{};
  complex measured{};
  double spread = 0.0;
  bool supported = false;
};

struct VirasoroCheck {
  std::vector<ResidualRecord> records;
  std::vector<BraidingMeasurement> braiding;
  std::vector<Finding> findings;
};

/// For every mode i and every (r, m) in window x window:
///   [l_r, l_m] = q^{-m}[m-r] Q_i...Q_n l_{r+m}
///   q^{m-r} L_r L_m - L_m L_r = [m-r] L_{r+m}
/// and for i < j
///   l_r^{(i)} l_m^{(j)} = q^{m(r+2)/2} l_m^{(j)} l_r^{(i)}
///   L_r^{(i)} L_m^{(j)} = q^{mr/2}     L_m^{(j)} L_r^{(i)}
/// with half powers through the fixed square root. Each braiding pair also
/// gets a measured proportionality scalar.
VirasoroCheck check_virasoro(const RepAssignment& rep, const std::vector<int>& window,
                             double tolerance = kDefaultTolerance);

struct ClassicalLimitRow {
  double q = 0.0;
  double residual = 0.0;
};

/// Single-mode Bargmann realization at each real q: max over r != m in
/// -1..window_max of the residual of [L_r, L_m] - (m-r) L_{r+m}, on monomials
/// of degree <= cutoff - 2*window_max - 1.
std::vector<ClassicalLimitRow> classical_limit_probe(const std::vector<double>& q_values,
                                                     int cutoff, int window_max);

}  // namespace qosc
