#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qosc/lattice.hpp"
#include "qosc/opcore.hpp"

namespace qosc {

/// Operators on polynomials in z_1..z_n with every exponent m_i <= D, in the
/// monomial basis (enumerated like the Fock basis).
///
///   T_i^{1/2} z^m = w^{m_i} z^m,          T_i = Q_i = diag(q^{m_i})
///   abar_i = T_{i+1}^{1/2}...T_n^{1/2} z_i        (kills m_i = D)
///   a_i    = z_i^{-1} T_{i+1}^{1/2}...T_n^{1/2} (1 - T_i)/(1 - q)
///   N_i    = z_i d/dz_i
///
/// Relation checks are restricted to the interior columns (all m_i <= D-2),
/// where the cutoff cannot influence words with up to two raisings.
RepAssignment build_bargmann_rep(const QParameter& p, int n_modes, int cutoff,
                                 std::size_t cap = kDefaultDimensionCap);

/// Ranks of monomials with every exponent <= cutoff - margin.
std::vector<std::size_t> interior_columns(int n_modes, int cutoff, int margin);

/// Symbol of the half scaling operator T_i^{1/2}.
std::string half_scale_symbol(int i);

/// Radial Jackson moment: integral over [0, 1/(1-q)] of x^m / exp_q(q x).
complex radial_moment(const QParameter& p, int m, int truncation = kDefaultTruncation);

/// (f, g) for coefficient vectors in the monomial basis of the given cutoff.
/// Unequal monomial pairs vanish by angular orthogonality; each equal pair
/// contributes prod_i radial_moment(m_i), evaluated numerically.
complex inner_product(const QParameter& p, int n_modes, int cutoff, std::span<const complex> f,
                      std::span<const complex> g, int truncation = kDefaultTruncation);

/// Coefficients of u_m = z^m / sqrt([m_1]!...[m_n]!). Real mode only.
std::vector<complex> orthonormal_monomial(const QParameter& p, int n_modes, int cutoff,
                                          std::span<const int> exponents);

/// Entrywise comparison of a root-of-unity Bargmann assignment with the Fock
/// assignment of the same order, after rescaling monomials to the orthonormal
/// basis, on the shared span m_i <= N-1. One record per generator.
std::vector<ResidualRecord> fock_agreement(const RepAssignment& bargmann,
                                           const RepAssignment& fock, double tolerance);

/// Scalar identities behind the inner product at the assignment's q:
/// q-exponential recurrence, Jackson moments n = 0..10 and orthonormality of
/// u_m for exponents <= min(5, cutoff). Tolerances: 1e-10 absolute for the
/// recurrence, 1e-8 relative for moments, 1e-8 for orthonormality.
std::vector<ResidualRecord> measure_identity_records(const QParameter& p, int n_modes,
                                                     int cutoff,
                                                     int truncation = kDefaultTruncation);

}  // namespace qosc
