#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qosc/matrix.hpp"
#include "qosc/qcalc.hpp"

namespace qosc {

enum class BasisKind { Fock, Polynomial, Grid };

const char* to_string(BasisKind kind);

/// Which carrier space an operator acts on. `parameter` is the root order N
/// for Fock and Grid bases and the polynomial cutoff D for Polynomial.
struct BasisTag {
  BasisKind kind = BasisKind::Fock;
  int n_modes = 1;
  int parameter = 0;

  friend bool operator==(const BasisTag&, const BasisTag&) = default;
};

struct Operator {
  Matrix matrix;
  BasisTag basis;

  std::size_t dim() const noexcept { return matrix.dim(); }
};

// Generator symbol names. Indices are 1-based like the mode labels.
namespace sym {
std::string a(int i);
std::string abar(int i);
std::string number(int i);
std::string scale(int i);
}  // namespace sym

/// The generator set of one realization. All operators share one basis tag.
class RepAssignment {
 public:
  RepAssignment(QParameter params, int n_modes, BasisTag basis, std::string realization);

  const QParameter& params() const noexcept { return params_; }
  int n_modes() const noexcept { return n_modes_; }
  const BasisTag& basis() const noexcept { return basis_; }
  const std::string& realization() const noexcept { return realization_; }
  std::size_t dim() const noexcept { return dim_; }

  /// Inserts or replaces a generator; throws DimensionMismatch when the
  /// matrix side differs from the generators already present.
  void set(const std::string& symbol, Matrix matrix);
  const Operator& at(const std::string& symbol) const;
  bool contains(const std::string& symbol) const { return generators_.contains(symbol); }
  const std::map<std::string, Operator>& generators() const noexcept { return generators_; }

  /// Columns on which relations are compared; empty means the whole space.
  const std::vector<std::size_t>& check_columns() const noexcept { return check_columns_; }
  void set_check_columns(std::vector<std::size_t> columns);

 private:
  QParameter params_;
  int n_modes_;
  BasisTag basis_;
  std::string realization_;
  std::size_t dim_ = 0;
  std::map<std::string, Operator> generators_;
  std::vector<std::size_t> check_columns_;
};

/// coefficient * S1 S2 ... Sk, multiplied left to right.
struct Word {
  complex coefficient{1.0, 0.0};
  std::vector<std::string> symbols;
};

struct Relation {
  std::string id;
  std::string family;
  std::vector<Word> lhs;
  std::vector<Word> rhs;
  // Bases on which the identity is known not to hold; records there are
  // reported as findings and do not count against the exit status.
  std::vector<BasisKind> divergent_on;

  bool expected_on(BasisKind kind) const;
};

struct ResidualRecord {
  std::string relation_id;
  std::string family;
  double residual = 0.0;
  double norm_scale = 1.0;
  double tolerance = 0.0;
  bool passed = false;
  bool expected = true;

  friend bool operator==(const ResidualRecord&, const ResidualRecord&) = default;
};

/// Labeled note about an outcome that is data rather than a failure, e.g. a
/// documented divergence or which exponent mode realizes the algebra.
struct Finding {
  std::string label;
  std::string detail;

  friend bool operator==(const Finding&, const Finding&) = default;
};

inline constexpr double kDefaultTolerance = 1e-10;

Operator evaluate_word(const RepAssignment& assignment, const Word& word);
Matrix evaluate_sum(const RepAssignment& assignment, const std::vector<Word>& words);

/// residual = maxabs(lhs - rhs) / max(1, maxabs(lhs)) over `columns`.
ResidualRecord make_record(std::string id, std::string family, const Matrix& lhs,
                           const Matrix& rhs, double tolerance,
                           const std::vector<std::size_t>& columns = {});

/// Record for a scalar identity whose residual is computed by the caller.
ResidualRecord scalar_record(std::string id, std::string family, double residual,
                             double tolerance);

ResidualRecord check_relation(const RepAssignment& assignment, const Relation& relation,
                              double tolerance = kDefaultTolerance);

/// Checks every relation; relations are distributed over OpenMP threads and
/// the result keeps the input order.
std::vector<ResidualRecord> check_suite(const RepAssignment& assignment,
                                        const std::vector<Relation>& relations,
                                        double tolerance = kDefaultTolerance);

/// Serial reference for check_suite.
std::vector<ResidualRecord> check_suite_serial(const RepAssignment& assignment,
                                               const std::vector<Relation>& relations,
                                               double tolerance = kDefaultTolerance);

}  // namespace qosc
