#include "qosc/opcore.hpp"

#include <algorithm>
#include <exception>
#include <utility>

#include "qosc/errors.hpp"

namespace qosc {

const char* to_string(BasisKind kind) {
  switch (kind) {
    case BasisKind::Fock: return "fock";
    case BasisKind::Polynomial: return "polynomial";
    case BasisKind::Grid: return "grid";
  }
  return "unknown";
}

namespace sym {
std::string a(int i) { return "a" + std::to_string(i); }
std::string abar(int i) { return "abar" + std::to_string(i); }
std::string number(int i) { return "N" + std::to_string(i); }
std::string scale(int i) { return "Q" + std::to_string(i); }
}  // namespace sym

RepAssignment::RepAssignment(QParameter params, int n_modes, BasisTag basis,
                             std::string realization)
    : params_(std::move(params)),
      n_modes_(n_modes),
      basis_(basis),
      realization_(std::move(realization)) {
  if (n_modes < 1) throw Error(ErrorKind::InvalidParameter, "n_modes must be >= 1");
}

void RepAssignment::set(const std::string& symbol, Matrix matrix) {
  if (generators_.empty() && dim_ == 0) {
    dim_ = matrix.dim();
  } else if (matrix.dim() != dim_) {
    throw Error(ErrorKind::DimensionMismatch,
                "generator " + symbol + " has dim " + std::to_string(matrix.dim()) +
                    ", assignment has " + std::to_string(dim_));
  }
  generators_.insert_or_assign(symbol, Operator{std::move(matrix), basis_});
}

const Operator& RepAssignment::at(const std::string& symbol) const {
  auto it = generators_.find(symbol);
  if (it == generators_.end()) {
    throw Error(ErrorKind::UnknownSymbol,
                "symbol '" + symbol + "' is not defined in the " + realization_ +
                    " realization");
  }
  return it->second;
}

void RepAssignment::set_check_columns(std::vector<std::size_t> columns) {
  for (std::size_t c : columns) {
    if (c >= dim_) throw Error(ErrorKind::DimensionMismatch, "check column out of range");
  }
  check_columns_ = std::move(columns);
}

bool Relation::expected_on(BasisKind kind) const {
  return std::find(divergent_on.begin(), divergent_on.end(), kind) == divergent_on.end();
}

Operator evaluate_word(const RepAssignment& assignment, const Word& word) {
  const std::size_t n = assignment.dim();
  // resolve every symbol first so an unknown symbol is reported even for a
  // zero coefficient
  std::vector<const Operator*> factors;
  factors.reserve(word.symbols.size());
  for (const auto& s : word.symbols) {
    const Operator& op = assignment.at(s);
    if (op.dim() != n || !(op.basis == assignment.basis())) {
      throw Error(ErrorKind::DimensionMismatch, "operator " + s + " does not match assignment");
    }
    factors.push_back(&op);
  }
  if (word.coefficient == complex{}) return {Matrix::zero(n), assignment.basis()};
  if (factors.empty()) {
    Matrix id = Matrix::identity(n);
    id *= word.coefficient;
    return {std::move(id), assignment.basis()};
  }
  Matrix product = factors.front()->matrix;
  for (std::size_t k = 1; k < factors.size(); ++k) product = matmul(product, factors[k]->matrix);
  product *= word.coefficient;
  return {std::move(product), assignment.basis()};
}

Matrix evaluate_sum(const RepAssignment& assignment, const std::vector<Word>& words) {
  Matrix total = Matrix::zero(assignment.dim());
  for (const auto& w : words) total += evaluate_word(assignment, w).matrix;
  return total;
}

ResidualRecord make_record(std::string id, std::string family, const Matrix& lhs,
                           const Matrix& rhs, double tolerance,
                           const std::vector<std::size_t>& columns) {
  ResidualRecord rec;
  rec.relation_id = std::move(id);
  rec.family = std::move(family);
  rec.norm_scale = std::max(1.0, max_abs(lhs, columns));
  rec.residual = max_abs(lhs - rhs, columns) / rec.norm_scale;
  rec.tolerance = tolerance;
  rec.passed = rec.residual <= tolerance;
  return rec;
}

ResidualRecord scalar_record(std::string id, std::string family, double residual,
                             double tolerance) {
  ResidualRecord rec;
  rec.relation_id = std::move(id);
  rec.family = std::move(family);
  rec.residual = residual;
  rec.tolerance = tolerance;
  rec.passed = residual <= tolerance;
  return rec;
}

ResidualRecord check_relation(const RepAssignment& assignment, const Relation& relation,
                              double tolerance) {
  const Matrix lhs = evaluate_sum(assignment, relation.lhs);
  const Matrix rhs = evaluate_sum(assignment, relation.rhs);
  ResidualRecord rec = make_record(relation.id, relation.family, lhs, rhs, tolerance,
                                   assignment.check_columns());
  rec.expected = relation.expected_on(assignment.basis().kind);
  return rec;
}

std::vector<ResidualRecord> check_suite(const RepAssignment& assignment,
                                        const std::vector<Relation>& relations,
                                        double tolerance) {
  std::vector<ResidualRecord> out(relations.size());
  const auto count = static_cast<long long>(relations.size());
  // first exception wins; rethrown after the parallel region
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (long long k = 0; k < count; ++k) {
    try {
      out[static_cast<std::size_t>(k)] =
          check_relation(assignment, relations[static_cast<std::size_t>(k)], tolerance);
    } catch (...) {
#pragma omp critical(qosc_suite_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<ResidualRecord> check_suite_serial(const RepAssignment& assignment,
                                               const std::vector<Relation>& relations,
                                               double tolerance) {
  std::vector<ResidualRecord> out;
  out.reserve(relations.size());
  for (const auto& r : relations) out.push_back(check_relation(assignment, r, tolerance));
  return out;
}

}  // namespace qosc
