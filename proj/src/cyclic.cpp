#include "qosc/cyclic.hpp"

#include <algorithm>

#include "qosc/errors.hpp"
#include "qosc/relations.hpp"

namespace qosc {

namespace {

void require_root(const QParameter& p) {
  if (!p.is_root_of_unity()) {
    throw Error(ErrorKind::UnsupportedMode,
                "the cyclic realization requires q to be a root of unity");
  }
}

std::vector<std::string> repeat(const std::string& s, int times) {
  return std::vector<std::string>(static_cast<std::size_t>(times), s);
}

}  // namespace

std::string shift_g(int i) { return "g" + std::to_string(i); }
std::string shift_h(int i) { return "h" + std::to_string(i); }
std::string coordinate(int i) { return "X" + std::to_string(i); }

RepAssignment build_shift_ops(const QParameter& p, int n_modes, std::size_t cap) {
  require_root(p);
  const int order = p.order();
  const MixedRadix grid(n_modes, order, cap);
  const std::size_t dim = grid.size();

  RepAssignment rep(p, n_modes, {BasisKind::Grid, n_modes, order}, "cyclic");
  for (int i = 1; i <= n_modes; ++i) {
    Matrix g(dim), h(dim), x(dim);
    for (std::size_t r = 0; r < dim; ++r) {
      const auto n = grid.digits(r);
      const int ni = n[static_cast<std::size_t>(i - 1)];

      auto lowered = n;
      auto& li = lowered[static_cast<std::size_t>(i - 1)];
      li = (li + order - 1) % order;
      h(grid.rank(lowered), r) = 1.0;

      auto tail = n;
      for (std::size_t k = static_cast<std::size_t>(i); k < tail.size(); ++k) {
        tail[k] = (tail[k] + order - 1) % order;
      }
      g(grid.rank(tail), r) = p.q_pow(ni);
      x(r, r) = p.q_pow(ni);
    }
    rep.set(shift_g(i), std::move(g));
    rep.set(sym::scale(i), h);
    rep.set(shift_h(i), std::move(h));
    rep.set(coordinate(i), std::move(x));
  }
  return rep;
}

std::vector<Relation> relation_suite_shift(const QParameter& p, int n_modes) {
  require_root(p);
  const complex q = p.q();
  const int order = p.order();
  const auto id = [](int k) { return std::to_string(k); };
  std::vector<Relation> out;
  for (int i = 1; i <= n_modes; ++i) {
    out.push_back({"shift.hg." + id(i), "shift exchange",
                   {{1.0, {shift_h(i), shift_g(i)}}},
                   {{q, {shift_g(i), shift_h(i)}}},
                   {}});
    out.push_back({"shift.gN." + id(i), "shift order", {{1.0, repeat(shift_g(i), order)}},
                   {{1.0, {}}}, {}});
    out.push_back({"shift.hN." + id(i), "shift order", {{1.0, repeat(shift_h(i), order)}},
                   {{1.0, {}}}, {}});
  }
  for (int i = 1; i <= n_modes; ++i) {
    for (int j = 1; j <= n_modes; ++j) {
      if (i < j) {
        out.push_back({"shift.gg." + id(i) + "." + id(j), "shift exchange",
                       {{1.0, {shift_g(i), shift_g(j)}}},
                       {{q, {shift_g(j), shift_g(i)}}},
                       {}});
        out.push_back({"shift.hh." + id(i) + "." + id(j), "shift commuting",
                       {{1.0, {shift_h(i), shift_h(j)}}},
                       {{1.0, {shift_h(j), shift_h(i)}}},
                       {}});
      }
      if (i != j) {
        out.push_back({"shift.hg." + id(i) + "." + id(j), "shift commuting",
                       {{1.0, {shift_h(i), shift_g(j)}}},
                       {{1.0, {shift_g(j), shift_h(i)}}},
                       {}});
      }
    }
  }
  return out;
}

const char* to_string(ExponentMode mode) {
  switch (mode) {
    case ExponentMode::SquaredDiff: return "squared_diff";
    case ExponentMode::SquaredH: return "squared_h";
    case ExponentMode::Linear: return "linear";
  }
  return "unknown";
}

ExponentMode parse_exponent_mode(const std::string& name) {
  for (ExponentMode m : all_exponent_modes()) {
    if (name == to_string(m)) return m;
  }
  throw Error(ErrorKind::Usage,
              "unknown exponent mode '" + name + "' (expected squared_diff, squared_h or linear)");
}

const std::vector<ExponentMode>& all_exponent_modes() {
  static const std::vector<ExponentMode> modes{ExponentMode::SquaredDiff, ExponentMode::SquaredH,
                                               ExponentMode::Linear};
  return modes;
}

CyclicRealization build_cyclic_rep(const QParameter& p, int n_modes, ExponentMode mode,
                                   double tolerance, std::size_t cap) {
  RepAssignment rep = build_shift_ops(p, n_modes, cap);
  const std::size_t dim = rep.dim();
  const Matrix id = Matrix::identity(dim);
  const complex inv_1mq = 1.0 / (1.0 - p.q());

  for (int i = 1; i <= n_modes; ++i) {
    const Matrix& g = rep.at(shift_g(i)).matrix;
    const Matrix& h = rep.at(shift_h(i)).matrix;

    Matrix factor;
    switch (mode) {
      case ExponentMode::SquaredDiff: {
        const Matrix d = id - h;
        factor = matmul(d, d);
        break;
      }
      case ExponentMode::SquaredH: factor = id - matmul(h, h); break;
      case ExponentMode::Linear: factor = id - h; break;
    }
    // g is a unit-modulus generalized permutation, so g^{-1} = g^dagger exactly
    Matrix a = adjoint(g);
    for (int k = i + 1; k <= n_modes; ++k) {
      const Matrix& hk = rep.at(shift_h(k)).matrix;
      a = matmul(a, matmul(hk, hk));
    }
    a = matmul(a, factor);
    a *= inv_1mq;

    rep.set(sym::a(i), std::move(a));
    rep.set(sym::abar(i), g);
  }

  CyclicRealization out{std::move(rep), mode, {}, false, 0.0};
  out.conformance = check_suite(out.rep, relation_suite_exchange(p, n_modes), tolerance);
  out.conforms = std::all_of(out.conformance.begin(), out.conformance.end(),
                             [](const ResidualRecord& r) { return r.passed; });
  for (const auto& r : out.conformance) out.max_residual = std::max(out.max_residual, r.residual);
  return out;
}

std::vector<ModeOutcome> compare_exponent_modes(const QParameter& p, int n_modes,
                                                const std::vector<ExponentMode>& modes,
                                                double tolerance, std::size_t cap) {
  std::vector<ModeOutcome> out;
  for (ExponentMode m : modes) {
    const auto real = build_cyclic_rep(p, n_modes, m, tolerance, cap);
    out.push_back({m, real.conforms, real.max_residual});
  }
  return out;
}

}  // namespace qosc
