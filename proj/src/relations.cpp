#include "qosc/relations.hpp"

#include <algorithm>
#include <string>

#include "qosc/errors.hpp"

namespace qosc {

namespace {

using Symbols = std::vector<std::string>;

std::string idx(int i) { return std::to_string(i); }

Symbols repeat(const std::string& s, int times) { return Symbols(static_cast<std::size_t>(times), s); }

Symbols concat(Symbols lhs, const Symbols& rhs) {
  lhs.insert(lhs.end(), rhs.begin(), rhs.end());
  return lhs;
}

// Q_from Q_{from+1} ... Q_n
Symbols scale_tail(int from, int n) {
  Symbols s;
  for (int k = from; k <= n; ++k) s.push_back(sym::scale(k));
  return s;
}

void add_exchange(const QParameter& p, int n, std::vector<Relation>& out) {
  const complex w = p.omega_pow(1);
  const complex w_inv = p.omega_pow(-1);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      out.push_back({"osc.abar" + idx(i) + ".abar" + idx(j), "creation exchange",
                     {{1.0, {sym::abar(i), sym::abar(j)}}},
                     {{w, {sym::abar(j), sym::abar(i)}}},
                     {}});
      out.push_back({"osc.a" + idx(i) + ".a" + idx(j), "annihilation exchange",
                     {{1.0, {sym::a(i), sym::a(j)}}},
                     {{w_inv, {sym::a(j), sym::a(i)}}},
                     {}});
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      out.push_back({"osc.cross.a" + idx(i) + ".abar" + idx(j), "cross exchange",
                     {{1.0, {sym::a(i), sym::abar(j)}}},
                     {{w, {sym::abar(j), sym::a(i)}}},
                     {}});
    }
  }
  const complex q = p.q();
  for (int i = 1; i <= n; ++i) {
    Relation r{"osc.diag." + idx(i), "diagonal", {{1.0, {sym::a(i), sym::abar(i)}}}, {}, {}};
    r.rhs.push_back({1.0, {}});
    r.rhs.push_back({q, {sym::abar(i), sym::a(i)}});
    for (int k = i + 1; k <= n; ++k) r.rhs.push_back({q - 1.0, {sym::abar(k), sym::a(k)}});
    out.push_back(std::move(r));
  }
}

void add_number(int n, std::vector<Relation>& out) {
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Relation lower{"osc.number.N" + idx(i) + ".a" + idx(j), "number commutator",
                     {{1.0, {sym::number(i), sym::a(j)}}, {-1.0, {sym::a(j), sym::number(i)}}},
                     {},
                     {}};
      Relation raise{"osc.number.N" + idx(i) + ".abar" + idx(j), "number commutator",
                     {{1.0, {sym::number(i), sym::abar(j)}},
                      {-1.0, {sym::abar(j), sym::number(i)}}},
                     {},
                     {}};
      if (i == j) {
        lower.rhs.push_back({-1.0, {sym::a(j)}});
        raise.rhs.push_back({1.0, {sym::abar(j)}});
      }
      out.push_back(std::move(lower));
      out.push_back(std::move(raise));
    }
  }
}

void add_scale(const QParameter& p, int n, int max_power, std::vector<Relation>& out) {
  const complex inv_qm1 = 1.0 / (p.q() - 1.0);
  for (int i = 1; i <= n; ++i) {
    // abar_i a_i = Q_{i+1}...Q_n [N_i] with [N_i] = (Q_i - 1)/(q - 1)
    const Symbols tail = scale_tail(i + 1, n);
    out.push_back({"osc.bilinear." + idx(i), "number bilinear",
                   {{1.0, {sym::abar(i), sym::a(i)}}},
                   {{inv_qm1, concat(tail, {sym::scale(i)})}, {-inv_qm1, tail}},
                   {}});
    out.push_back({"osc.commutator." + idx(i), "scale commutator",
                   {{1.0, {sym::a(i), sym::abar(i)}}, {-1.0, {sym::abar(i), sym::a(i)}}},
                   {{1.0, scale_tail(i, n)}},
                   {}});
    for (int m = 1; m <= max_power; ++m) {
      const Symbols power = repeat(sym::abar(i), m);
      const complex coeff = p.q_pow(1 - m) * q_number(p, m);
      out.push_back({"osc.power_commutator." + idx(i) + ".m" + idx(m), "power commutator",
                     {{1.0, concat({sym::a(i)}, power)}, {-1.0, concat(power, {sym::a(i)})}},
                     {{coeff, concat(scale_tail(i, n), repeat(sym::abar(i), m - 1))}},
                     {}});
    }
  }
}

void add_nilpotency(int n, int order, bool creation_powers, std::vector<Relation>& out) {
  for (int i = 1; i <= n; ++i) {
    out.push_back({"osc.nilpotent.a" + idx(i), "nilpotency", {{1.0, repeat(sym::a(i), order)}},
                   {}, {}});
    if (!creation_powers) continue;
    // abar^N vanishes on truncated Fock/polynomial spaces and equals the
    // identity on the grid; each reading is checked and labeled separately
    out.push_back({"osc.power_zero.abar" + idx(i), "creation power",
                   {{1.0, repeat(sym::abar(i), order)}},
                   {},
                   {BasisKind::Grid}});
    out.push_back({"osc.power_identity.abar" + idx(i), "creation power",
                   {{1.0, repeat(sym::abar(i), order)}},
                   {{1.0, {}}},
                   {BasisKind::Fock, BasisKind::Polynomial}});
  }
}

}  // namespace

OscillatorSuiteOptions default_oscillator_options(int n_modes, std::optional<int> order) {
  OscillatorSuiteOptions o;
  o.n_modes = n_modes;
  o.max_commutator_power = order ? std::min(6, *order - 1) : 6;
  o.nilpotency_order = order;
  return o;
}

std::vector<Relation> relation_suite_oscillator(const QParameter& p,
                                                const OscillatorSuiteOptions& options) {
  if (options.n_modes < 1) throw Error(ErrorKind::InvalidParameter, "n_modes must be >= 1");
  std::vector<Relation> out;
  add_exchange(p, options.n_modes, out);
  if (options.number_operators) add_number(options.n_modes, out);
  if (options.scale_operators) add_scale(p, options.n_modes, options.max_commutator_power, out);
  if (options.nilpotency_order) {
    if (*options.nilpotency_order < 2) {
      throw Error(ErrorKind::InvalidParameter, "nilpotency order must be >= 2");
    }
    add_nilpotency(options.n_modes, *options.nilpotency_order, options.creation_power_checks,
                   out);
  }
  return out;
}

std::vector<Relation> relation_suite_oscillator(const QParameter& p, int n_modes,
                                                std::optional<int> nilpotency_order) {
  return relation_suite_oscillator(p, default_oscillator_options(n_modes, nilpotency_order));
}

std::vector<Relation> relation_suite_exchange(const QParameter& p, int n_modes) {
  std::vector<Relation> out;
  add_exchange(p, n_modes, out);
  return out;
}

}  // namespace qosc
