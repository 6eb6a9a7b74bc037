#include "qosc/virasoro.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <tuple>

#include "qosc/bargmann.hpp"
#include "qosc/errors.hpp"

namespace qosc {

namespace {

std::string l_symbol(int mode, int m) {
  return "l" + std::to_string(mode) + "[" + std::to_string(m) + "]";
}

std::string big_l_symbol(int mode, int m) {
  return "L" + std::to_string(mode) + "[" + std::to_string(m) + "]";
}

std::string scale_product_symbol(int mode) { return "P" + std::to_string(mode); }

void require_mode(const RepAssignment& rep, int mode) {
  if (mode < 1 || mode > rep.n_modes()) {
    throw Error(ErrorKind::InvalidParameter, "mode index " + std::to_string(mode) +
                                                 " outside 1.." +
                                                 std::to_string(rep.n_modes()));
  }
}

// Columns where every Virasoro word over the window is free of cutoff effects.
std::vector<std::size_t> polynomial_columns(const RepAssignment& rep, int window_max) {
  const int margin = 2 * std::max(window_max, 0) + 1;
  auto cols = interior_columns(rep.n_modes(), rep.basis().parameter, margin);
  if (cols.empty()) {
    throw Error(ErrorKind::InvalidParameter,
                "polynomial cutoff too small for the requested Virasoro window");
  }
  return cols;
}

std::string format_complex(complex z) {
  std::ostringstream os;
  os.precision(6);
  os << '(' << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i)";
  return os.str();
}

BraidingMeasurement measure_braiding(const std::string& id, complex predicted, const Matrix& x,
                                     const Matrix& y) {
  BraidingMeasurement b{id, predicted, {}, 0.0, false};
  const double floor = 1e-9 * std::max(1.0, max_abs(y));
  std::vector<complex> ratios;
  for (std::size_t k = 0; k < y.data().size(); ++k) {
    if (std::abs(y.data()[k]) > floor) ratios.push_back(x.data()[k] / y.data()[k]);
  }
  if (ratios.empty()) return b;
  complex mean{};
  for (auto r : ratios) mean += r;
  mean /= static_cast<double>(ratios.size());
  double spread = 0.0;
  for (auto r : ratios) spread = std::max(spread, std::abs(r - mean));
  b.measured = mean;
  b.spread = spread;
  b.supported = true;
  return b;
}

}  // namespace

Matrix build_l(const RepAssignment& rep, int mode, int m) {
  require_mode(rep, mode);
  const Matrix& raise = rep.at(sym::abar(mode)).matrix;
  const Matrix& lower = rep.at(sym::a(mode)).matrix;
  int power = m + 1;
  if (power < 0) {
    if (rep.basis().kind != BasisKind::Grid) {
      throw Error(ErrorKind::InvalidParameter,
                  "l_" + std::to_string(m) +
                      " needs a negative power of abar, which is nilpotent in the " +
                      rep.realization() + " realization");
    }
    const int order = rep.basis().parameter;
    power = ((power % order) + order) % order;
  }
  return matmul(matrix_power(raise, power), lower);
}

Matrix scale_product(const RepAssignment& rep, int mode) {
  require_mode(rep, mode);
  Matrix p = rep.at(sym::scale(mode)).matrix;
  for (int k = mode + 1; k <= rep.n_modes(); ++k) p = matmul(p, rep.at(sym::scale(k)).matrix);
  return p;
}

Matrix build_L(const RepAssignment& rep, int mode, int m) {
  return matmul(inverse(scale_product(rep, mode)), build_l(rep, mode, m));
}

Matrix l_from_L(const RepAssignment& rep, int mode, const Matrix& big_l) {
  return matmul(scale_product(rep, mode), big_l);
}

VirasoroFamily build_family(const RepAssignment& rep, int mode, const std::vector<int>& window,
                            bool rescaled) {
  VirasoroFamily fam{mode, rescaled, {}};
  const Matrix inv_scale = rescaled ? inverse(scale_product(rep, mode)) : Matrix{};
  for (int m : window) {
    Matrix l = build_l(rep, mode, m);
    fam.generators.emplace(m, rescaled ? matmul(inv_scale, l) : std::move(l));
  }
  return fam;
}

std::vector<int> default_window(const RepAssignment& rep) {
  int hi = 3;
  if (rep.basis().kind == BasisKind::Fock) hi = std::min(4, rep.basis().parameter - 2);
  std::vector<int> w;
  for (int m = -1; m <= hi; ++m) w.push_back(m);
  return w;
}

VirasoroCheck check_virasoro(const RepAssignment& rep, const std::vector<int>& window,
                             double tolerance) {
  if (window.empty()) throw Error(ErrorKind::InvalidParameter, "empty Virasoro window");
  const QParameter& p = rep.params();
  const int n = rep.n_modes();

  std::set<int> needed(window.begin(), window.end());
  for (int r : window)
    for (int m : window)
      if (r != m) needed.insert(r + m);
  const std::vector<int> indices(needed.begin(), needed.end());

  RepAssignment vir(p, n, rep.basis(), rep.realization());
  for (int i = 1; i <= n; ++i) {
    const VirasoroFamily small = build_family(rep, i, indices, false);
    const VirasoroFamily big = build_family(rep, i, indices, true);
    for (const auto& [m, op] : small.generators) vir.set(l_symbol(i, m), op);
    for (const auto& [m, op] : big.generators) vir.set(big_l_symbol(i, m), op);
    vir.set(scale_product_symbol(i), scale_product(rep, i));
  }
  if (rep.basis().kind == BasisKind::Polynomial) {
    vir.set_check_columns(polynomial_columns(rep, *std::max_element(window.begin(), window.end())));
  } else {
    vir.set_check_columns(rep.check_columns());
  }

  std::vector<Relation> relations;
  std::vector<std::tuple<std::string, complex, std::string, std::string>> braids;
  for (int i = 1; i <= n; ++i) {
    for (int r : window) {
      for (int m : window) {
        const std::string tag = "." + std::to_string(i) + ".r" + std::to_string(r) + ".m" +
                                std::to_string(m);
        Relation small{"vir.l" + tag, "virasoro bracket",
                       {{1.0, {l_symbol(i, r), l_symbol(i, m)}},
                        {-1.0, {l_symbol(i, m), l_symbol(i, r)}}},
                       {},
                       {}};
        Relation big{"vir.L" + tag, "virasoro rescaled bracket",
                     {{p.q_pow(m - r), {big_l_symbol(i, r), big_l_symbol(i, m)}},
                      {-1.0, {big_l_symbol(i, m), big_l_symbol(i, r)}}},
                     {},
                     {}};
        if (r != m) {
          small.rhs.push_back({p.q_pow(-m) * q_number(p, m - r),
                               {scale_product_symbol(i), l_symbol(i, r + m)}});
          big.rhs.push_back({q_number(p, m - r), {big_l_symbol(i, r + m)}});
        }
        relations.push_back(std::move(small));
        relations.push_back(std::move(big));
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int r : window) {
        for (int m : window) {
          const std::string tag = "." + std::to_string(i) + "." + std::to_string(j) + ".r" +
                                  std::to_string(r) + ".m" + std::to_string(m);
          const complex small_factor = p.omega_pow(static_cast<long long>(m) * (r + 2));
          const complex big_factor = p.omega_pow(static_cast<long long>(m) * r);
          relations.push_back({"vir.lbraid" + tag, "virasoro braiding",
                               {{1.0, {l_symbol(i, r), l_symbol(j, m)}}},
                               {{small_factor, {l_symbol(j, m), l_symbol(i, r)}}},
                               {}});
          relations.push_back({"vir.Lbraid" + tag, "virasoro rescaled braiding",
                               {{1.0, {big_l_symbol(i, r), big_l_symbol(j, m)}}},
                               {{big_factor, {big_l_symbol(j, m), big_l_symbol(i, r)}}},
                               {}});
          braids.emplace_back("vir.lbraid" + tag, small_factor, l_symbol(i, r), l_symbol(j, m));
          braids.emplace_back("vir.Lbraid" + tag, big_factor, big_l_symbol(i, r),
                              big_l_symbol(j, m));
        }
      }
    }
  }

  VirasoroCheck out;
  out.records = check_suite(vir, relations, tolerance);

  std::size_t agree = 0;
  std::size_t supported = 0;
  std::ostringstream mismatches;
  for (const auto& [id, predicted, left, right] : braids) {
    const Matrix& x_left = vir.at(left).matrix;
    const Matrix& x_right = vir.at(right).matrix;
    auto b = measure_braiding(id, predicted, matmul(x_left, x_right), matmul(x_right, x_left));
    if (b.supported) {
      ++supported;
      if (std::abs(b.measured - predicted) <= 1e-9 && b.spread <= 1e-9) {
        ++agree;
      } else {
        mismatches << ' ' << id << ": predicted " << format_complex(predicted) << " measured "
                   << format_complex(b.measured) << " spread " << b.spread << ';';
      }
    }
    out.braiding.push_back(std::move(b));
  }
  if (!braids.empty()) {
    std::ostringstream detail;
    detail << agree << " of " << supported
           << " supported braiding pairs match the predicted q-power scalar ("
           << braids.size() - supported << " pairs have a vanishing product)";
    const std::string extra = mismatches.str();
    if (!extra.empty()) detail << "; mismatches:" << extra;
    out.findings.push_back({"virasoro.braiding", detail.str()});
  }
  return out;
}

std::vector<ClassicalLimitRow> classical_limit_probe(const std::vector<double>& q_values,
                                                     int cutoff, int window_max) {
  if (window_max < 0) throw Error(ErrorKind::InvalidParameter, "window must reach m >= 0");
  std::vector<ClassicalLimitRow> rows;
  for (double qv : q_values) {
    const QParameter p = q_real(qv);
    const RepAssignment rep = build_bargmann_rep(p, 1, cutoff);

    std::vector<int> window;
    for (int m = -1; m <= window_max; ++m) window.push_back(m);
    std::set<int> needed(window.begin(), window.end());
    for (int r : window)
      for (int m : window)
        if (r != m) needed.insert(r + m);

    RepAssignment vir(p, 1, rep.basis(), rep.realization());
    const VirasoroFamily fam = build_family(rep, 1, {needed.begin(), needed.end()}, true);
    for (const auto& [m, op] : fam.generators) vir.set(big_l_symbol(1, m), op);
    vir.set_check_columns(polynomial_columns(rep, window_max));

    double worst = 0.0;
    for (int r : window) {
      for (int m : window) {
        if (r == m) continue;
        const Relation rel{"classical", "classical limit",
                           {{1.0, {big_l_symbol(1, r), big_l_symbol(1, m)}},
                            {-1.0, {big_l_symbol(1, m), big_l_symbol(1, r)}}},
                           {{static_cast<double>(m - r), {big_l_symbol(1, r + m)}}},
                           {}};
        worst = std::max(worst, check_relation(vir, rel, 0.0).residual);
      }
    }
    rows.push_back({qv, worst});
  }
  return rows;
}

}  // namespace qosc
