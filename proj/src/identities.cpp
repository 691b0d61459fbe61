#include "cyclgr/identities.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>

namespace cyclgr {

namespace {

Eigen::VectorXcd generalized_cross(const std::vector<Eigen::VectorXcd>& w) {
  const int k = static_cast<int>(w.size()) + 1;
  Matrix W(k, k - 1);
  for (int c = 0; c < k - 1; ++c) W.col(c) = w[c];
  Eigen::VectorXcd out(k);
  for (int j = 0; j < k; ++j) {
    Matrix sub(k - 1, k - 1);
    int rr = 0;
    for (int r = 0; r < k; ++r) {
      if (r == j) continue;
      sub.row(rr++) = W.row(r);
    }
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    out(j) = sign * ((k == 2) ? sub(0, 0) : sub.determinant());
  }
  return out;
}

Eigen::VectorXcd column_mod(const Matrix& X, std::int64_t i) {
  // twisted periodic extension: v_{c+n} = (-1)^(k-1) v_c
  const int n = static_cast<int>(X.cols());
  const int k = static_cast<int>(X.rows());
  int twists = 0;
  std::int64_t c = i;
  while (c > n) {
    c -= n;
    ++twists;
  }
  while (c < 1) {
    c += n;
    ++twists;
  }
  double sign = (k % 2 == 0 && twists % 2 == 1) ? -1.0 : 1.0;
  return sign * X.col(c - 1);
}

}  // namespace

Complex weyl_L(const Matrix& X, const PosetParams& params) {
  const int k = params.k, l = params.ell;
  Matrix primes(k, k);
  for (int t = 0; t < k; ++t) {
    const std::int64_t i = 1 + static_cast<std::int64_t>(t) * l;
    std::vector<Eigen::VectorXcd> w;
    w.push_back(column_mod(X, i + 1));
    for (int s = 1; s <= k - 2; ++s) w.push_back(column_mod(X, i + s * l));
    primes.col(t) = generalized_cross(w);
  }
  if (k == 1) return primes(0, 0);
  return primes.determinant();
}

Matrix weyl_plucker_matrix(const Matrix& X, const PosetParams& params) {
  const int k = params.k, l = params.ell;
  Matrix M(k, k);
  for (int r = 0; r < k; ++r) {
    const std::int64_t i = 1 + static_cast<std::int64_t>(r) * l;
    for (int c = 0; c < k; ++c) {
      const std::int64_t j = 1 + static_cast<std::int64_t>(c) * l;
      std::vector<std::int64_t> idx{i, j + 1};
      for (int s = 1; s <= k - 2; ++s) idx.push_back(j + s * l);
      M(r, c) = minor_twisted(X, idx);
    }
  }
  return M;
}

PtolemyReport verify_ptolemy(const PosetParams& params, int samples,
                             double tol, Rng& rng) {
  PtolemyReport report;
  auto labels = initial_collection(params);
  const KSubset I1 = labels.labels[0];
  const KSubset I2 = labels.labels[1];
  const KSubset Il1 = labels.labels[params.ell];
  ComponentSignature distinguished;
  for (const auto& sig : components(params.k, params.n, params.ell))
    if (sig.distinguished) distinguished = sig;

  int done = 0;
  int guard = 0;
  while (done < samples && guard < 20 * samples + 100) {
    ++guard;
    Matrix X = sample_point_on_component(distinguished, params.k, params.n,
                                         params.ell, rng);
    const Complex d1 = minor_on(X, I1);
    Matrix W = weyl_plucker_matrix(X, params);
    const double scale = W.cwiseAbs().maxCoeff();
    if (std::abs(d1) < 1e-6 * scale) continue;  // degenerate; resample
    ++done;

    const Complex lhs = d1 * weyl_L(X, params);
    const Complex det = (params.k == 1) ? W(0, 0) : W.determinant();
    const Complex J = minor_on(X, Il1), K = minor_on(X, I2);
    Complex rhs{0, 0};
    for (int s = 0; s <= params.k; ++s)
      rhs += eta_singleton(s, params.k, params.p) * std::pow(K, s) *
             std::pow(J, params.k - s);
    const double mag = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    report.max_residual = std::max(report.max_residual, std::abs(lhs - rhs) / mag);
    report.max_weyl_residual =
        std::max(report.max_weyl_residual,
                 std::abs(lhs - det) / std::max(std::abs(lhs), 1e-300));
  }
  report.samples = done;
  report.pass = done == samples && report.max_residual < tol &&
                report.max_weyl_residual < tol;
  return report;
}

ToeplitzSampleReport verify_toeplitz(const PosetParams& params, int samples,
                                     double tol, Rng& rng) {
  ToeplitzSampleReport report;
  report.samples = samples;
  auto labels = initial_collection(params);
  const KSubset I2 = labels.labels[1];
  const KSubset Il1 = labels.labels[params.ell];
  ComponentSignature distinguished;
  for (const auto& sig : components(params.k, params.n, params.ell))
    if (sig.distinguished) distinguished = sig;
  const int k = params.k;
  for (int t = 0; t < samples; ++t) {
    Matrix X = sample_point_on_component(distinguished, params.k, params.n,
                                         params.ell, rng);
    Matrix W = weyl_plucker_matrix(X, params);
    const double scale = W.cwiseAbs().maxCoeff();
    for (int r = 0; r + 1 < k; ++r)
      for (int c = 0; c + 1 < k; ++c)
        report.max_band_residual =
            std::max(report.max_band_residual,
                     std::abs(W(r, c) - W(r + 1, c + 1)) / scale);
    const Complex J = minor_on(X, Il1), K = minor_on(X, I2);
    const double corner = (k % 2 == 0) ? -1.0 : 1.0;
    double col = std::abs(W(0, 0) - J) / scale;
    col = std::max(col, std::abs(W(k - 1, 0) - corner * K) / scale);
    for (int r = 1; r + 1 < k; ++r)
      col = std::max(col, std::abs(W(r, 0)) / scale);
    report.max_column_residual = std::max(report.max_column_residual, col);
  }
  report.pass = report.max_band_residual < tol &&
                report.max_column_residual < tol;
  return report;
}

ToeplitzMinorReport toeplitz_minor_identity(int t, int k, int p, Complex J,
                                            Complex K) {
  ToeplitzMinorReport report;
  auto band_eta = [&](int m) { return m < 0 ? 0.0 : eta_interval(m, k, p); };
  Matrix M(t, t);
  for (int r = 0; r < t; ++r)
    for (int c = 0; c < t; ++c)
      M(r, c) = band_eta(c - r) * K + band_eta(c - r + 1) * J;
  const Complex det = (t == 1) ? M(0, 0) : M.determinant();
  Complex expect{0, 0};
  for (int s = 0; s <= t; ++s)
    expect += eta_singleton(s, k, p) * std::pow(J, s) * std::pow(K, t - s);
  report.principal_residual =
      std::abs(det - expect) / std::max({std::abs(det), std::abs(expect), 1e-300});

  if (t >= 2) {
    Matrix Mp = M;
    Mp.row(0) = eta_singleton(1, k, p) * M.row(1) - M.row(0);
    Matrix sub(t - 1, t - 1);
    int rr = 0;
    for (int r = 0; r < t; ++r) {
      if (r == 1) continue;  // rows {1} u [3, t], 1-based
      for (int c = 1; c < t; ++c) sub(rr, c - 1) = Mp(r, c);
      ++rr;
    }
    const Complex off = (t == 2) ? sub(0, 0) : sub.determinant();
    const Complex expect_off =
        eta_singleton(t, k, p) * std::pow(J, t - 1);
    report.off_residual = std::abs(off - expect_off) /
                          std::max({std::abs(off), std::abs(expect_off), 1.0});
  }
  return report;
}

double eta_recurrence_residual(int k, int p) {
  double worst = 0;
  for (int j = 1; j <= k - 1; ++j) {
    for (int s = 1; j + s + k <= p; ++s) {
      std::vector<int> mid, full;
      for (int v = 1; v < s; ++v) mid.push_back(v);
      full = mid;
      full.push_back(s);
      mid.push_back(j + s);
      std::vector<int> full2 = full;
      full2.push_back(j + s);
      const double lhs = eta_singleton(j, k, p) * eta_interval(s, k, p);
      const double rhs = eta_ratio(mid, k, p) + eta_ratio(full2, k, p);
      worst = std::max(worst,
                       std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
    }
  }
  return worst;
}

double first_row_relation_residual(const PosetParams& params, int samples,
                                   Rng& rng) {
  auto labels = initial_collection(params);
  const KSubset I2 = labels.labels[1];
  const KSubset Il1 = labels.labels[params.ell];
  ComponentSignature distinguished;
  for (const auto& sig : components(params.k, params.n, params.ell))
    if (sig.distinguished) distinguished = sig;
  const int k = params.k, l = params.ell;
  double worst = 0;
  for (int t = 0; t < samples; ++t) {
    Matrix X = sample_point_on_component(distinguished, params.k, params.n,
                                         params.ell, rng);
    const Complex J = minor_on(X, Il1), K = minor_on(X, I2);
    for (int s = 2; 1 + (s + k - 3) * l <= params.n && s <= k + 1; ++s) {
      std::vector<std::int64_t> idx{1, 2 + (s - 1) * l};
      for (int u = s; u <= s + k - 3; ++u) idx.push_back(1 + u * l);
      if (static_cast<int>(idx.size()) != k) continue;
      const Complex lhs = minor_twisted(X, idx);
      const Complex rhs =
          eta_interval(s - 2, k, params.p) * K + eta_interval(s - 1, k, params.p) * J;
      worst = std::max(worst, std::abs(lhs - rhs) /
                                  std::max({std::abs(lhs), std::abs(rhs), 1e-300}));
    }
  }
  return worst;
}

Complex BandMatrixData::entry(std::int64_t r, std::int64_t c) const {
  const std::int64_t d = c - r;
  if (d < 0 || d > k) return Complex{0, 0};
  return band(mod1(r, ell) - 1, d);
}

Complex BandMatrixData::minor(const std::vector<std::int64_t>& rows,
                              const std::vector<std::int64_t>& cols) const {
  const int m = static_cast<int>(rows.size());
  if (cols.size() != rows.size())
    throw std::invalid_argument("minor needs a square index pair");
  Matrix M(m, m);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) M(r, c) = entry(rows[r], cols[c]);
  if (m == 0) return Complex{1, 0};
  if (m == 1) return M(0, 0);
  return M.determinant();
}

BandMatrixData band_map(const Matrix& X, const PosetParams& params) {
  BandMatrixData out;
  out.k = params.k;
  out.ell = params.ell;
  out.band = Matrix::Zero(params.ell, params.k + 1);
  for (int i = 1; i <= params.ell; ++i) {
    for (int d = 0; d <= params.k; ++d) {
      const std::int64_t j = i + d;
      std::vector<std::int64_t> idx;
      for (std::int64_t v = j - params.k; v <= j; ++v)
        if (v != i) idx.push_back(v);
      out.band(i - 1, d) = minor_twisted(X, idx);
    }
  }
  out.A = Matrix::Zero(params.ell, params.ell);
  out.B = Matrix::Zero(params.ell, params.ell);
  for (int i = 1; i <= params.ell; ++i) {
    for (int j = 1; j <= params.ell; ++j) {
      out.A(i - 1, j - 1) = out.entry(i, j + params.k - params.ell);
      out.B(i - 1, j - 1) = out.entry(i, j + params.k);
    }
  }
  return out;
}

GsvReport gsv_checks(const PosetParams& params, int samples, double tol,
                     Rng& rng) {
  GsvReport report;
  report.samples = samples;
  const int k = params.k, l = params.ell, n = params.n;
  if (k >= l)
    throw std::invalid_argument("band comparisons need k < l");
  auto labels = initial_collection(params);
  const int N = labels.N;
  ComponentSignature distinguished;
  for (const auto& sig : components(k, n, params.ell))
    if (sig.distinguished) distinguished = sig;

  // row and column sets of the nested row-solid minors
  std::vector<std::vector<std::int64_t>> row_sets(N + 1), col_sets(N + 1);
  {
    std::vector<std::int64_t> admissible;  // j in [(k-1)l], j != 1 mod l
    for (std::int64_t j = 1; j <= static_cast<std::int64_t>(k - 1) * l; ++j)
      if (j % l != 1 % l) admissible.push_back(j);
    for (int i = 1; i <= N; ++i) {
      const int size = N - i + 1;
      row_sets[i] = {admissible.end() - size, admissible.end()};
      for (std::int64_t c = k + i; c <= static_cast<std::int64_t>(k - 1) * l + 1;
           ++c)
        col_sets[i].push_back(c);
    }
  }

  std::vector<std::vector<Complex>> minor_ratios(N + 1);
  std::vector<Complex> special_ratios;
  std::vector<std::vector<Complex>> frozen_values;
  for (int t = 0; t < samples; ++t) {
    Matrix X =
        sample_point_on_component(distinguished, k, n, params.ell, rng);
    auto M = band_map(X, params);
    for (int i = 1; i <= N; ++i) {
      Complex lhs = M.minor(row_sets[i], col_sets[i]);
      Complex rhs = minor_on(X, labels.labels[i - 1]);
      for (int b = i; b <= N - 1; ++b) {
        std::vector<std::int64_t> interval;
        for (std::int64_t v = b + 1; v <= b + k; ++v) interval.push_back(v);
        rhs *= minor_twisted(X, interval);
      }
      minor_ratios[i].push_back(lhs / rhs);
    }
    if (k == 3) {
      // the special-exchange expression as a 2x2 determinant in row-solid
      // minors, against the quadratic in Plucker coordinates; they agree up
      // to a monomial in the frozen interval coordinates
      auto rows_without = [&](std::vector<std::int64_t> omit) {
        std::vector<std::int64_t> rows;
        for (std::int64_t r = 2; r <= 2 * l + 1; ++r)
          if (std::find(omit.begin(), omit.end(), r) == omit.end())
            rows.push_back(r);
        return rows;
      };
      std::vector<std::int64_t> cols;
      for (std::int64_t c = 5; c <= 2 * l + 1; ++c) cols.push_back(c);
      Complex z =
          M.minor(rows_without({2, l + 1, 2 * l + 1}), cols) *
              M.minor(rows_without({2, l + 2, 2 * l + 1}), cols) -
          M.minor(rows_without({2, l + 1, l + 2}), cols) *
              M.minor(rows_without({l + 1, l + 2, 2 * l + 1}), cols);
      Complex quad =
          minor_twisted(X, {2, l + 1, 2 * l + 1}) *
              minor_twisted(X, {l + 2, 2 * l + 2, 3 * l + 1}) -
          minor_twisted(X, {2, l + 1, l + 2}) *
              minor_twisted(X, {2 * l + 1, 2 * l + 2, 3 * l + 1});
      std::vector<Complex> frozens;
      for (int c = 1; c <= l; ++c)
        frozens.push_back(minor_on(X, labels.labels[N + c - 1]));
      special_ratios.push_back(z / quad);
      frozen_values.push_back(frozens);
    }
  }

  auto spread = [](const std::vector<Complex>& values) {
    Complex mean{0, 0};
    for (const Complex& v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double worst = 0;
    for (const Complex& v : values)
      worst = std::max(worst, std::abs(v - mean) / std::max(1.0, std::abs(mean)));
    return worst;
  };
  for (int i = 1; i <= N; ++i) {
    ++report.minor_checks;
    report.max_minor_residual =
        std::max(report.max_minor_residual, spread(minor_ratios[i]));
  }
  if (k == 3) {
    // solve the frozen exponents from the sampled magnitudes, then demand
    // the exponent-corrected ratio be constant
    const int m = static_cast<int>(special_ratios.size());
    Eigen::MatrixXd basis(m, l);
    Eigen::VectorXd logs(m);
    for (int t = 0; t < m; ++t) {
      for (int c = 0; c < l; ++c)
        basis(t, c) = std::log(std::abs(frozen_values[t][c]));
      logs(t) = std::log(std::abs(special_ratios[t]));
    }
    Eigen::VectorXd sol = basis.colPivHouseholderQr().solve(logs);
    std::vector<Complex> corrected;
    bool integral = true;
    for (int c = 0; c < l; ++c)
      if (std::abs(sol(c) - std::round(sol(c))) > 1e-6) integral = false;
    if (integral) {
      for (int t = 0; t < m; ++t) {
        Complex r = special_ratios[t];
        for (int c = 0; c < l; ++c)
          r /= std::pow(frozen_values[t][c],
                        static_cast<int>(std::round(sol(c))));
        corrected.push_back(r);
      }
      report.max_special_residual = spread(corrected);
    } else {
      report.max_special_residual = 1;
    }
  }
  report.pass = report.max_minor_residual < tol &&
                report.max_special_residual < tol;
  return report;
}

IsospectralReport isospectrality_experiment(const PosetParams& params,
                                            int samples, Rng& rng) {
  IsospectralReport report;
  report.samples = samples;
  report.conjectural = params.k >= 3;
  const int k = params.k, l = params.ell;
  if (k >= l)
    throw std::invalid_argument("band comparisons need k < l");
  ComponentSignature distinguished;
  for (const auto& sig : components(k, params.n, params.ell))
    if (sig.distinguished) distinguished = sig;

  std::vector<std::vector<Complex>> coeffs;  // per sample: e_1..e_l of B^-1 A
  std::vector<std::vector<Complex>> spectra;
  int done = 0, guard = 0;
  while (done < samples && guard < 20 * samples + 100) {
    ++guard;
    Matrix X =
        sample_point_on_component(distinguished, k, params.n, params.ell, rng);
    auto M = band_map(X, params);
    if (std::abs(M.B.determinant()) < 1e-10 * std::pow(M.B.cwiseAbs().maxCoeff(), l))
      continue;  // singular block; resample
    ++done;
    Matrix Q = M.B.partialPivLu().solve(M.A);
    Eigen::ComplexEigenSolver<Matrix> solver(Q);
    std::vector<Complex> mu(solver.eigenvalues().data(),
                            solver.eigenvalues().data() + l);
    // characteristic coefficients of det(tI + Q): elementary symmetric sums
    std::vector<Complex> e(l + 1, Complex{0, 0});
    e[0] = Complex{1, 0};
    for (const Complex& m : mu)
      for (int s = l; s >= 1; --s) e[s] += m * e[s - 1];
    coeffs.push_back({e.begin() + 1, e.end()});
    std::sort(mu.begin(), mu.end(), [](Complex a, Complex b) {
      return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b)
                                        : std::arg(a) < std::arg(b);
    });
    spectra.push_back(mu);
  }
  report.samples = done;
  if (done == 0) return report;

  for (int s = 0; s < l; ++s) {
    Complex mean{0, 0};
    for (const auto& c : coeffs) mean += c[s];
    mean /= static_cast<double>(coeffs.size());
    for (const auto& c : coeffs)
      report.max_coeff_std = std::max(
          report.max_coeff_std, std::abs(c[s] - mean) / std::max(1.0, std::abs(mean)));
  }

  // nonzero spectrum of B^-1 A: q^{j-(k-1)/2}, so the roots of det(tB+A)
  // in t are -q^{j-(k-1)/2}
  std::vector<Complex> predicted;
  for (int j = 0; j < k; ++j)
    predicted.push_back(std::polar(
        1.0, 2 * std::numbers::pi / params.p * (j - (k - 1) / 2.0)));
  std::sort(predicted.begin(), predicted.end(), [](Complex a, Complex b) {
    return std::arg(a) < std::arg(b);
  });
  double worst = 0;
  for (const auto& mu : spectra) {
    std::vector<Complex> nonzero;
    for (const Complex& m : mu)
      if (std::abs(m) > 1e-6) nonzero.push_back(m);
    if (static_cast<int>(nonzero.size()) != k) {
      worst = 1;
      break;
    }
    std::sort(nonzero.begin(), nonzero.end(), [](Complex a, Complex b) {
      return std::arg(a) < std::arg(b);
    });
    for (int j = 0; j < k; ++j)
      worst = std::max(worst, std::abs(nonzero[j] - predicted[j]));
  }
  report.eigenvalue_residual = worst;
  return report;
}

namespace {

// power series with exact integer coefficients, truncated at max_d
using Series = std::vector<long long>;

Series one(int len) {
  Series s(len, 0);
  s[0] = 1;
  return s;
}

Series mul(const Series& a, const Series& b) {
  Series out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// 1 / (1 - x^step)^power
Series inv_pow(int len, int step, int power) {
  Series base(len, 0);
  for (int d = 0; d * step < len; ++d) base[d * step] = 1;
  Series out = one(len);
  for (int t = 0; t < power; ++t) out = mul(out, base);
  return out;
}

Series shift(const Series& a, int by) {
  Series out(a.size(), 0);
  for (std::size_t i = 0; i + by < a.size(); ++i) out[i + by] = a[i];
  return out;
}

Series scale(const Series& a, long long c) {
  Series out = a;
  for (auto& v : out) v *= c;
  return out;
}

Series add(const Series& a, const Series& b) {
  Series out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

long long llbinom(long long n, long long r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  long long out = 1;
  for (long long i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

}  // namespace

CountingReport counting_identities(int max_d) {
  CountingReport report;
  report.max_d = max_d;
  const int len = max_d + 1;

  report.convolution_square = true;
  for (int l = 2; l <= 8 && report.convolution_square; ++l) {
    for (int d = 0; d <= max_d; ++d) {
      long long lhs = 0;
      for (int a = 0; a <= l - 1; ++a)
        lhs += llbinom(l - 1, a) * llbinom(l - 1 + a, l - 1) *
               llbinom(d + l - 1, d - a);
      long long rhs = llbinom(d + l - 1, l - 1);
      rhs *= rhs;
      if (lhs != rhs) report.convolution_square = false;
    }
  }

  {
    Series rhs(len, 0);
    rhs = add(rhs, inv_pow(len, 1, 2));
    rhs = add(rhs, shift(scale(inv_pow(len, 1, 3), 6), 1));
    rhs = add(rhs, shift(scale(mul(inv_pow(len, 1, 2), inv_pow(len, 2, 1)), 2), 2));
    rhs = add(rhs, shift(scale(inv_pow(len, 1, 4), 4), 2));
    rhs = add(rhs, shift(scale(mul(inv_pow(len, 1, 3), inv_pow(len, 2, 1)), 4), 3));
    report.cubes_series = true;
    for (int d = 0; d <= max_d; ++d) {
      long long cube = static_cast<long long>(d + 1) * (d + 1) * (d + 1);
      if (rhs[d] != cube) report.cubes_series = false;
    }
  }

  report.hexagon_binomials = true;
  for (int d = 0; d <= max_d; ++d) {
    long long lhs = 6 * llbinom(d + 2, 4) + 6 * llbinom(d + 2, 3) +
                    llbinom(d + 2, 2);
    long long rhs = llbinom(d + 2, 2) * llbinom(d + 2, 2);
    if (lhs != rhs) report.hexagon_binomials = false;
  }

  {
    Series rhs(len, 0);
    auto term = [&](long long c, int shift_by, int p1, int p2) {
      rhs = add(rhs, shift(scale(mul(inv_pow(len, 1, p1), inv_pow(len, 2, p2)),
                                 c),
                           shift_by));
    };
    term(1, 0, 4, 0);
    term(20, 1, 5, 0);
    term(4, 2, 4, 1);
    term(86, 2, 6, 0);
    term(24, 3, 5, 1);
    term(2, 4, 4, 2);
    term(124, 3, 7, 0);
    term(44, 4, 6, 1);
    term(8, 5, 5, 2);
    term(56, 4, 8, 0);
    term(24, 5, 7, 1);
    term(8, 6, 6, 2);
    report.twelve_term_series = true;
    for (int d = 0; d <= max_d; ++d) {
      // (d+1)(d+3)(d+2)^2 / 12 * C(d+3,3)
      long long quartic = static_cast<long long>(d + 1) * (d + 3) * (d + 2) *
                          (d + 2) / 12;
      long long dim = quartic * llbinom(d + 3, 3);
      if (rhs[d] != dim) report.twelve_term_series = false;
    }
  }

  report.pass = report.convolution_square && report.cubes_series &&
                report.hexagon_binomials && report.twelve_term_series;
  return report;
}

GradingReport grading_obstruction(int walks, int length, Rng& rng) {
  GradingReport report;
  report.walks = walks;
  report.steps = length;
  auto params = PosetParams::make(4, 2, 8);
  Rng panel_rng(12345);
  auto panel = make_component_panel(params, 9, panel_rng);
  auto cs = initial_cs_seed(params, panel);

  GradedSeed seed;
  seed.N = cs.N;
  seed.B = cs.B;
  seed.degrees = cs.degrees;
  for (const auto& z : cs.strings) {
    std::vector<bool> sup;
    for (double v : z) sup.push_back(v != 0.0);
    seed.support.push_back(sup);
  }
  auto d2 = [](int a, int b) {
    Eigen::VectorXi v(2);
    v << a, b;
    return v;
  };
  seed.deg = {d2(4, 0), d2(3, 1), d2(3, 1), d2(2, 2), d2(2, 2)};

  auto forms_ok = [](const GradedSeed& s) {
    return s.deg[0](0) - s.deg[0](1) == 4 && s.deg[1](0) - s.deg[1](1) == 2 &&
           s.deg[2](0) - s.deg[2](1) == 2;
  };
  report.forms_preserved = forms_ok(seed);
  std::uniform_int_distribution<int> pick(0, 2);
  for (int w = 0; w < walks && report.forms_preserved; ++w) {
    GradedSeed cur = seed;
    for (int step = 0; step < length; ++step) {
      cur = mutate_graded(cur, pick(rng));
      if (!forms_ok(cur)) {
        report.forms_preserved = false;
        break;
      }
    }
  }

  auto scan = ell_cluster_variable_scan(4, 8, 2);
  report.scan_subsets = scan.subset_count;
  report.scan_orbits = scan.orbits.size();

  // degree shapes admissible for extended cluster variables: difference of
  // symbol exponents 4 (special vertex), 2 (other mutables), 0 (frozen)
  for (const auto& rep : std::vector<std::vector<int>>{{2, 4, 6, 8},
                                                       {2, 3, 4, 6},
                                                       {2, 4, 5, 6},
                                                       {2, 4, 5, 8},
                                                       {1, 2, 4, 6}}) {
    int odd = 0;
    for (int e : rep) odd += e % 2;
    const int diff = odd - (4 - odd);
    if (diff != 4 && diff != 2 && diff != 0) ++report.listed_violations;
  }
  report.pass = report.forms_preserved && report.scan_subsets == 42 &&
                report.scan_orbits == 12 && report.listed_violations == 5;
  return report;
}

ScanResult ell_cluster_variable_scan(int k, int n, int ell) {
  ScanResult result;
  std::set<KSubset> seen;
  for (const auto& I : all_subsets(n, k)) {
    if (seen.count(I)) continue;
    std::vector<KSubset> orbit;
    KSubset J = I;
    do {
      orbit.push_back(J);
      J = rotate(J, ell);
    } while (!(J == I));
    bool ws = true;
    for (std::size_t a = 0; a < orbit.size() && ws; ++a)
      for (std::size_t b = a + 1; b < orbit.size() && ws; ++b)
        ws = weakly_separated(orbit[a], orbit[b]);
    for (const auto& O : orbit) seen.insert(O);
    if (ws) {
      std::sort(orbit.begin(), orbit.end());
      result.orbits.push_back(orbit);
      result.subset_count += orbit.size();
    }
  }
  std::sort(result.orbits.begin(), result.orbits.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return result;
}

}  // namespace cyclgr
