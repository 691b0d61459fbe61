#include "cyclgr/grassmann.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace cyclgr {

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t subset_rank(const KSubset& I) {
  std::int64_t rank = 0;
  int prev = 0, remaining = I.size();
  for (int e : I.elements()) {
    for (int v = prev + 1; v < e; ++v)
      rank += binomial(I.n - v, remaining - 1);
    prev = e;
    --remaining;
  }
  return rank;
}

Complex minor_on(const Matrix& X, const KSubset& cols) {
  const int k = static_cast<int>(X.rows());
  if (cols.size() != k) throw std::invalid_argument("minor needs k columns");
  Matrix M(k, k);
  int c = 0;
  for (int e : cols.elements()) M.col(c++) = X.col(e - 1);
  if (k == 1) return M(0, 0);
  if (k == 2) return M(0, 0) * M(1, 1) - M(0, 1) * M(1, 0);
  return M.determinant();
}

Complex minor_alternating(const Matrix& X,
                          const std::vector<std::int64_t>& idx) {
  const int n = static_cast<int>(X.cols());
  std::vector<int> reduced;
  reduced.reserve(idx.size());
  for (auto v : idx) reduced.push_back(mod1(v, n));
  std::vector<int> sorted = reduced;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return Complex{0, 0};
  // parity of the sorting permutation
  int sign = 1;
  std::vector<int> work = reduced;
  for (std::size_t i = 0; i < work.size(); ++i) {
    while (work[i] != sorted[i]) {
      auto it = std::find(work.begin() + i + 1, work.end(), sorted[i]);
      std::iter_swap(work.begin() + i, it);
      sign = -sign;
    }
  }
  return static_cast<double>(sign) * minor_on(X, KSubset(sorted, n));
}

Complex minor_twisted(const Matrix& X, const std::vector<std::int64_t>& idx) {
  const int n = static_cast<int>(X.cols());
  const int k = static_cast<int>(X.rows());
  int twists = 0;
  for (std::int64_t v : idx) {
    std::int64_t shifted = v;
    while (shifted > n) {
      shifted -= n;
      ++twists;
    }
    while (shifted < 1) {
      shifted += n;
      ++twists;
    }
  }
  const double sign = (k % 2 == 0 && twists % 2 == 1) ? -1.0 : 1.0;
  return sign * minor_alternating(X, idx);
}

double PluckerVector::max_abs() const {
  double m = 0;
  for (const Complex& c : coords) m = std::max(m, std::abs(c));
  return m;
}

KSubset PluckerVector::argmax_abs() const {
  auto subsets = all_subsets(n, k);
  std::size_t best = 0;
  for (std::size_t i = 1; i < coords.size(); ++i)
    if (std::abs(coords[i]) > std::abs(coords[best])) best = i;
  return subsets[best];
}

PluckerVector pluckers_of(const Matrix& X) {
  PluckerVector P;
  P.k = static_cast<int>(X.rows());
  P.n = static_cast<int>(X.cols());
  auto subsets = all_subsets(P.n, P.k);
  P.coords.reserve(subsets.size());
  for (const auto& I : subsets) P.coords.push_back(minor_on(X, I));
  if (P.max_abs() == 0.0)
    throw std::invalid_argument("rank-deficient matrix has no projective image");
  return P;
}

Matrix cyclic_shift_matrix(int k, int n) {
  Matrix R = Matrix::Zero(n, n);
  for (int j = 1; j < n; ++j) R(j, j - 1) = 1;
  R(0, n - 1) = (k % 2 == 1) ? 1 : -1;
  return R;
}

ShiftEigenData shift_eigendata(int k, int n) {
  ShiftEigenData data;
  data.k = k;
  data.n = n;
  data.lambda.resize(n);
  data.omega = Matrix(n, n);
  const double pi = std::numbers::pi;
  for (int j = 0; j < n; ++j) {
    double theta = (k % 2 == 1) ? 2 * pi * j / n : pi * (2 * j + 1) / n;
    data.lambda[j] = std::polar(1.0, theta);
    Complex pw{1, 0};
    for (int c = 0; c < n; ++c) {
      data.omega(j, c) = pw;
      pw *= data.lambda[j];
    }
  }
  return data;
}

std::vector<int> karp_indices(int k, int n) {
  auto data = shift_eigendata(k, n);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](int j) { return std::abs(std::arg(data.lambda[j])); };
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return key(a) < key(b); });
  order.resize(k);
  std::sort(order.begin(), order.end());
  return order;
}

std::vector<ComponentSignature> components(int k, int n, int ell) {
  const int lp = std::gcd(ell, n);
  const int p = n / lp;
  std::vector<int> karp_counts(p, 0);
  for (int j : karp_indices(k, n)) ++karp_counts[j % p];

  std::vector<ComponentSignature> out;
  std::vector<int> m(p, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == p) {
      if (left != 0) return;
      ComponentSignature sig;
      sig.m = m;
      sig.distinguished = (m == karp_counts);
      for (int mi : m) sig.dim += static_cast<std::int64_t>(mi) * (lp - mi);
      out.push_back(std::move(sig));
      return;
    }
    for (int v = 0; v <= std::min(lp, left); ++v) {
      m[i] = v;
      self(self, i + 1, left - v);
    }
    m[i] = 0;
  };
  rec(rec, 0, k);
  return out;
}

Matrix gaussian_matrix(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix M(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) M(r, c) = Complex{gauss(rng), gauss(rng)};
  return M;
}

Matrix sample_point_on_component(const ComponentSignature& sig, int k, int n,
                                 int ell, Rng& rng) {
  const int lp = std::gcd(ell, n);
  const int p = n / lp;
  if (static_cast<int>(sig.m.size()) != p)
    throw std::invalid_argument("signature length must be p");
  auto data = shift_eigendata(k, n);
  Matrix X(k, n);
  int row = 0;
  for (int i = 0; i < p; ++i) {
    if (sig.m[i] == 0) continue;
    Matrix basis(lp, n);
    int b = 0;
    for (int s = i; s < n; s += p) basis.row(b++) = data.omega.row(s);
    Matrix coeff = gaussian_matrix(sig.m[i], lp, rng);
    Eigen::HouseholderQR<Matrix> qr(coeff.transpose());
    Matrix q = qr.householderQ() * Matrix::Identity(lp, sig.m[i]);
    X.middleRows(row, sig.m[i]) = q.transpose() * basis;
    row += sig.m[i];
  }
  if (row != k) throw std::invalid_argument("signature parts must sum to k");
  return X;
}

Matrix karp_point(int k, int n) {
  auto data = shift_eigendata(k, n);
  Matrix X(k, n);
  int row = 0;
  for (int j : karp_indices(k, n)) X.row(row++) = data.omega.row(j);
  return X;
}

double karp_plucker(const std::vector<int>& I, int n) {
  const double pi = std::numbers::pi;
  double prod = 1;
  for (std::size_t s = 0; s < I.size(); ++s)
    for (std::size_t j = 0; j < s; ++j)
      prod *= std::sin((I[s] - I[j]) * pi / n);
  return prod;
}

namespace {

std::vector<Complex> phase_normalized(const PluckerVector& P) {
  Complex top{0, 0};
  for (const Complex& c : P.coords)
    if (std::abs(c) > std::abs(top)) top = c;
  if (top == Complex{0, 0})
    throw std::invalid_argument("zero Plucker vector");
  std::vector<Complex> out(P.coords.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = P.coords[i] / top;
  return out;
}

}  // namespace

Positroid matroid_of_point(const PluckerVector& P, double tol) {
  auto normalized = phase_normalized(P);
  Positroid M;
  M.n = P.n;
  M.k = P.k;
  auto subsets = all_subsets(P.n, P.k);
  for (std::size_t i = 0; i < subsets.size(); ++i)
    if (std::abs(normalized[i]) > tol) M.bases.push_back(subsets[i]);
  std::sort(M.bases.begin(), M.bases.end());
  return M;
}

bool is_tnn(const PluckerVector& P, double tol) {
  for (const Complex& c : phase_normalized(P))
    if (std::abs(c.imag()) > tol || c.real() < -tol) return false;
  return true;
}

bool is_tp(const PluckerVector& P, double tol) {
  for (const Complex& c : phase_normalized(P))
    if (std::abs(c.imag()) > tol || c.real() <= tol) return false;
  return true;
}

Matrix real_representative(const Matrix& X, double tol) {
  Matrix M = X;
  const int k = static_cast<int>(M.rows()), n = static_cast<int>(M.cols());
  int row = 0;
  for (int col = 0; col < n && row < k; ++col) {
    int pivot = row;
    for (int r = row + 1; r < k; ++r)
      if (std::abs(M(r, col)) > std::abs(M(pivot, col))) pivot = r;
    if (std::abs(M(pivot, col)) < 1e-12 * M.norm()) continue;
    M.row(row).swap(M.row(pivot));
    M.row(row) /= M(row, col);
    for (int r = 0; r < k; ++r)
      if (r != row) M.row(r) -= M(r, col) * M.row(row);
    ++row;
  }
  const double scale = M.cwiseAbs().maxCoeff();
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < n; ++c)
      if (std::abs(M(r, c).imag()) > tol * scale)
        throw std::domain_error("row span is not a real point");
  return M.real().cast<Complex>();
}

FixednessReport rho_fixedness(const PluckerVector& P, int ell) {
  FixednessReport report;
  const double scale = P.max_abs();
  const KSubset top = P.argmax_abs();
  const Complex denom = P.at(rotate(top, ell));
  if (std::abs(denom) == 0.0) {
    report.residual = 1.0;
    return report;
  }
  report.zeta = P.at(top) / denom;
  auto subsets = all_subsets(P.n, P.k);
  double worst = 0;
  for (const auto& I : subsets) {
    Complex diff = P.at(I) - report.zeta * P.at(rotate(I, ell));
    worst = std::max(worst, std::abs(diff));
  }
  report.residual = worst / scale;
  const int p = P.n / std::gcd(ell, P.n);
  double best = 2;
  for (int t = 0; t < p; ++t) {
    Complex root = std::polar(1.0, 2 * std::numbers::pi * t / p);
    best = std::min(best, std::abs(report.zeta - root));
  }
  report.zeta_root_error = best;
  return report;
}

}  // namespace cyclgr
