#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <vector>

#include "cyclgr/affine.hpp"
#include "cyclgr/positroid.hpp"
#include "cyclgr/subsets.hpp"

namespace cyclgr {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Rng = std::mt19937_64;

constexpr double kDefaultTol = 1e-9;

/// Binomial coefficient as a 64-bit integer.
std::int64_t binomial(int n, int k);

/// Position of a sorted k-subset in the lexicographic list all_subsets(n,k).
std::int64_t subset_rank(const KSubset& I);

/// Maximal minor of the k x n matrix X on the given sorted column subset.
Complex minor_on(const Matrix& X, const KSubset& cols);

/// Minor with an arbitrary column index list: antisymmetric in the indices,
/// zero on repeats.  Indices are taken mod n into [1,n].
Complex minor_alternating(const Matrix& X, const std::vector<std::int64_t>& idx);

/// Same, under the twisted periodic extension of columns
/// v_{c+n} = (-1)^(k-1) v_c, the convention compatible with the signed
/// cyclic shift.
Complex minor_twisted(const Matrix& X, const std::vector<std::int64_t>& idx);

/// All maximal minors of X, indexed compatibly with all_subsets(n,k).
struct PluckerVector {
  int k = 0;
  int n = 0;
  std::vector<Complex> coords;

  Complex at(const KSubset& I) const { return coords[subset_rank(I)]; }
  double max_abs() const;
  /// Index set of a coordinate of largest modulus.
  KSubset argmax_abs() const;
};

PluckerVector pluckers_of(const Matrix& X);

/// The signed circulant implementing the cyclic shift; column j maps to
/// column j+1, with (-1)^(k-1) in the corner.
Matrix cyclic_shift_matrix(int k, int n);

/// Eigenvalues lambda_j of the shift (the n-th roots of (-1)^(k-1) in the
/// fixed enumeration) and row eigenvectors omega_j = (1, lambda_j, ...).
struct ShiftEigenData {
  int k = 0;
  int n = 0;
  std::vector<Complex> lambda;
  Matrix omega;  // n x n, row j is omega_j
};

ShiftEigenData shift_eigendata(int k, int n);

/// Indices of the k roots closest to 1 on the unit circle.
std::vector<int> karp_indices(int k, int n);

/// Connected-component label of the l-fixed locus: a weak composition
/// (m_0,...,m_{p-1}) of k with parts at most l' = gcd(l,n); m_i counts basis
/// eigenvectors omega_s with s = i mod p.
struct ComponentSignature {
  std::vector<int> m;
  bool distinguished = false;
  std::int64_t dim = 0;
};

std::vector<ComponentSignature> components(int k, int n, int ell);

/// Random point of the component: independent complex Gaussian coefficients
/// per eigenspace block, orthonormalized.
Matrix sample_point_on_component(const ComponentSignature& sig, int k, int n,
                                 int ell, Rng& rng);

/// The shift-fixed totally positive point, spanned by the k eigenvectors
/// whose eigenvalues are nearest 1.
Matrix karp_point(int k, int n);

/// Sine-product value of a Plucker coordinate at that point.
double karp_plucker(const std::vector<int>& I, int n);

/// Phase-normalized tests.  Normalization divides by the coordinate of
/// largest modulus.
Positroid matroid_of_point(const PluckerVector& P, double tol = kDefaultTol);
bool is_tnn(const PluckerVector& P, double tol = kDefaultTol);
bool is_tp(const PluckerVector& P, double tol = kDefaultTol);

/// Fixedness under the l-th shift power: residual of Delta_I = zeta *
/// Delta_{rho^l(I)} with zeta estimated at the largest coordinate.
struct FixednessReport {
  double residual = 0;
  Complex zeta{1, 0};
  double zeta_root_error = 0;  // distance of zeta from the nearest p-th root
};

FixednessReport rho_fixedness(const PluckerVector& P, int ell);

/// Complex standard Gaussian matrix.
Matrix gaussian_matrix(int rows, int cols, Rng& rng);

/// Reduced row echelon representative of the row span.  For a real point of
/// the Grassmannian this strips the complex phases; throws if the reduced
/// matrix keeps imaginary parts above tol.
Matrix real_representative(const Matrix& X, double tol = 1e-9);

}  // namespace cyclgr
