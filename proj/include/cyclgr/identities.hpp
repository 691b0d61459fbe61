#pragma once

#include "cyclgr/cluster.hpp"

namespace cyclgr {

/// The degree-(k-1) function pairing with the first Plucker label: cross
/// products of shifted columns assembled into a determinant.
Complex weyl_L(const Matrix& X, const PosetParams& params);

/// The k x k matrix (Delta_{i, j+1, j+l, ..., j+(k-2)l})_{i,j in I_1}.
Matrix weyl_plucker_matrix(const Matrix& X, const PosetParams& params);

struct PtolemyReport {
  int samples = 0;
  double max_residual = 0;        // exchange polynomial vs Delta_{I_1} L
  double max_weyl_residual = 0;   // Delta_{I_1} L vs the matrix determinant
  bool pass = false;
};

/// Checks Delta_{I_1} L = sum_s eta_s Delta_{I_2}^s Delta_{I_{l+1}}^{k-s} on
/// distinguished-component samples, along with the determinant identity.
PtolemyReport verify_ptolemy(const PosetParams& params, int samples,
                             double tol, Rng& rng);

struct ToeplitzSampleReport {
  int samples = 0;
  double max_band_residual = 0;   // entries constant along diagonals
  double max_column_residual = 0; // first column pattern (J, 0, ..., 0, K)
  bool pass = false;
};

/// The Plucker matrix becomes Toeplitz after shift identification.
ToeplitzSampleReport verify_toeplitz(const PosetParams& params, int samples,
                                     double tol, Rng& rng);

struct ToeplitzMinorReport {
  double principal_residual = 0;
  double off_residual = 0;
};

/// Determinant identities of the band Toeplitz matrix with entries
/// eta_[j-i] K + eta_[j-i+1] J: the t x t principal minor equals
/// sum_s eta_s J^s K^{t-s}, and the row-reduced off minor equals
/// eta_t J^{t-1}.
ToeplitzMinorReport toeplitz_minor_identity(int t, int k, int p, Complex J,
                                            Complex K);

/// Largest residual of eta_j eta_[s] = eta_{[s-1]+{j+s}} + eta_{[s]+{j+s}}
/// over all well-formed index pairs at this (k, p).
double eta_recurrence_residual(int k, int p);

/// Largest residual of Delta_{1,2+(s-1)l,1+sl,...} =
/// eta_[s-2] Delta_{I_2} + eta_[s-1] Delta_{I_{l+1}} on samples.
double first_row_relation_residual(const PosetParams& params, int samples,
                                   Rng& rng);

/// l-periodic band matrix of width k, stored by one period of the diagonals
/// together with the block pair of its spectral-parameter fold.
struct BandMatrixData {
  int k = 0;
  int ell = 0;
  Matrix band;  // ell x (k+1); band(i-1, d) = M_{i, i+d}
  Matrix A;     // ell x ell, entries M_{i, j+k-l}
  Matrix B;     // ell x ell, entries M_{i, j+k}

  Complex entry(std::int64_t r, std::int64_t c) const;
  Complex minor(const std::vector<std::int64_t>& rows,
                const std::vector<std::int64_t>& cols) const;
};

/// M = tau(phi(rho^{-k} X)): M_{ij} = Delta_{[j-k, j] \ i}(X).
BandMatrixData band_map(const Matrix& X, const PosetParams& params);

struct GsvReport {
  int samples = 0;
  int minor_checks = 0;
  double max_minor_residual = 0;    // row-solid minors vs Plucker products
  double max_special_residual = 0;  // k = 3 special-exchange expression
  bool pass = false;
};

/// Row-solid minor factorization through the band map, and (k = 3) the
/// special-exchange comparison.
GsvReport gsv_checks(const PosetParams& params, int samples, double tol,
                     Rng& rng);

struct IsospectralReport {
  int samples = 0;
  double max_coeff_std = 0;        // per-coefficient deviation across samples
  double eigenvalue_residual = 1;  // nonzero spectrum vs -q^{j-(k-1)/2}
  bool conjectural = false;        // flagged for k >= 3
};

/// Constancy of the normalized characteristic polynomial of B^{-1}A across
/// component samples; the k = 2 spectrum is compared against the predicted
/// roots of unity.
IsospectralReport isospectrality_experiment(const PosetParams& params,
                                            int samples, Rng& rng);

struct CountingReport {
  bool convolution_square = false;   // binomial convolution identity
  bool cubes_series = false;         // five-term generating function
  bool hexagon_binomials = false;    // 6 C(d+2,4) + 6 C(d+2,3) + C(d+2,2)
  bool twelve_term_series = false;   // the longer generating function
  int max_d = 0;
  bool pass = false;
};

/// Exact integer verification of the four counting identities up to max_d.
CountingReport counting_identities(int max_d);

struct ScanResult {
  std::vector<std::vector<KSubset>> orbits;  // grouped, orbit-sorted
  std::size_t subset_count = 0;
};

/// All k-subsets whose orbit under rotation by l is pairwise weakly
/// separated, grouped into orbits.
ScanResult ell_cluster_variable_scan(int k, int n, int ell);

struct GradingReport {
  int walks = 0;
  int steps = 0;
  bool forms_preserved = false;   // vertex degree shapes along every walk
  std::size_t scan_subsets = 0;   // 42 on the half-turn octagon locus
  std::size_t scan_orbits = 0;
  int listed_violations = 0;      // published non-cluster coordinates
  bool pass = false;
};

/// Random mutation walks on the two-symbol graded seed of the half-turn
/// locus of Gr(4,8): vertex 1 keeps degrees a^{s+4} b^s, vertices 2 and 3
/// keep a^{s+2} b^s, and the listed non-cluster Plucker coordinates carry
/// degrees outside these shapes.
GradingReport grading_obstruction(int walks, int length, Rng& rng);

}  // namespace cyclgr
