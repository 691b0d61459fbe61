#pragma once

#include <Eigen/Dense>
#include <string>

#include "cyclgr/tp_tests.hpp"

namespace cyclgr {

/// Shared evaluation points: every cluster variable is represented by its
/// value vector ("fingerprint") on the panel.  When shift_pairing > 0 the
/// second half of the panel consists of the first half right-multiplied by
/// that power of the cyclic shift, so the pullback of a variable along the
/// shift is read off by swapping halves.
struct SamplePanel {
  int k = 0;
  int n = 0;
  int shift_pairing = 0;
  std::vector<Matrix> points;

  std::vector<Complex> evaluate(const KSubset& I) const;
  std::vector<Complex> swapped_halves(const std::vector<Complex>& print) const;
};

/// Panel on the distinguished component: random component samples plus the
/// shift-fixed TP point and a couple of TP cell points.
SamplePanel make_component_panel(const PosetParams& params, int count,
                                 Rng& rng);

/// Panel of generic points of the full Grassmannian paired with their
/// shift translates, plus TP pairs (rows on the moment curve).
SamplePanel make_grassmann_panel(int k, int n, int count, int shift, Rng& rng);

/// A seed with coefficient strings: N mutable and nf frozen variables as
/// fingerprints, extended exchange matrix B (rows N+nf, columns N), exchange
/// degrees, and one numeric string per mutable index (palindromic, ends 1).
struct CSSeed {
  int N = 0;
  Eigen::MatrixXi B;
  std::vector<int> degrees;
  std::vector<std::vector<double>> strings;
  std::vector<std::vector<Complex>> vars;
  std::vector<std::string> labels;

  int total() const { return static_cast<int>(vars.size()); }
};

/// The seed of the distinguished component: variables are the initial
/// Plucker labels on the panel, the quiver has arrows
/// x_{i+1} -> x_i -> x_{i+l} -> x_{i+1}, the first exchange degree is k and
/// the special string is eta_s(k, p).
CSSeed initial_cs_seed(const PosetParams& params, const SamplePanel& panel);

/// Right companion: exchange matrix BD, all degrees one, trivial strings.
CSSeed right_companion(const CSSeed& seed);

/// Quiver of a maximal weakly separated collection via its clique faces:
/// arrows circulate increasingly through each common-(k-1)-set clique and
/// decreasingly through each common-(k+1)-set clique.
Eigen::MatrixXi collection_quiver(const std::vector<KSubset>& collection,
                                  int mutable_count);

/// A seed of the full Grassmannian built from a bridge chain collection.
CSSeed grassmann_seed(int k, int n, const SamplePanel& panel);

/// Mutation: B <- mu_dir(B D) D^{-1} (integrality asserted), the variable at
/// dir replaced by Z(M+, M-)/x evaluated on the panel, strings unchanged.
CSSeed mutate(const CSSeed& seed, int dir);

struct ExchangeGraph {
  std::size_t seed_count = 0;
  std::size_t edge_count = 0;
  std::size_t variable_count = 0;
  bool capped = false;
  std::vector<std::vector<Complex>> variable_prints;
  std::vector<std::vector<int>> seeds;  // sorted mutable variable ids
};

/// Breadth-first enumeration of seeds up to fingerprint identity.
ExchangeGraph exchange_graph(const CSSeed& seed, std::size_t cap,
                             double tol = 1e-7);

/// Number of enumerated clusters carried to themselves by the panel's
/// shift pairing.
std::size_t count_shift_invariant_clusters(const ExchangeGraph& graph,
                                           const SamplePanel& panel,
                                           double tol = 1e-7);

/// ---- multidegree tracking ------------------------------------------------

/// Variables carry exponent vectors over a small set of grading symbols;
/// mutation requires all supported exchange summands to be homogeneous.
struct GradedSeed {
  int N = 0;
  Eigen::MatrixXi B;
  std::vector<int> degrees;
  std::vector<std::vector<bool>> support;  // which string entries are nonzero
  std::vector<Eigen::VectorXi> deg;        // per variable (N + nf)
};

GradedSeed mutate_graded(const GradedSeed& seed, int dir);

/// ---- non-normalized seeds and the yhat evolution ---------------------------

struct NNSeed {
  int N = 0;
  Eigen::MatrixXi B;  // N x N
  std::vector<int> degrees;
  std::vector<Complex> x;
  std::vector<std::vector<Complex>> p;  // strings p_{i;0..d_i}
};

NNSeed nn_mutate(const NNSeed& seed, int dir);

/// yhat_{i;s} = (p_{i;s}/p_{i;0}) (M+_i / M-_i)^s for s = 0..d_i.
std::vector<std::vector<Complex>> nn_yhat(const NNSeed& seed);

/// Conditions of seed equivalence: componentwise ratios x/x' in the
/// coefficient group (always true numerically) and equal yhat data.
bool nn_similar(const NNSeed& a, const NNSeed& b, double tol = 1e-9);

struct YhatReport {
  double rule_residual = 0;       // transformation rules under one mutation
  double similarity_residual = 0; // preservation of ~ for a rescaled copy
  bool ok = false;
};

/// Verifies the evolution rules of the yhat monomials under mutation at dir
/// and that equivalence of seeds is preserved.
YhatReport yhat_check(const NNSeed& seed, int dir, Rng& rng);

/// ---- folding of the framed cycle -----------------------------------------

struct TauReport {
  std::vector<double> values;       // x'(u_i) after the sequence
  double exchange_residual = 0;     // against (sum b^i c^{p-1-i}) / a
  bool quiver_matches = false;      // relabeled quiver as described
  Eigen::MatrixXi quiver;           // 3p x 3p signed adjacency
};

/// Runs mu_1..mu_{p-1}, the transposition (u_{p-1} u_p), mu_{p-1}..mu_1 on
/// the framed and co-framed oriented p-cycle with x(u_i) = a, x(u'_i) = b,
/// x(u''_i) = c.
TauReport tau_sequence(int p, double a, double b, double c);

}  // namespace cyclgr
