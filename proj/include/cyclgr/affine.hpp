#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cyclgr {

/// An l-periodic bijection f of the integers, f(i+l) = f(i) + l, stored by
/// its window [f(1),...,f(l)].  Window residues mod l must be a permutation
/// of {1,...,l}; this is checked at construction.
class AffinePermutation {
 public:
  AffinePermutation(int period, std::vector<std::int64_t> window);

  int period() const { return period_; }
  const std::vector<std::int64_t>& window() const { return window_; }

  /// f(i) for any integer i.
  std::int64_t operator()(std::int64_t i) const;
  /// f^{-1}(v) for any integer v.
  std::int64_t inverse(std::int64_t v) const;

  /// Largest f(i) - i over one window.
  std::int64_t max_shift() const;

  /// Window rewritten with period m (m must be a multiple of period()).
  AffinePermutation with_period(int m) const;
  /// True if f is also d-periodic (d divides period()).
  bool has_period(int d) const;
  /// Smallest d dividing period() with f(i+d) = f(i)+d.
  int minimal_period() const;

  bool operator==(const AffinePermutation& o) const {
    return period_ == o.period_ && window_ == o.window_;
  }
  bool operator<(const AffinePermutation& o) const {
    return window_ < o.window_;
  }

  std::string str() const;

 private:
  int period_;
  std::vector<std::int64_t> window_;
};

std::ostream& operator<<(std::ostream& os, const AffinePermutation& f);

/// The translation i -> i + k with the given period.
AffinePermutation identity_shift(int period, std::int64_t k);

/// av(f) = (1/l) sum (f(i) - i); always an integer.
std::int64_t average_shift(const AffinePermutation& f);

/// Coxeter length of id_k^{-1} f, as a finite inversion count.
std::int64_t coxeter_length(const AffinePermutation& f);

/// i <= f(i) <= i + n for all i.
bool is_bounded(const AffinePermutation& f, std::int64_t n);

/// f * t_{ a, b }, the transposition switching values at positions a + ml
/// and b + ml.  Requires a != b mod period.
AffinePermutation multiply_transposition(const AffinePermutation& f,
                                         std::int64_t a, std::int64_t b);

/// A cover f < f*t_{a,b} together with its transposition data.
struct Cover {
  AffinePermutation target;
  std::int64_t a;
  std::int64_t b;
};

/// All g = f * t_{a,b} with length(g) = length(f) + 1 that remain n-bounded,
/// indexed canonically with a in [1,l], a < b < a + n.
std::vector<Cover> bruhat_covers_up(const AffinePermutation& f,
                                    std::int64_t n);

/// The covers above whose transposition satisfies f(c) in {c, c+n} for every
/// integer c strictly between a and b.
std::vector<Cover> bridge_covers_up(const AffinePermutation& f,
                                    std::int64_t n);

/// Short-circuiting existence tests for covers up.
bool has_bruhat_cover_up(const AffinePermutation& f, std::int64_t n);
bool has_bridge_cover_up(const AffinePermutation& f, std::int64_t n);

/// Covers g < f in Bruhat order (g = f * t_{a,b}, length drops by one).
std::vector<Cover> bruhat_covers_down(const AffinePermutation& f,
                                      std::int64_t n);
std::vector<Cover> bridge_covers_down(const AffinePermutation& f,
                                      std::int64_t n);

/// Parameters of the bounded poset: k, l (normalized to gcd(l,n)), n,
/// p = n / l, and the division k = alpha*p + beta with beta in [0,p).
struct PosetParams {
  int k = 0;
  int ell = 0;
  int n = 0;
  int p = 0;
  int alpha = 0;
  int beta = 0;

  static PosetParams make(int k, int ell, int n);
};

/// Rank of the poset: (k(n-k) - beta(p-beta)) / p.  Throws if non-integral.
std::int64_t bridge_rank(const PosetParams& params);

/// The maximal elements t_S (p | k) or t_{S,s} (otherwise).
std::vector<AffinePermutation> maximal_elements(const PosetParams& params);

/// All n-bounded l-periodic f with av(f) = k, by upward BFS from id_k.
/// Throws if more than cap elements are found.
std::vector<AffinePermutation> enumerate_bounded(const PosetParams& params,
                                                 std::size_t cap = 6000000);

/// Same set by direct scan over all admissible windows (cross-check oracle).
std::vector<AffinePermutation> enumerate_bounded_direct(
    const PosetParams& params);

/// A saturated bridge chain, bottom to top inclusive.
using ChainVec = std::vector<AffinePermutation>;

/// Every saturated chain from bottom to top in the bridge order on
/// B_n(k,l).  Empty when bottom is not below top.  Throws if more than cap
/// chains exist.
std::vector<ChainVec> saturated_chains(const AffinePermutation& bottom,
                                       const AffinePermutation& top,
                                       std::int64_t n,
                                       std::size_t cap = 2000000);

struct MoveGraphReport {
  std::size_t chain_count = 0;
  std::size_t edge_count = 0;
  std::size_t component_count = 0;
  bool connected = false;
  bool skipped = false;
};

/// Connectivity of the graph on a set of equal-length chains whose edges are
/// single 2-moves (one element replaced) and 3-moves (two consecutive
/// elements replaced).
MoveGraphReport move_graph_connectivity(const std::vector<ChainVec>& chains);

/// Builds Chains(bottom, top) and reports 2-/3-move connectivity.  Sets
/// skipped when the chain count exceeds cap.
MoveGraphReport verify_move_connected(const AffinePermutation& bottom,
                                      const AffinePermutation& top,
                                      std::int64_t n,
                                      std::size_t cap = 2000000);

}  // namespace cyclgr
