#pragma once

#include <vector>

#include "cyclgr/affine.hpp"
#include "cyclgr/subsets.hpp"

namespace cyclgr {

/// The n-tuple of k-subsets attached to a bounded affine permutation,
/// satisfying I_{i+1} = I_i \ {i} u {f(i) mod n} around the cycle.
struct GrassmannNecklace {
  int n = 0;
  int k = 0;
  std::vector<KSubset> terms;  // terms[i-1] = I_i
};

/// A matroid given by its set of bases.
struct Positroid {
  int n = 0;
  int k = 0;
  std::vector<KSubset> bases;  // sorted by bitmask
};

/// I_i = { f(j) mod n : j < i <= f(j) } for f in B_n(k,n).  Accepts any f
/// whose period divides n.
GrassmannNecklace necklace_from_perm(const AffinePermutation& f, int n);

/// Validates the defining recurrence at every index; throws on failure.
void check_necklace_recurrence(const GrassmannNecklace& neck,
                               const AffinePermutation& f);

/// All k-subsets above I_i in the order <_i rotated at i, for every i.
Positroid positroid_from_necklace(const GrassmannNecklace& neck);

/// f(i) = min{ j >= i : rk(cols(i+1..j) + {i}) = rk(cols(i+1..j)) }, via the
/// matroid rank function of the given basis set.  Result has period n.
AffinePermutation perm_from_positroid(const Positroid& M);

/// Matroid rank of a set of column classes (mod n), as max |A ^ B|.
int matroid_rank(const Positroid& M, const KSubset& A);

/// Basis exchange axiom, checked pairwise (for small n).
bool satisfies_exchange_axiom(const Positroid& M);

/// True iff rotating every basis by +l mod n preserves the basis set.
bool is_rho_invariant(const Positroid& M, int ell);

/// Gale comparison: sorted w.r.t. the rotated order i <_i i+1 <_i ... and
/// compared componentwise.
bool gale_leq(const KSubset& lo, const KSubset& hi, int i);

}  // namespace cyclgr
