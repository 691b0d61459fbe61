#include "cyclgr/positroid.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclgr {

GrassmannNecklace necklace_from_perm(const AffinePermutation& f, int n) {
  if (n % f.period() != 0)
    throw std::invalid_argument("period must divide n");
  const std::int64_t k = average_shift(f);
  GrassmannNecklace neck;
  neck.n = n;
  neck.k = static_cast<int>(k);
  neck.terms.reserve(n);
  for (int i = 1; i <= n; ++i) {
    KSubset Ii(0, n);
    // j < i <= f(j); boundedness confines j to [i - n, i).
    for (std::int64_t j = i - n; j < i; ++j)
      if (f(j) >= i) Ii = Ii.with(mod1(f(j), n));
    if (Ii.size() != neck.k)
      throw std::logic_error("necklace term has wrong size");
    neck.terms.push_back(Ii);
  }
  return neck;
}

void check_necklace_recurrence(const GrassmannNecklace& neck,
                               const AffinePermutation& f) {
  const int n = neck.n;
  for (int i = 1; i <= n; ++i) {
    const KSubset& cur = neck.terms[i - 1];
    const KSubset& next = neck.terms[i % n];
    KSubset expect = cur;
    if (f(i) != i) {
      if (!cur.contains(i)) throw std::logic_error("necklace: missing pivot");
      expect = cur.without(i).with(mod1(f(i), n));
    }
    if (!(expect == next)) throw std::logic_error("necklace recurrence fails");
  }
}

bool gale_leq(const KSubset& lo, const KSubset& hi, int i) {
  if (lo.size() != hi.size()) throw std::invalid_argument("size mismatch");
  const int n = lo.n;
  // Walk [i, i+n) once, keeping the running count of elements seen; Gale
  // dominance is equivalent to |lo ^ [i,c]| >= |hi ^ [i,c]| for every c.
  int seen_lo = 0, seen_hi = 0;
  for (int step = 0; step < n; ++step) {
    int e = mod1(i + step, n);
    if (lo.contains(e)) ++seen_lo;
    if (hi.contains(e)) ++seen_hi;
    if (seen_hi > seen_lo) return false;
  }
  return true;
}

Positroid positroid_from_necklace(const GrassmannNecklace& neck) {
  Positroid M;
  M.n = neck.n;
  M.k = neck.k;
  for (const KSubset& I : all_subsets(neck.n, neck.k)) {
    bool ok = true;
    for (int i = 1; i <= neck.n && ok; ++i)
      ok = gale_leq(neck.terms[i - 1], I, i);
    if (ok) M.bases.push_back(I);
  }
  std::sort(M.bases.begin(), M.bases.end());
  return M;
}

int matroid_rank(const Positroid& M, const KSubset& A) {
  int best = 0;
  for (const KSubset& B : M.bases)
    best = std::max(best, std::popcount(A.bits & B.bits));
  return best;
}

AffinePermutation perm_from_positroid(const Positroid& M) {
  const int n = M.n;
  if (M.bases.empty()) throw std::invalid_argument("empty matroid");
  std::vector<std::int64_t> w(n);
  for (int i = 1; i <= n; ++i) {
    std::int64_t fi = -1;
    KSubset span(0, n);  // column classes of (i, j]
    for (std::int64_t j = i; j <= i + n; ++j) {
      if (j > i) span = span.with(mod1(j, n));
      const int r = matroid_rank(M, span);
      const int r_with = matroid_rank(M, span.with(mod1(i, n)));
      if (r_with == r) {
        fi = j;
        break;
      }
    }
    if (fi < 0) throw std::logic_error("perm_from_positroid: no index found");
    w[i - 1] = fi;
  }
  return AffinePermutation(n, std::move(w));
}

bool satisfies_exchange_axiom(const Positroid& M) {
  for (const KSubset& A : M.bases) {
    for (const KSubset& B : M.bases) {
      for (int e : A.elements()) {
        if (B.contains(e)) continue;
        bool found = false;
        for (int g : B.elements()) {
          if (A.contains(g)) continue;
          KSubset C = A.without(e).with(g);
          if (std::binary_search(M.bases.begin(), M.bases.end(), C)) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

bool is_rho_invariant(const Positroid& M, int ell) {
  for (const KSubset& B : M.bases) {
    KSubset shifted = rotate(B, ell);
    if (!std::binary_search(M.bases.begin(), M.bases.end(), shifted))
      return false;
  }
  return true;
}

}  // namespace cyclgr
