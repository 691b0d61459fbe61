#pragma once

#include <optional>

#include "cyclgr/grassmann.hpp"

namespace cyclgr {

/// Id + c * sgn(i,j) E_{i,j} with indices taken mod n into [1,n] and
/// sgn(i,j) = (-1)^(k-1) when the reduced j precedes the reduced i.
Matrix column_addition_matrix(int n, int k, std::int64_t i, std::int64_t j,
                              Complex c);

/// Sign exponent u = #{ s in (a,b) : f(s) = s + n } of a bridge cover
/// f < f*t_{a,b}.
int bridge_sign_exponent(const AffinePermutation& f, std::int64_t a,
                         std::int64_t b, std::int64_t n);

/// One step of the cell parametrization: X in the cell of upper = f*t_{a,b}
/// maps to X * prod_t eps_{a+tl, b+tl}((-1)^u value) in the cell of f.  The
/// product runs over the p translates, making the step shift-equivariant.
Matrix bridge_step_apply(const Matrix& X, const AffinePermutation& f_low,
                         std::int64_t a, std::int64_t b,
                         const PosetParams& params, double value);

/// Recovers the step parameter from a point of the lower cell, as the ratio
/// Delta(I_b) / Delta(I_b u {a} \ {b}) over the lower necklace.
double bridge_step_recover(const Matrix& X, const AffinePermutation& f_low,
                           std::int64_t a, std::int64_t b,
                           const PosetParams& params);

/// Inverse of bridge_step_apply at the recovered parameter.
Matrix bridge_step_undo(const Matrix& X, const AffinePermutation& f_low,
                        std::int64_t a, std::int64_t b,
                        const PosetParams& params);

/// Point whose only nonzero Plucker coordinates are those of the maximal
/// element's positroid: indicator rows on the shift-orbit of S, extended by
/// a shift-fixed TP block when the division has a remainder.
Matrix zero_cell_representative(const AffinePermutation& f_max,
                                const PosetParams& params);

/// Any saturated bridge chain from f to a maximal element (f first).
std::vector<AffinePermutation> chain_to_maximal(const AffinePermutation& f,
                                                const PosetParams& params);

/// Walks down the chain from the zero cell of its top, applying equivariant
/// bridge steps with the given positive parameters (one per cover; drawn
/// from rng when absent).  The result lies in the cell of f, is totally
/// nonnegative, and is fixed by the l-th shift power.
Matrix sample_cell_point(const AffinePermutation& f, const PosetParams& params,
                         Rng& rng,
                         const std::vector<double>* parameters = nullptr);

/// A step of the boundary recursion: position m, and whether the length
/// goes up (parameter recovered from the point) or down (free parameter).
struct SwapStep {
  std::int64_t position = 0;
  bool lengthening = false;
};

/// Shortest words of adjacent transpositions from g to g*t_{a,b} that stay
/// n-bounded, in breadth-first order (up to max_words).
std::vector<std::vector<SwapStep>> cover_swap_words(
    const AffinePermutation& g, std::int64_t a, std::int64_t b, std::int64_t n,
    std::size_t max_words = 64);

/// Given a Bruhat cover f < g in B_n(k,l) and X in the cell of g, produces
/// Y(a) in the cell of f with Y(a) -> X as a -> 0:  Chevalley steps along an
/// adjacent-transposition word, the lengthening ones using the recovered
/// ratio, repeated equivariantly over the p translates of the cover.
Matrix closure_family_point(const AffinePermutation& g,
                            const AffinePermutation& f,
                            const PosetParams& params, const Matrix& X,
                            double a);

}  // namespace cyclgr
