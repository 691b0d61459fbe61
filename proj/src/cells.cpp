#include "cyclgr/cells.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace cyclgr {

Matrix column_addition_matrix(int n, int k, std::int64_t i, std::int64_t j,
                              Complex c) {
  const int ir = mod1(i, n), jr = mod1(j, n);
  if (ir == jr) throw std::invalid_argument("column indices must differ mod n");
  double sgn = 1.0;
  if (jr < ir && k % 2 == 0) sgn = -1.0;
  Matrix M = Matrix::Identity(n, n);
  M(ir - 1, jr - 1) += c * sgn;
  return M;
}

int bridge_sign_exponent(const AffinePermutation& f, std::int64_t a,
                         std::int64_t b, std::int64_t n) {
  int u = 0;
  for (std::int64_t s = a + 1; s < b; ++s)
    if (f(s) == s + n) ++u;
  return u;
}

Matrix bridge_step_apply(const Matrix& X, const AffinePermutation& f_low,
                         std::int64_t a, std::int64_t b,
                         const PosetParams& params, double value) {
  const int n = params.n;
  const int u = bridge_sign_exponent(f_low, a, b, n);
  const double signed_value = (u % 2 == 0) ? value : -value;
  Matrix Y = X;
  for (int t = 0; t < params.p; ++t) {
    Y = Y * column_addition_matrix(n, params.k, a + t * params.ell,
                                   b + t * params.ell, signed_value);
  }
  return Y;
}

double bridge_step_recover(const Matrix& X, const AffinePermutation& f_low,
                           std::int64_t a, std::int64_t b,
                           const PosetParams& params) {
  const int n = params.n;
  auto neck = necklace_from_perm(f_low, n);
  const int ar = mod1(a, n), br = mod1(b, n);
  const KSubset Ib = neck.terms[br - 1];
  if (!Ib.contains(br))
    throw std::logic_error("necklace term must contain its index");
  const Complex num = minor_on(X, Ib);
  const Complex den = minor_on(X, Ib.without(br).with(ar));
  if (std::abs(den) == 0.0)
    throw std::domain_error("bridge parameter: vanishing denominator");
  return (num / den).real();
}

Matrix bridge_step_undo(const Matrix& X, const AffinePermutation& f_low,
                        std::int64_t a, std::int64_t b,
                        const PosetParams& params) {
  const double value = bridge_step_recover(X, f_low, a, b, params);
  const int u = bridge_sign_exponent(f_low, a, b, params.n);
  const double signed_value = (u % 2 == 0) ? -value : value;
  Matrix Y = X;
  for (int t = 0; t < params.p; ++t) {
    Y = Y * column_addition_matrix(params.n, params.k, a + t * params.ell,
                                   b + t * params.ell, signed_value);
  }
  return Y;
}

Matrix zero_cell_representative(const AffinePermutation& f_max,
                                const PosetParams& params) {
  const int l = params.ell, n = params.n, p = params.p, beta = params.beta;
  if (f_max.period() != l)
    throw std::invalid_argument("maximal element must have the poset period");
  // decode the coloop residues S and, when beta > 0, the leap residue s
  std::vector<int> S;
  int s = -1;
  for (int i = 1; i <= l; ++i) {
    const std::int64_t fi = f_max(i);
    if (fi == i + n) {
      S.push_back(i);
    } else if (beta > 0 && fi == i + static_cast<std::int64_t>(beta) * l) {
      if (s != -1) throw std::invalid_argument("not a maximal element");
      s = i;
    } else if (fi != i) {
      throw std::invalid_argument("not a maximal element");
    }
  }
  if (static_cast<int>(S.size()) != params.alpha || (beta > 0) != (s != -1))
    throw std::invalid_argument("not a maximal element");

  const int rows = params.alpha * p + beta;
  if (rows != params.k) throw std::logic_error("row count mismatch");
  Matrix X = Matrix::Zero(params.k, n);
  int row = 0;
  std::vector<int> coloop_cols;
  for (int i : S)
    for (int t = 0; t < p; ++t) {
      X(row++, (i - 1) + t * l) = 1;
      coloop_cols.push_back(i + t * l);
    }
  if (beta > 0) {
    Matrix small = karp_point(beta, p);
    for (int t = 0; t < p; ++t) {
      // minors expand across the inserted coloop columns; the interleaving
      // parity is cancelled by twisting each entry by the number of coloop
      // columns to its right
      const int col = s + t * l;
      int crossings = 0;
      for (int c : coloop_cols)
        if (c > col) ++crossings;
      const double twist = (crossings % 2 == 0) ? 1.0 : -1.0;
      for (int r = 0; r < beta; ++r) X(row + r, col - 1) = twist * small(r, t);
    }
  }
  return X;
}

std::vector<AffinePermutation> chain_to_maximal(const AffinePermutation& f,
                                                const PosetParams& params) {
  std::vector<AffinePermutation> chain{f};
  while (true) {
    auto covers = bridge_covers_up(chain.back(), params.n);
    if (covers.empty()) break;
    chain.push_back(covers.front().target);
  }
  return chain;
}

namespace {

// transposition data of the bridge cover low < high
std::pair<std::int64_t, std::int64_t> cover_transposition(
    const AffinePermutation& low, const AffinePermutation& high,
    std::int64_t n) {
  for (auto& cov : bridge_covers_up(low, n))
    if (cov.target == high) return {cov.a, cov.b};
  throw std::invalid_argument("not a bridge cover");
}

}  // namespace

Matrix sample_cell_point(const AffinePermutation& f, const PosetParams& params,
                         Rng& rng, const std::vector<double>* parameters) {
  auto chain = chain_to_maximal(f, params);
  Matrix X = zero_cell_representative(chain.back(), params);
  std::uniform_real_distribution<double> unif(0.5, 2.0);
  for (std::size_t i = chain.size() - 1; i > 0; --i) {
    auto [a, b] = cover_transposition(chain[i - 1], chain[i], params.n);
    double value = parameters ? parameters->at(i - 1) : unif(rng);
    if (value <= 0) throw std::invalid_argument("parameters must be positive");
    X = bridge_step_apply(X, chain[i - 1], a, b, params, value);
  }
  return X;
}

std::vector<std::vector<SwapStep>> cover_swap_words(const AffinePermutation& g,
                                                    std::int64_t a,
                                                    std::int64_t b,
                                                    std::int64_t n,
                                                    std::size_t max_words) {
  const AffinePermutation target = multiply_transposition(g, a, b);
  if (!is_bounded(target, n))
    throw std::invalid_argument("target leaves the bounded set");

  // breadth-first layers over right multiplication by adjacent
  // transpositions, staying n-bounded
  std::map<std::vector<std::int64_t>, int> dist;
  std::deque<AffinePermutation> queue{g};
  dist[g.window()] = 0;
  int found_at = -1;
  while (!queue.empty()) {
    AffinePermutation h = queue.front();
    queue.pop_front();
    const int d = dist[h.window()];
    if (found_at >= 0 && d >= found_at) break;
    for (std::int64_t m = 1; m <= n; ++m) {
      AffinePermutation h2 = multiply_transposition(h, m, m + 1);
      if (!is_bounded(h2, n)) continue;
      auto [it, inserted] = dist.emplace(h2.window(), d + 1);
      if (!inserted) continue;
      if (h2 == target && found_at < 0) found_at = d + 1;
      queue.push_back(h2);
    }
  }
  if (found_at < 0) throw std::runtime_error("no adjacent word found");

  // walk the BFS dag backwards from the target to list the shortest words
  std::vector<std::vector<SwapStep>> words;
  std::vector<SwapStep> cur(found_at);
  auto rec = [&](auto&& self, const AffinePermutation& h, int d) -> void {
    if (words.size() >= max_words) return;
    if (d == 0) {
      if (h == g) words.push_back(cur);
      return;
    }
    for (std::int64_t m = 1; m <= n; ++m) {
      AffinePermutation prev = multiply_transposition(h, m, m + 1);
      if (!is_bounded(prev, n)) continue;
      auto it = dist.find(prev.window());
      if (it == dist.end() || it->second != d - 1) continue;
      cur[d - 1] = SwapStep{m, coxeter_length(h) > coxeter_length(prev)};
      self(self, prev, d - 1);
      if (words.size() >= max_words) return;
    }
  };
  rec(rec, target, found_at);
  return words;
}

namespace {

Matrix run_swap_word(const AffinePermutation& g, std::int64_t n, int k,
                     const std::vector<SwapStep>& word, const Matrix& X0,
                     double a) {
  Matrix X = X0;
  AffinePermutation h = g;
  for (const SwapStep& step : word) {
    const std::int64_t m = step.position;
    if (!step.lengthening) {
      X = X * column_addition_matrix(static_cast<int>(n), k, m, m + 1,
                                     Complex{a, 0});
    } else {
      auto neck = necklace_from_perm(h, static_cast<int>(n));
      const int jr = mod1(m + 1, static_cast<int>(n));
      const int ir = mod1(m, static_cast<int>(n));
      const KSubset Ij = neck.terms[jr - 1];
      const Complex num = minor_on(X, Ij);
      const Complex den = minor_on(X, Ij.without(jr).with(ir));
      if (std::abs(den) == 0.0)
        throw std::domain_error("closure recursion: vanishing denominator");
      X = X * column_addition_matrix(static_cast<int>(n), k, m, m + 1,
                                     -num / den);
    }
    h = multiply_transposition(h, m, m + 1);
  }
  return X;
}

double projective_distance(const PluckerVector& P, const PluckerVector& Q) {
  const KSubset top = P.argmax_abs();
  const Complex ps = P.at(top), qs = Q.at(top);
  if (std::abs(qs) == 0.0) return 1.0;
  double worst = 0;
  for (std::size_t i = 0; i < P.coords.size(); ++i)
    worst = std::max(worst, std::abs(P.coords[i] / ps - Q.coords[i] / qs));
  return worst;
}

}  // namespace

Matrix closure_family_point(const AffinePermutation& g,
                            const AffinePermutation& f,
                            const PosetParams& params, const Matrix& X,
                            double a) {
  const std::int64_t n = params.n;
  if (coxeter_length(g) != coxeter_length(f) + 1)
    throw std::invalid_argument("not a cover pair");
  std::int64_t ca = -1, cb = -1;
  for (auto& cov : bruhat_covers_down(g, n)) {
    if (cov.target == f) {
      ca = cov.a;
      cb = cov.b;
      break;
    }
  }
  if (ca < 0) throw std::invalid_argument("f is not covered by g");

  // the p translated reflections, one cover at a time
  std::vector<AffinePermutation> steps{g.with_period(params.n)};
  for (int t = 0; t < params.p; ++t)
    steps.push_back(multiply_transposition(steps.back(), ca + t * params.ell,
                                           cb + t * params.ell));
  for (int t = 0; t < params.p; ++t)
    if (coxeter_length(steps[t + 1]) != coxeter_length(steps[t]) - 1)
      throw std::logic_error("translated reflections do not step by covers");

  // per cover, pick the first shortest adjacent word whose family actually
  // degenerates to the input as the parameter vanishes
  const PluckerVector PX = pluckers_of(X);
  std::vector<std::vector<SwapStep>> chosen;
  {
    Matrix probe_hi = X, probe_lo = X;
    for (int t = 0; t < params.p; ++t) {
      auto words = cover_swap_words(steps[t], ca + t * params.ell,
                                    cb + t * params.ell, n);
      bool ok = false;
      for (const auto& word : words) {
        try {
          Matrix hi =
              run_swap_word(steps[t], n, params.k, word, probe_hi, 1e-3);
          Matrix lo =
              run_swap_word(steps[t], n, params.k, word, probe_lo, 1e-4);
          const double d_hi = projective_distance(PX, pluckers_of(hi));
          const double d_lo = projective_distance(PX, pluckers_of(lo));
          if (d_lo < 0.3 * d_hi + 1e-12) {
            chosen.push_back(word);
            probe_hi = hi;
            probe_lo = lo;
            ok = true;
            break;
          }
        } catch (const std::domain_error&) {
        }
      }
      if (!ok)
        throw std::runtime_error("closure recursion: no convergent word");
    }
  }

  Matrix Y = X;
  for (int t = 0; t < params.p; ++t)
    Y = run_swap_word(steps[t], n, params.k, chosen[t], Y, a);
  return Y;
}

}  // namespace cyclgr
