#include "cyclgr/affine.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace cyclgr {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

AffinePermutation::AffinePermutation(int period,
                                     std::vector<std::int64_t> window)
    : period_(period), window_(std::move(window)) {
  if (period_ <= 0 || window_.size() != static_cast<std::size_t>(period_))
    throw std::invalid_argument("window size must equal the period");
  std::vector<bool> seen(period_, false);
  for (int i = 0; i < period_; ++i) {
    std::int64_t r = window_[i] % period_;
    if (r < 0) r += period_;
    if (seen[r]) throw std::invalid_argument("window residues collide mod l");
    seen[r] = true;
  }
}

std::int64_t AffinePermutation::operator()(std::int64_t i) const {
  std::int64_t q = floor_div(i - 1, period_);
  std::int64_t r = i - q * period_;  // in [1, period]
  return window_[r - 1] + q * period_;
}

std::int64_t AffinePermutation::inverse(std::int64_t v) const {
  std::int64_t r = v % period_;
  if (r < 0) r += period_;
  for (int j = 0; j < period_; ++j) {
    std::int64_t wr = window_[j] % period_;
    if (wr < 0) wr += period_;
    if (wr == r) {
      std::int64_t t = (v - window_[j]) / period_;
      return (j + 1) + t * period_;
    }
  }
  throw std::logic_error("inverse: residue not found");
}

std::int64_t AffinePermutation::max_shift() const {
  std::int64_t m = window_[0] - 1;
  for (int i = 0; i < period_; ++i) m = std::max(m, window_[i] - (i + 1));
  return m;
}

AffinePermutation AffinePermutation::with_period(int m) const {
  if (m % period_ != 0)
    throw std::invalid_argument("new period must be a multiple");
  std::vector<std::int64_t> w(m);
  for (int i = 1; i <= m; ++i) w[i - 1] = (*this)(i);
  return AffinePermutation(m, std::move(w));
}

bool AffinePermutation::has_period(int d) const {
  if (d <= 0 || period_ % d != 0) return false;
  for (int i = 1; i <= period_; ++i)
    if ((*this)(i + d) != (*this)(i) + d) return false;
  return true;
}

int AffinePermutation::minimal_period() const {
  for (int d = 1; d <= period_; ++d)
    if (period_ % d == 0 && has_period(d)) return d;
  return period_;
}

std::string AffinePermutation::str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < period_; ++i) {
    if (i) os << ',';
    os << window_[i];
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const AffinePermutation& f) {
  return os << f.str();
}

AffinePermutation identity_shift(int period, std::int64_t k) {
  std::vector<std::int64_t> w(period);
  for (int i = 0; i < period; ++i) w[i] = i + 1 + k;
  return AffinePermutation(period, std::move(w));
}

std::int64_t average_shift(const AffinePermutation& f) {
  std::int64_t s = 0;
  for (int i = 0; i < f.period(); ++i) s += f.window()[i] - (i + 1);
  if (s % f.period() != 0) throw std::logic_error("average shift non-integral");
  return s / f.period();
}

std::int64_t coxeter_length(const AffinePermutation& f) {
  // Inversions of w = id_k^{-1} f, i.e. w(i) = f(i) - k.  For each window
  // position i and each residue class r, the j = r + ml with i < j and
  // w(j) < w(i) form an interval of m, counted exactly.
  const std::int64_t k = average_shift(f);
  const int l = f.period();
  std::int64_t count = 0;
  for (std::int64_t i = 1; i <= l; ++i) {
    const std::int64_t wi = f(i) - k;
    for (std::int64_t r = 1; r <= l; ++r) {
      const std::int64_t wr = f(r) - k;
      // integers m with m > (i - r)/l and m < (wi - wr)/l
      const std::int64_t m_min = floor_div(i - r, l) + 1;
      const std::int64_t m_max = floor_div(wi - wr - 1, l);
      if (m_max >= m_min) count += m_max - m_min + 1;
    }
  }
  return count;
}

bool is_bounded(const AffinePermutation& f, std::int64_t n) {
  for (int i = 1; i <= f.period(); ++i)
    if (f(i) < i || f(i) > i + n) return false;
  return true;
}

AffinePermutation multiply_transposition(const AffinePermutation& f,
                                         std::int64_t a, std::int64_t b) {
  const int l = f.period();
  if ((a - b) % l == 0)
    throw std::invalid_argument("transposition needs distinct residues");
  const std::int64_t d = b - a;
  std::vector<std::int64_t> w(l);
  for (std::int64_t i = 1; i <= l; ++i) {
    std::int64_t t = i;
    if ((i - a) % l == 0)
      t = i + d;
    else if ((i - b) % l == 0)
      t = i - d;
    w[i - 1] = f(t);
  }
  return AffinePermutation(l, std::move(w));
}

namespace {

// Cover test for f < f*t_{a,b}: ascent at (a,b) and no value strictly
// between f(a) and f(b) in a position strictly between a and b.
bool is_cover_pair(const AffinePermutation& f, std::int64_t a,
                   std::int64_t b) {
  const std::int64_t fa = f(a), fb = f(b);
  if (fa >= fb) return false;
  for (std::int64_t c = a + 1; c < b; ++c) {
    const std::int64_t fc = f(c);
    if (fa < fc && fc < fb) return false;
  }
  return true;
}

bool gap_condition(const AffinePermutation& f, std::int64_t a, std::int64_t b,
                   std::int64_t n) {
  for (std::int64_t c = a + 1; c < b; ++c)
    if (f(c) != c && f(c) != c + n) return false;
  return true;
}

std::vector<Cover> covers_up_impl(const AffinePermutation& f, std::int64_t n,
                                  bool bridge_only) {
  std::vector<Cover> out;
  const int l = f.period();
  // bridge covers are always indexable with b < a + period
  const std::int64_t width = bridge_only ? std::min<std::int64_t>(l, n) : n;
  for (std::int64_t a = 1; a <= l; ++a) {
    for (std::int64_t b = a + 1; b < a + width; ++b) {
      if ((b - a) % l == 0) continue;
      if (!is_cover_pair(f, a, b)) continue;
      if (bridge_only && !gap_condition(f, a, b, n)) continue;
      AffinePermutation g = multiply_transposition(f, a, b);
      if (!is_bounded(g, n)) continue;
      out.push_back(Cover{std::move(g), a, b});
    }
  }
  return out;
}

}  // namespace

std::vector<Cover> bruhat_covers_up(const AffinePermutation& f,
                                    std::int64_t n) {
  return covers_up_impl(f, n, false);
}

std::vector<Cover> bridge_covers_up(const AffinePermutation& f,
                                    std::int64_t n) {
  return covers_up_impl(f, n, true);
}

namespace {

std::vector<Cover> covers_down_impl(const AffinePermutation& f, std::int64_t n,
                                    bool bridge_only) {
  std::vector<Cover> out;
  const int l = f.period();
  const std::int64_t width = bridge_only ? std::min<std::int64_t>(l, n) : n;
  for (std::int64_t a = 1; a <= l; ++a) {
    for (std::int64_t b = a + 1; b < a + width; ++b) {
      if ((b - a) % l == 0) continue;
      if (f(a) <= f(b)) continue;
      AffinePermutation g = multiply_transposition(f, a, b);
      // g < f is a cover iff f = g * t_{a,b} is one.
      if (!is_cover_pair(g, a, b)) continue;
      if (bridge_only && !gap_condition(g, a, b, n)) continue;
      if (!is_bounded(g, n)) continue;
      out.push_back(Cover{std::move(g), a, b});
    }
  }
  return out;
}

}  // namespace

bool has_bruhat_cover_up(const AffinePermutation& f, std::int64_t n) {
  // the first ascent right of a is automatically a cover; it only needs to
  // stay bounded
  const int l = f.period();
  for (std::int64_t a = 1; a <= l; ++a) {
    const std::int64_t fa = f(a);
    for (std::int64_t b = a + 1; b < a + n; ++b) {
      const std::int64_t fb = f(b);
      if (fb > fa) {
        if (fb <= a + n) return true;
        break;
      }
    }
  }
  return !bruhat_covers_up(f, n).empty();
}

bool has_bridge_cover_up(const AffinePermutation& f, std::int64_t n) {
  const int l = f.period();
  for (std::int64_t a = 1; a <= l; ++a)
    if (f(a) < f(a + 1) && f(a + 1) <= a + n) return true;
  return !bridge_covers_up(f, n).empty();
}

std::vector<Cover> bruhat_covers_down(const AffinePermutation& f,
                                      std::int64_t n) {
  return covers_down_impl(f, n, false);
}

std::vector<Cover> bridge_covers_down(const AffinePermutation& f,
                                      std::int64_t n) {
  return covers_down_impl(f, n, true);
}

PosetParams PosetParams::make(int k, int ell, int n) {
  if (k <= 0 || ell <= 0 || n <= 0)
    throw std::invalid_argument("poset parameters must be positive");
  PosetParams params;
  params.k = k;
  params.ell = std::gcd(ell, n);
  params.n = n;
  params.p = n / params.ell;
  params.alpha = k / params.p;
  params.beta = k % params.p;
  return params;
}

std::int64_t bridge_rank(const PosetParams& params) {
  const std::int64_t k = params.k, n = params.n, p = params.p,
                     beta = params.beta;
  const std::int64_t num = k * (n - k) - beta * (p - beta);
  if (num % p != 0) throw std::logic_error("bridge rank non-integral");
  return num / p;
}

namespace {

std::vector<std::vector<int>> subsets_of_size(int m, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // lexicographic enumeration of r-subsets of [1, m]
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= m; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace

std::vector<AffinePermutation> maximal_elements(const PosetParams& params) {
  const int l = params.ell, n = params.n, alpha = params.alpha,
            beta = params.beta;
  std::vector<AffinePermutation> out;
  for (const auto& S : subsets_of_size(l, alpha)) {
    auto in_S = [&](int i) {
      return std::binary_search(S.begin(), S.end(), i);
    };
    if (beta == 0) {
      std::vector<std::int64_t> w(l);
      for (int i = 1; i <= l; ++i) w[i - 1] = in_S(i) ? i + n : i;
      out.emplace_back(l, std::move(w));
    } else {
      for (int s = 1; s <= l; ++s) {
        if (in_S(s)) continue;
        std::vector<std::int64_t> w(l);
        for (int i = 1; i <= l; ++i) {
          if (i == s)
            w[i - 1] = i + static_cast<std::int64_t>(beta) * l;
          else if (in_S(i))
            w[i - 1] = i + n;
          else
            w[i - 1] = i;
        }
        out.emplace_back(l, std::move(w));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// windows with small entries pack into one word, letting large searches use
// flat hash sets
bool packable(int period, std::int64_t n) {
  return period <= 12 && period + n < 64;
}

std::uint64_t pack_window(const std::vector<std::int64_t>& w) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    key |= static_cast<std::uint64_t>(w[i] - 1) << (5 * i);
  return key;
}

std::vector<std::int64_t> unpack_window(std::uint64_t key, int period) {
  std::vector<std::int64_t> w(period);
  for (int i = 0; i < period; ++i) w[i] = ((key >> (5 * i)) & 31) + 1;
  return w;
}

}  // namespace

std::vector<AffinePermutation> enumerate_bounded(const PosetParams& params,
                                                 std::size_t cap) {
  const std::int64_t n = params.n;
  const int l = params.ell;
  AffinePermutation id = identity_shift(l, params.k);
  if (!is_bounded(id, n)) return {};
  std::vector<AffinePermutation> out;
  if (packable(l, n)) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> frontier{pack_window(id.window())};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
      AffinePermutation f(l, unpack_window(frontier.back(), l));
      frontier.pop_back();
      out.push_back(f);
      if (out.size() > cap)
        throw std::runtime_error("enumerate_bounded: cap exceeded");
      for (auto& cov : bruhat_covers_up(f, n)) {
        std::uint64_t key = pack_window(cov.target.window());
        if (seen.insert(key).second) frontier.push_back(key);
      }
    }
  } else {
    std::set<std::vector<std::int64_t>> seen;
    std::queue<AffinePermutation> frontier;
    seen.insert(id.window());
    out.push_back(id);
    frontier.push(id);
    while (!frontier.empty()) {
      AffinePermutation f = frontier.front();
      frontier.pop();
      for (auto& cov : bruhat_covers_up(f, n)) {
        if (seen.insert(cov.target.window()).second) {
          if (out.size() >= cap)
            throw std::runtime_error("enumerate_bounded: cap exceeded");
          out.push_back(cov.target);
          frontier.push(cov.target);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AffinePermutation> enumerate_bounded_direct(
    const PosetParams& params) {
  const int l = params.ell;
  const std::int64_t n = params.n, k = params.k;
  std::vector<AffinePermutation> out;
  std::vector<std::int64_t> w(l);
  std::vector<bool> used(l, false);
  auto rec = [&](auto&& self, int i, std::int64_t sum) -> void {
    if (i > l) {
      if (sum == k * l) out.emplace_back(l, w);
      return;
    }
    for (std::int64_t v = i; v <= i + n; ++v) {
      int r = static_cast<int>(v % l);
      if (r < 0) r += l;
      if (used[r]) continue;
      // remaining positions can add at most n each
      std::int64_t s = sum + (v - i);
      if (s > k * l || s + static_cast<std::int64_t>(l - i) * n < k * l)
        continue;
      used[r] = true;
      w[i - 1] = v;
      self(self, i + 1, s);
      used[r] = false;
    }
  };
  rec(rec, 1, 0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t m) : parent(m) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

struct IdChains {
  std::vector<AffinePermutation> elems;  // elems[0] is the top
  std::vector<std::vector<std::uint32_t>> chains;
};

// saturated-chain count by dynamic programming over the cover dag,
// saturating at the cap
std::size_t count_chains_dp(const std::vector<AffinePermutation>& elems,
                            const std::vector<std::vector<std::uint32_t>>& up,
                            std::uint32_t bottom_id, std::size_t cap) {
  // process by decreasing length: paths(top) = 1
  std::vector<std::uint32_t> order(elems.size());
  std::iota(order.begin(), order.end(), 0u);
  std::vector<std::int64_t> len(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i)
    len[i] = coxeter_length(elems[i]);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return len[a] > len[b]; });
  std::vector<std::size_t> paths(elems.size(), 0);
  paths[0] = 1;
  const std::size_t limit = cap * 4 + 16;
  for (std::uint32_t id : order) {
    if (id == 0) continue;
    std::size_t total = 0;
    for (std::uint32_t next : up[id]) {
      total += paths[next];
      if (total >= limit) {
        total = limit;
        break;
      }
    }
    paths[id] = total;
  }
  return paths[bottom_id];
}

IdChains enumerate_id_chains(const AffinePermutation& bottom,
                             const AffinePermutation& top, std::int64_t n,
                             std::size_t cap) {
  IdChains out;
  const std::int64_t target_len = coxeter_length(top);
  const std::int64_t base_len = coxeter_length(bottom);
  if (base_len > target_len) return out;
  if (bottom == top) {
    out.elems.push_back(bottom);
    out.chains.push_back({0});
    return out;
  }

  // The interval below top, with its internal cover lists cached so the
  // chain walk never re-derives them.
  std::map<std::vector<std::int64_t>, std::uint32_t> index;
  {
    std::vector<AffinePermutation> stack{top};
    index[top.window()] = 0;
    out.elems.push_back(top);
    while (!stack.empty()) {
      AffinePermutation f = stack.back();
      stack.pop_back();
      for (auto& cov : bridge_covers_down(f, n)) {
        if (index
                .emplace(cov.target.window(),
                         static_cast<std::uint32_t>(out.elems.size()))
                .second) {
          out.elems.push_back(cov.target);
          stack.push_back(cov.target);
        }
      }
    }
  }
  auto it = index.find(bottom.window());
  if (it == index.end()) return out;
  const std::uint32_t bottom_id = it->second;

  std::vector<std::vector<std::uint32_t>> up(out.elems.size());
  for (std::size_t i = 0; i < out.elems.size(); ++i) {
    for (auto& cov : bridge_covers_up(out.elems[i], n)) {
      auto jt = index.find(cov.target.window());
      if (jt != index.end()) up[i].push_back(jt->second);
    }
  }

  if (count_chains_dp(out.elems, up, bottom_id, cap) > cap)
    throw std::runtime_error("saturated_chains: cap exceeded");

  std::vector<std::uint32_t> cur{bottom_id};
  auto rec = [&](auto&& self) -> void {
    const std::uint32_t f = cur.back();
    if (f == 0) {  // top
      out.chains.push_back(cur);
      return;
    }
    for (std::uint32_t next : up[f]) {
      cur.push_back(next);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

MoveGraphReport move_graph_on_ids(
    const std::vector<std::vector<std::uint32_t>>& seq) {
  MoveGraphReport report;
  report.chain_count = seq.size();
  if (seq.empty()) return report;
  const std::size_t L = seq[0].size();
  const std::size_t C = seq.size();
  auto mix = [](std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h * 0xff51afd7ed558ccdULL;
  };
  // prefix/suffix hashes allow wildcarding a window of positions in O(1)
  std::vector<std::uint64_t> pre(C * (L + 1)), suf(C * (L + 2));
  for (std::size_t c = 0; c < C; ++c) {
    std::uint64_t* p = &pre[c * (L + 1)];
    std::uint64_t* s = &suf[c * (L + 2)];
    p[0] = 0;
    s[L] = 0;
    s[L + 1] = 0;
    for (std::size_t t = 0; t < L; ++t) p[t + 1] = mix(p[t], seq[c][t] + 1);
    for (std::size_t t = L; t-- > 0;)
      s[t] = mix(s[t + 1], (seq[c][t] + 1) * 0x100000001b3ULL);
  }

  UnionFind uf(C);
  std::size_t edges = 0;
  auto process = [&](std::size_t t, std::size_t width, bool need_both) {
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> bucket;
    bucket.reserve(C / 2 + 8);
    for (std::size_t c = 0; c < C; ++c)
      bucket[mix(pre[c * (L + 1) + t], suf[c * (L + 2) + t + width])]
          .push_back(static_cast<std::uint32_t>(c));
    for (auto& [key, members] : bucket) {
      if (members.size() < 2) continue;
      const auto& base = seq[members[0]];
      for (std::size_t i = 0; i < members.size(); ++i) {
        const auto& si = seq[members[i]];
        // guard against hash collisions: members must agree off the window
        bool same = true;
        for (std::size_t u = 0; u < L && same; ++u)
          if (u < t || u >= t + width) same = si[u] == base[u];
        if (!same) continue;
        if (i == 0) continue;
        if (!need_both) {
          ++edges;
          uf.unite(members[0], members[i]);
        } else {
          for (std::size_t j = 0; j < i; ++j) {
            const auto& sj = seq[members[j]];
            if (si[t] != sj[t] && si[t + 1] != sj[t + 1]) {
              ++edges;
              uf.unite(members[i], members[j]);
            }
          }
        }
      }
    }
  };
  for (std::size_t t = 1; t + 1 < L; ++t) process(t, 1, false);
  for (std::size_t t = 1; t + 2 < L; ++t) process(t, 2, true);

  std::set<std::size_t> roots;
  for (std::size_t c = 0; c < C; ++c) roots.insert(uf.find(c));
  report.edge_count = edges;
  report.component_count = roots.size();
  report.connected = roots.size() == 1;
  return report;
}

}  // namespace

std::vector<ChainVec> saturated_chains(const AffinePermutation& bottom,
                                       const AffinePermutation& top,
                                       std::int64_t n, std::size_t cap) {
  auto ids = enumerate_id_chains(bottom, top, n, cap);
  std::vector<ChainVec> out;
  out.reserve(ids.chains.size());
  for (const auto& chain : ids.chains) {
    ChainVec materialized;
    materialized.reserve(chain.size());
    for (std::uint32_t id : chain) materialized.push_back(ids.elems[id]);
    out.push_back(std::move(materialized));
  }
  return out;
}

MoveGraphReport move_graph_connectivity(const std::vector<ChainVec>& chains) {
  std::map<std::vector<std::int64_t>, std::uint32_t> ids;
  std::vector<std::vector<std::uint32_t>> seq(chains.size());
  for (std::size_t c = 0; c < chains.size(); ++c) {
    seq[c].reserve(chains[c].size());
    for (const auto& f : chains[c]) {
      auto [it, inserted] =
          ids.emplace(f.window(), static_cast<std::uint32_t>(ids.size()));
      seq[c].push_back(it->second);
    }
  }
  return move_graph_on_ids(seq);
}

MoveGraphReport verify_move_connected(const AffinePermutation& bottom,
                                      const AffinePermutation& top,
                                      std::int64_t n, std::size_t cap) {
  MoveGraphReport report;
  IdChains ids;
  try {
    ids = enumerate_id_chains(bottom, top, n, cap);
  } catch (const std::runtime_error&) {
    report.skipped = true;
    return report;
  }
  return move_graph_on_ids(ids.chains);
}

}  // namespace cyclgr
