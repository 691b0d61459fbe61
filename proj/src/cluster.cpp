#include "cyclgr/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cyclgr {

std::vector<Complex> SamplePanel::evaluate(const KSubset& I) const {
  std::vector<Complex> out;
  out.reserve(points.size());
  for (const Matrix& X : points) out.push_back(minor_on(X, I));
  return out;
}

std::vector<Complex> SamplePanel::swapped_halves(
    const std::vector<Complex>& print) const {
  if (shift_pairing == 0)
    throw std::logic_error("panel has no shift pairing");
  const std::size_t half = print.size() / 2;
  std::vector<Complex> out(print.size());
  for (std::size_t i = 0; i < half; ++i) {
    out[i] = print[half + i];
    out[half + i] = print[i];
  }
  return out;
}

SamplePanel make_component_panel(const PosetParams& params, int count,
                                 Rng& rng) {
  SamplePanel panel;
  panel.k = params.k;
  panel.n = params.n;
  ComponentSignature distinguished;
  for (const auto& sig : components(params.k, params.n, params.ell))
    if (sig.distinguished) distinguished = sig;
  for (int t = 0; t < count; ++t)
    panel.points.push_back(sample_point_on_component(
        distinguished, params.k, params.n, params.ell, rng));
  // trailing TP points in real coordinates, for positivity smoke checks
  panel.points.push_back(real_representative(karp_point(params.k, params.n)));
  AffinePermutation bottom = identity_shift(params.ell, params.k);
  for (int t = 0; t < 2; ++t)
    panel.points.push_back(
        real_representative(sample_cell_point(bottom, params, rng)));
  return panel;
}

SamplePanel make_grassmann_panel(int k, int n, int count, int shift,
                                 Rng& rng) {
  SamplePanel panel;
  panel.k = k;
  panel.n = n;
  panel.shift_pairing = shift;
  std::vector<Matrix> base;
  for (int t = 0; t < count; ++t) base.push_back(gaussian_matrix(k, n, rng));
  // two TP points: rows on the moment curve with increasing parameters
  std::uniform_real_distribution<double> unif(0.05, 0.4);
  for (int t = 0; t < 2; ++t) {
    Matrix X(k, n);
    double x = 0.3;
    for (int r = 0; r < k; ++r) {
      x += unif(rng);
      for (int c = 0; c < n; ++c) X(r, c) = std::pow(x, c);
    }
    base.push_back(X);
  }
  panel.points = base;
  Matrix R = Matrix::Identity(n, n);
  Matrix R1 = cyclic_shift_matrix(k, n);
  for (int t = 0; t < shift; ++t) R = R * R1;
  for (const Matrix& X : base) panel.points.push_back(X * R);
  return panel;
}

namespace {

std::vector<std::vector<double>> trivial_strings(const std::vector<int>& deg) {
  std::vector<std::vector<double>> out;
  for (int d : deg) {
    std::vector<double> z(d + 1, 0.0);
    z.front() = 1.0;
    z.back() = 1.0;
    out.push_back(std::move(z));
  }
  return out;
}

}  // namespace

CSSeed initial_cs_seed(const PosetParams& params, const SamplePanel& panel) {
  auto labels = initial_collection(params);
  CSSeed seed;
  seed.N = labels.N;
  const int total = static_cast<int>(labels.labels.size());
  seed.B = Eigen::MatrixXi::Zero(total, seed.N);
  auto add_arrow = [&](int from, int to) {
    // vertices are 1-based label indices; only mutable targets get columns
    if (to <= seed.N) seed.B(from - 1, to - 1) += 1;
    if (from <= seed.N) seed.B(to - 1, from - 1) -= 1;
  };
  for (int i = 1; i <= seed.N; ++i) {
    add_arrow(i + 1, i);
    add_arrow(i, i + params.ell);
    add_arrow(i + params.ell, i + 1);
  }
  seed.degrees.assign(seed.N, 1);
  seed.degrees[0] = params.k;
  seed.strings = trivial_strings(seed.degrees);
  for (int s = 1; s < params.k; ++s)
    seed.strings[0][s] = eta_singleton(s, params.k, params.p);
  for (const auto& I : labels.labels) {
    seed.vars.push_back(panel.evaluate(I));
    seed.labels.push_back(I.str());
  }
  return seed;
}

CSSeed right_companion(const CSSeed& seed) {
  CSSeed out = seed;
  for (int v = 0; v < seed.N; ++v)
    out.B.col(v) *= seed.degrees[v];
  out.degrees.assign(seed.N, 1);
  out.strings = trivial_strings(out.degrees);
  return out;
}

Eigen::MatrixXi collection_quiver(const std::vector<KSubset>& collection,
                                  int mutable_count) {
  const int total = static_cast<int>(collection.size());
  Eigen::MatrixXi B = Eigen::MatrixXi::Zero(total, mutable_count);
  std::map<KSubset, int> index;
  for (int i = 0; i < total; ++i) index[collection[i]] = i;

  // votes[u][v] accumulates clique circulations for the arrow u -> v
  std::map<std::pair<int, int>, int> votes;
  auto vote = [&](int from, int to) { ++votes[{from, to}]; };

  // common-(k-1)-set cliques, circulating through increasing extras
  std::map<KSubset, std::vector<std::pair<int, int>>> white;  // extra, member
  std::map<KSubset, std::vector<std::pair<int, int>>> black;  // omitted, member
  for (int i = 0; i < total; ++i) {
    const KSubset& I = collection[i];
    for (int e : I.elements()) white[I.without(e)].push_back({e, i});
    for (int e = 1; e <= I.n; ++e)
      if (!I.contains(e)) black[I.with(e)].push_back({e, i});
  }
  for (auto& [S, members] : white) {
    if (members.size() < 3) continue;
    std::sort(members.begin(), members.end());
    for (std::size_t t = 0; t < members.size(); ++t)
      vote(members[t].second, members[(t + 1) % members.size()].second);
  }
  for (auto& [T, members] : black) {
    if (members.size() < 3) continue;
    std::sort(members.begin(), members.end());
    for (std::size_t t = 0; t < members.size(); ++t)
      vote(members[(t + 1) % members.size()].second, members[t].second);
  }
  // an edge of the tiling needs consecutive members on both sides; cliques
  // of size two vote with weight one, shared faces with weight two
  for (auto& [edge, count] : votes) {
    auto [u, v] = edge;
    if (votes.count({v, u})) continue;  // disagreeing circulations cancel
    if (u < mutable_count || v < mutable_count) {
      if (v < mutable_count) B(u, v) = 1;
      if (u < mutable_count) B(v, u) = -1;
    }
  }
  return B;
}

CSSeed grassmann_seed(int k, int n, const SamplePanel& panel) {
  auto params = PosetParams::make(k, n, n);
  auto chain = chain_to_maximal(identity_shift(n, k), params);
  auto C = collection_from_chain(chain, params);
  std::vector<KSubset> frozen, mut;
  for (const auto& I : C.subsets) {
    bool interval = false;
    for (int i = 1; i <= n && !interval; ++i) {
      KSubset J(0, n);
      for (int t = 0; t < k; ++t) J = J.with(mod1(i + t, n));
      interval = (I == J);
    }
    (interval ? frozen : mut).push_back(I);
  }
  std::vector<KSubset> ordered = mut;
  ordered.insert(ordered.end(), frozen.begin(), frozen.end());

  CSSeed seed;
  seed.N = static_cast<int>(mut.size());
  seed.B = collection_quiver(ordered, seed.N);
  seed.degrees.assign(seed.N, 1);
  seed.strings = trivial_strings(seed.degrees);
  for (const auto& I : ordered) {
    seed.vars.push_back(panel.evaluate(I));
    seed.labels.push_back(I.str());
  }
  return seed;
}

namespace {

Eigen::MatrixXi matrix_mutation(const Eigen::MatrixXi& M, int dir) {
  Eigen::MatrixXi out = M;
  const int rows = static_cast<int>(M.rows());
  const int cols = static_cast<int>(M.cols());
  for (int u = 0; u < rows; ++u) {
    for (int v = 0; v < cols; ++v) {
      if (u == dir || v == dir) {
        out(u, v) = -M(u, v);
      } else {
        out(u, v) = M(u, v) + std::max(0, M(u, dir)) * std::max(0, M(dir, v)) -
                    std::max(0, -M(u, dir)) * std::max(0, -M(dir, v));
      }
    }
  }
  return out;
}

}  // namespace

CSSeed mutate(const CSSeed& seed, int dir) {
  if (dir < 0 || dir >= seed.N) throw std::invalid_argument("bad direction");
  CSSeed out = seed;

  Eigen::MatrixXi BD = seed.B;
  for (int v = 0; v < seed.N; ++v) BD.col(v) *= seed.degrees[v];
  Eigen::MatrixXi mutated = matrix_mutation(BD, dir);
  for (int v = 0; v < seed.N; ++v) {
    for (int u = 0; u < seed.total(); ++u) {
      if (mutated(u, v) % seed.degrees[v] != 0)
        throw std::logic_error("mutated matrix is not divisible by degrees");
      out.B(u, v) = mutated(u, v) / seed.degrees[v];
    }
  }

  const std::size_t m = seed.vars[0].size();
  const int d = seed.degrees[dir];
  std::vector<Complex> plus(m, Complex{1, 0}), minus(m, Complex{1, 0});
  for (int u = 0; u < seed.total(); ++u) {
    const int e = seed.B(u, dir);
    for (int rep = 0; rep < std::abs(e); ++rep)
      for (std::size_t i = 0; i < m; ++i)
        (e > 0 ? plus[i] : minus[i]) *= seed.vars[u][i];
  }
  std::vector<Complex> value(m, Complex{0, 0});
  for (int s = 0; s <= d; ++s) {
    if (seed.strings[dir][s] == 0.0) continue;
    for (std::size_t i = 0; i < m; ++i)
      value[i] += seed.strings[dir][s] * std::pow(plus[i], s) *
                  std::pow(minus[i], d - s);
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (std::abs(seed.vars[dir][i]) == 0.0)
      throw std::domain_error("fingerprint vanishes; panel too degenerate");
    out.vars[dir][i] = value[i] / seed.vars[dir][i];
  }
  out.labels[dir] = "mu" + std::to_string(dir + 1) + "(" + seed.labels[dir] +
                    ")";
  return out;
}

namespace {

bool prints_close(const std::vector<Complex>& a, const std::vector<Complex>& b,
                  double tol, std::size_t limit = SIZE_MAX) {
  const std::size_t m = std::min(a.size(), limit);
  for (std::size_t i = 0; i < m; ++i) {
    const double scale = std::abs(a[i]) + std::abs(b[i]) + 1e-300;
    if (std::abs(a[i] - b[i]) > tol * scale) return false;
  }
  return true;
}

struct PrintRegistry {
  std::vector<std::vector<Complex>> prints;
  double tol;

  explicit PrintRegistry(double tol) : tol(tol) {}

  int find(const std::vector<Complex>& p) const {
    for (std::size_t i = 0; i < prints.size(); ++i)
      if (prints_close(prints[i], p, tol, 4) && prints_close(prints[i], p, tol))
        return static_cast<int>(i);
    return -1;
  }

  int find_or_add(const std::vector<Complex>& p) {
    int id = find(p);
    if (id >= 0) return id;
    prints.push_back(p);
    return static_cast<int>(prints.size()) - 1;
  }
};

}  // namespace

ExchangeGraph exchange_graph(const CSSeed& seed, std::size_t cap, double tol) {
  ExchangeGraph graph;
  PrintRegistry registry(tol);

  auto key_of = [&](const CSSeed& s) {
    std::vector<int> key;
    key.reserve(s.N);
    for (int v = 0; v < s.N; ++v) key.push_back(registry.find_or_add(s.vars[v]));
    std::sort(key.begin(), key.end());
    return key;
  };

  std::map<std::vector<int>, std::size_t> seen;
  std::set<std::pair<std::size_t, std::size_t>> edges;
  std::queue<CSSeed> frontier;

  auto key0 = key_of(seed);
  seen[key0] = 0;
  graph.seeds.push_back(key0);
  frontier.push(seed);

  while (!frontier.empty()) {
    CSSeed cur = frontier.front();
    frontier.pop();
    const std::size_t cur_id = seen.at(key_of(cur));
    for (int dir = 0; dir < cur.N; ++dir) {
      CSSeed next = mutate(cur, dir);
      auto key = key_of(next);
      auto it = seen.find(key);
      std::size_t next_id;
      if (it == seen.end()) {
        if (seen.size() >= cap) {
          graph.capped = true;
          continue;
        }
        next_id = seen.size();
        seen[key] = next_id;
        graph.seeds.push_back(key);
        frontier.push(next);
      } else {
        next_id = it->second;
      }
      edges.insert({std::min(cur_id, next_id), std::max(cur_id, next_id)});
    }
  }
  graph.seed_count = seen.size();
  graph.edge_count = edges.size();
  graph.variable_count = registry.prints.size();
  graph.variable_prints = std::move(registry.prints);
  return graph;
}

std::size_t count_shift_invariant_clusters(const ExchangeGraph& graph,
                                           const SamplePanel& panel,
                                           double tol) {
  if (panel.shift_pairing == 0)
    throw std::logic_error("panel has no shift pairing");
  // The pullback of a variable along the shift takes value v(X R) at a base
  // point X, i.e. the second half of v's print; match it against the first
  // halves of the registry.
  const std::size_t half = panel.points.size() / 2;
  auto half_match = [&](const std::vector<Complex>& shifted_half,
                        const std::vector<Complex>& candidate) {
    for (std::size_t i = 0; i < half; ++i) {
      const double scale =
          std::abs(shifted_half[i]) + std::abs(candidate[i]) + 1e-300;
      if (std::abs(shifted_half[i] - candidate[i]) > tol * scale) return false;
    }
    return true;
  };
  std::vector<int> image(graph.variable_prints.size(), -1);
  for (std::size_t v = 0; v < graph.variable_prints.size(); ++v) {
    std::vector<Complex> shifted(graph.variable_prints[v].begin() + half,
                                 graph.variable_prints[v].end());
    for (std::size_t w = 0; w < graph.variable_prints.size(); ++w) {
      if (half_match(shifted, graph.variable_prints[w])) {
        image[v] = static_cast<int>(w);
        break;
      }
    }
  }
  std::size_t count = 0;
  for (const auto& cluster : graph.seeds) {
    std::vector<int> mapped;
    bool ok = true;
    for (int v : cluster) {
      if (image[v] < 0) {
        ok = false;
        break;
      }
      mapped.push_back(image[v]);
    }
    if (!ok) continue;
    std::sort(mapped.begin(), mapped.end());
    if (mapped == cluster) ++count;
  }
  return count;
}

GradedSeed mutate_graded(const GradedSeed& seed, int dir) {
  GradedSeed out = seed;
  Eigen::MatrixXi BD = seed.B;
  for (int v = 0; v < seed.N; ++v) BD.col(v) *= seed.degrees[v];
  Eigen::MatrixXi mutated = matrix_mutation(BD, dir);
  for (int v = 0; v < seed.N; ++v)
    for (int u = 0; u < static_cast<int>(seed.B.rows()); ++u)
      out.B(u, v) = mutated(u, v) / seed.degrees[v];

  const int dims = static_cast<int>(seed.deg[0].size());
  Eigen::VectorXi plus = Eigen::VectorXi::Zero(dims),
                  minus = Eigen::VectorXi::Zero(dims);
  for (int u = 0; u < static_cast<int>(seed.B.rows()); ++u) {
    const int e = seed.B(u, dir);
    if (e > 0) plus += e * seed.deg[u];
    if (e < 0) minus += (-e) * seed.deg[u];
  }
  const int d = seed.degrees[dir];
  bool have = false;
  Eigen::VectorXi degree;
  for (int s = 0; s <= d; ++s) {
    if (!seed.support[dir][s]) continue;
    Eigen::VectorXi term = s * plus + (d - s) * minus;
    if (!have) {
      degree = term;
      have = true;
    } else if (term != degree) {
      throw std::logic_error("inhomogeneous exchange under the grading");
    }
  }
  if (!have) throw std::logic_error("empty exchange support");
  out.deg[dir] = degree - seed.deg[dir];
  return out;
}

NNSeed nn_mutate(const NNSeed& seed, int dir) {
  NNSeed out = seed;
  Eigen::MatrixXi BD = seed.B;
  for (int v = 0; v < seed.N; ++v) BD.col(v) *= seed.degrees[v];
  Eigen::MatrixXi mutated = matrix_mutation(BD, dir);
  for (int v = 0; v < seed.N; ++v)
    for (int u = 0; u < seed.N; ++u) out.B(u, v) = mutated(u, v) / seed.degrees[v];

  Complex plus{1, 0}, minus{1, 0};
  for (int u = 0; u < seed.N; ++u) {
    const int e = seed.B(u, dir);
    for (int rep = 0; rep < std::abs(e); ++rep)
      (e > 0 ? plus : minus) *= seed.x[u];
  }
  const int d = seed.degrees[dir];
  Complex value{0, 0};
  for (int s = 0; s <= d; ++s)
    value += seed.p[dir][s] * std::pow(plus, s) * std::pow(minus, d - s);
  out.x[dir] = value / seed.x[dir];

  // p_{dir;s} reverses; other strings scale by powers of the ends of the
  // dir string, keeping p_{j;0} as the chosen representative
  std::reverse(out.p[dir].begin(), out.p[dir].end());
  for (int j = 0; j < seed.N; ++j) {
    if (j == dir) continue;
    const int b = seed.B(dir, j);
    const int dj = seed.degrees[j];
    for (int s = 1; s <= dj; ++s) {
      Complex factor = std::pow(seed.p[dir][d], std::max(0, s * b)) *
                       std::pow(seed.p[dir][0], -std::max(0, -s * b));
      out.p[j][s] = seed.p[j][s] * factor;
    }
  }
  return out;
}

std::vector<std::vector<Complex>> nn_yhat(const NNSeed& seed) {
  std::vector<std::vector<Complex>> out(seed.N);
  for (int i = 0; i < seed.N; ++i) {
    Complex plus{1, 0}, minus{1, 0};
    for (int u = 0; u < seed.N; ++u) {
      const int e = seed.B(u, i);
      for (int rep = 0; rep < std::abs(e); ++rep)
        (e > 0 ? plus : minus) *= seed.x[u];
    }
    const Complex ratio = plus / minus;
    for (int s = 0; s <= seed.degrees[i]; ++s)
      out[i].push_back(seed.p[i][s] / seed.p[i][0] * std::pow(ratio, s));
  }
  return out;
}

bool nn_similar(const NNSeed& a, const NNSeed& b, double tol) {
  if (a.N != b.N || a.degrees != b.degrees) return false;
  auto ya = nn_yhat(a), yb = nn_yhat(b);
  for (int i = 0; i < a.N; ++i)
    for (std::size_t s = 0; s < ya[i].size(); ++s) {
      const double scale = std::abs(ya[i][s]) + std::abs(yb[i][s]) + 1e-300;
      if (std::abs(ya[i][s] - yb[i][s]) > tol * scale) return false;
    }
  return true;
}

YhatReport yhat_check(const NNSeed& seed, int dir, Rng& rng) {
  YhatReport report;
  auto before = nn_yhat(seed);
  NNSeed after = nn_mutate(seed, dir);
  auto actual = nn_yhat(after);

  const int d = seed.degrees[dir];
  double worst = 0;
  auto residual = [&](Complex got, Complex expect) {
    const double scale = std::abs(got) + std::abs(expect) + 1e-300;
    worst = std::max(worst, std::abs(got - expect) / scale);
  };
  // yhat_{dir;s} -> yhat_{dir;d-s} / yhat_{dir;d}
  for (int s = 0; s <= d; ++s)
    residual(actual[dir][s], before[dir][d - s] / before[dir][d]);
  // yhat_{j;s} -> yhat_{j;s} yhat_{dir;d}^{[s b]+} (sum_t yhat_{dir;t})^{-s b}
  Complex sum{0, 0};
  for (int t = 0; t <= d; ++t) sum += before[dir][t];
  for (int j = 0; j < seed.N; ++j) {
    if (j == dir) continue;
    const int b = seed.B(dir, j);
    for (int s = 0; s <= seed.degrees[j]; ++s) {
      Complex expect = before[j][s] *
                       std::pow(before[dir][d], std::max(0, s * b)) *
                       std::pow(sum, -static_cast<double>(s) * b);
      residual(actual[j][s], expect);
    }
  }
  report.rule_residual = worst;

  // an equivalent rescaled seed stays equivalent after mutation
  std::uniform_real_distribution<double> unif(0.5, 2.0);
  NNSeed twin = seed;
  for (int i = 0; i < seed.N; ++i) twin.x[i] *= unif(rng);
  for (int i = 0; i < seed.N; ++i) {
    Complex plus_o{1, 0}, minus_o{1, 0}, plus_t{1, 0}, minus_t{1, 0};
    for (int u = 0; u < seed.N; ++u) {
      const int e = seed.B(u, i);
      for (int rep = 0; rep < std::abs(e); ++rep) {
        (e > 0 ? plus_o : minus_o) *= seed.x[u];
        (e > 0 ? plus_t : minus_t) *= twin.x[u];
      }
    }
    const Complex gamma = (plus_t / minus_t) / (plus_o / minus_o);
    for (int s = 1; s <= seed.degrees[i]; ++s)
      twin.p[i][s] = seed.p[i][s] * std::pow(gamma, -s);
  }
  if (!nn_similar(seed, twin)) {
    report.similarity_residual = 1;
    return report;
  }
  NNSeed twin_after = nn_mutate(twin, dir);
  auto ya = nn_yhat(after), yt = nn_yhat(twin_after);
  double sim = 0;
  for (int i = 0; i < seed.N; ++i)
    for (std::size_t s = 0; s < ya[i].size(); ++s) {
      const double scale = std::abs(ya[i][s]) + std::abs(yt[i][s]) + 1e-300;
      sim = std::max(sim, std::abs(ya[i][s] - yt[i][s]) / scale);
    }
  report.similarity_residual = sim;
  report.ok = report.rule_residual < 1e-10 && report.similarity_residual < 1e-9;
  return report;
}

TauReport tau_sequence(int p, double a, double b, double c) {
  if (p < 2) throw std::invalid_argument("cycle size must be at least 2");
  const int total = 3 * p;
  // vertices: u_i = i, u'_i = p + i, u''_i = 2p + i (0-based i)
  Eigen::MatrixXi B = Eigen::MatrixXi::Zero(total, total);
  auto arrow = [&](int from, int to, int weight = 1) {
    B(from, to) += weight;
    B(to, from) -= weight;
  };
  for (int i = 0; i < p; ++i) {
    arrow(i, (i + 1) % p);  // the oriented cycle
    arrow(p + i, i);        // framing
    arrow(i, 2 * p + i);    // co-framing
  }
  std::vector<double> x(total);
  for (int i = 0; i < p; ++i) {
    x[i] = a;
    x[p + i] = b;
    x[2 * p + i] = c;
  }

  auto mutate_at = [&](int dir) {
    double plus = 1, minus = 1;
    for (int u = 0; u < total; ++u) {
      const int e = B(u, dir);
      for (int rep = 0; rep < std::abs(e); ++rep) (e > 0 ? plus : minus) *= x[u];
    }
    x[dir] = (plus + minus) / x[dir];
    B = matrix_mutation(B, dir);
  };

  for (int i = 0; i < p - 1; ++i) mutate_at(i);
  // transposition (u_{p-1}, u_p): 0-based vertices p-2 and p-1
  std::swap(x[p - 2], x[p - 1]);
  B.row(p - 2).swap(B.row(p - 1));
  B.col(p - 2).swap(B.col(p - 1));
  for (int i = p - 2; i >= 0; --i) mutate_at(i);

  TauReport report;
  for (int i = 0; i < p; ++i) report.values.push_back(x[i]);
  double expect = 0;
  for (int i = 0; i <= p - 1; ++i)
    expect += std::pow(b, i) * std::pow(c, p - 1 - i);
  expect /= a;
  for (int i = 0; i < p; ++i)
    report.exchange_residual = std::max(
        report.exchange_residual,
        std::abs(x[i] - expect) / (std::abs(expect) + 1e-300));

  // relabel u'_i -> u'_{i-1} and u''_i -> u''_{i+1}
  Eigen::MatrixXi relabeled = Eigen::MatrixXi::Zero(total, total);
  std::vector<int> perm(total);
  for (int i = 0; i < p; ++i) {
    perm[i] = i;
    perm[p + i] = p + (i - 1 + p) % p;
    perm[2 * p + i] = 2 * p + (i + 1) % p;
  }
  for (int u = 0; u < total; ++u)
    for (int v = 0; v < total; ++v) relabeled(perm[u], perm[v]) = B(u, v);
  report.quiver = relabeled;

  Eigen::MatrixXi expect_quiver = Eigen::MatrixXi::Zero(total, total);
  {
    auto earrow = [&](int from, int to) {
      expect_quiver(from, to) += 1;
      expect_quiver(to, from) -= 1;
    };
    for (int i = 0; i < p; ++i) {
      earrow(i, (i + 1) % p);
      earrow(2 * p + i, i);  // u''_i -> u_i
      earrow(i, p + i);      // u_i -> u'_i
      for (int j = 0; j < p; ++j)
        if (j != (i + 1) % p) earrow(p + i, 2 * p + j);  // u'_i -> u''_j
    }
  }
  report.quiver_matches = (relabeled == expect_quiver);
  return report;
}

}  // namespace cyclgr
