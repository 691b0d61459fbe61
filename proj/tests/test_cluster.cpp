#include "cyclgr/cluster.hpp"

#include <cmath>

#include "doctest.h"

using namespace cyclgr;

namespace {

double print_gap(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double worst = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double scale = std::abs(a[i]) + std::abs(b[i]) + 1e-300;
    worst = std::max(worst, std::abs(a[i] - b[i]) / scale);
  }
  return worst;
}

}  // namespace

TEST_CASE("initial seed of the distinguished component") {
  Rng rng(101);
  SUBCASE("(2,2,4): one mutable variable, vanishing interior string") {
    auto params = PosetParams::make(2, 2, 4);
    auto panel = make_component_panel(params, 9, rng);
    auto seed = initial_cs_seed(params, panel);
    CHECK(seed.N == 1);
    CHECK(seed.total() == 3);
    CHECK(seed.degrees == std::vector<int>{2});
    REQUIRE(seed.strings[0].size() == 3);
    CHECK(seed.strings[0][0] == 1.0);
    CHECK(seed.strings[0][1] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(seed.strings[0][2] == 1.0);
    CHECK(seed.B(1, 0) == 1);   // frozen ahead of the special vertex
    CHECK(seed.B(2, 0) == -1);  // frozen behind it
  }
  SUBCASE("(3,4,12): degrees and quiver of the straightening seed") {
    auto params = PosetParams::make(3, 4, 12);
    auto panel = make_component_panel(params, 12, rng);
    auto seed = initial_cs_seed(params, panel);
    CHECK(seed.N == 6);
    CHECK(seed.total() == 10);
    CHECK(seed.degrees[0] == 3);
    for (int v = 1; v < 6; ++v) CHECK(seed.degrees[v] == 1);
    // arrows x_{i+1} -> x_i -> x_{i+4} -> x_{i+1}
    CHECK(seed.B(1, 0) == 1);
    CHECK(seed.B(4, 0) == -1);
    CHECK(seed.B(4, 1) == 1);  // from the i=1 triangle's x_5 -> x_2
  }
  SUBCASE("(4,2,8): companion matrix carries the valued arrows") {
    auto params = PosetParams::make(4, 2, 8);
    auto panel = make_component_panel(params, 12, rng);
    auto seed = initial_cs_seed(params, panel);
    CHECK(seed.N == 3);
    CHECK(seed.degrees == std::vector<int>{4, 1, 1});
    Eigen::MatrixXi BD = seed.B;
    for (int v = 0; v < seed.N; ++v) BD.col(v) *= seed.degrees[v];
    // I_1 -(1,4)-> I_3, I_3 => I_2 (doubled), I_2 -(4,1)-> I_1
    CHECK(BD(0, 2) == 1);
    CHECK(BD(2, 0) == -4);
    CHECK(BD(2, 1) == 2);
    CHECK(BD(1, 2) == -2);
    CHECK(BD(1, 0) == 4);
    CHECK(BD(0, 1) == -1);
  }
}

TEST_CASE("special mutation realizes the degree-k exchange") {
  Rng rng(103);
  // new fingerprint equals (K^2 + eta_1 K J + J^2) / Delta_13 pointwise,
  // which is the Plucker coordinate on {2, 4} by the quadric relation
  auto params = PosetParams::make(2, 2, 8);  // p = 4, eta_1 = sqrt 2
  auto panel = make_component_panel(params, 9, rng);
  auto seed = initial_cs_seed(params, panel);
  auto mutated = mutate(seed, 0);
  auto direct = panel.evaluate(KSubset({2, 4}, 8));
  CHECK(print_gap(mutated.vars[0], direct) < 1e-9);
}

TEST_CASE("mutation is an involution") {
  Rng rng(107);
  for (auto [k, l, n] : {std::array<int, 3>{2, 2, 8}, {3, 2, 6}, {3, 4, 12}}) {
    auto params = PosetParams::make(k, l, n);
    auto panel = make_component_panel(params, 3 * (k * (l - 1) + 1), rng);
    auto seed = initial_cs_seed(params, panel);
    for (int dir = 0; dir < seed.N; ++dir) {
      auto back = mutate(mutate(seed, dir), dir);
      CHECK(back.B == seed.B);
      for (int v = 0; v < seed.total(); ++v)
        CHECK(print_gap(back.vars[v], seed.vars[v]) < 1e-8);
    }
  }
}

TEST_CASE("non-special mutations land on Plucker fingerprints") {
  Rng rng(109);
  auto params = PosetParams::make(3, 4, 12);
  auto panel = make_component_panel(params, 12, rng);
  auto seed = initial_cs_seed(params, panel);
  int plucker_dirs = 0;
  for (int dir = 1; dir < seed.N; ++dir) {
    // quadrilateral vertices exchange by a three-term relation and land on
    // a Plucker coordinate; six-valent ones produce quadratic variables
    int valence = 0;
    for (int u = 0; u < seed.total(); ++u) valence += std::abs(seed.B(u, dir));
    auto mutated = mutate(seed, dir);
    if (valence == 4) {
      ++plucker_dirs;
      bool found = false;
      for (const auto& I : all_subsets(12, 3)) {
        if (print_gap(mutated.vars[dir], panel.evaluate(I)) < 1e-7) {
          found = true;
          break;
        }
      }
      CHECK(found);
    }
  }
  CHECK(plucker_dirs == 3);
}

TEST_CASE("exchange graphs of finite type") {
  Rng rng(113);
  SUBCASE("(3,2,6): 8 seeds, 8 variables") {
    auto params = PosetParams::make(3, 2, 6);
    auto panel = make_component_panel(params, 15, rng);
    auto seed = initial_cs_seed(params, panel);
    auto graph = exchange_graph(seed, 100000);
    CHECK(!graph.capped);
    CHECK(graph.seed_count == 8);
    CHECK(graph.variable_count == 8);
    auto companion = exchange_graph(right_companion(seed), 100000);
    CHECK(companion.seed_count == 8);
    CHECK(companion.variable_count == 8);
    CHECK(companion.edge_count == graph.edge_count);
  }
  SUBCASE("(2,3,9): 6 seeds, 6 variables") {
    auto params = PosetParams::make(2, 3, 9);
    auto panel = make_component_panel(params, 15, rng);
    auto seed = initial_cs_seed(params, panel);
    auto graph = exchange_graph(seed, 100000);
    CHECK(graph.seed_count == 6);
    CHECK(graph.variable_count == 6);
  }
  SUBCASE("(2,2,8): two seeds") {
    auto params = PosetParams::make(2, 2, 8);
    auto panel = make_component_panel(params, 9, rng);
    auto graph = exchange_graph(initial_cs_seed(params, panel), 100);
    CHECK(graph.seed_count == 2);
    CHECK(graph.variable_count == 2);
  }
}

TEST_CASE("positivity of fingerprints on the TP panel members") {
  // the panel ends with the shift-fixed TP point and two TP cell points
  Rng rng(127);
  auto params = PosetParams::make(3, 2, 6);
  auto panel = make_component_panel(params, 15, rng);
  auto seed = initial_cs_seed(params, panel);
  auto graph = exchange_graph(seed, 1000);
  const std::size_t m = seed.vars[0].size();
  for (const auto& print : graph.variable_prints)
    for (std::size_t i = m - 3; i < m; ++i) {
      CHECK(print[i].real() > 0);
      CHECK(std::abs(print[i].imag()) < 1e-9 * std::abs(print[i]));
    }
}

TEST_CASE("grassmann seeds and the shift census") {
  Rng rng(131);
  SUBCASE("Gr(2,4) is a single flip") {
    auto panel = make_grassmann_panel(2, 4, 12, 2, rng);
    auto graph = exchange_graph(grassmann_seed(2, 4, panel), 100);
    CHECK(graph.seed_count == 2);
    CHECK(graph.variable_count == 2);
  }
  SUBCASE("Gr(2,5) counts") {
    auto panel = make_grassmann_panel(2, 5, 12, 1, rng);
    auto graph = exchange_graph(grassmann_seed(2, 5, panel), 100);
    CHECK(graph.seed_count == 5);
    CHECK(graph.variable_count == 5);
  }
  SUBCASE("Gr(2,6) counts") {
    auto panel = make_grassmann_panel(2, 6, 12, 2, rng);
    auto graph = exchange_graph(grassmann_seed(2, 6, panel), 1000);
    CHECK(graph.seed_count == 14);
    CHECK(graph.variable_count == 9);
  }
  SUBCASE("Gr(2,8): no shift-invariant triangulation at half turn") {
    auto panel = make_grassmann_panel(2, 8, 14, 2, rng);
    auto graph = exchange_graph(grassmann_seed(2, 8, panel), 10000);
    CHECK(graph.seed_count == 132);
    CHECK(graph.variable_count == 20);
    CHECK(count_shift_invariant_clusters(graph, panel) == 0);
  }
  SUBCASE("Gr(2,8): centrally symmetric triangulations at quarter turn") {
    auto panel = make_grassmann_panel(2, 8, 14, 4, rng);
    auto graph = exchange_graph(grassmann_seed(2, 8, panel), 10000);
    CHECK(count_shift_invariant_clusters(graph, panel) == 20);
  }
  SUBCASE("Gr(3,6): 50 seeds; 8 invariant at shift 2, 6 at shift 3") {
    auto panel2 = make_grassmann_panel(3, 6, 16, 2, rng);
    auto graph2 = exchange_graph(grassmann_seed(3, 6, panel2), 10000);
    CHECK(graph2.seed_count == 50);
    CHECK(graph2.variable_count == 16);
    CHECK(count_shift_invariant_clusters(graph2, panel2) == 8);
    auto panel3 = make_grassmann_panel(3, 6, 16, 3, rng);
    auto graph3 = exchange_graph(grassmann_seed(3, 6, panel3), 10000);
    CHECK(count_shift_invariant_clusters(graph3, panel3) == 6);
  }
}

TEST_CASE("multidegree tracking on the folded quiver") {
  Rng rng(137);
  auto params = PosetParams::make(4, 2, 8);
  auto panel = make_component_panel(params, 9, rng);
  auto cs = initial_cs_seed(params, panel);

  GradedSeed seed;
  seed.N = cs.N;
  seed.B = cs.B;
  seed.degrees = cs.degrees;
  for (const auto& z : cs.strings) {
    std::vector<bool> sup;
    for (double v : z) sup.push_back(v != 0.0);
    seed.support.push_back(sup);
  }
  auto d2 = [](int a, int b) {
    Eigen::VectorXi v(2);
    v << a, b;
    return v;
  };
  seed.deg = {d2(4, 0), d2(3, 1), d2(3, 1), d2(2, 2), d2(2, 2)};

  auto check_forms = [&](const GradedSeed& s) {
    CHECK(s.deg[0](0) - s.deg[0](1) == 4);
    CHECK(s.deg[1](0) - s.deg[1](1) == 2);
    CHECK(s.deg[2](0) - s.deg[2](1) == 2);
  };
  check_forms(seed);
  std::uniform_int_distribution<int> pick(0, 2);
  for (int walk = 0; walk < 500; ++walk) {
    GradedSeed cur = seed;
    for (int step = 0; step < 12; ++step) {
      cur = mutate_graded(cur, pick(rng));
      check_forms(cur);
    }
  }
  // no reachable variable can have pure second-symbol degree like (0,4)
  // since the difference of exponents is pinned by the vertex forms
}

TEST_CASE("yhat evolution") {
  Rng rng(139);
  SUBCASE("yhat_{i;0} is always one") {
    NNSeed seed;
    seed.N = 3;
    seed.B = Eigen::MatrixXi::Zero(3, 3);
    seed.B << 0, 1, -1, -1, 0, 1, 1, -1, 0;
    seed.degrees = {2, 1, 1};
    std::uniform_real_distribution<double> unif(0.5, 2.0);
    for (int i = 0; i < 3; ++i) seed.x.push_back(Complex{unif(rng), 0});
    for (int i = 0; i < 3; ++i) {
      std::vector<Complex> p;
      for (int s = 0; s <= seed.degrees[i]; ++s)
        p.push_back(Complex{unif(rng), 0});
      seed.p.push_back(p);
    }
    auto y = nn_yhat(seed);
    for (int i = 0; i < 3; ++i)
      CHECK(std::abs(y[i][0] - Complex{1, 0}) < 1e-12);
    for (int dir = 0; dir < 3; ++dir) {
      auto report = yhat_check(seed, dir, rng);
      CHECK(report.rule_residual < 1e-10);
      CHECK(report.similarity_residual < 1e-9);
      CHECK(report.ok);
    }
  }
  SUBCASE("degree-one case is the classical evolution") {
    NNSeed seed;
    seed.N = 2;
    seed.B = Eigen::MatrixXi::Zero(2, 2);
    seed.B << 0, 1, -1, 0;
    seed.degrees = {1, 1};
    seed.x = {Complex{1.3, 0}, Complex{0.7, 0}};
    seed.p = {{Complex{1, 0}, Complex{2.5, 0}},
              {Complex{0.5, 0}, Complex{1.7, 0}}};
    auto y = nn_yhat(seed);
    // yhat_{1;1} = (p_{1;1}/p_{1;0}) x_2^{-1} for the arrow 2 <- 1
    CHECK(std::abs(y[0][1] - Complex{2.5, 0} * std::pow(seed.x[1], -1.0)) <
          1e-12);
    auto report = yhat_check(seed, 0, rng);
    CHECK(report.ok);
  }
}

TEST_CASE("folding sequence on the framed cycle") {
  SUBCASE("all-ones at p = 3") {
    auto report = tau_sequence(3, 1, 1, 1);
    for (double v : report.values) CHECK(v == doctest::Approx(3.0));
    CHECK(report.quiver_matches);
  }
  SUBCASE("p = 2 gives (b+c)/a") {
    auto report = tau_sequence(2, 1.7, 0.6, 2.2);
    for (double v : report.values)
      CHECK(v == doctest::Approx((0.6 + 2.2) / 1.7));
  }
  SUBCASE("random specializations for p = 2..6") {
    Rng rng(149);
    std::uniform_real_distribution<double> unif(0.5, 2.0);
    for (int p = 2; p <= 6; ++p) {
      auto report = tau_sequence(p, unif(rng), unif(rng), unif(rng));
      CHECK(report.exchange_residual < 1e-10);
      CHECK(report.quiver_matches);
    }
  }
}
