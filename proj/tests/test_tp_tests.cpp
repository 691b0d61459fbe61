#include "cyclgr/tp_tests.hpp"

#include <cmath>
#include <set>

#include "doctest.h"

using namespace cyclgr;

namespace {

AffinePermutation ap(std::vector<std::int64_t> w) {
  int l = static_cast<int>(w.size());
  return AffinePermutation(l, std::move(w));
}

KSubset ks(std::vector<int> elems, int n) { return KSubset(elems, n); }

std::set<KSubset> reps(const OptimalCollection& C) {
  return {C.orbit_reps.begin(), C.orbit_reps.end()};
}

}  // namespace

TEST_CASE("chain collection for B_8(2,2)") {
  auto params = PosetParams::make(2, 2, 8);
  auto chains = saturated_chains(ap({3, 4}), ap({5, 2}), 8);
  REQUIRE(chains.size() == 1);
  auto C = collection_from_chain(chains[0], params);
  CHECK(reps(C) ==
        std::set<KSubset>{ks({1, 3}, 8), ks({2, 3}, 8), ks({1, 2}, 8)});
  CHECK(C.orbit_count() == 3);
  CHECK(is_ws_collection(C.subsets));
  CHECK(is_efficient(C, ap({3, 4}), params));

  // singleton chain at the maximal element
  auto C0 = collection_from_chain({ap({5, 2})}, params);
  CHECK(C0.orbit_count() == 1);
  CHECK(is_efficient(C0, ap({5, 2}), params));
}

TEST_CASE("every maximal chain in B_12(3,4) gives an efficient collection") {
  auto params = PosetParams::make(3, 4, 12);
  AffinePermutation bottom = identity_shift(4, 3);
  for (const auto& top : maximal_elements(params)) {
    auto chains = saturated_chains(bottom, top, 12);
    for (const auto& chain : chains) {
      auto C = collection_from_chain(chain, params);
      CHECK(is_ws_collection(C.subsets));
      CHECK(is_efficient(C, bottom, params));
      for (const auto& I : C.subsets) {
        KSubset J = rotate(I, 4);
        CHECK(std::binary_search(C.subsets.begin(), C.subsets.end(), J));
      }
    }
  }
}

TEST_CASE("initial collection labels") {
  SUBCASE("(3,4,12)") {
    auto labels = initial_collection(PosetParams::make(3, 4, 12));
    CHECK(labels.N == 6);
    std::vector<KSubset> expect = {
        ks({1, 5, 9}, 12),    ks({2, 5, 9}, 12),   ks({3, 5, 9}, 12),
        ks({4, 5, 9}, 12),    ks({5, 6, 9}, 12),   ks({6, 7, 9}, 12),
        ks({11, 12, 1}, 12),  ks({12, 1, 2}, 12),  ks({1, 2, 3}, 12),
        ks({2, 3, 4}, 12)};
    CHECK(labels.labels == expect);
    // frozen reps generate the same orbits as the figure's intervals
    auto frozen_orbits =
        close_under_shift({labels.labels.begin() + 6, labels.labels.end()}, 4);
    auto figure_orbits = close_under_shift(
        {ks({7, 8, 9}, 12), ks({8, 9, 10}, 12), ks({9, 10, 11}, 12),
         ks({10, 11, 12}, 12)},
        4);
    CHECK(frozen_orbits.subsets == figure_orbits.subsets);
  }
  SUBCASE("(2,2,n)") {
    for (int n : {4, 8, 12}) {
      auto labels = initial_collection(PosetParams::make(2, 2, n));
      CHECK(labels.N == 1);
      CHECK(labels.labels[0] == ks({1, 3}, n));
      CHECK(labels.labels[1] == ks({n, 1}, n));
      CHECK(labels.labels[2] == ks({1, 2}, n));
    }
  }
  SUBCASE("element count is k(l-1)+1") {
    for (auto [k, l, n] : {std::array<int, 3>{3, 4, 12}, {2, 3, 9}, {4, 2, 8},
                           {3, 2, 8}, {4, 4, 16}}) {
      auto labels = initial_collection(PosetParams::make(k, l, n));
      CHECK(static_cast<int>(labels.labels.size()) == k * (l - 1) + 1);
    }
  }
  SUBCASE("matches the collection of the straightening chain") {
    // the closure of the labels is a chain collection for the bottom element
    for (auto [k, l, n] :
         {std::array<int, 3>{2, 2, 8}, {3, 2, 6}, {3, 4, 12}, {2, 3, 9}}) {
      auto params = PosetParams::make(k, l, n);
      auto labels = initial_collection(params);
      auto C = close_under_shift(labels.labels, params.ell);
      CHECK(is_ws_collection(C.subsets));
      CHECK(is_efficient(C, identity_shift(params.ell, k), params));
      bool found = false;
      AffinePermutation bottom = identity_shift(params.ell, k);
      for (const auto& top : maximal_elements(params)) {
        for (const auto& chain : saturated_chains(bottom, top, n)) {
          auto D = collection_from_chain(chain, params);
          if (D.subsets == C.subsets) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      CHECK(found);
    }
  }
}

TEST_CASE("tp test run and validation") {
  Rng rng(57);
  auto params = PosetParams::make(2, 2, 8);
  auto chains = saturated_chains(ap({3, 4}), ap({5, 2}), 8);
  auto C = collection_from_chain(chains[0], params);

  SUBCASE("karp point passes") {
    auto P = pluckers_of(karp_point(2, 8));
    auto result = run_tp_test(C, P);
    CHECK(result.status == "ok");
    CHECK(result.pass);
    CHECK(is_tp(P));
  }
  SUBCASE("zero cell representative fails the top test") {
    auto P = pluckers_of(zero_cell_representative(ap({5, 2}), params));
    auto result = run_tp_test(C, P);
    CHECK(result.status == "ok");
    CHECK(!result.pass);
  }
  SUBCASE("non-fixed points are rejected") {
    Matrix X = gaussian_matrix(2, 8, rng);
    auto result = run_tp_test(C, pluckers_of(X));
    CHECK(result.status == "rejected: not shift-fixed");
  }
  SUBCASE("soundness and completeness on samples") {
    auto report = validate_tp_test(C, ap({3, 4}), params, 20, rng);
    CHECK(report.ok);
    CHECK(report.component_samples == 20);
  }
  SUBCASE("validation along the whole poset") {
    for (const auto& f : enumerate_bounded(params)) {
      auto chain = chain_to_maximal(f, params);
      auto Cf = collection_from_chain(chain, params);
      CHECK(is_efficient(Cf, f, params));
      auto report = validate_tp_test(Cf, f, params, 5, rng);
      CHECK(report.ok);
    }
  }
}

TEST_CASE("eta values") {
  SUBCASE("p = k gives zero") {
    for (int k : {2, 3, 4, 6})
      for (int s = 1; s < k; ++s)
        CHECK(eta_singleton(s, k, k) == doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("p = k+1 gives one") {
    for (int k : {2, 3, 4, 6})
      for (int s = 1; s < k; ++s)
        CHECK(eta_singleton(s, k, k + 1) == doctest::Approx(1.0));
  }
  SUBCASE("sqrt(2) at k=2, p=4") {
    CHECK(eta_singleton(1, 2, 4) == doctest::Approx(std::sqrt(2.0)));
  }
  SUBCASE("palindromic") {
    for (int k : {3, 4, 5, 6})
      for (int p : {k + 1, k + 2, 2 * k + 1})
        for (int s = 0; s <= k; ++s)
          CHECK(eta_singleton(s, k, p) ==
                doctest::Approx(eta_singleton(k - s, k, p)));
  }
  SUBCASE("large order limit is the binomial coefficient") {
    for (int k = 2; k <= 6; ++k)
      for (int s = 0; s <= k; ++s)
        CHECK(std::abs(eta_singleton(s, k, 1000000) -
                       static_cast<double>(binomial(k, s))) < 1e-6);
  }
  SUBCASE("interval values agree with the general gap-set ratio") {
    for (int k : {2, 3, 4}) {
      for (int p : {k + 4, k + 7}) {
        for (int m = 0; m + k <= p; ++m) {
          std::vector<int> S;
          for (int v = 1; v <= m; ++v) S.push_back(v);
          CHECK(eta_interval(m, k, p) == doctest::Approx(eta_ratio(S, k, p)));
        }
        CHECK(eta_ratio({1}, k, p) == doctest::Approx(eta_singleton(1, k, p)));
        CHECK(eta_ratio({2}, k, p) == doctest::Approx(eta_singleton(2, k, p)));
      }
    }
  }
  SUBCASE("out of range reports rather than guessing") {
    CHECK_THROWS_AS(eta_ratio({4}, 6, 9), std::domain_error);
  }
  SUBCASE("straightening recurrence") {
    // eta_j eta_[s] = eta_{[s-1] u {j+s}} + eta_{[s] u {j+s}}; both gap sets
    // are well-formed exactly when j < k
    for (int k : {2, 3, 4}) {
      for (int p : {2 * k, 2 * k + 3}) {
        for (int j = 1; j <= k - 1; ++j) {
          for (int s = 1; j + s + k <= p; ++s) {
            std::vector<int> lhs_set, mid_set, rhs_set;
            for (int v = 1; v < s; ++v) mid_set.push_back(v);
            rhs_set = mid_set;
            rhs_set.push_back(s);
            mid_set.push_back(j + s);
            std::vector<int> full = rhs_set;
            full.push_back(j + s);
            double lhs = eta_singleton(j, k, p) * eta_interval(s, k, p);
            double rhs = eta_ratio(mid_set, k, p) + eta_ratio(full, k, p);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
          }
        }
      }
    }
  }
  SUBCASE("ratio against sampled points of the distinguished component") {
    Rng rng(61);
    const int k = 2, l = 2, p = 4, n = 8;
    auto params = PosetParams::make(k, l, n);
    ComponentSignature dist;
    for (const auto& sig : components(k, n, l))
      if (sig.distinguished) dist = sig;
    for (int t = 0; t < 5; ++t) {
      Matrix X = sample_point_on_component(dist, k, n, l, rng);
      Complex r = minor_on(X, ks({1, 5}, 8)) / minor_on(X, ks({1, 3}, 8));
      CHECK(std::abs(r - Complex{eta_singleton(1, 2, 4), 0}) < 1e-9);
    }
  }
}

TEST_CASE("superfluous ratios") {
  Rng rng(71);
  SUBCASE("Gr(2,8), l=2: the extra diagonal is sqrt(2) times the anchor") {
    auto params = PosetParams::make(2, 2, 8);
    auto chains = saturated_chains(ap({3, 4}), ap({5, 2}), 8);
    auto C = collection_from_chain(chains[0], params);
    auto ambient = positroid_from_necklace(
        necklace_from_perm(identity_shift(8, 2), 8));
    auto ext = maximal_ws_extension(C.subsets, ambient);
    CHECK(ext.size() == C.subsets.size() + 1);
    auto report =
        superfluous_check(ext, C, ks({1, 3}, 8), params, 20, rng, 1e-9);
    REQUIRE(report.ratios.size() == 1);
    CHECK(report.all_constant);
    bool is15 = report.ratios[0].extra == ks({1, 5}, 8);
    bool is37 = report.ratios[0].extra == ks({3, 7}, 8);
    CHECK((is15 || is37));
    CHECK(report.ratios[0].mean == doctest::Approx(std::sqrt(2.0)));
  }
  SUBCASE("extension by an existing element yields ratio 1") {
    auto params = PosetParams::make(2, 2, 8);
    auto C = collection_from_chain({ap({5, 2})}, params);
    auto report = superfluous_check({ks({3, 5}, 8)}, C, ks({1, 3}, 8), params,
                                    10, rng, 1e-9);
    CHECK(report.ratios.empty());  // already in the closure
    auto report2 = superfluous_check({ks({1, 5}, 8)}, C, ks({1, 3}, 8), params,
                                     10, rng, 1e-9);
    REQUIRE(report2.ratios.size() == 1);
    CHECK(report2.all_constant);
  }
  SUBCASE("Gr(3,12), l=4: the closed initial collection is already maximal") {
    // at order p = k+1, the closure is a full cluster and nothing is
    // superfluous
    auto params = PosetParams::make(3, 4, 12);
    auto labels = initial_collection(params);
    auto C = close_under_shift(labels.labels, 4);
    auto ambient = positroid_from_necklace(
        necklace_from_perm(identity_shift(12, 3), 12));
    auto ext = maximal_ws_extension(C.subsets, ambient);
    CHECK(ext.size() == C.subsets.size());
    CHECK(static_cast<std::int64_t>(ext.size()) == 3 * 9 + 1);
  }
  SUBCASE("Gr(3,15), l=3: all superfluous ratios constant") {
    auto params = PosetParams::make(3, 3, 15);
    auto labels = initial_collection(params);
    auto C = close_under_shift(labels.labels, 3);
    auto ambient = positroid_from_necklace(
        necklace_from_perm(identity_shift(15, 3), 15));
    auto ext = maximal_ws_extension(C.subsets, ambient);
    CHECK(ext.size() > C.subsets.size());
    auto report =
        superfluous_check(ext, C, labels.labels[0], params, 10, rng, 1e-8);
    CHECK(!report.ratios.empty());
    CHECK(report.all_constant);
  }
}
