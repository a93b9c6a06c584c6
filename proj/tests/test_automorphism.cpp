#include <random>

#include "doctest.h"
#include "domcx/automorphism.hpp"
#include "fixtures.hpp"

using namespace domcx;

TEST_CASE("Aut(K(n)) is the symmetric group") {
  CHECK(all_automorphisms(fixtures::complete(3)).order() == 6);
  CHECK(all_automorphisms(fixtures::complete(4)).order() == 24);
  CHECK(all_automorphisms(fixtures::complete(5)).order() == 120);
  CHECK(all_automorphisms(fixtures::complete(6)).order() == 720);
}

TEST_CASE("Aut of a single edge") {
  auto g = all_automorphisms(FlagComplex::from_graph(2, {{0, 1}}));
  CHECK(g.order() == 2);
  CHECK(g.is_group());
}

TEST_CASE("Aut of truncated line-of-edges is Boolean times reflection") {
  for (int m : {3, 4}) {
    auto k = fixtures::line_of_edges(m);
    auto aut = all_automorphisms(k);
    CHECK(aut.order() == (1ull << m) * 2);
    CHECK(aut.is_group());

    std::vector<std::pair<int, int>> cols;
    for (int c = 0; c < m; ++c) cols.emplace_back(fixtures::loe_lower(c), fixtures::loe_upper(c));
    BooleanSubgroup b(k, ExchangeSet::from_pairs(cols));
    auto bg = PermGroup::from_elements(b.all_element_maps());
    for (const auto& e : bg.elements()) CHECK(aut.contains(e));
    CHECK(is_normal(bg, aut));
  }
}

TEST_CASE("budget exceeded on demand") {
  CHECK_THROWS_AS(all_automorphisms(fixtures::complete(6), 100), BudgetExceeded);
}

TEST_CASE("exchangeable_pairs: line-of-edges finds only columns, path finds ends") {
  for (int m : {3, 4}) {
    auto k = fixtures::line_of_edges(m);
    auto pairs = exchangeable_pairs(k);
    REQUIRE(static_cast<int>(pairs.size()) == m);
    for (int c = 0; c < m; ++c)
      CHECK(pairs[c] == ExchangePair(fixtures::loe_lower(c), fixtures::loe_upper(c)));

    // brute-force oracle: a pair is exchangeable iff the bare swap is an
    // automorphism of the complex
    for (int x = 0; x < k.size(); ++x)
      for (int y = x + 1; y < k.size(); ++y) {
        VertexMap swap = identity_map(k.size());
        swap[x] = y;
        swap[y] = x;
        CHECK(is_exchangeable(k, x, y) == k.is_automorphism(swap));
      }
  }

  auto pairs = exchangeable_pairs(fixtures::path3());
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0] == ExchangePair(0, 2));

  CHECK(exchangeable_pairs(fixtures::complete(3)).size() == 3);
}

TEST_CASE("is_normal basics") {
  auto k3 = fixtures::complete(3);
  auto aut = all_automorphisms(k3);

  auto trivial = PermGroup::from_elements({identity_map(3)});
  CHECK(is_normal(trivial, aut));

  // a transposition subgroup of Sigma_3 is not normal
  auto sub = PermGroup::from_elements({identity_map(3), VertexMap{1, 0, 2}});
  CHECK_FALSE(is_normal(sub, aut));

  CHECK_THROWS_AS(is_normal(PermGroup::from_elements({VertexMap{1, 2, 0}}), sub), Error);
}

TEST_CASE("closure of automorphism groups, composition with exchanges") {
  auto k = fixtures::line_of_edges(3);
  auto aut = all_automorphisms(k);
  std::vector<std::pair<int, int>> cols;
  for (int c = 0; c < 3; ++c) cols.emplace_back(fixtures::loe_lower(c), fixtures::loe_upper(c));
  auto e = ExchangeSet::from_pairs(cols);

  // every automorphism permutes the set of exchangeable pairs
  auto pairs = exchangeable_pairs(k);
  for (const auto& phi : aut.elements()) {
    std::vector<ExchangePair> image;
    for (const auto& p : pairs) image.emplace_back(phi[p.x], phi[p.y]);
    std::sort(image.begin(), image.end());
    CHECK(image == pairs);
  }

  // conjugation keeps Boolean elements Boolean
  std::mt19937_64 rng(17);
  BooleanSubgroup b(k, e);
  auto bg = PermGroup::from_elements(b.all_element_maps());
  for (int trial = 0; trial < 30; ++trial) {
    const auto& phi = aut.elements()[rng() % aut.order()];
    uint64_t mask = rng() & 7;
    auto g = conjugate_exchange(k, phi, e.subset_by_mask(mask));
    CHECK(bg.contains(g.as_map(k.size())));
  }
}
