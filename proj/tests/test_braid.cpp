#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "artin_oracle.hpp"
#include "braidcat/braid.hpp"

using namespace braidcat;

namespace {

BraidWord make(int n, std::initializer_list<std::pair<int, int>> gens) {
  std::vector<BraidGen> gs;
  for (auto [i, s] : gens) gs.push_back(BraidGen{i, s});
  return BraidWord(n, gs);
}

BraidWord random_word(std::mt19937_64& rng, int strands, int len) {
  std::uniform_int_distribution<int> id(1, strands - 1);
  std::uniform_int_distribution<int> sd(0, 1);
  std::vector<BraidGen> gens;
  for (int i = 0; i < len; ++i) gens.push_back(BraidGen{id(rng), sd(rng) ? 1 : -1});
  return BraidWord(strands, std::move(gens));
}

}  // namespace

TEST_CASE("free reduction") {
  CHECK(free_reduce(make(2, {})).empty());
  CHECK(free_reduce(make(2, {{1, 1}, {1, -1}})).empty());
  BraidWord w = free_reduce(make(3, {{1, 1}, {2, 1}, {2, -1}, {1, 1}}));
  REQUIRE(w.gens().size() == 2);
  CHECK(w.gens()[0] == BraidGen{1, 1});
  CHECK(w.gens()[1] == BraidGen{1, 1});
}

TEST_CASE("compose and invert") {
  BraidWord w = make(3, {{1, 1}, {2, -1}});
  CHECK(compose(BraidWord(3), w).gens() == w.gens());
  CHECK(compose(make(2, {{1, 1}}), make(2, {{1, -1}})).empty());
  BraidWord uv = compose(make(3, {{1, 1}}), make(3, {{2, 1}}));
  REQUIRE(uv.gens().size() == 2);

  BraidWord inv = invert(w);
  REQUIRE(inv.gens().size() == 2);
  CHECK(inv.gens()[0] == BraidGen{2, 1});
  CHECK(inv.gens()[1] == BraidGen{1, -1});
  CHECK(invert(BraidWord(4)).empty());

  CHECK_THROWS_AS(compose(BraidWord(2), BraidWord(3)), std::invalid_argument);
}

TEST_CASE("shift") {
  CHECK(shift(BraidWord(2), 2, 5).strands() == 5);
  BraidWord s = shift(make(2, {{1, 1}}), 1, 3);
  CHECK(s.gens()[0].index == 2);
  BraidWord same = shift(make(3, {{1, 1}, {2, 1}}), 0, 4);
  CHECK(same.strands() == 4);
  CHECK(same.gens().size() == 2);
  CHECK_THROWS_AS(shift(make(2, {{1, 1}}), 2, 3), std::invalid_argument);
}

TEST_CASE("underlying permutation") {
  CHECK(underlying_permutation(BraidWord(3)).is_identity());
  Permutation p = underlying_permutation(make(2, {{1, 1}}));
  CHECK(p.apply(1) == 2);
  CHECK(p.apply(2) == 1);
  Permutation cyc = underlying_permutation(make(3, {{1, 1}, {2, 1}}));
  CHECK(cyc.apply(1) == 2);
  CHECK(cyc.apply(2) == 3);
  CHECK(cyc.apply(3) == 1);
}

TEST_CASE("permutation homomorphism property") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) {
    BraidWord u = random_word(rng, 4, 5);
    BraidWord v = random_word(rng, 4, 5);
    CHECK(underlying_permutation(compose(u, v)) ==
          underlying_permutation(u).then(underlying_permutation(v)));
  }
}

TEST_CASE("block braiding") {
  BraidWord one = block_braiding(1, 1);
  REQUIRE(one.gens().size() == 1);
  CHECK(one.gens()[0] == BraidGen{1, 1});

  CHECK(block_braiding(0, 3).empty());
  CHECK(block_braiding(2, 0).empty());

  BraidWord b21 = block_braiding(2, 1);
  CHECK(b21.gens().size() == 2);
  for (const BraidGen& g : b21.gens()) CHECK(g.sign == 1);
  Permutation p = underlying_permutation(b21);
  // Top block of two moves past the bottom strand: block-wise (1,2,3)->(3,1,2).
  CHECK(p.apply(1) == 2);
  CHECK(p.apply(2) == 3);
  CHECK(p.apply(3) == 1);
}

TEST_CASE("garside examples") {
  GarsideNF e = garside_nf(BraidWord(3));
  CHECK(e.delta_power == 0);
  CHECK(e.factors.empty());

  // sigma_1^2 in B_2: Delta = sigma_1, so the normal form is Delta^2.
  GarsideNF sq = garside_nf(make(2, {{1, 1}, {1, 1}}));
  CHECK(sq.delta_power == 2);
  CHECK(sq.factors.empty());

  // sigma_1 sigma_2 sigma_1 = Delta in B_3.
  GarsideNF d3 = garside_nf(make(3, {{1, 1}, {2, 1}, {1, 1}}));
  CHECK(d3.delta_power == 1);
  CHECK(d3.factors.empty());
}

TEST_CASE("garside normal form is a canonical form") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    BraidWord w = random_word(rng, 4, 8);
    GarsideNF nf = garside_nf(w);
    CHECK(garside_nf(word_of_nf(nf)) == nf);
    for (std::size_t i = 0; i + 1 < nf.factors.size(); ++i) {
      CHECK_FALSE(nf.factors[i].is_identity());
      CHECK(nf.factors[i] != half_twist(4));
    }
  }
}

TEST_CASE("braid_equal basics") {
  BraidWord u = make(3, {{1, 1}, {2, 1}, {1, 1}});
  BraidWord v = make(3, {{2, 1}, {1, 1}, {2, 1}});
  CHECK(braid_equal(u, v));
  CHECK_FALSE(braid_equal(make(2, {{1, 1}}), make(2, {{1, -1}})));
  CHECK(braid_equal(u, u));
  CHECK_THROWS_AS(braid_equal(BraidWord(2), BraidWord(3)), std::invalid_argument);
}

TEST_CASE("w composed with its inverse is the identity braid") {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 100; ++k) {
    BraidWord w = random_word(rng, 4, 7);
    CHECK(braid_equal(compose(w, invert(w)), BraidWord(4)));
  }
}

TEST_CASE("braid_equal agrees with the Artin-rewrite oracle on samples") {
  std::mt19937_64 rng(13);
  artin_oracle::Oracle oracle(3, 10);
  // Pool sampling keeps the number of distinct BFS components small.
  std::vector<BraidWord> pool;
  for (int i = 0; i < 12; ++i) pool.push_back(random_word(rng, 3, 4));
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int k = 0; k < 60; ++k) {
    const BraidWord& u = pool[pick(rng)];
    const BraidWord& v = pool[pick(rng)];
    CHECK(braid_equal(u, v) == oracle.equal(u, v));
  }
}

TEST_CASE("labelled braids compose with threaded labels") {
  using LB = LabelledBraid<int>;
  LB id = LB::identity({10, 20});
  LB sigma;
  sigma.braid = make(2, {{1, 1}});
  sigma.source_labels = {10, 20};
  sigma.target_labels = {20, 10};
  sigma.check();

  LB both = compose_labelled(id, sigma);
  CHECK(both.source_labels == std::vector<int>{10, 20});
  CHECK(both.target_labels == std::vector<int>{20, 10});

  LB back;
  back.braid = make(2, {{1, 1}});
  back.source_labels = {20, 10};
  back.target_labels = {10, 20};
  LB square = compose_labelled(sigma, back);
  CHECK(square.braid.gens().size() == 2);
  CHECK(square.source_labels == square.target_labels);

  CHECK_THROWS_AS(compose_labelled(sigma, sigma), std::invalid_argument);
}

TEST_CASE("braid grammar round-trips") {
  for (const char* text : {"n=3 s1 s2 s1^-1", "n=2", "n=4 s3 s3 s1^-1 s2"}) {
    BraidWord w = parse_braid(text);
    CHECK(parse_braid(print_braid(w)).gens() == w.gens());
  }
  CHECK(print_braid(make(3, {{1, 1}, {2, -1}})) == "n=3 s1 s2^-1");
  CHECK_THROWS_AS(parse_braid("s1 s2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_braid("n=2 s5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_braid("n=2 s1^2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_braid("n=x s1"), std::invalid_argument);
}
