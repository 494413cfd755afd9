#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "whittaker/alcove.hpp"

using namespace whit;

namespace {

using T = std::vector<Transposition>;

// every (u, K) with each step a length increase, by subset enumeration
std::set<std::pair<Permutation, std::vector<std::size_t>>> admissible_brute(const RootChain& c) {
  std::set<std::pair<Permutation, std::vector<std::size_t>>> out;
  const std::size_t L = c.entries.size();
  auto u = identity_permutation(c.n);
  do {
    for (unsigned mask = 0; mask < (1u << L); ++mask) {
      Permutation w = u;
      std::vector<std::size_t> K;
      bool ok = true;
      for (std::size_t k = 0; k < L && ok; ++k)
        if (mask >> k & 1) {
          Permutation v = apply_transposition(w, c.entries[k]);
          ok = perm_length(v) > perm_length(w);
          w = v;
          K.push_back(k);
        }
      if (ok) out.insert({u, K});
    }
  } while (std::next_permutation(u.begin(), u.end()));
  return out;
}

}  // namespace

TEST_CASE("chain blocks") {
  CHECK(gamma_block(1, 3) == T{{1, 2}, {1, 3}});
  CHECK(gamma_block(2, 3) == T{{1, 3}, {2, 3}});
  CHECK(gamma_block(2, 4) == T{{1, 3}, {1, 4}, {2, 3}, {2, 4}});
  CHECK(gamma_block_primed(2, 3).empty());
  CHECK(gamma_block_primed(3, 4).empty());
  CHECK(gamma_block_primed(1, 3) == T{{1, 3}});
  CHECK(gamma_block_primed(2, 4) == T{{1, 4}, {2, 4}});
  CHECK(gamma_block_truncated(1, 0, 3) == gamma_block(1, 3));
  CHECK(gamma_block_truncated(1, 1, 3) == T{{1, 3}});
  CHECK(gamma_block_truncated(2, 4, 4).empty());
}

TEST_CASE("chain for lambda + rho") {
  auto c = build_chain({}, 3);
  REQUIRE(c.blocks.size() == 2);
  CHECK(c.blocks[0].begin == c.blocks[0].end);
  CHECK(c.entries == T{{1, 3}});

  auto c2 = build_chain({1}, 2);
  REQUIRE(c2.blocks.size() == 2);
  CHECK(c2.blocks[0].begin == c2.blocks[0].end);
  CHECK(c2.entries == T{{1, 2}});

  auto c3 = build_chain({1}, 3);
  CHECK(c3.entries == T{{1, 3}, {1, 2}, {1, 3}});

  for (int n = 2; n <= 5; ++n)
    for (const Partition& lam : {Partition{}, Partition{1}, Partition{2, 1}}) {
      if (static_cast<int>(lam.size()) > n - 1) continue;
      auto ch = build_chain(lam, n);
      CHECK(ch.blocks[0].begin == ch.blocks[0].end);
      for (std::size_t j = 0; j < ch.blocks.size(); ++j)
        for (std::size_t k = ch.blocks[j].begin; k < ch.blocks[j].end; ++k) {
          CHECK(ch.entries[k].i <= ch.column_lengths[j]);
          CHECK(ch.entries[k].j > ch.column_lengths[j]);
        }
    }
  CHECK_THROWS(build_chain_for_shape({2, 2}, 3));
}

TEST_CASE("admissible pairs") {
  RootChain empty = build_chain({}, 2);
  CHECK(enumerate_admissible(empty).size() == 2);

  std::vector<AdmissiblePair> got;
  for_each_admissible_from({1, 2}, T{{1, 2}}, [&](const AdmissiblePair& p) { got.push_back(p); });
  CHECK(got.size() == 2);
  got.clear();
  for_each_admissible_from({2, 1}, T{{1, 2}}, [&](const AdmissiblePair& p) { got.push_back(p); });
  CHECK(got.size() == 1);

  for (auto [lam, n] : std::vector<std::pair<Partition, int>>{{{}, 3}, {{1}, 3}, {{2}, 3}, {{1, 1}, 3}, {{}, 4}, {{1}, 4}}) {
    RootChain c = build_chain(lam, n);
    std::set<std::pair<Permutation, std::vector<std::size_t>>> fast;
    for_each_admissible(c, [&](const AdmissiblePair& p) {
      fast.insert({p.u, p.K});
      Permutation w = p.u;
      for (std::size_t k : p.K) w = apply_transposition(w, c.entries[k]);
      CHECK(w == p.end);
      CHECK(perm_length(w) == p.end_length);
    });
    CHECK(fast == admissible_brute(c));
  }
}

TEST_CASE("count_N") {
  CHECK(count_N({1, 2, 3}, {}) == 0);
  CHECK(count_N({1, 2, 3}, T{{1, 3}}) == 1);
}

TEST_CASE("coefficients") {
  CHECK(ramyip_coefficient(0, 0, 0) == LaurentPoly::constant(1));
  CHECK(ramyip_coefficient(0, 1, 1) == -LaurentPoly::power(Base::TMinusOne, 1));
  CHECK_THROWS_AS(ramyip_coefficient(0, 1, 0), std::logic_error);
}

TEST_CASE("ramyip sum, smallest cases by hand") {
  LaurentPoly want = LaurentPoly::term(1, 0, {1, 0}) - LaurentPoly::term(1, 1, {0, 1});
  CHECK(ramyip_sum({}, 2) == want);
  CHECK(ramyip_sum({}, 1) == LaurentPoly::constant(1, 1));
}

TEST_CASE("property: length formula on sampled admissible pairs") {
  std::mt19937 rng(11);
  std::bernoulli_distribution coin(0.5);
  for (int n = 2; n <= 6; ++n) {
    RootChain c = build_chain({2, 1}, std::max(n, 3));
    for (int s = 0; s < 300; ++s) {
      Permutation u = identity_permutation(c.n);
      std::shuffle(u.begin(), u.end(), rng);
      Permutation w = u;
      T steps;
      for (auto r : c.entries)
        if (bruhat_increases(w, r) && coin(rng)) {
          w = apply_transposition(w, r);
          steps.push_back(r);
        }
      CHECK(perm_length(w) == perm_length(u) + static_cast<int>(steps.size()) + 2 * count_N(u, steps));
    }
  }
}
