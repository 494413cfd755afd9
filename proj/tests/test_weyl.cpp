#include <doctest.h>

#include <algorithm>

#include "whittaker/weyl.hpp"

using namespace whit;

namespace {

int inversions_brute(const std::vector<int>& w) {
  int c = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) c += w[i] > w[j];
  return c;
}

}  // namespace

TEST_CASE("length") {
  CHECK(perm_length({1, 2, 3}) == 0);
  CHECK(perm_length({3, 2, 1}) == 3);
  CHECK(perm_length({1, 3, 4, 2, 6, 5, 7, 8}) == 3);
}

TEST_CASE("transpositions act on positions") {
  CHECK(apply_transposition({1, 2, 3}, {1, 2}) == Permutation{2, 1, 3});
  CHECK(apply_transposition({2, 3, 1}, {1, 3}) == Permutation{1, 3, 2});
  CHECK(apply_transposition(apply_transposition({2, 3, 1}, {1, 3}), {1, 3}) == Permutation{2, 3, 1});
  CHECK_THROWS(apply_transposition({1, 2, 3}, {2, 4}));
  CHECK_THROWS(apply_transposition({1, 2, 3}, {2, 2}));
}

TEST_CASE("bruhat covers") {
  CHECK(bruhat_increases({1, 2, 3}, {1, 3}));
  CHECK_FALSE(bruhat_increases({3, 2, 1}, {1, 2}));
  CHECK(bruhat_increases({2, 1, 3}, {1, 3}));
}

TEST_CASE("column statistics") {
  CHECK(column_inversions({1, 2, 3}) == 0);
  CHECK(column_inversions({3, 1, 2}) == 2);
  CHECK(column_inversions({1, 3, 4, 2, 6}) == 2);
  CHECK_THROWS(column_inversions({1, 1}));
  CHECK(column_extended_length({1, 2, 3}, 6) == 0);
  CHECK(column_extended_length({1, 3, 4, 2, 6}, 8) == 3);
  CHECK(column_extended_length({3, 2, 1}, 3) == 3);
  CHECK_THROWS(column_extended_length({1, 9}, 8));
}

TEST_CASE("partitions") {
  CHECK(conjugate({2, 1}) == Partition{2, 1});
  CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
  CHECK(conjugate({}) == Partition{});
  CHECK(lambda_plus_rho({}, 3) == Partition{2, 1});
  CHECK(lambda_plus_rho({1}, 3) == Partition{3, 1});
  CHECK(lambda_plus_rho({2, 1}, 3) == Partition{4, 2});
  CHECK_THROWS(lambda_plus_rho({1, 1, 1}, 3));
  CHECK(parse_partition("") == Partition{});
  CHECK(parse_partition("2,1,0") == Partition{2, 1});
  CHECK_THROWS(parse_partition("1,2"));
  CHECK_THROWS(parse_partition("a"));
}

TEST_CASE("property: length bookkeeping over S_5") {
  for (int n = 1; n <= 5; ++n) {
    auto w = identity_permutation(n);
    do {
      CHECK(perm_length(w) == inversions_brute(w));
      CHECK(inverse(inverse(w)) == w);
      CHECK(perm_length(inverse(w)) == perm_length(w));
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          auto v = apply_transposition(w, {i, j});
          int d = perm_length(v) - perm_length(w);
          CHECK(length_delta(w, {i, j}) == d);
          CHECK(bruhat_increases(w, {i, j}) == (d > 0));
          CHECK(std::abs(d) % 2 == 1);
        }
    } while (std::next_permutation(w.begin(), w.end()));
  }
}

TEST_CASE("property: conjugation is an involution") {
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= a; ++b)
      for (int c = 0; c <= b; ++c) {
        Partition p = normalize_partition({a, b, c});
        CHECK(conjugate(conjugate(p)) == p);
      }
}
