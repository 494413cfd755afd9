#pragma once

#include <string>
#include <vector>

namespace whit {

// One-line notation, values 1..n.
using Permutation = std::vector<int>;
// Weakly decreasing, trailing zeros stripped by normalize_partition.
using Partition = std::vector<int>;

// Swap of positions i < j (1-based).
struct Transposition {
  int i;
  int j;
  auto operator<=>(const Transposition&) const = default;
};

bool is_permutation(const Permutation& w);
Permutation identity_permutation(int n);
Permutation inverse(const Permutation& w);

int perm_length(const Permutation& w);
Permutation apply_transposition(Permutation w, Transposition r);
// change in length when r is applied to w; O(j - i)
int length_delta(const Permutation& w, Transposition r);
bool bruhat_increases(const Permutation& w, Transposition r);

int column_inversions(const std::vector<int>& c);
int column_extended_length(const std::vector<int>& c, int n);
// #{entries of w in positions [a, b] strictly between lo and hi}
int count_between(const Permutation& w, int a, int b, int lo, int hi);

Partition normalize_partition(Partition p);
Partition conjugate(const Partition& lambda);
Partition lambda_plus_rho(const Partition& lambda, int n);
Partition parse_partition(const std::string& text);
std::string format_sequence(const std::vector<int>& v, const char* sep = ",");

}  // namespace whit
