#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "whittaker/algebra.hpp"
#include "whittaker/weyl.hpp"

namespace whit {

struct Block {
  std::size_t begin;
  std::size_t end;
};

struct RootChain {
  int n = 1;
  Partition shape;           // mu = lambda + rho
  Partition column_lengths;  // mu'
  std::vector<Transposition> entries;
  std::vector<Block> blocks;  // one per column of mu
};

std::vector<Transposition> gamma_block(int k, int n);
std::vector<Transposition> gamma_block_primed(int k, int n);
std::vector<Transposition> gamma_block_truncated(int k, int p, int n);

RootChain build_chain(const Partition& lambda, int n);
// Same, from a strictly decreasing shape with n-1 rows.
RootChain build_chain_for_shape(const Partition& mu, int n);

struct AdmissiblePair {
  Permutation u;
  std::vector<std::size_t> K;  // increasing chain indices
  Permutation end;             // u r_{k1} ... r_{ks}
  int end_length = 0;
};

// Calls visit on every admissible pair; the reference is only valid during the call.
void for_each_admissible(const RootChain& chain, const std::function<void(const AdmissiblePair&)>& visit);
void for_each_admissible_from(const Permutation& u, const std::vector<Transposition>& chain,
                              const std::function<void(const AdmissiblePair&)>& visit);
std::vector<AdmissiblePair> enumerate_admissible(const RootChain& chain);

int count_N(Permutation w, const std::vector<Transposition>& T);

// (-1)^{l(uK)} t^{(l(u)+l(uK)-|K|)/2} (t-1)^{|K|}, rank 0
LaurentPoly ramyip_coefficient(int len_u, int len_end, int k);
LaurentPoly ramyip_sum(const Partition& lambda, int n);

}  // namespace whit
