#pragma once

#include <functional>
#include <vector>

#include "whittaker/alcove.hpp"
#include "whittaker/algebra.hpp"
#include "whittaker/weyl.hpp"

namespace whit {

// Cells are (row, col), 1-based, row 1 at the top.
struct Cell {
  int row;
  int col;
};

bool attacks(Cell u, Cell v);

// Entries stored column by column, each column top to bottom.
struct Filling {
  std::vector<std::vector<int>> columns;

  int num_columns() const { return static_cast<int>(columns.size()); }
  int num_rows() const { return columns.empty() ? 0 : static_cast<int>(columns[0].size()); }
  const std::vector<int>& first_column() const;
  bool operator==(const Filling&) const = default;
  auto operator<=>(const Filling&) const = default;
};

// Column lengths weakly decreasing.
bool is_young_shape(const Filling& f);
bool is_hhl_pair(const std::vector<int>& left, const std::vector<int>& right);
bool is_hhl(const Filling& f, int n);

void for_each_filling(const Partition& lambda, int n, const std::function<void(const Filling&)>& visit);
std::vector<Filling> enumerate_fillings(const Partition& lambda, int n);

int inv(const Filling& f);
int des(const Filling& f);
int inv_pair(const std::vector<int>& left, const std::vector<int>& right);
int des_pair(const std::vector<int>& left, const std::vector<int>& right);
std::vector<int> content(const Filling& f, int n);
// the unique value of [n] absent from the first column (n-1 distinct entries)
int missing_entry(const Filling& f, int n);

// (-1)^{n-a0+l(C)} t^{n-a0+inv} (1-t)^{des}, rank 0
LaurentPoly hhl_coefficient(const Filling& f, int n);
LaurentPoly hhl_sum(const Partition& lambda, int n);

Filling fill_map(const AdmissiblePair& p, const RootChain& chain);
std::vector<AdmissiblePair> fill_preimage(const Filling& f, const RootChain& chain);
LaurentPoly fill_preimage_sum(const Filling& f, const RootChain& chain);
bool weak_compression_check(const Filling& f, const RootChain& chain, int n);

struct ChainSumSides {
  LaurentPoly lhs;
  LaurentPoly rhs;
  bool holds() const { return lhs == rhs; }
};

// Entry level: chains in Gamma(1) truncated by p that move b to the front.
ChainSumSides entry_chain_sum(const Permutation& w, int b, int p);
// Two-column level: chains in Gamma(k) carrying the first k entries of w to right.
ChainSumSides two_column_chain_sum(const Permutation& w, const std::vector<int>& right);
// Full level: chains from (C, a0) landing on f.
ChainSumSides full_chain_sum(const Filling& f, const RootChain& chain);

}  // namespace whit
