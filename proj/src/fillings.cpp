#include "whittaker/fillings.hpp"

#include <algorithm>
#include <stdexcept>

namespace whit {

bool attacks(Cell u, Cell v) {
  if (u.row == v.row && u.col == v.col) return false;
  if (u.col == v.col) return true;
  if (u.col > v.col) std::swap(u, v);
  return v.col == u.col + 1 && u.row > v.row;
}

const std::vector<int>& Filling::first_column() const {
  static const std::vector<int> empty;
  return columns.empty() ? empty : columns[0];
}

bool is_young_shape(const Filling& f) {
  for (std::size_t j = 0; j < f.columns.size(); ++j)
    if (f.columns[j].empty() || (j > 0 && f.columns[j].size() > f.columns[j - 1].size())) return false;
  return true;
}

bool is_hhl_pair(const std::vector<int>& left, const std::vector<int>& right) {
  if (right.size() > left.size()) return false;
  for (std::size_t i = 0; i < right.size(); ++i)
    if (left[i] > right[i]) return false;
  for (std::size_t r = 1; r < left.size(); ++r)
    for (std::size_t i = 0; i < r && i < right.size(); ++i)
      if (left[r] == right[i]) return false;
  return true;
}

bool is_hhl(const Filling& f, int n) {
  if (!is_young_shape(f)) return false;
  for (const auto& col : f.columns) {
    std::vector<char> seen(n + 1, 0);
    for (int v : col) {
      if (v < 1 || v > n || seen[v]) return false;
      seen[v] = 1;
    }
  }
  for (std::size_t j = 0; j + 1 < f.columns.size(); ++j)
    if (!is_hhl_pair(f.columns[j], f.columns[j + 1])) return false;
  return true;
}

namespace {

// ordered selections of k distinct values from [n]
void for_each_column(int k, int n, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> col;
  std::vector<char> used(n + 1, 0);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(col.size()) == k) {
      visit(col);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      col.push_back(v);
      self(self);
      col.pop_back();
      used[v] = 0;
    }
  };
  rec(rec);
}

}  // namespace

void for_each_filling(const Partition& lambda, int n, const std::function<void(const Filling&)>& visit) {
  Partition cols = conjugate(lambda_plus_rho(lambda, n));
  Filling f;
  f.columns.resize(cols.size());
  // right to left, so each new column is checked against its fixed right neighbour
  auto rec = [&](auto&& self, int j) -> void {
    if (j < 0) {
      visit(f);
      return;
    }
    for_each_column(cols[j], n, [&](const std::vector<int>& c) {
      if (j + 1 < static_cast<int>(cols.size()) && !is_hhl_pair(c, f.columns[j + 1])) return;
      f.columns[j] = c;
      self(self, j - 1);
    });
  };
  rec(rec, static_cast<int>(cols.size()) - 1);
}

std::vector<Filling> enumerate_fillings(const Partition& lambda, int n) {
  std::vector<Filling> out;
  for_each_filling(lambda, n, [&](const Filling& f) { out.push_back(f); });
  return out;
}

int inv_pair(const std::vector<int>& left, const std::vector<int>& right) {
  int c = 0;
  for (std::size_t j = 0; j < left.size(); ++j)
    for (std::size_t i = 0; i < j && i < right.size(); ++i)
      if (left[j] < right[i] && (j >= right.size() || right[i] < right[j])) ++c;
  return c;
}

int des_pair(const std::vector<int>& left, const std::vector<int>& right) {
  int c = 0;
  for (std::size_t i = 0; i < right.size() && i < left.size(); ++i)
    if (left[i] < right[i]) ++c;
  return c;
}

int inv(const Filling& f) {
  int c = 0;
  for (std::size_t j = 0; j + 1 < f.columns.size(); ++j) c += inv_pair(f.columns[j], f.columns[j + 1]);
  return c;
}

int des(const Filling& f) {
  int c = 0;
  for (std::size_t j = 0; j + 1 < f.columns.size(); ++j) c += des_pair(f.columns[j], f.columns[j + 1]);
  return c;
}

std::vector<int> content(const Filling& f, int n) {
  std::vector<int> ct(n, 0);
  for (const auto& col : f.columns)
    for (int v : col) {
      if (v < 1 || v > n) throw std::invalid_argument("entry outside [n]");
      ++ct[v - 1];
    }
  return ct;
}

int missing_entry(const Filling& f, int n) {
  const auto& c = f.first_column();
  if (static_cast<int>(c.size()) != n - 1) throw std::invalid_argument("first column must have n-1 entries");
  std::vector<char> present(n + 1, 0);
  for (int v : c) {
    if (v < 1 || v > n || present[v]) throw std::invalid_argument("first column must have distinct entries in [n]");
    present[v] = 1;
  }
  for (int v = 1; v <= n; ++v)
    if (!present[v]) return v;
  throw std::logic_error("no missing entry");
}

LaurentPoly hhl_coefficient(const Filling& f, int n) {
  int e = n - missing_entry(f, n);
  int sign = (e + column_inversions(f.first_column())) % 2 ? -1 : 1;
  return LaurentPoly::signed_t_binomial(sign, e + inv(f), des(f));
}

LaurentPoly hhl_sum(const Partition& lambda, int n) {
  LaurentPoly total(n);
  for_each_filling(lambda, n, [&](const Filling& f) { total += hhl_coefficient(f, n).times_monomial(content(f, n)); });
  return total;
}

Filling fill_map(const AdmissiblePair& p, const RootChain& chain) {
  Filling f;
  Permutation w = p.u;
  std::size_t next = 0;
  for (std::size_t j = 0; j < chain.blocks.size(); ++j) {
    while (next < p.K.size() && p.K[next] < chain.blocks[j].end) w = apply_transposition(w, chain.entries[p.K[next++]]);
    f.columns.emplace_back(w.begin(), w.begin() + chain.column_lengths[j]);
  }
  return f;
}

std::vector<AdmissiblePair> fill_preimage(const Filling& f, const RootChain& chain) {
  const int n = chain.n;
  if (f.columns.size() != chain.blocks.size()) throw std::invalid_argument("filling shape does not match chain");
  for (std::size_t j = 0; j < f.columns.size(); ++j)
    if (static_cast<int>(f.columns[j].size()) != chain.column_lengths[j])
      throw std::invalid_argument("filling shape does not match chain");

  Permutation u = f.first_column();
  if (n >= 1) u.push_back(missing_entry(f, n));

  const std::size_t L = chain.entries.size();
  // after entry k, position row_done[k] is final for its block (0 = none)
  std::vector<int> row_done(L, 0);
  for (const Block& b : chain.blocks)
    for (std::size_t k = b.begin; k < b.end; ++k)
      if (k + 1 == b.end || chain.entries[k + 1].i != chain.entries[k].i) row_done[k] = chain.entries[k].i;
  // block_end_at[k]: blocks whose last entry precedes index k
  std::vector<std::vector<std::size_t>> block_end_at(L + 1);
  for (std::size_t j = 0; j < chain.blocks.size(); ++j) block_end_at[chain.blocks[j].end].push_back(j);

  std::vector<AdmissiblePair> out;
  AdmissiblePair p{u, {}, u, perm_length(u)};
  auto column_ok = [&](std::size_t j) {
    for (int r = 0; r < chain.column_lengths[j]; ++r)
      if (p.end[r] != f.columns[j][r]) return false;
    return true;
  };
  auto rec = [&](auto&& self, std::size_t k) -> void {
    for (std::size_t j : block_end_at[k])
      if (!column_ok(j)) return;
    if (k == L) {
      out.push_back(p);
      return;
    }
    const Transposition r = chain.entries[k];
    const std::size_t j = static_cast<std::size_t>(std::upper_bound(chain.blocks.begin(), chain.blocks.end(), k,
                                                                    [](std::size_t v, const Block& b) { return v < b.end; }) -
                                                   chain.blocks.begin());
    auto row_ok = [&]() {
      int i = row_done[k];
      return i == 0 || i > chain.column_lengths[j] || p.end[i - 1] == f.columns[j][i - 1];
    };
    if (row_ok()) self(self, k + 1);
    if (bruhat_increases(p.end, r)) {
      int delta = length_delta(p.end, r);
      std::swap(p.end[r.i - 1], p.end[r.j - 1]);
      p.end_length += delta;
      p.K.push_back(k);
      if (row_ok()) self(self, k + 1);
      p.K.pop_back();
      p.end_length -= delta;
      std::swap(p.end[r.i - 1], p.end[r.j - 1]);
    }
  };
  rec(rec, 0);
  return out;
}

LaurentPoly fill_preimage_sum(const Filling& f, const RootChain& chain) {
  LaurentPoly total;
  for (const auto& p : fill_preimage(f, chain))
    total += ramyip_coefficient(perm_length(p.u), p.end_length, static_cast<int>(p.K.size()));
  return total;
}

bool weak_compression_check(const Filling& f, const RootChain& chain, int n) {
  return fill_preimage_sum(f, chain) == hhl_coefficient(f, n);
}

namespace {

LaurentPoly n_term(const Permutation& w, const std::vector<Transposition>& T) {
  return LaurentPoly::signed_t_binomial(1, count_N(w, T), static_cast<int>(T.size()));
}

std::vector<Transposition> chain_subsequence(const std::vector<Transposition>& chain, const std::vector<std::size_t>& K) {
  std::vector<Transposition> T;
  for (std::size_t k : K) T.push_back(chain[k]);
  return T;
}

}  // namespace

ChainSumSides entry_chain_sum(const Permutation& w, int b, int p) {
  const int n = static_cast<int>(w.size());
  if (!is_permutation(w) || n < 2) throw std::invalid_argument("need a permutation of [n], n >= 2");
  const int a = w[0];
  if (b < a || b > n) throw std::invalid_argument("need w(1) <= b <= n");
  const int pos_b = inverse(w)[b - 1];
  if (b != a && (p < 0 || p >= pos_b - 1)) throw std::invalid_argument("need 0 <= p < w^-1(b) - 1");
  if (b == a && (p < 0 || p > n - 1)) throw std::invalid_argument("truncation out of range");
  auto chain = gamma_block_truncated(1, p, n);
  ChainSumSides s{LaurentPoly(), LaurentPoly()};
  for_each_admissible_from(w, chain, [&](const AdmissiblePair& q) {
    if (q.end[0] == b) s.lhs += n_term(w, chain_subsequence(chain, q.K));
  });
  s.rhs = LaurentPoly::signed_t_binomial(1, count_between(w, 2, p + 1, a, b), a == b ? 0 : 1);
  return s;
}

ChainSumSides two_column_chain_sum(const Permutation& w, const std::vector<int>& right) {
  const int n = static_cast<int>(w.size());
  const int k = static_cast<int>(right.size());
  if (!is_permutation(w)) throw std::invalid_argument("need a permutation");
  if (k < 1 || k >= n) throw std::invalid_argument("need 1 <= |right| < n");
  std::vector<int> left(w.begin(), w.begin() + k);
  Filling pair{{left, right}};
  if (!is_hhl(pair, n)) throw std::invalid_argument("the two columns must form an HHL configuration");
  auto chain = gamma_block(k, n);
  ChainSumSides s{LaurentPoly(), LaurentPoly()};
  for_each_admissible_from(w, chain, [&](const AdmissiblePair& q) {
    if (std::equal(right.begin(), right.end(), q.end.begin())) s.lhs += n_term(w, chain_subsequence(chain, q.K));
  });
  s.rhs = LaurentPoly::signed_t_binomial(1, column_inversions(right) - column_inversions(left) + inv(pair), des(pair));
  return s;
}

ChainSumSides full_chain_sum(const Filling& f, const RootChain& chain) {
  if (!is_hhl(f, chain.n)) throw std::invalid_argument("filling must be HHL");
  ChainSumSides s{LaurentPoly(), LaurentPoly()};
  for (const auto& q : fill_preimage(f, chain)) s.lhs += n_term(q.u, chain_subsequence(chain.entries, q.K));
  s.rhs = LaurentPoly::signed_t_binomial(1, inv(f) - column_inversions(f.first_column()), des(f));
  return s;
}

}  // namespace whit
