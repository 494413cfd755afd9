#include "whittaker/alcove.hpp"

#include <algorithm>
#include <stdexcept>

namespace whit {

namespace {

void check_block_args(int k, int n) {
  if (k < 1 || k >= n) throw std::invalid_argument("gamma block needs 1 <= k < n");
}

// x^{content of the columns read off the partial products}
std::vector<int> pair_content(const AdmissiblePair& p, const RootChain& chain) {
  std::vector<int> ct(chain.n, 0);
  Permutation w = p.u;
  std::size_t next = 0;
  for (std::size_t j = 0; j < chain.blocks.size(); ++j) {
    const Block& b = chain.blocks[j];
    while (next < p.K.size() && p.K[next] < b.end) w = apply_transposition(w, chain.entries[p.K[next++]]);
    for (int r = 0; r < chain.column_lengths[j]; ++r) ++ct[w[r] - 1];
  }
  return ct;
}

}  // namespace

std::vector<Transposition> gamma_block(int k, int n) {
  check_block_args(k, n);
  std::vector<Transposition> out;
  for (int i = 1; i <= k; ++i)
    for (int j = k + 1; j <= n; ++j) out.push_back({i, j});
  return out;
}

std::vector<Transposition> gamma_block_primed(int k, int n) {
  check_block_args(k, n);
  std::vector<Transposition> out;
  for (int i = 1; i <= k; ++i)
    for (int j = k + 2; j <= n; ++j) out.push_back({i, j});
  return out;
}

std::vector<Transposition> gamma_block_truncated(int k, int p, int n) {
  auto g = gamma_block(k, n);
  if (p < 0 || p > static_cast<int>(g.size())) throw std::invalid_argument("truncation out of range");
  g.erase(g.begin(), g.begin() + p);
  return g;
}

RootChain build_chain_for_shape(const Partition& mu, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (static_cast<int>(mu.size()) != n - 1) throw std::invalid_argument("shape must have n-1 rows");
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (mu[i] <= 0 || (i > 0 && mu[i] >= mu[i - 1])) throw std::invalid_argument("shape must be strictly decreasing");
  RootChain c;
  c.n = n;
  c.shape = mu;
  c.column_lengths = conjugate(mu);
  for (std::size_t j = 0; j < c.column_lengths.size(); ++j) {
    int k = c.column_lengths[j];
    bool first = j == 0 || c.column_lengths[j - 1] != k;
    auto block = first ? gamma_block_primed(k, n) : gamma_block(k, n);
    std::size_t begin = c.entries.size();
    c.entries.insert(c.entries.end(), block.begin(), block.end());
    c.blocks.push_back({begin, c.entries.size()});
  }
  return c;
}

RootChain build_chain(const Partition& lambda, int n) { return build_chain_for_shape(lambda_plus_rho(lambda, n), n); }

void for_each_admissible_from(const Permutation& u, const std::vector<Transposition>& chain,
                              const std::function<void(const AdmissiblePair&)>& visit) {
  AdmissiblePair p{u, {}, u, perm_length(u)};
  auto rec = [&](auto&& self, std::size_t start) -> void {
    visit(p);
    for (std::size_t k = start; k < chain.size(); ++k) {
      Transposition r = chain[k];
      if (!bruhat_increases(p.end, r)) continue;
      int delta = length_delta(p.end, r);
      std::swap(p.end[r.i - 1], p.end[r.j - 1]);
      p.end_length += delta;
      p.K.push_back(k);
      self(self, k + 1);
      p.K.pop_back();
      p.end_length -= delta;
      std::swap(p.end[r.i - 1], p.end[r.j - 1]);
    }
  };
  rec(rec, 0);
}

void for_each_admissible(const RootChain& chain, const std::function<void(const AdmissiblePair&)>& visit) {
  Permutation u = identity_permutation(chain.n);
  do {
    for_each_admissible_from(u, chain.entries, visit);
  } while (std::next_permutation(u.begin(), u.end()));
}

std::vector<AdmissiblePair> enumerate_admissible(const RootChain& chain) {
  std::vector<AdmissiblePair> out;
  for_each_admissible(chain, [&](const AdmissiblePair& p) { out.push_back(p); });
  return out;
}

int count_N(Permutation w, const std::vector<Transposition>& T) {
  int total = 0;
  for (Transposition r : T) {
    w = apply_transposition(std::move(w), r);
    int lo = std::min(w[r.i - 1], w[r.j - 1]), hi = std::max(w[r.i - 1], w[r.j - 1]);
    total += count_between(w, r.i, r.j, lo, hi);
  }
  return total;
}

LaurentPoly ramyip_coefficient(int len_u, int len_end, int k) {
  int twice = len_u + len_end - k;
  if (twice < 0 || twice % 2 != 0) throw std::logic_error("half-integral exponent in alcove-walk term");
  return LaurentPoly::term(len_end % 2 ? -1 : 1, twice / 2, {}) * LaurentPoly::power(Base::TMinusOne, k);
}

LaurentPoly ramyip_sum(const Partition& lambda, int n) {
  RootChain chain = build_chain(lambda, n);
  LaurentPoly total(n);
  for_each_admissible(chain, [&](const AdmissiblePair& p) {
    int len_u = perm_length(p.u);
    total += ramyip_coefficient(len_u, p.end_length, static_cast<int>(p.K.size())).times_monomial(pair_content(p, chain));
  });
  return total;
}

}  // namespace whit
