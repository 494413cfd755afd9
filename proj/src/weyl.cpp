#include "whittaker/weyl.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace whit {

bool is_permutation(const Permutation& w) {
  std::vector<char> seen(w.size() + 1, 0);
  for (int v : w) {
    if (v < 1 || v > static_cast<int>(w.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Permutation identity_permutation(int n) {
  Permutation w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  return w;
}

Permutation inverse(const Permutation& w) {
  Permutation inv(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) inv[w[i] - 1] = static_cast<int>(i) + 1;
  return inv;
}

int perm_length(const Permutation& w) { return column_inversions(w); }

Permutation apply_transposition(Permutation w, Transposition r) {
  if (r.i < 1 || r.j > static_cast<int>(w.size()) || r.i >= r.j)
    throw std::invalid_argument("transposition out of range");
  std::swap(w[r.i - 1], w[r.j - 1]);
  return w;
}

int count_between(const Permutation& w, int a, int b, int lo, int hi) {
  int c = 0;
  for (int k = a; k <= b; ++k)
    if (w[k - 1] > lo && w[k - 1] < hi) ++c;
  return c;
}

// Swapping x = w(i) < y = w(j) changes the length by 1 + 2 #{i<k<j : x < w(k) < y}.
int length_delta(const Permutation& w, Transposition r) {
  int x = w[r.i - 1], y = w[r.j - 1];
  int mid = count_between(w, r.i + 1, r.j - 1, std::min(x, y), std::max(x, y));
  return x < y ? 1 + 2 * mid : -(1 + 2 * mid);
}

bool bruhat_increases(const Permutation& w, Transposition r) { return w[r.i - 1] < w[r.j - 1]; }

int column_inversions(const std::vector<int>& c) {
  int inv = 0;
  for (std::size_t a = 0; a < c.size(); ++a)
    for (std::size_t b = a + 1; b < c.size(); ++b) {
      if (c[a] == c[b]) throw std::invalid_argument("repeated entry in column");
      if (c[a] > c[b]) ++inv;
    }
  return inv;
}

int column_extended_length(const std::vector<int>& c, int n) {
  std::vector<char> present(n + 1, 0);
  for (int v : c) {
    if (v < 1 || v > n) throw std::invalid_argument("column entry outside [n]");
    present[v] = 1;
  }
  std::vector<int> w = c;
  for (int v = 1; v <= n; ++v)
    if (!present[v]) w.push_back(v);
  return column_inversions(w);
}

Partition normalize_partition(Partition p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) throw std::invalid_argument("negative part");
    if (i > 0 && p[i] > p[i - 1]) throw std::invalid_argument("parts must be weakly decreasing");
  }
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Partition conjugate(const Partition& lambda) {
  Partition lam = normalize_partition(lambda);
  if (lam.empty()) return {};
  Partition c(lam[0], 0);
  for (int part : lam)
    for (int j = 0; j < part; ++j) ++c[j];
  return c;
}

Partition lambda_plus_rho(const Partition& lambda, int n) {
  Partition lam = normalize_partition(lambda);
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (static_cast<int>(lam.size()) > n - 1)
    throw std::invalid_argument("partition has more than n-1 nonzero parts");
  lam.resize(n - 1, 0);
  for (int i = 0; i < n - 1; ++i) lam[i] += n - 1 - i;
  return lam;
}

Partition parse_partition(const std::string& text) {
  Partition p;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, ',')) {
    auto b = tok.find_first_not_of(" \t");
    if (b == std::string::npos) {
      if (text.find_first_not_of(" \t,") == std::string::npos) continue;
      throw std::invalid_argument("empty part in partition '" + text + "'");
    }
    tok = tok.substr(b, tok.find_last_not_of(" \t") - b + 1);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition part '" + tok + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("bad partition part '" + tok + "'");
    p.push_back(v);
  }
  return normalize_partition(p);
}

std::string format_sequence(const std::vector<int>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace whit
