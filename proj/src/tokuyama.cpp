#include "whittaker/tokuyama.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace whit {

bool is_gt(const GTPattern& p) {
  const std::size_t n = p.rows.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& r = p.rows[i];
    if (r.size() != n - i) return false;
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (r[j] < 0) return false;
      if (j + 1 < r.size() && r[j] < r[j + 1]) return false;
      if (i > 0 && (r[j] > p.rows[i - 1][j] || r[j] < p.rows[i - 1][j + 1])) return false;
    }
  }
  return true;
}

bool is_strict(const GTPattern& p) {
  if (!is_gt(p)) return false;
  for (const auto& r : p.rows)
    for (std::size_t j = 0; j + 1 < r.size(); ++j)
      if (r[j] == r[j + 1]) return false;
  return true;
}

namespace {

void for_each_pattern(const std::vector<int>& top, bool strict, const std::function<void(const GTPattern&)>& visit) {
  GTPattern p{{top}};
  auto rec = [&](auto&& self) -> void {
    const auto prev = p.rows.back();
    if (prev.size() <= 1) {
      visit(p);
      return;
    }
    // fill the next row right to left so strictness can prune
    std::vector<int> row(prev.size() - 1);
    auto fill = [&](auto&& fself, int j) -> void {
      if (j < 0) {
        p.rows.push_back(row);
        self(self);
        p.rows.pop_back();
        return;
      }
      int lo = prev[j + 1];
      if (j + 1 < static_cast<int>(row.size())) lo = std::max(lo, row[j + 1] + (strict ? 1 : 0));
      for (int v = lo; v <= prev[j]; ++v) {
        row[j] = v;
        fself(fself, j - 1);
      }
    };
    fill(fill, static_cast<int>(row.size()) - 1);
  };
  if (!top.empty()) rec(rec);
}

}  // namespace

void for_each_sgt(const std::vector<int>& top, const std::function<void(const GTPattern&)>& visit) {
  for (std::size_t j = 0; j + 1 < top.size(); ++j)
    if (top[j] <= top[j + 1]) throw std::invalid_argument("top row must be strictly decreasing");
  if (!top.empty() && top.back() < 0) throw std::invalid_argument("top row must be nonnegative");
  for_each_pattern(top, true, visit);
}

void for_each_gt(const std::vector<int>& top, const std::function<void(const GTPattern&)>& visit) {
  for (std::size_t j = 0; j + 1 < top.size(); ++j)
    if (top[j] < top[j + 1]) throw std::invalid_argument("top row must be weakly decreasing");
  if (!top.empty() && top.back() < 0) throw std::invalid_argument("top row must be nonnegative");
  for_each_pattern(top, false, visit);
}

std::vector<GTPattern> enumerate_sgt(const std::vector<int>& top) {
  std::vector<GTPattern> out;
  for_each_sgt(top, [&](const GTPattern& p) { out.push_back(p); });
  return out;
}

GtStats gt_stats(const GTPattern& p) {
  GtStats s;
  for (std::size_t i = 1; i < p.rows.size(); ++i)
    for (std::size_t j = 0; j < p.rows[i].size(); ++j) {
      int a = p.rows[i][j];
      if (a == p.rows[i - 1][j])
        ++s.left;
      else if (a == p.rows[i - 1][j + 1])
        ++s.right;
      else
        ++s.special;
    }
  return s;
}

std::vector<int> m_vector(const GTPattern& p) {
  std::vector<int> sums;
  for (const auto& r : p.rows) sums.push_back(std::accumulate(r.begin(), r.end(), 0));
  std::vector<int> m(sums.size());
  for (std::size_t i = 0; i < sums.size(); ++i) m[i] = sums[i] - (i + 1 < sums.size() ? sums[i + 1] : 0);
  return m;
}

std::vector<int> gt_top_row(const Partition& lambda, int n) {
  Partition lam = normalize_partition(lambda);
  if (n < 1 || static_cast<int>(lam.size()) > n - 1) throw std::invalid_argument("partition has more than n-1 nonzero parts");
  lam.resize(n, 0);
  for (int i = 0; i < n; ++i) lam[i] += n - 1 - i;
  return lam;
}

LaurentPoly tokuyama_sum(const Partition& lambda, int n) {
  LaurentPoly total(n);
  for_each_sgt(gt_top_row(lambda, n), [&](const GTPattern& p) {
    GtStats s = gt_stats(p);
    LaurentPoly c = LaurentPoly::power(Base::OneMinusT, s.special) * LaurentPoly::power(Base::NegT, s.left);
    total += c.times_monomial(m_vector(p));
  });
  return total;
}

bool is_ssyt(const Tableau& s, int n) {
  for (std::size_t r = 0; r < s.rows.size(); ++r) {
    const auto& row = s.rows[r];
    if (row.empty()) return false;
    if (r > 0 && row.size() > s.rows[r - 1].size()) return false;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] < 1 || row[c] > n) return false;
      if (c > 0 && row[c] < row[c - 1]) return false;
      if (r > 0 && row[c] <= s.rows[r - 1][c]) return false;
    }
  }
  return true;
}

Partition tableau_shape(const Tableau& s) {
  Partition p;
  for (const auto& r : s.rows) p.push_back(static_cast<int>(r.size()));
  return p;
}

std::vector<int> tableau_content(const Tableau& s, int n) {
  std::vector<int> ct(n, 0);
  for (const auto& r : s.rows)
    for (int v : r) ++ct.at(v - 1);
  return ct;
}

// GT row i (0-based) is the shape of the entries <= n - i.
Tableau gt_to_ssyt(const GTPattern& p) {
  if (!is_gt(p)) throw std::invalid_argument("not a GT pattern");
  const int n = static_cast<int>(p.rows.size());
  Tableau s;
  for (int r = 0; r < n; ++r) {
    std::vector<int> row;
    for (int v = 1; v <= n; ++v) {
      if (r >= v) continue;
      int upto = p.rows[n - v][r];
      int below = (v > 1 && r < v - 1) ? p.rows[n - v + 1][r] : 0;
      row.insert(row.end(), upto - below, v);
    }
    if (row.empty()) break;
    s.rows.push_back(std::move(row));
  }
  return s;
}

GTPattern ssyt_to_gt(const Tableau& s, int n) {
  if (!is_ssyt(s, n) || static_cast<int>(s.rows.size()) > n) throw std::invalid_argument("not an SSYT with entries in [n]");
  GTPattern p;
  for (int i = 0; i < n; ++i) {
    int k = n - i;
    std::vector<int> row(n - i, 0);
    for (int r = 0; r < n - i && r < static_cast<int>(s.rows.size()); ++r)
      row[r] = static_cast<int>(std::count_if(s.rows[r].begin(), s.rows[r].end(), [k](int v) { return v <= k; }));
    p.rows.push_back(std::move(row));
  }
  return p;
}

std::optional<int> WalledSSYT::gap(int row, int index) const {
  for (const Wall& w : walls)
    if (w.row == row && w.index == index) return w.gap;
  return std::nullopt;
}

WalledSSYT place_walls(const Tableau& s, int n) {
  WalledSSYT w{s, n, {}};
  const int rows = static_cast<int>(s.rows.size());
  for (int r = 1; r <= rows; ++r)
    for (int k = r; k <= n; ++k) {
      const auto& row = s.rows[r - 1];
      int g = static_cast<int>(std::count_if(row.begin(), row.end(), [k](int v) { return v <= k; }));
      w.walls.push_back({r, g, k});
    }
  w.walls.push_back({rows + 1, 0, rows + 1});
  return w;
}

int wall_stat_n(const WalledSSYT& w) {
  int c = 0;
  for (const Wall& x : w.walls) {
    auto prev = w.gap(x.row, x.index - 1);
    auto below = w.gap(x.row + 1, x.index);
    auto below_next = w.gap(x.row + 1, x.index + 1);
    if (prev == x.gap && below == x.gap && below_next == x.gap) ++c;
  }
  return c;
}

int wall_stat_l(const WalledSSYT& w) {
  int c = 0;
  for (const Wall& x : w.walls) {
    bool boxed = w.gap(x.row + 1, x.index + 1) == x.gap;
    bool circled = w.gap(x.row, x.index + 1) == x.gap;
    if (boxed && !circled) ++c;
  }
  return c;
}

int wall_stat_z(const WalledSSYT& w) {
  int c = 0;
  for (const Wall& x : w.walls) {
    auto right = w.gap(x.row, x.index + 1);
    auto below = w.gap(x.row + 1, x.index + 1);
    if (right && below && *right > x.gap && *below < x.gap) ++c;
  }
  return c;
}

}  // namespace whit
