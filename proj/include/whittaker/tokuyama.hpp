#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "whittaker/algebra.hpp"
#include "whittaker/weyl.hpp"

namespace whit {

// rows[0] is the top row (length n), rows[i] has length n - i.
struct GTPattern {
  std::vector<std::vector<int>> rows;
  bool operator==(const GTPattern&) const = default;
};

bool is_gt(const GTPattern& p);
bool is_strict(const GTPattern& p);

void for_each_sgt(const std::vector<int>& top, const std::function<void(const GTPattern&)>& visit);
std::vector<GTPattern> enumerate_sgt(const std::vector<int>& top);
// all patterns, strict or not
void for_each_gt(const std::vector<int>& top, const std::function<void(const GTPattern&)>& visit);

// An entry equal to both upper neighbours is counted as left-leaning.
struct GtStats {
  int left = 0;
  int right = 0;
  int special = 0;
};
GtStats gt_stats(const GTPattern& p);
std::vector<int> m_vector(const GTPattern& p);

std::vector<int> gt_top_row(const Partition& lambda, int n);
LaurentPoly tokuyama_sum(const Partition& lambda, int n);

// Rows top to bottom, left justified.
struct Tableau {
  std::vector<std::vector<int>> rows;
  bool operator==(const Tableau&) const = default;
  auto operator<=>(const Tableau&) const = default;
};

bool is_ssyt(const Tableau& s, int n);
Partition tableau_shape(const Tableau& s);
std::vector<int> tableau_content(const Tableau& s, int n);
Tableau gt_to_ssyt(const GTPattern& p);
GTPattern ssyt_to_gt(const Tableau& s, int n);

// gap = number of boxes to the left of the wall in its row
struct Wall {
  int row;
  int gap;
  int index;
  bool operator==(const Wall&) const = default;
};

struct WalledSSYT {
  Tableau base;
  int n = 0;
  std::vector<Wall> walls;  // sorted by (row, index)
  std::optional<int> gap(int row, int index) const;
};

WalledSSYT place_walls(const Tableau& s, int n);
int wall_stat_n(const WalledSSYT& w);
int wall_stat_l(const WalledSSYT& w);
int wall_stat_z(const WalledSSYT& w);

}  // namespace whit
