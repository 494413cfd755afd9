#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "whittaker/algebra.hpp"
#include "whittaker/fillings.hpp"
#include "whittaker/tokuyama.hpp"

namespace whit {

using Column = std::vector<int>;

Filling tableau_to_filling(const Tableau& s);
Tableau filling_to_tableau(const Filling& f);
Tableau sort_columns(const Filling& f);

// values p < q, swapped wherever they sit in the left column
struct ValueTransposition {
  int p;
  int q;
  bool operator==(const ValueTransposition&) const = default;
};
std::string format_transposition(ValueTransposition t);

Column root_column(std::vector<int> values, const Column& right);

struct Pivot {
  int entry;
  int row;                   // 0-based
  std::optional<int> right;  // empty for the overhang row (infinite endpoint)
};
// sorted by entry, largest first
std::vector<Pivot> pivots(const Column& left, const Column& right);

struct BetaEntry {
  int row;  // index into BetaSequence::rows
  ValueTransposition tau;
};
struct BetaSequence {
  std::vector<std::vector<ValueTransposition>> rows;
  std::vector<BetaEntry> flat() const;
  std::size_t size() const;
};
BetaSequence build_beta(const Column& left, const Column& right);

bool is_legal(ValueTransposition tau, const Column& left, const Column& right);
Column swap_values(Column c, ValueTransposition tau);
bool non_overlapping(const Column& left, const Column& right);
int m_stat(const Column& left, const Column& right, std::optional<int> q);

struct PairStats {
  int n_check = 0;
  int n_hat = 0;
  int p = 0;
};
PairStats pair_stats(const Column& left, const Column& right);
// statistics of the adjacent pair (i-1, i) of a root filling, i 1-based in 2..m
PairStats column_stats(const Filling& root, int i);

Filling root_filling(const Tableau& s);

enum class SignConvention { Plain, Extended };
int column_sign_length(const Column& c, int n, SignConvention sign);
// (-1)^{l(T[1])} t^{inv(T)} (1-t)^{des(T)}
LaurentPoly leaf_coefficient(const Filling& f, int n, SignConvention sign);

// leaves of the generation procedure on (left_hat, right), in tree order
std::vector<Column> generation_leaves(const Column& left_hat, const Column& right);

enum class EdgeKind { Root, Applied, Skipped, Extend };

struct PairContext {
  Column left_hat;
  Column right;
  std::vector<Column> rest;  // columns to the right of `right`
  BetaSequence beta;
  std::vector<BetaEntry> order;
  std::vector<Pivot> pivot_data;
  bool non_overlapping = true;
};

struct TreeNode {
  Filling config;
  LaurentPoly coef;
  int parent = -1;
  std::vector<int> children;
  EdgeKind edge = EdgeKind::Root;
  ValueTransposition label{0, 0};
  std::shared_ptr<const PairContext> pair;  // null above the first generation stage
  int depth = 0;                            // beta entries considered so far
  std::vector<char> used_rows;
  int last_applied = -1;
  bool final = false;  // carries a complete configuration
};

struct TreeOptions {
  int n = 0;  // 0: largest entry present
  SignConvention sign = SignConvention::Extended;
};

struct GenerationTree {
  std::vector<TreeNode> nodes;
  int n = 0;
  SignConvention sign = SignConvention::Extended;
  std::vector<int> leaves() const;
  std::size_t edge_count() const;
};

GenerationTree generation_tree(const Column& left_hat, const Column& right, const std::vector<Column>& rest = {},
                               TreeOptions opts = {});
// whole sort preimage of s as one tree, built right to left
GenerationTree preimage_tree(const Tableau& s, int n, TreeOptions opts = {});

// Brute-force sum over A(beta_tau) with HHL result; depth = entries already considered.
LaurentPoly node_sum(const PairContext& ctx, int depth, const Column& left, int n, SignConvention sign);

class Audit {
 public:
  struct Entry {
    long checked = 0;
    long failed = 0;
    std::string first_failure;
  };
  void check(const std::string& name, bool ok, const std::function<std::string()>& describe);
  void merge(const Audit& other);
  bool ok() const;
  const std::map<std::string, Entry>& entries() const { return entries_; }

 private:
  std::map<std::string, Entry> entries_;
};

void audit_tree(const GenerationTree& tree, Audit& audit);
void audit_root_filling(const Tableau& s, int n, Audit& audit);

std::vector<Filling> sort_preimage(const Tableau& s, int n, Audit* audit = nullptr);
LaurentPoly sort_preimage_sum(const std::vector<Filling>& preimage, int n, SignConvention sign);
LaurentPoly strong_compression_closed_form(const Tableau& s, int n);
bool strong_compression_check(const Tableau& s, int n);
bool root_is_disjoint(const Tableau& s);
bool stats_equivalence_check(const Tableau& s, int n);

// rows joined by commas, e.g. "15,33,44"
std::string filling_label(const Filling& f);
std::string tree_to_dot(const GenerationTree& tree, bool collapse_unary = false);
nlohmann::json tree_to_json(const GenerationTree& tree);

}  // namespace whit
