#include "whittaker/compression.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace whit {

namespace {

constexpr int kInfinity = std::numeric_limits<int>::max();

bool contains(const Column& c, int v) { return std::find(c.begin(), c.end(), v) != c.end(); }

int row_of(const Column& c, int v) {
  auto it = std::find(c.begin(), c.end(), v);
  if (it == c.end()) throw std::invalid_argument("value " + std::to_string(v) + " not in column");
  return static_cast<int>(it - c.begin());
}

Filling config_of(const Column& left, const Column& right, const std::vector<Column>& rest) {
  Filling f;
  f.columns.reserve(rest.size() + 2);
  f.columns.push_back(left);
  f.columns.push_back(right);
  f.columns.insert(f.columns.end(), rest.begin(), rest.end());
  return f;
}

int max_entry(const Filling& f) {
  int m = 0;
  for (const auto& c : f.columns)
    for (int v : c) m = std::max(m, v);
  return m;
}

LaurentPoly neg_t_one_minus_t(int e, int f) { return LaurentPoly::power(Base::NegT, e) * LaurentPoly::power(Base::OneMinusT, f); }

}  // namespace

Filling tableau_to_filling(const Tableau& s) {
  Filling f;
  if (s.rows.empty()) return f;
  for (std::size_t j = 0; j < s.rows[0].size(); ++j) {
    Column c;
    for (const auto& r : s.rows)
      if (j < r.size()) c.push_back(r[j]);
    f.columns.push_back(std::move(c));
  }
  return f;
}

Tableau filling_to_tableau(const Filling& f) {
  Tableau s;
  for (int r = 0; r < f.num_rows(); ++r) {
    std::vector<int> row;
    for (const auto& c : f.columns)
      if (r < static_cast<int>(c.size())) row.push_back(c[r]);
    s.rows.push_back(std::move(row));
  }
  return s;
}

Tableau sort_columns(const Filling& f) {
  Filling g = f;
  for (auto& c : g.columns) std::sort(c.begin(), c.end());
  Tableau s = filling_to_tableau(g);
  if (!is_ssyt(s, std::max(1, max_entry(g)))) throw std::logic_error("column sort did not produce a semistandard tableau");
  return s;
}

std::string format_transposition(ValueTransposition t) {
  return "(" + std::to_string(t.p) + "<" + std::to_string(t.q) + ")";
}

Column root_column(std::vector<int> values, const Column& right) {
  const std::size_t c = values.size(), cp = right.size();
  if (c != cp && c != cp + 1) throw std::invalid_argument("left column must have |right| or |right|+1 entries");
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(values.begin(), values.end()) != values.end()) throw std::invalid_argument("repeated value");
  Column sorted_right = right;
  std::sort(sorted_right.begin(), sorted_right.end());
  for (std::size_t i = 0; i < cp; ++i)
    if (values[i] > sorted_right[i]) throw std::invalid_argument("sorted columns are not weakly increasing in rows");

  std::reverse(values.begin(), values.end());
  Column res(c, 0);
  std::vector<int> unmatched;
  for (int a : values) {
    if (contains(right, a))
      res[row_of(right, a)] = a;
    else
      unmatched.push_back(a);
  }
  std::size_t u = 0;
  if (c == cp + 1) res[cp] = unmatched[u++];
  std::vector<std::size_t> free_rows;
  for (std::size_t i = 0; i < cp; ++i)
    if (res[i] == 0) free_rows.push_back(i);
  std::sort(free_rows.begin(), free_rows.end(), [&](std::size_t x, std::size_t y) { return right[x] > right[y]; });
  for (std::size_t i : free_rows) res[i] = unmatched[u++];
  return res;
}

std::vector<Pivot> pivots(const Column& left, const Column& right) {
  std::vector<Pivot> out;
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (i >= right.size())
      out.push_back({left[i], static_cast<int>(i), std::nullopt});
    else if (left[i] < right[i])
      out.push_back({left[i], static_cast<int>(i), right[i]});
  }
  std::sort(out.begin(), out.end(), [](const Pivot& a, const Pivot& b) { return a.entry > b.entry; });
  return out;
}

std::vector<BetaEntry> BetaSequence::flat() const {
  std::vector<BetaEntry> out;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (auto t : rows[r]) out.push_back({static_cast<int>(r), t});
  return out;
}

std::size_t BetaSequence::size() const {
  std::size_t s = 0;
  for (const auto& r : rows) s += r.size();
  return s;
}

BetaSequence build_beta(const Column& left, const Column& right) {
  auto pv = pivots(left, right);
  Column a_values = left;
  std::sort(a_values.rbegin(), a_values.rend());
  BetaSequence beta;
  for (int a : a_values) {
    std::vector<ValueTransposition> row;
    for (const auto& b : pv)
      if (b.entry < a) row.push_back({b.entry, a});
    if (!row.empty()) beta.rows.push_back(std::move(row));
  }
  return beta;
}

Column swap_values(Column c, ValueTransposition tau) {
  std::swap(c[row_of(c, tau.p)], c[row_of(c, tau.q)]);
  return c;
}

bool is_legal(ValueTransposition tau, const Column& left, const Column& right) {
  return is_hhl_pair(swap_values(left, tau), right);
}

bool non_overlapping(const Column& left, const Column& right) {
  auto pv = pivots(left, right);
  for (std::size_t x = 0; x < pv.size(); ++x)
    for (std::size_t y = x + 1; y < pv.size(); ++y) {
      int lo = std::max(pv[x].entry, pv[y].entry);
      int hi = std::min(pv[x].right.value_or(kInfinity), pv[y].right.value_or(kInfinity));
      if (lo <= hi) return false;
    }
  return true;
}

int m_stat(const Column& left, const Column& right, std::optional<int> q) {
  int s = 0;
  for (std::size_t r = 0; r < left.size(); ++r) {
    int a = left[r];
    if (contains(right, a)) continue;
    int hi = std::min(r < right.size() ? right[r] : kInfinity, q.value_or(kInfinity));
    for (std::size_t k = r + 1; k < right.size(); ++k)
      if (right[k] > a && right[k] < hi && contains(left, right[k])) ++s;
  }
  return s;
}

PairStats pair_stats(const Column& left, const Column& right) {
  PairStats st;
  for (const auto& pv : pivots(left, right)) {
    int d = pv.right.value_or(kInfinity);
    for (std::size_t k = 0; k < right.size(); ++k) {
      int v = right[k];
      if (static_cast<int>(k) == pv.row || v <= pv.entry || v >= d || !contains(left, v)) continue;
      if (static_cast<int>(k) > pv.row)
        ++st.n_check;
      else
        ++st.n_hat;
    }
  }
  st.p = des_pair(left, right);
  return st;
}

PairStats column_stats(const Filling& root, int i) {
  if (i < 2 || i > root.num_columns()) throw std::invalid_argument("column index out of range");
  return pair_stats(root.columns[i - 2], root.columns[i - 1]);
}

Filling root_filling(const Tableau& s) {
  Filling cols = tableau_to_filling(s);
  for (int i = cols.num_columns() - 2; i >= 0; --i) cols.columns[i] = root_column(cols.columns[i], cols.columns[i + 1]);
  return cols;
}

int column_sign_length(const Column& c, int n, SignConvention sign) {
  return sign == SignConvention::Plain ? column_inversions(c) : column_extended_length(c, n);
}

LaurentPoly leaf_coefficient(const Filling& f, int n, SignConvention sign) {
  int l = column_sign_length(f.first_column(), n, sign);
  return LaurentPoly::signed_t_binomial(l % 2 ? -1 : 1, inv(f), des(f));
}

std::vector<Column> generation_leaves(const Column& left_hat, const Column& right) {
  BetaSequence beta = build_beta(left_hat, right);
  struct State {
    Column c;
    std::vector<char> used;
  };
  std::vector<State> states{{left_hat, std::vector<char>(beta.rows.size(), 0)}};
  for (const auto& [row, tau] : beta.flat()) {
    std::vector<State> next;
    for (auto& s : states) {
      if (!s.used[row]) {
        Column c2 = swap_values(s.c, tau);
        if (is_hhl_pair(c2, right)) {
          State a{std::move(c2), s.used};
          a.used[row] = 1;
          next.push_back(std::move(a));
        }
      }
      next.push_back(std::move(s));
    }
    states = std::move(next);
  }
  std::vector<Column> out;
  for (auto& s : states) out.push_back(std::move(s.c));
  return out;
}

// ---------------------------------------------------------------------------
// tree construction

std::vector<int> GenerationTree::leaves() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].children.empty()) out.push_back(static_cast<int>(i));
  return out;
}

std::size_t GenerationTree::edge_count() const { return nodes.empty() ? 0 : nodes.size() - 1; }

namespace {

std::shared_ptr<const PairContext> make_context(const Column& left_hat, const Column& right, std::vector<Column> rest) {
  auto ctx = std::make_shared<PairContext>();
  ctx->left_hat = left_hat;
  ctx->right = right;
  ctx->rest = std::move(rest);
  ctx->beta = build_beta(left_hat, right);
  ctx->order = ctx->beta.flat();
  ctx->pivot_data = pivots(left_hat, right);
  ctx->non_overlapping = non_overlapping(left_hat, right);
  return ctx;
}

class Builder {
 public:
  explicit Builder(GenerationTree& t) : tree_(t) {}

  int add(int parent, Filling cfg, EdgeKind kind, ValueTransposition label, std::shared_ptr<const PairContext> pair,
          int depth, std::vector<char> used, int last) {
    TreeNode nd;
    nd.config = std::move(cfg);
    nd.parent = parent;
    nd.edge = kind;
    nd.label = label;
    nd.pair = std::move(pair);
    nd.depth = depth;
    nd.used_rows = std::move(used);
    nd.last_applied = last;
    tree_.nodes.push_back(std::move(nd));
    int idx = static_cast<int>(tree_.nodes.size()) - 1;
    if (parent >= 0) tree_.nodes[parent].children.push_back(idx);
    return idx;
  }

  int start_stage(int parent, std::shared_ptr<const PairContext> ctx, EdgeKind kind) {
    Filling cfg = config_of(ctx->left_hat, ctx->right, ctx->rest);
    std::vector<char> used(ctx->beta.rows.size(), 0);
    return add(parent, std::move(cfg), kind, {0, 0}, std::move(ctx), 0, std::move(used), -1);
  }

  void expand(int idx, const std::function<void(int)>& on_leaf) {
    auto ctx = tree_.nodes[idx].pair;
    const int depth = tree_.nodes[idx].depth;
    if (depth == static_cast<int>(ctx->order.size())) {
      on_leaf(idx);
      return;
    }
    const auto [row, tau] = ctx->order[depth];
    const Filling cfg = tree_.nodes[idx].config;
    const std::vector<char> used = tree_.nodes[idx].used_rows;
    const int last = tree_.nodes[idx].last_applied;
    if (!used[row]) {
      Column swapped = swap_values(cfg.columns[0], tau);
      if (is_hhl_pair(swapped, ctx->right)) {
        Filling next = cfg;
        next.columns[0] = std::move(swapped);
        std::vector<char> u2 = used;
        u2[row] = 1;
        int child = add(idx, std::move(next), EdgeKind::Applied, tau, ctx, depth + 1, std::move(u2), depth);
        expand(child, on_leaf);
      }
    }
    int child = add(idx, cfg, EdgeKind::Skipped, tau, ctx, depth + 1, used, last);
    expand(child, on_leaf);
  }

  void finish() {
    for (int i = static_cast<int>(tree_.nodes.size()) - 1; i >= 0; --i) {
      TreeNode& nd = tree_.nodes[i];
      if (nd.final) {
        nd.coef = leaf_coefficient(nd.config, tree_.n, tree_.sign);
      } else {
        nd.coef = LaurentPoly();
        for (int c : nd.children) nd.coef += tree_.nodes[c].coef;
      }
    }
  }

 private:
  GenerationTree& tree_;
};

}  // namespace

GenerationTree generation_tree(const Column& left_hat, const Column& right, const std::vector<Column>& rest,
                               TreeOptions opts) {
  Filling whole = config_of(left_hat, right, rest);
  GenerationTree tree;
  tree.sign = opts.sign;
  tree.n = opts.n > 0 ? opts.n : max_entry(whole);
  if (!is_hhl(whole, tree.n)) throw std::invalid_argument("root configuration is not HHL");
  Builder b(tree);
  int root = b.start_stage(-1, make_context(left_hat, right, rest), EdgeKind::Root);
  b.expand(root, [&](int leaf) { tree.nodes[leaf].final = true; });
  b.finish();
  return tree;
}

GenerationTree preimage_tree(const Tableau& s, int n, TreeOptions opts) {
  if (!is_ssyt(s, n)) throw std::invalid_argument("input is not a semistandard tableau with entries in [n]");
  const Filling cols = tableau_to_filling(s);
  GenerationTree tree;
  tree.n = n;
  tree.sign = opts.sign;
  Builder b(tree);
  const int m = cols.num_columns();
  if (m == 0) {
    b.add(-1, Filling{}, EdgeKind::Root, {0, 0}, nullptr, 0, {}, -1);
    tree.nodes[0].final = true;
    b.finish();
    return tree;
  }
  auto grow = [&](auto&& self, int idx, int i) -> void {
    if (i < 0) {
      tree.nodes[idx].final = true;
      return;
    }
    const Filling part = tree.nodes[idx].config;
    Column hat = root_column(cols.columns[i], part.columns[0]);
    if (!is_hhl_pair(hat, part.columns[0])) throw std::logic_error("root column is not HHL with its right neighbour");
    std::vector<Column> rest(part.columns.begin() + 1, part.columns.end());
    int stage = b.start_stage(idx, make_context(hat, part.columns[0], std::move(rest)), EdgeKind::Extend);
    b.expand(stage, [&](int leaf) { self(self, leaf, i - 1); });
  };
  Column last = cols.columns[m - 1];
  if (last.size() == 1) {
    int root = b.add(-1, Filling{{last}}, EdgeKind::Root, {0, 0}, nullptr, 0, {}, -1);
    grow(grow, root, m - 2);
  } else {
    int root = b.add(-1, Filling{}, EdgeKind::Root, {0, 0}, nullptr, 0, {}, -1);
    std::sort(last.begin(), last.end());
    do {
      int child = b.add(root, Filling{{last}}, EdgeKind::Extend, {0, 0}, nullptr, 0, {}, -1);
      grow(grow, child, m - 2);
    } while (std::next_permutation(last.begin(), last.end()));
  }
  b.finish();
  return tree;
}

LaurentPoly node_sum(const PairContext& ctx, int depth, const Column& left, int n, SignConvention sign) {
  std::vector<std::vector<ValueTransposition>> rows;
  std::vector<int> row_ids;
  for (std::size_t k = depth; k < ctx.order.size(); ++k) {
    const auto& e = ctx.order[k];
    if (row_ids.empty() || row_ids.back() != e.row) {
      row_ids.push_back(e.row);
      rows.emplace_back();
    }
    rows.back().push_back(e.tau);
  }
  LaurentPoly total;
  auto rec = [&](auto&& self, std::size_t r, const Column& cur) -> void {
    if (r == rows.size()) {
      if (is_hhl_pair(cur, ctx.right)) total += leaf_coefficient(config_of(cur, ctx.right, ctx.rest), n, sign);
      return;
    }
    self(self, r + 1, cur);
    for (auto tau : rows[r]) self(self, r + 1, swap_values(cur, tau));
  };
  rec(rec, 0, left);
  return total;
}

// ---------------------------------------------------------------------------
// audits

void Audit::check(const std::string& name, bool ok, const std::function<std::string()>& describe) {
  Entry& e = entries_[name];
  ++e.checked;
  if (!ok) {
    if (e.failed == 0 && describe) e.first_failure = describe();
    ++e.failed;
  }
}

void Audit::merge(const Audit& other) {
  for (const auto& [name, o] : other.entries_) {
    Entry& e = entries_[name];
    if (e.failed == 0 && o.failed > 0) e.first_failure = o.first_failure;
    e.checked += o.checked;
    e.failed += o.failed;
  }
}

bool Audit::ok() const {
  for (const auto& [name, e] : entries_)
    if (e.failed) return false;
  return true;
}

namespace {

std::string describe_config(const Filling& f) {
  std::string s;
  for (std::size_t j = 0; j < f.columns.size(); ++j) {
    if (j) s += " | ";
    s += format_sequence(f.columns[j]);
  }
  return s;
}

bool legal_pivot_pivot_after(const PairContext& ctx, const Column& left, std::size_t from) {
  auto is_pivot = [&](int v) {
    return std::any_of(ctx.pivot_data.begin(), ctx.pivot_data.end(), [v](const Pivot& p) { return p.entry == v; });
  };
  for (std::size_t k = from; k < ctx.order.size(); ++k) {
    auto tau = ctx.order[k].tau;
    if (is_pivot(tau.p) && is_pivot(tau.q) && is_legal(tau, left, ctx.right)) return true;
  }
  return false;
}

void audit_stage(const GenerationTree& tree, int stage_root, const std::vector<std::optional<LaurentPoly>>& local,
                 Audit& audit) {
  const TreeNode& root = tree.nodes[stage_root];
  const PairContext& ctx = *root.pair;
  const int n = tree.n;
  const auto sign = tree.sign;
  const std::string where = describe_config(root.config);
  auto at = [&](const std::string& what) { return [what, where] { return what + " at root " + where; }; };

  std::vector<int> stage_nodes;
  std::vector<int> stack{stage_root};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    stage_nodes.push_back(i);
    if (tree.nodes[i].depth == static_cast<int>(ctx.order.size())) continue;
    for (int c : tree.nodes[i].children) stack.push_back(c);
  }
  std::sort(stage_nodes.begin(), stage_nodes.end());

  audit.check("root pair is HHL", is_hhl_pair(ctx.left_hat, ctx.right), at("root not HHL"));

  std::vector<Column> leaves;
  for (int i : stage_nodes)
    if (tree.nodes[i].depth == static_cast<int>(ctx.order.size())) leaves.push_back(tree.nodes[i].config.columns[0]);
  {
    std::vector<Column> expect;
    Column perm = ctx.left_hat;
    std::sort(perm.begin(), perm.end());
    do {
      if (is_hhl_pair(perm, ctx.right)) expect.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<Column> got = leaves;
    std::sort(got.begin(), got.end());
    audit.check("tree leaves unique and complete", got == expect, at("leaf set mismatch"));
  }

  const bool no = ctx.non_overlapping;
  std::set<int> pivot_entries;
  for (const auto& p : ctx.pivot_data) pivot_entries.insert(p.entry);

  {
    LaurentPoly want;
    if (no) {
      int l = column_sign_length(ctx.left_hat, n, sign);
      want = LaurentPoly::signed_t_binomial(l % 2 ? -1 : 1, inv(root.config) + pair_stats(ctx.left_hat, ctx.right).n_check,
                                            des(root.config));
    }
    audit.check("root sum closed form", *local[stage_root] == want, at("root sum " + local[stage_root]->str() + " != " + want.str()));
  }

  for (const Column& leaf : leaves) {
    bool pp = legal_pivot_pivot_after(ctx, leaf, 0);
    audit.check("legal pivot swap forces overlap", !(pp && no), at("leaf " + format_sequence(leaf)));
    if (!no) continue;
    std::map<int, int> sigma;
    for (std::size_t r = 0; r < leaf.size(); ++r) sigma[ctx.left_hat[r]] = leaf[r];
    std::set<int> seen;
    for (const auto& [start, img] : sigma) {
      if (seen.count(start) || img == start) continue;
      int pivots_on_cycle = 0;
      for (int v = start; !seen.count(v); v = sigma[v]) {
        seen.insert(v);
        pivots_on_cycle += static_cast<int>(pivot_entries.count(v));
      }
      audit.check("one pivot per cycle", pivots_on_cycle == 1, at("leaf " + format_sequence(leaf)));
    }
  }

  for (int i : stage_nodes) {
    const TreeNode& nd = tree.nodes[i];
    const Column& c = nd.config.columns[0];
    if (no) {
      for (const auto& row : ctx.beta.rows) {
        int legal = 0;
        for (auto tau : row) legal += is_legal(tau, c, ctx.right);
        audit.check("at most one legal switch per beta row", legal <= 1, at("node " + describe_config(nd.config)));
      }
    }
    if (nd.depth > 0) {
      const int q = ctx.order[nd.depth - 1].tau.q;
      const LaurentPoly brute = node_sum(ctx, nd.depth, c, n, sign);
      if (no) {
        int l = column_sign_length(c, n, sign);
        LaurentPoly want =
            LaurentPoly::signed_t_binomial(l % 2 ? -1 : 1, inv(nd.config) + m_stat(c, ctx.right, q), des(nd.config));
        audit.check("node sum closed form (tree)", *local[i] == want, at("node " + describe_config(nd.config)));
        audit.check("node sum closed form (brute force)", brute == want, at("node " + describe_config(nd.config)));
      } else if (legal_pivot_pivot_after(ctx, c, nd.depth)) {
        audit.check("cancelling node sums to zero (tree)", local[i]->is_zero(), at("node " + describe_config(nd.config)));
        audit.check("cancelling node sums to zero (brute force)", brute.is_zero(), at("node " + describe_config(nd.config)));
      }
    }
    if (nd.edge == EdgeKind::Applied && i != stage_root) {
      const TreeNode& par = tree.nodes[nd.parent];
      const Column& pc = par.config.columns[0];
      const auto [p, q] = nd.label;
      const std::string edge = format_transposition(nd.label) + " from " + describe_config(par.config);
      if (!pivot_entries.count(q))
        audit.check("des step on applied edge", des(nd.config) == des(par.config) + 1, at(edge));
      int rp = row_of(pc, p), rq = row_of(pc, q);
      if (rp < rq) {
        int inc = 0;
        for (int k = rp + 1; k < rq && k < static_cast<int>(ctx.right.size()); ++k)
          if (ctx.right[k] > p && ctx.right[k] < q) ++inc;
        audit.check("inv step on applied edge", inv(nd.config) == inv(par.config) + inc, at(edge));
        if (!legal_pivot_pivot_after(ctx, c, nd.depth))
          audit.check("inv plus m invariant",
                      inv(nd.config) + m_stat(c, ctx.right, q) == inv(par.config) + m_stat(pc, ctx.right, q), at(edge));
      }
    }
  }
}

}  // namespace

void audit_tree(const GenerationTree& tree, Audit& audit) {
  // sums of stage-leaf terms, stage by stage
  std::vector<std::optional<LaurentPoly>> local(tree.nodes.size());
  for (int i = static_cast<int>(tree.nodes.size()) - 1; i >= 0; --i) {
    const TreeNode& nd = tree.nodes[i];
    if (!nd.pair) continue;
    if (nd.depth == static_cast<int>(nd.pair->order.size())) {
      local[i] = leaf_coefficient(nd.config, tree.n, tree.sign);
    } else {
      LaurentPoly s;
      for (int c : nd.children) s += *local[c];
      local[i] = s;
    }
  }
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const TreeNode& nd = tree.nodes[i];
    if (nd.pair && (nd.edge == EdgeKind::Root || nd.edge == EdgeKind::Extend))
      audit_stage(tree, static_cast<int>(i), local, audit);
  }
}

// ---------------------------------------------------------------------------
// sort preimage and the strong compression identities

std::vector<Filling> sort_preimage(const Tableau& s, int n, Audit* audit) {
  if (!is_ssyt(s, n)) throw std::invalid_argument("input is not a semistandard tableau with entries in [n]");
  const Filling cols = tableau_to_filling(s);
  const int m = cols.num_columns();
  std::vector<Filling> out;
  if (m == 0) {
    out.push_back(Filling{});
    return out;
  }
  std::vector<Column> acc(m);
  auto rec = [&](auto&& self, int i) -> void {
    if (i < 0) {
      out.push_back(Filling{acc});
      return;
    }
    const Column& right = acc[i + 1];
    Column hat = root_column(cols.columns[i], right);
    std::vector<Column> lefts;
    if (audit) {
      std::vector<Column> rest(acc.begin() + i + 2, acc.end());
      GenerationTree t = generation_tree(hat, right, rest, {n, SignConvention::Plain});
      audit_tree(t, *audit);
      for (int leaf : t.leaves()) lefts.push_back(t.nodes[leaf].config.columns[0]);
    } else {
      lefts = generation_leaves(hat, right);
    }
    for (auto& c : lefts) {
      acc[i] = std::move(c);
      self(self, i - 1);
    }
  };
  Column last = cols.columns[m - 1];
  std::sort(last.begin(), last.end());
  do {
    acc[m - 1] = last;
    rec(rec, m - 2);
  } while (std::next_permutation(last.begin(), last.end()));
  if (audit) audit_root_filling(s, n, *audit);
  return out;
}

LaurentPoly sort_preimage_sum(const std::vector<Filling>& preimage, int n, SignConvention sign) {
  LaurentPoly total;
  for (const auto& f : preimage) total += leaf_coefficient(f, n, sign);
  return total;
}

LaurentPoly strong_compression_closed_form(const Tableau& s, int n) {
  if (!is_ssyt(s, n)) throw std::invalid_argument("input is not a semistandard tableau with entries in [n]");
  Filling root = root_filling(s);
  int e = 0, f = 0;
  for (int i = 2; i <= root.num_columns(); ++i) {
    if (!non_overlapping(root.columns[i - 2], root.columns[i - 1])) return LaurentPoly();
    PairStats st = column_stats(root, i);
    e += st.n_check + st.n_hat;
    f += st.p;
  }
  return neg_t_one_minus_t(e, f);
}

bool strong_compression_check(const Tableau& s, int n) {
  return sort_preimage_sum(sort_preimage(s, n), n, SignConvention::Plain) == strong_compression_closed_form(s, n);
}

bool root_is_disjoint(const Tableau& s) {
  Filling root = root_filling(s);
  for (int i = 1; i < root.num_columns(); ++i)
    if (!non_overlapping(root.columns[i - 1], root.columns[i])) return false;
  return true;
}

bool stats_equivalence_check(const Tableau& s, int n) {
  if (!is_strict(ssyt_to_gt(s, n))) throw std::invalid_argument("tableau is not strict");
  WalledSSYT w = place_walls(s, n);
  LaurentPoly walls = LaurentPoly::power(Base::OneMinusT, wall_stat_z(w)) * LaurentPoly::power(Base::NegT, wall_stat_l(w));
  Filling root = root_filling(s);
  int e = n - missing_entry(root, n), f = 0;
  for (int i = 2; i <= root.num_columns(); ++i) {
    PairStats st = column_stats(root, i);
    e += st.n_check + st.n_hat;
    f += st.p;
  }
  return walls == neg_t_one_minus_t(e, f);
}

void audit_root_filling(const Tableau& s, int n, Audit& audit) {
  const Filling root = root_filling(s);
  const Filling cols = tableau_to_filling(s);
  const int m = root.num_columns();
  const std::string where = describe_config(cols);
  for (int i = 2; i <= m; ++i) {
    const Column& l = root.columns[i - 2];
    const Column& r = root.columns[i - 1];
    PairStats st = column_stats(root, i);
    auto at = [&, i] { return "column " + std::to_string(i) + " of root of " + where; };
    if (non_overlapping(l, r)) audit.check("root pair inv equals upper count", inv_pair(l, r) == st.n_hat, at);
    audit.check("root pair des equals ascents", des_pair(l, r) == st.p, at);
    audit.check("root column length recursion", column_inversions(l) == column_inversions(r) + st.n_hat - st.n_check, at);
  }

  const auto pre = sort_preimage(s, n);
  if (m >= 1 && static_cast<int>(cols.columns[0].size()) == n - 1) {
    int a0 = missing_entry(cols, n);
    LaurentPoly plain = sort_preimage_sum(pre, n, SignConvention::Plain);
    LaurentPoly ext = sort_preimage_sum(pre, n, SignConvention::Extended);
    audit.check("sign conventions differ by (-1)^(n-a0)", ext == ((n - a0) % 2 ? -plain : plain),
                [where] { return "tableau " + where; });
  }

  // partial compression: the l leftmost columns summed, the rest fixed
  for (int l = 1; l < m; ++l) {
    std::map<std::vector<Column>, LaurentPoly> groups;
    for (const auto& f : pre) {
      std::vector<Column> suffix(f.columns.begin() + l, f.columns.end());
      groups[suffix] += leaf_coefficient(f, n, SignConvention::Plain);
    }
    for (const auto& [suffix, got] : groups) {
      std::vector<Column> part(l + 1);
      part[l] = suffix[0];
      bool disjoint = true;
      int e = 0, f = 0;
      for (int j = l - 1; j >= 0; --j) {
        part[j] = root_column(cols.columns[j], part[j + 1]);
        if (!non_overlapping(part[j], part[j + 1])) disjoint = false;
        PairStats st = pair_stats(part[j], part[j + 1]);
        e += st.n_check + st.n_hat;
        f += st.p;
      }
      LaurentPoly want;
      if (disjoint) want = neg_t_one_minus_t(e, f) * leaf_coefficient(Filling{suffix}, n, SignConvention::Plain);
      audit.check("partial compression", got == want,
                  [&, l] { return "l=" + std::to_string(l) + " suffix " + describe_config(Filling{suffix}) + " of " + where; });
    }
  }
}

// ---------------------------------------------------------------------------
// output

std::string filling_label(const Filling& f) {
  bool wide = max_entry(f) >= 10;
  std::string s;
  for (int r = 0; r < f.num_rows(); ++r) {
    if (r) s += ',';
    bool first = true;
    for (const auto& c : f.columns) {
      if (r >= static_cast<int>(c.size())) continue;
      if (wide && !first) s += ' ';
      s += std::to_string(c[r]);
      first = false;
    }
  }
  return s.empty() ? "()" : s;
}

namespace {

std::string edge_label(const TreeNode& nd) {
  switch (nd.edge) {
    case EdgeKind::Applied: return format_transposition(nd.label);
    case EdgeKind::Skipped: return "~" + format_transposition(nd.label);
    default: return "";
  }
}

int representative(const GenerationTree& tree, int i, bool collapse) {
  while (collapse && tree.nodes[i].children.size() == 1 && tree.nodes[tree.nodes[i].children[0]].edge == EdgeKind::Skipped)
    i = tree.nodes[i].children[0];
  return i;
}

}  // namespace

std::string tree_to_dot(const GenerationTree& tree, bool collapse_unary) {
  std::ostringstream os;
  os << "digraph generation_tree {\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  if (!tree.nodes.empty()) {
    std::vector<int> stack{representative(tree, 0, collapse_unary)};
    std::vector<std::string> edges;
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      const TreeNode& nd = tree.nodes[i];
      os << "  n" << i << " [label=\"" << filling_label(nd.config) << "\\n" << format_binomial_form(nd.coef) << "\"];\n";
      for (auto it = nd.children.rbegin(); it != nd.children.rend(); ++it) stack.push_back(representative(tree, *it, collapse_unary));
      for (int c : nd.children) {
        int target = representative(tree, c, collapse_unary);
        std::string e = "  n" + std::to_string(i) + " -> n" + std::to_string(target);
        std::string label = edge_label(tree.nodes[c]);
        if (!label.empty()) e += " [label=\"" + label + "\"]";
        edges.push_back(e + ";\n");
      }
    }
    for (const auto& e : edges) os << e;
  }
  os << "}\n";
  return os.str();
}

nlohmann::json tree_to_json(const GenerationTree& tree) {
  auto rec = [&](auto&& self, int i) -> nlohmann::json {
    const TreeNode& nd = tree.nodes[i];
    nlohmann::json j;
    j["columns"] = nd.config.columns;
    j["coef"] = nd.coef.to_json();
    j["coef_text"] = format_binomial_form(nd.coef);
    nlohmann::json kids = nlohmann::json::array();
    for (int c : nd.children) {
      const TreeNode& ch = tree.nodes[c];
      std::string kind = ch.edge == EdgeKind::Applied ? "applied" : ch.edge == EdgeKind::Skipped ? "skipped" : "extend";
      kids.push_back({{"edge", edge_label(ch)}, {"kind", kind}, {"applied", ch.edge == EdgeKind::Applied}, {"node", self(self, c)}});
    }
    j["children"] = kids;
    return j;
  };
  if (tree.nodes.empty()) return nlohmann::json::object();
  return rec(rec, 0);
}

}  // namespace whit
