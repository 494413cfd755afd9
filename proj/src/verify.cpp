#include "whittaker/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <iomanip>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "whittaker/alcove.hpp"
#include "whittaker/fillings.hpp"
#include "whittaker/tokuyama.hpp"

namespace whit {

namespace {

std::string tag(const Instance& inst) {
  return "lambda=(" + format_sequence(inst.lambda) + ") n=" + std::to_string(inst.n);
}

std::string one_line(const Filling& f) {
  std::string s;
  for (const auto& c : f.columns) s += (s.empty() ? "" : "|") + format_sequence(c, " ");
  return s;
}

std::string one_line(const Tableau& t) {
  std::string s;
  for (const auto& r : t.rows) s += (s.empty() ? "" : "/") + format_sequence(r, " ");
  return s;
}

std::vector<int> reversal(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
  return p;
}

LaurentPoly apply_convention(const LaurentPoly& hhl, const std::string& convention) {
  if (convention == "reversed") return hhl.permute_variables(reversal(hhl.rank()));
  return hhl;
}

// HHL term, optionally with des raised by one
LaurentPoly hhl_term(const Filling& f, int n, bool fault) {
  LaurentPoly c = hhl_coefficient(f, n);
  if (fault) c *= LaurentPoly::power(Base::OneMinusT, 1);
  return c;
}

void partitions_bounded(int parts, int max_part, const std::function<void(const Partition&)>& visit) {
  Partition p;
  auto rec = [&](auto&& self, int bound) -> void {
    visit(p);
    if (static_cast<int>(p.size()) == parts) return;
    for (int v = 1; v <= bound; ++v) {
      p.push_back(v);
      self(self, v);
      p.pop_back();
    }
  };
  rec(rec, max_part);
}

void ordered_selections(int k, int n, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> sel;
  std::vector<char> used(n + 1, 0);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(sel.size()) == k) {
      visit(sel);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      sel.push_back(v);
      self(self);
      sel.pop_back();
      used[v] = 0;
    }
  };
  rec(rec);
}

// Runs tasks on a pool; each writes its own Audit, merged afterwards in task order.
Audit run_tasks(const std::vector<std::function<void(Audit&)>>& tasks, unsigned threads) {
  std::vector<Audit> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < tasks.size();) {
      try {
        tasks[i](results[i]);
      } catch (const std::exception& e) {
        std::string what = e.what();
        results[i].check("no exceptions", false, [what] { return what; });
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  Audit merged;
  for (const auto& r : results) merged.merge(r);
  return merged;
}

}  // namespace

std::vector<Instance> sweep_instances(int max_n, int max_lambda1) {
  std::vector<Instance> out;
  for (int n = 2; n <= max_n; ++n)
    partitions_bounded(n - 1, max_lambda1, [&](const Partition& p) { out.push_back({p, n}); });
  std::sort(out.begin(), out.end(), [](const Instance& a, const Instance& b) {
    int sa = std::accumulate(a.lambda.begin(), a.lambda.end(), 0);
    int sb = std::accumulate(b.lambda.begin(), b.lambda.end(), 0);
    return std::tie(a.n, sa, a.lambda) < std::tie(b.n, sb, b.lambda);
  });
  return out;
}

std::string detect_convention() {
  bool identity = true, reversed = true;
  for (const Partition& lam : {Partition{}, Partition{1}, Partition{2}}) {
    LaurentPoly tok = tokuyama_sum(lam, 2);
    LaurentPoly hhl = hhl_sum(lam, 2);
    identity = identity && tok == hhl;
    reversed = reversed && tok == hhl.permute_variables(reversal(2));
  }
  if (identity) return "identity";
  if (reversed) return "reversed";
  return "none";
}

void verify_instance(const Instance& inst, const std::string& convention, bool inject_fault, Audit& audit) {
  const int n = inst.n;
  const Partition& lam = inst.lambda;
  const std::string where = tag(inst);

  LaurentPoly tok = tokuyama_sum(lam, n);
  LaurentPoly hhl = hhl_sum(lam, n);
  LaurentPoly ry = ramyip_sum(lam, n);
  audit.check("triple agreement", tok == apply_convention(hhl, convention) && hhl == ry, [&] {
    return where + ": tokuyama " + tok.str() + "; hhl " + hhl.str() + "; ramyip " + ry.str();
  });

  // alcove walks against HHL fillings
  const RootChain chain = build_chain(lam, n);
  std::size_t admissible = 0;
  for_each_admissible(chain, [&](const AdmissiblePair&) { ++admissible; });
  const std::vector<Filling> fillings = enumerate_fillings(lam, n);
  std::size_t covered = 0;
  for (const Filling& f : fillings) {
    const auto pre = fill_preimage(f, chain);
    covered += pre.size();
    LaurentPoly sum;
    bool maps_back = true;
    for (const auto& p : pre) {
      sum += ramyip_coefficient(perm_length(p.u), p.end_length, static_cast<int>(p.K.size()));
      maps_back = maps_back && fill_map(p, chain) == f;
    }
    LaurentPoly want = hhl_term(f, n, inject_fault);
    audit.check("weak compression", sum == want,
                [&] { return where + " filling " + one_line(f) + ": got " + sum.str() + ", want " + want.str(); });
    audit.check("fill map inverts preimage", maps_back, [&] { return where + " filling " + one_line(f); });
    ChainSumSides full = full_chain_sum(f, chain);
    audit.check("full chain sum", full.holds(), [&] {
      return where + " filling " + one_line(f) + ": " + full.lhs.str() + " vs " + full.rhs.str();
    });
  }
  audit.check("fill preimages partition admissible pairs", covered == admissible, [&] {
    return where + ": " + std::to_string(covered) + " of " + std::to_string(admissible);
  });

  // sort map over every SSYT of shape lambda + rho
  const Partition shape = lambda_plus_rho(lam, n);
  std::set<Filling> seen;
  bool sorted_ok = true;
  std::string bad;
  for_each_gt(gt_top_row(lam, n), [&](const GTPattern& gt) {
    const Tableau s = gt_to_ssyt(gt);
    if (tableau_shape(s) != shape) return;
    const std::string at = where + " tableau " + one_line(s);
    const auto pre = sort_preimage(s, n, &audit);

    LaurentPoly got = sort_preimage_sum(pre, n, SignConvention::Plain);
    LaurentPoly closed = strong_compression_closed_form(s, n);
    audit.check("strong compression", got == closed,
                [&] { return at + ": got " + got.str() + ", want " + closed.str(); });

    LaurentPoly fiber;
    for (const Filling& f : pre) {
      if (sorted_ok && (!is_hhl(f, n) || sort_columns(f) != s || seen.count(f))) {
        sorted_ok = false;
        bad = at + " filling " + one_line(f);
      }
      seen.insert(f);
      fiber += hhl_term(f, n, inject_fault);
    }

    const WalledSSYT w = place_walls(s, n);
    const bool strict = is_strict(gt);
    const int wn = wall_stat_n(w);
    audit.check("wall n detects non-strict", (wn > 0) == !strict, [&] { return at; });
    audit.check("non-strict iff overlapping root", (wn > 0) == !root_is_disjoint(s), [&] { return at; });
    LaurentPoly product;
    if (strict) {
      const GtStats gs = gt_stats(gt);
      const int wl = wall_stat_l(w), wz = wall_stat_z(w);
      audit.check("wall l equals right-leaning", wl == gs.right, [&] { return at; });
      audit.check("wall z equals special", wz == gs.special, [&] { return at; });
      audit.check("wall statistics match root statistics", stats_equivalence_check(s, n), [&] { return at; });
      product = LaurentPoly::power(Base::OneMinusT, wz) * LaurentPoly::power(Base::NegT, wl);
    }
    audit.check("HHL fiber equals wall product", fiber == product,
                [&] { return at + ": got " + fiber.str() + ", want " + product.str(); });
  });
  audit.check("sort preimages partition fillings", sorted_ok && seen.size() == fillings.size(), [&] {
    return bad.empty() ? where + ": " + std::to_string(seen.size()) + " of " + std::to_string(fillings.size()) : bad;
  });
}

void verify_chain_sums(int n, Audit& audit) {
  std::vector<int> w = identity_permutation(n);
  do {
    const std::string ws = "w=" + format_sequence(w);
    const Permutation winv = inverse(w);
    for (int b = w[0]; b <= n; ++b) {
      const int top = b == w[0] ? n - 1 : winv[b - 1] - 2;
      for (int p = 0; p <= top; ++p) {
        ChainSumSides s = entry_chain_sum(w, b, p);
        audit.check("entry chain sum", s.holds(), [&] {
          return ws + " b=" + std::to_string(b) + " p=" + std::to_string(p) + ": " + s.lhs.str() + " vs " + s.rhs.str();
        });
      }
    }
    for (int k = 1; k < n; ++k) {
      std::vector<int> left(w.begin(), w.begin() + k);
      ordered_selections(k, n, [&](const std::vector<int>& right) {
        if (!is_hhl(Filling{{left, right}}, n)) return;
        ChainSumSides s = two_column_chain_sum(w, right);
        audit.check("two-column chain sum", s.holds(), [&] {
          return ws + " right=" + format_sequence(right) + ": " + s.lhs.str() + " vs " + s.rhs.str();
        });
      });
    }
  } while (std::next_permutation(w.begin(), w.end()));
}

void verify_length_formula(const std::vector<Instance>& instances, int samples, std::uint64_t seed, Audit& audit) {
  if (instances.empty() || samples <= 0) return;
  std::vector<RootChain> chains;
  for (const auto& inst : instances) chains.push_back(build_chain(inst.lambda, inst.n));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, chains.size() - 1);
  std::bernoulli_distribution coin(0.5);
  for (int s = 0; s < samples; ++s) {
    const RootChain& chain = chains[pick(rng)];
    Permutation u = identity_permutation(chain.n);
    std::shuffle(u.begin(), u.end(), rng);
    Permutation end = u;
    std::vector<Transposition> T;
    for (const Transposition& r : chain.entries)
      if (bruhat_increases(end, r) && coin(rng)) {
        end = apply_transposition(end, r);
        T.push_back(r);
      }
    const int lhs = perm_length(end);
    const int rhs = perm_length(u) + static_cast<int>(T.size()) + 2 * count_N(u, T);
    audit.check("length formula", lhs == rhs, [&] {
      return "u=" + format_sequence(u) + " steps=" + std::to_string(T.size()) + ": " + std::to_string(lhs) +
             " vs " + std::to_string(rhs);
    });
  }
}

VerifyReport run_verify(const VerifyOptions& opts) {
  VerifyReport report;
  report.convention = detect_convention();
  const auto instances = sweep_instances(opts.max_n, opts.max_lambda1);
  report.instances = instances.size();

  std::vector<std::function<void(Audit&)>> tasks;
  for (const auto& inst : instances)
    tasks.push_back([&, inst](Audit& a) { verify_instance(inst, report.convention, opts.inject_fault, a); });
  for (int n = 2; n <= opts.max_n; ++n) tasks.push_back([n](Audit& a) { verify_chain_sums(n, a); });
  tasks.push_back([&](Audit& a) { verify_length_formula(instances, opts.length_samples, opts.seed, a); });
  report.audit = run_tasks(tasks, opts.threads);
  return report;
}

nlohmann::json VerifyReport::first_counterexample() const {
  if (convention == "none") return {{"check", "convention"}, {"detail", "no variable map matches at n=2"}};
  for (const auto& [name, e] : audit.entries())
    if (e.failed) return {{"check", name}, {"failed", e.failed}, {"checked", e.checked}, {"detail", e.first_failure}};
  return nullptr;
}

std::string VerifyReport::summary() const {
  std::ostringstream os;
  os << "convention: " << convention << "\n";
  os << "instances: " << instances << "\n";
  for (const auto& [name, e] : audit.entries())
    os << "  " << std::left << std::setw(44) << name << std::right << std::setw(10) << e.checked << " checked  "
       << (e.failed ? std::to_string(e.failed) + " FAILED" : std::string("ok")) << "\n";
  if (!ok()) os << "counterexample: " << first_counterexample().dump() << "\n";
  os << (ok() ? "all checks passed" : "verification FAILED") << "\n";
  return os.str();
}

}  // namespace whit
