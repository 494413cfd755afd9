#include <CLI11.hpp>

#include <iostream>
#include <stdexcept>
#include <string>

#include "whittaker/alcove.hpp"
#include "whittaker/compression.hpp"
#include "whittaker/fillings.hpp"
#include "whittaker/textio.hpp"
#include "whittaker/tokuyama.hpp"
#include "whittaker/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kIdentityFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int max_entry(const whit::Tableau& s) {
  int m = 0;
  for (const auto& r : s.rows)
    for (int v : r) m = std::max(m, v);
  return m;
}

int cmd_eval(const std::string& lambda_text, int n, const std::string& formula, const std::string& format) {
  whit::Partition lambda;
  try {
    lambda = whit::parse_partition(lambda_text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (n < 1) throw UsageError("--n must be at least 1");
  if (static_cast<int>(lambda.size()) > n - 1) throw UsageError("lambda has more than n-1 nonzero parts");
  whit::LaurentPoly p;
  if (formula == "tokuyama")
    p = whit::tokuyama_sum(lambda, n);
  else if (formula == "hhl")
    p = whit::hhl_sum(lambda, n);
  else
    p = whit::ramyip_sum(lambda, n);
  std::cout << (format == "json" ? p.dump() : p.str()) << "\n";
  return kOk;
}

int cmd_preimage(const std::string& path, int n) {
  whit::Tableau s = whit::parse_tableau(whit::read_text_file(path));
  if (n == 0) n = static_cast<int>(s.rows.size()) + 1;
  if (!whit::is_ssyt(s, n)) throw UsageError("not a semistandard tableau with entries in [" + std::to_string(n) + "]");
  const auto pre = whit::sort_preimage(s, n);
  for (const auto& f : pre)
    std::cout << whit::filling_label(f) << "  "
              << whit::format_binomial_form(whit::leaf_coefficient(f, n, whit::SignConvention::Plain)) << "\n";
  whit::LaurentPoly sum = whit::sort_preimage_sum(pre, n, whit::SignConvention::Plain);
  whit::LaurentPoly closed = whit::strong_compression_closed_form(s, n);
  std::cout << "fillings: " << pre.size() << "\n";
  std::cout << "sum: " << whit::format_binomial_form(sum) << "\n";
  std::cout << "closed form: " << whit::format_binomial_form(closed) << "\n";
  if (sum != closed) {
    std::cout << "MISMATCH\n";
    return kIdentityFailure;
  }
  return kOk;
}

int cmd_tree(const std::string& path, bool ssyt, int n, const std::string& format, bool collapse) {
  const std::string text = whit::read_text_file(path);
  whit::GenerationTree tree;
  if (ssyt) {
    whit::Tableau s = whit::parse_tableau(text);
    if (n == 0) n = max_entry(s);
    tree = whit::preimage_tree(s, n, {n, whit::SignConvention::Extended});
  } else {
    whit::Filling f = whit::parse_filling(text);
    if (f.num_columns() < 2) throw UsageError("need at least two columns");
    whit::Column hat = whit::root_column(f.columns[0], f.columns[1]);
    std::vector<whit::Column> rest(f.columns.begin() + 2, f.columns.end());
    tree = whit::generation_tree(hat, f.columns[1], rest, {n, whit::SignConvention::Extended});
  }
  if (format == "json")
    std::cout << whit::tree_to_json(tree).dump(2) << "\n";
  else
    std::cout << whit::tree_to_dot(tree, collapse);
  return kOk;
}

int cmd_verify(const whit::VerifyOptions& opts) {
  if (opts.max_n < 2 || opts.max_lambda1 < 0) throw UsageError("bounds must satisfy max-n >= 2, max-lambda1 >= 0");
  whit::VerifyReport report = whit::run_verify(opts);
  std::cout << report.summary();
  return report.ok() ? kOk : kIdentityFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spherical Whittaker functions of type A: three formulas and the compressions between them"};
  app.require_subcommand(1);

  std::string lambda_text, formula = "tokuyama", format = "pretty";
  int n = 0;
  auto* eval = app.add_subcommand("eval", "Evaluate one formula for (lambda, n)");
  eval->add_option("--lambda", lambda_text, "Comma-separated partition; empty for zero")->expected(0, 1);
  eval->add_option("--n", n, "Rank")->required();
  eval->add_option("--formula", formula)->check(CLI::IsMember({"ramyip", "hhl", "tokuyama"}));
  eval->add_option("--format", format)->check(CLI::IsMember({"pretty", "json"}));

  std::string path;
  auto* preimage = app.add_subcommand("preimage", "List the sort preimage of an SSYT with its coefficients");
  preimage->add_option("file", path, "SSYT, one row per line")->required();
  preimage->add_option("--n", n, "Entries range over [n]; default rows + 1");

  bool from_ssyt = false, collapse = false;
  std::string tree_format = "dot";
  auto* tree = app.add_subcommand("tree", "Print a generation tree");
  tree->add_option("file", path, "Two or more columns given as rows, or an SSYT with --ssyt")->required();
  tree->add_flag("--ssyt", from_ssyt, "Input is an SSYT; print its whole sort preimage tree");
  tree->add_option("--n", n, "Used for signs; default largest entry");
  tree->add_option("--format", tree_format)->check(CLI::IsMember({"dot", "json"}));
  tree->add_flag("--collapse-unary", collapse, "Merge nodes whose only child is a skipped edge");

  whit::VerifyOptions vopts;
  auto* verify = app.add_subcommand("verify", "Run every identity over the bounded sweep");
  verify->add_option("--max-n", vopts.max_n);
  verify->add_option("--max-lambda1", vopts.max_lambda1);
  verify->add_option("--seed", vopts.seed, "Seed for the sampled length checks");
  verify->add_option("--samples", vopts.length_samples, "Number of sampled length checks");
  verify->add_option("--threads", vopts.threads, "0 for all cores");
  verify->add_flag("--inject-fault", vopts.inject_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*eval) return cmd_eval(lambda_text, n, formula, format);
    if (*preimage) return cmd_preimage(path, n);
    if (*tree) return cmd_tree(path, from_ssyt, n, tree_format, collapse);
    if (*verify) return cmd_verify(vopts);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kIdentityFailure;
  }
  return kUsage;
}
