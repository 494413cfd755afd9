#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "whittaker/compression.hpp"
#include "whittaker/weyl.hpp"

namespace whit {

struct VerifyOptions {
  int max_n = 4;
  int max_lambda1 = 3;
  std::uint64_t seed = 1;
  int length_samples = 10000;
  bool inject_fault = false;  // perturbs des on the HHL side; the sweep must then fail
  unsigned threads = 0;       // 0: hardware concurrency
};

struct Instance {
  Partition lambda;
  int n;
};

// sorted by (n, |lambda|, lambda)
std::vector<Instance> sweep_instances(int max_n, int max_lambda1);

// "identity", "reversed" or "none": how the HHL variables map onto the GT ones at n = 2
std::string detect_convention();

struct VerifyReport {
  std::string convention;
  std::size_t instances = 0;
  Audit audit;
  bool ok() const { return convention != "none" && audit.ok(); }
  nlohmann::json first_counterexample() const;
  std::string summary() const;
};

// Runs every identity over the sweep.
VerifyReport run_verify(const VerifyOptions& opts);

// Individual sweeps, exposed for the tests.
void verify_instance(const Instance& inst, const std::string& convention, bool inject_fault, Audit& audit);
void verify_chain_sums(int n, Audit& audit);
void verify_length_formula(const std::vector<Instance>& instances, int samples, std::uint64_t seed, Audit& audit);

}  // namespace whit
