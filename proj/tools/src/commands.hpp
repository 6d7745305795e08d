#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "inputs.hpp"
#include "report.hpp"

namespace dyncx::cli {

struct EvalArgs {
  std::string input;
  StreamSource stream;
  std::string algo = "counters";
  bool check = false;
};

struct VerifyArgs {
  std::string problem;
  std::string input;
  StreamSource stream;
  std::string prover = "honest";
  std::size_t k = 0;  // 0: take it from the graph file
  std::string oracle = "rebuild";
};

struct ReduceArgs {
  std::string target;
  std::string input;
  StreamSource stream;
};

struct SatArgs {
  std::string input;
  std::string solver = "counters";
};

struct CompleteArgs {
  std::string input;
  StreamSource stream;
  std::string oracle = "first-dnf";
};

struct BenchArgs {
  std::vector<std::size_t> sizes{64, 256, 1024, 4096};
  std::size_t updates = 2000;
  std::size_t width = 3;
};

Report cmd_eval(const EvalArgs& args, const Options& opt);
Report cmd_verify(const VerifyArgs& args, const Options& opt);
Report cmd_reduce(const ReduceArgs& args, const Options& opt);
Report cmd_sat(const SatArgs& args, const Options& opt);
Report cmd_complete(const CompleteArgs& args, const Options& opt);
Report cmd_bench(const BenchArgs& args, const Options& opt);

}  // namespace dyncx::cli
