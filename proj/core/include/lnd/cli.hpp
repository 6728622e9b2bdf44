#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lnd/rat.hpp"
#include "lnd/session.hpp"

namespace lnd {
namespace cli {

struct RunOptions {
  unsigned max_degree = 8;
  unsigned max_power = 64;
  unsigned max_iter = 64;
  Rat t = Rat(1);                       // exp parameter
  std::optional<Rat> alpha;             // fiber commands
  std::optional<std::string> f_name;    // named poly or variable to use as f
  std::optional<long> index;            // preslice index (1-based)
  std::vector<std::string> span;        // bracket: span basis override
  std::vector<std::string> gens;        // descent: slice generator polys
  bool oracle = false;                  // fibers: run the dependence oracle
  std::string in_path;                  // echoed into the report
};

/// Command result: `machine` is a deterministic JSON document containing
/// every number of the human rendering; exit codes are 0 = success,
/// 1 = domain error, 2 = inconclusive (bound exhausted), 3 = parse/usage.
struct Report {
  int exit_code = 0;
  std::string machine;  // JSON
  std::string human;
};

/// Known commands: check, bracket, span, exp, log, compose, invariants,
/// kernel, preslice, fibers, descent, rectify, certify, fiber-rectify,
/// mates. Domain/inconclusive/usage failures are encoded in the report.
Report run_command(const std::string& command,
                   const std::vector<std::string>& names,
                   const RunOptions& options, const SessionFile& session);

}  // namespace cli
}  // namespace lnd
