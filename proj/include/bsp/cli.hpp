#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "bsp/verify.hpp"

namespace bsp {

// One CLI invocation.  `gamma` is a bitstring ('1' = reflection) or one of
// the keywords full / trivial / all.
struct JobSpec {
  char type = 0;
  int rank = 0;
  Word word;
  std::string gamma = "full";
  std::string format = "text";  // text | json
  std::vector<std::string> checks;
  std::optional<unsigned long> mod;
};

inline const std::vector<std::string> kCheckNames = {
    "engines", "oracle",       "jacobi", "homogeneity",        "ore",
    "cgl",     "nilpotent",    "logcanonical", "mod2",         "basis-independence"};

// Runs the job, writing the report to `out` and diagnostics to `err`.
// Returns 0 on success, 1 when a requested check fails, 2 on usage errors.
int run_job(const JobSpec& job, std::ostream& out, std::ostream& err);

// Parses "A2" style type names.
bool parse_type(const std::string& s, char& type, int& rank);

// Worker count for multi-chart sweeps, from BSPOISSON_WORKERS (defaults to
// the hardware concurrency).
int worker_count();

}  // namespace bsp
