#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace schreier {

// Thrown when a computation would exceed a configured cap. The message names
// the cap and, where it can be computed cheaply, the size that was requested.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// All knobs that bound exhaustive searches live here so a single --caps file
// controls every engine.
struct Caps {
  int max_support = 4096;             // explicit vector support size
  int max_enumeration = 22;           // N for power-set sweeps
  int max_bruteforce_universe = 16;   // universe for disjoint-partition tables
  long long max_block_elements = 250000;  // elements materialized per average
  int max_cnf_depth = 8;              // exponent nesting in parsed ordinals
  std::uint64_t dfs_node_budget = 80000000;  // norm search nodes per call
  int lp_max_support = 4096;          // variables in one exact LP
  std::uint64_t default_seed = 0x5eed5eedULL;
};

Caps& caps();

}  // namespace schreier
