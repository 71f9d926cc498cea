#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "isodual/classifier.hpp"
#include "isodual/json_io.hpp"

namespace isodual {

struct SweepConfig {
  int min_n = 1;  // sweep covers sizes min_n..max_n; equal bounds = one size
  int max_n = 4;
  std::uint64_t hom_cap = kDefaultHomCap;
  std::uint64_t cover_cap = kDefaultCoverCap;
  int workers = 1;
};

struct SweepReport {
  std::uint64_t pairs_checked = 0;
  std::uint64_t agreements = 0;
  std::vector<PairReport> disagreements;
  std::map<std::string, std::uint64_t> clause_tallies;
  std::uint64_t witnesses_emitted = 0;
  std::uint64_t witnesses_verified = 0;
  double wall_seconds = 0.0;
  std::vector<PairReport> reports;  // every pair in deterministic order
};

/// Verifies every ordered pair of isomorphism-class representatives
/// whose sizes lie in [min_n, max_n]. Pair order, and so the report,
/// is deterministic regardless of worker count.
SweepReport run_sweep(const SweepConfig& config);

Json to_json(const SweepReport& report);
std::string to_csv(const SweepReport& report);

}  // namespace isodual
