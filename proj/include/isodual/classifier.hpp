#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "isodual/duality.hpp"
#include "isodual/ideal.hpp"
#include "isodual/poset.hpp"

namespace isodual {

enum class Clause {
  kSomeChain,
  kBothRooted,
  kBothCoRooted,
  kPConnectedQSumOfChains,
  kQConnectedPSumOfChains,
  kFailsDisconnected,
  kFailsRootedMismatch,
  kFailsCoRootedMismatch,
  kFailsGeneral,
};

std::string to_string(Clause clause);

/// Triple (a, b, c): a and b incomparable, c strictly above both
/// (below both for the co-rooted variant).
struct Config3 {
  int a = 0;
  int b = 0;
  int c = 0;
  bool operator==(const Config3&) const = default;
};

// Lexicographically first violating triple, or absent when none exists
// (absence is exactly rootedness, resp. co-rootedness).
std::optional<Config3> find_non_rooted_config(const Poset& q);
std::optional<Config3> find_non_co_rooted_config(const Poset& q);

enum class WitnessKind { kHighPrime, kDisconnectedMonomial };

/// Certificate that the dual identity breaks for a pair.
/// kHighPrime: `cover` is a verified minimal cover of the pair's ideal
/// with more cells than |Q|. kDisconnectedMonomial: `monomial` is a
/// generator the paired `cover` misses entirely.
struct Witness {
  WitnessKind kind = WitnessKind::kHighPrime;
  Grid grid;
  Mask cover = 0;
  std::optional<Mask> monomial;
  std::vector<int> config;  // p-side then q-side defining elements
};

struct DualityVerdict {
  bool holds = false;
  Clause clause = Clause::kFailsGeneral;
  std::optional<Witness> witness;
};

/// The high cover: rows p1, p2 over the up-sets of q1, q2, row p3 over
/// the columns both up-sets miss. Needs p1, p2 incomparable with
/// p3 < p1, p2 and q1, q2 incomparable with q1, q2 < q3; rejects
/// otherwise, naming the failed relation. The result is checked against
/// the pair's ideal: it covers, is minimal, and has |Q| +
/// |up(q1) ∩ up(q2)| > |Q| cells.
Mask build_high_prime(const Poset& p, const Poset& q, Config3 p_config, Config3 q_config,
                      std::uint64_t hom_cap = kDefaultHomCap);

/// For P and Q both direct sums: the cover sending one column block to
/// row p1 and the rest to p2, paired with the generator it misses.
/// Representatives are the lowest indices of the first two components.
std::pair<Mask, Mask> build_disconnected_witness(const Poset& p, const Poset& q);

/// Classification predicate. Never enumerates maps or covers except to
/// verify a failure witness; a cap hit there drops the witness, not the
/// verdict.
DualityVerdict predict_duality(const Poset& p, const Poset& q,
                               std::uint64_t hom_cap = kDefaultHomCap);

struct PairReport {
  Poset p;
  Poset q;
  DualityVerdict verdict;
  bool computed = false;
  bool agree = false;
  bool witness_verified = false;
};

/// Runs the predicate and the direct computation side by side and
/// re-verifies any witness independently.
PairReport verify_pair(const Poset& p, const Poset& q,
                       std::uint64_t hom_cap = kDefaultHomCap,
                       std::uint64_t cover_cap = kDefaultCoverCap);

}  // namespace isodual
