#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "isodual/error.hpp"

namespace isodual {

// Small-set representation: bit i of a Mask marks element i.
// Everything in this library lives on at most 64 elements (or grid cells).
using Mask = std::uint64_t;

std::vector<int> elements_of(Mask m);
Mask mask_of(const std::vector<int>& elems);

inline constexpr int kMaxElements = 64;
inline constexpr int kDefaultCanonicalBound = 8;
inline constexpr int kDefaultGenerateBound = 5;

/// A finite poset on elements 0..n-1. Immutable after construction.
///
/// Order data is kept as per-element up/down reachability masks, so leq()
/// is a single bit test. covers() is the transitive reduction of leq,
/// sorted lexicographically; redundant pairs passed to from_covers are
/// absorbed by the closure/reduction round trip, cycles are rejected.
class Poset {
 public:
  static Poset from_covers(int n, const std::vector<std::pair<int, int>>& covers);

  int size() const { return n_; }

  bool leq(int i, int j) const {
    check_index(i);
    check_index(j);
    return (up_[static_cast<std::size_t>(i)] >> j) & 1u;
  }
  bool less(int i, int j) const { return i != j && leq(i, j); }
  bool comparable(int i, int j) const { return leq(i, j) || leq(j, i); }

  // {j : i <= j} and {j : j <= i}, both including i itself.
  Mask up_set(int i) const {
    check_index(i);
    return up_[static_cast<std::size_t>(i)];
  }
  Mask down_set(int i) const {
    check_index(i);
    return down_[static_cast<std::size_t>(i)];
  }

  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  Mask minimal_elements() const;
  Mask maximal_elements() const;
  bool has_unique_min_or_max() const;

  bool operator==(const Poset& other) const {
    return n_ == other.n_ && covers_ == other.covers_;
  }

 private:
  Poset() = default;
  void check_index(int i) const {
    if (i < 0 || i >= n_) throw Error("element index out of range");
  }

  int n_ = 0;
  std::vector<Mask> up_;
  std::vector<Mask> down_;
  std::vector<std::pair<int, int>> covers_;
};

// Structural predicates from the classification vocabulary.
bool is_connected(const Poset& p);
bool is_rooted(const Poset& p);     // no incomparable pair has a common strict upper bound
bool is_co_rooted(const Poset& p);  // dual: no common strict lower bound
bool is_chain(const Poset& p);
bool is_sum_of_chains(const Poset& p);

/// Order reversal (all covers flipped).
Poset opposite(const Poset& p);

/// One connected component of the comparability graph, re-indexed.
/// elements[k] is the original index of the component's element k.
struct Component {
  Poset poset;
  std::vector<int> elements;
};

// Components ordered by smallest original element; singleton list iff connected.
std::vector<Component> decompose_direct_sum(const Poset& p);

/// Isomorphism-invariant total-order key: equal keys iff isomorphic posets.
struct CanonicalKey {
  std::vector<std::uint8_t> bytes;
  auto operator<=>(const CanonicalKey&) const = default;
};

// Brute-force minimization over all element permutations; rejects n > max_n.
CanonicalKey canonical_key(const Poset& p, int max_n = kDefaultCanonicalBound);

// One representative per isomorphism class of n-element posets, in canonical
// key order; each representative is in its canonical labeling.
std::vector<Poset> generate_posets(int n, int max_n = kDefaultGenerateBound);

}  // namespace isodual
