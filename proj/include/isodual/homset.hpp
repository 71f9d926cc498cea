#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "isodual/poset.hpp"

namespace isodual {

inline constexpr std::uint64_t kDefaultHomCap = 1'000'000;

/// An order-preserving map between two posets. Holds its own copies of
/// source and target; construction rejects non-isotone images.
class IsotoneMap {
 public:
  IsotoneMap(Poset source, Poset target, std::vector<int> image);

  const Poset& source() const { return source_; }
  const Poset& target() const { return target_; }
  const std::vector<int>& image() const { return image_; }
  int operator()(int p) const { return image_[static_cast<std::size_t>(p)]; }

  bool operator==(const IsotoneMap& other) const {
    return source_ == other.source_ && target_ == other.target_ && image_ == other.image_;
  }

 private:
  Poset source_;
  Poset target_;
  std::vector<int> image_;
};

// True iff image is order preserving P -> Q; cover pairs of P suffice.
// Length or index mismatches are errors, not a false result.
bool is_isotone(const Poset& p, const Poset& q, std::span<const int> image);

// All isotone maps P -> Q in lexicographic image order. The search space
// |Q|^|P| is capped before enumeration starts.
std::vector<IsotoneMap> enumerate_hom(const Poset& p, const Poset& q,
                                      std::uint64_t cap = kDefaultHomCap);

std::uint64_t count_hom(const Poset& p, const Poset& q, std::uint64_t cap = kDefaultHomCap);

// {p : phi(p) = p}; requires source == target.
Mask fixpoints(const IsotoneMap& phi);

// g after f; requires f.target == g.source.
IsotoneMap compose(const IsotoneMap& f, const IsotoneMap& g);

}  // namespace isodual
