#pragma once

#include <cstdint>
#include <vector>

#include "isodual/ideal.hpp"

namespace isodual {

inline constexpr std::uint64_t kDefaultCoverCap = 100'000;

bool is_cover(const Ideal& ideal, Mask candidate);
bool is_minimal_cover(const Ideal& ideal, Mask candidate);

/// All inclusion-minimal sets of cells meeting every generator, built
/// incrementally one generator at a time. Output in canonical lex order.
/// Throws CapExceeded when an intermediate family outgrows `cap`.
std::vector<Mask> minimal_covers(const Ideal& ideal, std::uint64_t cap = kDefaultCoverCap);

/// Alexander dual: generators are exactly the minimal covers.
Ideal alexander_dual(const Ideal& ideal, std::uint64_t cap = kDefaultCoverCap);

/// Height = size of the smallest cover. Computed without full enumeration.
int ideal_height(const Ideal& ideal, std::uint64_t cap = kDefaultCoverCap);

// Support of the prime 𝔭 attached to a map psi in Hom(Q,P):
// the column cells (psi(q), q) on the |P| x |Q| grid.
Mask prime_of_map(const Grid& grid, const IsotoneMap& psi);

/// Does the minimal-cover family of L(P,Q) equal { prime_of_map(psi) :
/// psi in Hom(Q,P) }? Compares the two sets directly.
bool check_min_eq_hom(const Poset& p, const Poset& q,
                      std::uint64_t hom_cap = kDefaultHomCap,
                      std::uint64_t cover_cap = kDefaultCoverCap);

/// Does dual(L(P,Q)) equal tau(L(Q,P))? Both sides materialized as ideals.
bool duality_holds_computed(const Poset& p, const Poset& q,
                            std::uint64_t hom_cap = kDefaultHomCap,
                            std::uint64_t cover_cap = kDefaultCoverCap);

}  // namespace isodual
