#pragma once

#include <compare>
#include <span>
#include <vector>

#include "isodual/homset.hpp"
#include "isodual/poset.hpp"

namespace isodual {

/// One variable position (p, q) on the |P| x |Q| grid.
struct Cell {
  int p = 0;
  int q = 0;
  auto operator<=>(const Cell&) const = default;
};

/// Grid dimensions; cells index row-major into Mask bits, so rows*cols <= 64.
struct Grid {
  int rows = 0;
  int cols = 0;

  int cell_count() const { return rows * cols; }
  int index(Cell c) const { return c.p * cols + c.q; }
  Cell at(int idx) const { return {idx / cols, idx % cols}; }
  bool operator==(const Grid&) const = default;
};

Mask mask_of_cells(const Grid& g, std::span<const Cell> cells);
std::vector<Cell> cells_of_mask(const Grid& g, Mask m);

// Lexicographic order on the ascending cell-index lists two masks encode.
bool lex_less_cells(Mask a, Mask b);

/// A squarefree monomial ideal on a grid, stored as its unique minimal
/// generating set: an inclusion antichain of supports in canonical
/// (lexicographic cell list) order. Construction minimizes and sorts.
class Ideal {
 public:
  Ideal(Grid grid, std::vector<Mask> gens);

  const Grid& grid() const { return grid_; }
  const std::vector<Mask>& gens() const { return gens_; }
  std::size_t gen_count() const { return gens_.size(); }

  bool operator==(const Ideal&) const = default;

 private:
  Grid grid_;
  std::vector<Mask> gens_;
};

// Support of u_phi: one cell (p, phi(p)) per row, sorted row-major.
std::vector<Cell> monomial_of_map(const IsotoneMap& phi);

// The isotone-map ideal L(P,Q), one generator per element of Hom(P,Q).
Ideal build_L(const Poset& p, const Poset& q, std::uint64_t hom_cap = kDefaultHomCap);

// Index switch: every cell (p,q) becomes (q,p); an involution.
Ideal tau(const Ideal& ideal);

// Minimal generator sets coincide; ideals on different grids are unequal.
bool ideal_equals(const Ideal& a, const Ideal& b);

Ideal ideal_sum(const Ideal& a, const Ideal& b);

// Support-union product (the squarefree radical of the true product);
// exact whenever the factors touch disjoint cell sets.
Ideal ideal_product(const Ideal& a, const Ideal& b);

// Reinterpret an ideal on a wider grid: column q maps to col_map[q].
Ideal embed_columns(const Ideal& ideal, int new_cols, std::span<const int> col_map);

}  // namespace isodual
