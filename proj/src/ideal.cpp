#include "isodual/ideal.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "isodual/error.hpp"

namespace isodual {

Mask mask_of_cells(const Grid& g, std::span<const Cell> cells) {
  Mask m = 0;
  for (Cell c : cells) {
    if (c.p < 0 || c.p >= g.rows || c.q < 0 || c.q >= g.cols)
      throw Error("cell (" + std::to_string(c.p) + "," + std::to_string(c.q) +
                  ") outside " + std::to_string(g.rows) + "x" + std::to_string(g.cols) + " grid");
    m |= Mask{1} << g.index(c);
  }
  return m;
}

std::vector<Cell> cells_of_mask(const Grid& g, Mask m) {
  std::vector<Cell> out;
  while (m) {
    int idx = std::countr_zero(m);
    out.push_back(g.at(idx));
    m &= m - 1;
  }
  return out;
}

bool lex_less_cells(Mask a, Mask b) {
  // Compare ascending index lists; shared low bits are irrelevant.
  while (a && b) {
    int ia = std::countr_zero(a);
    int ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return b != 0;  // a is a proper prefix
}

namespace {

// Keep only inclusion-minimal masks, then canonical lex order.
std::vector<Mask> minimize(std::vector<Mask> gens) {
  std::sort(gens.begin(), gens.end(), [](Mask a, Mask b) {
    int pa = std::popcount(a);
    int pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Mask> keep;
  for (Mask g : gens) {
    bool dominated = false;
    for (Mask k : keep) {
      if ((k & g) == k) {
        dominated = true;
        break;
      }
    }
    if (!dominated) keep.push_back(g);
  }
  std::sort(keep.begin(), keep.end(), lex_less_cells);
  return keep;
}

}  // namespace

Ideal::Ideal(Grid grid, std::vector<Mask> gens) : grid_(grid) {
  if (grid.rows < 1 || grid.cols < 1)
    throw Error("grid must have positive dimensions");
  if (grid.cell_count() > kMaxElements)
    throw Error("grid " + std::to_string(grid.rows) + "x" + std::to_string(grid.cols) +
                " exceeds " + std::to_string(kMaxElements) + " cells");
  if (gens.empty()) throw Error("ideal needs at least one generator");
  Mask valid = grid.cell_count() == kMaxElements ? ~Mask{0}
                                                 : (Mask{1} << grid.cell_count()) - 1;
  for (Mask g : gens) {
    if (g == 0) throw Error("generator with empty support");
    if (g & ~valid) throw Error("generator has cells outside the grid");
  }
  gens_ = minimize(std::move(gens));
}

std::vector<Cell> monomial_of_map(const IsotoneMap& phi) {
  std::vector<Cell> cells;
  cells.reserve(phi.source().size());
  for (int p = 0; p < phi.source().size(); ++p) cells.push_back({p, phi(p)});
  return cells;
}

Ideal build_L(const Poset& p, const Poset& q, std::uint64_t hom_cap) {
  Grid grid{p.size(), q.size()};
  if (grid.cell_count() > kMaxElements)
    throw Error("grid " + std::to_string(grid.rows) + "x" + std::to_string(grid.cols) +
                " exceeds " + std::to_string(kMaxElements) + " cells");
  auto maps = enumerate_hom(p, q, hom_cap);
  std::vector<Mask> gens;
  gens.reserve(maps.size());
  for (const auto& phi : maps) {
    auto cells = monomial_of_map(phi);
    gens.push_back(mask_of_cells(grid, cells));
  }
  return Ideal(grid, std::move(gens));
}

Ideal tau(const Ideal& ideal) {
  const Grid& g = ideal.grid();
  Grid flipped{g.cols, g.rows};
  std::vector<Mask> gens;
  gens.reserve(ideal.gen_count());
  for (Mask m : ideal.gens()) {
    Mask out = 0;
    for (Cell c : cells_of_mask(g, m)) out |= Mask{1} << flipped.index({c.q, c.p});
    gens.push_back(out);
  }
  return Ideal(flipped, std::move(gens));
}

bool ideal_equals(const Ideal& a, const Ideal& b) {
  return a.grid() == b.grid() && a.gens() == b.gens();
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (!(a.grid() == b.grid())) throw Error("ideal sum needs a common grid");
  std::vector<Mask> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return Ideal(a.grid(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  if (!(a.grid() == b.grid())) throw Error("ideal product needs a common grid");
  std::vector<Mask> gens;
  gens.reserve(a.gen_count() * b.gen_count());
  for (Mask x : a.gens())
    for (Mask y : b.gens()) gens.push_back(x | y);
  return Ideal(a.grid(), std::move(gens));
}

Ideal embed_columns(const Ideal& ideal, int new_cols, std::span<const int> col_map) {
  const Grid& g = ideal.grid();
  if (static_cast<int>(col_map.size()) != g.cols)
    throw Error("column map must cover every source column");
  if (new_cols < 1 || g.rows * new_cols > kMaxElements)
    throw Error("embedded grid out of range");
  for (int q = 0; q < g.cols; ++q)
    if (col_map[q] < 0 || col_map[q] >= new_cols)
      throw Error("column map entry out of range");
  Grid wide{g.rows, new_cols};
  std::vector<Mask> gens;
  gens.reserve(ideal.gen_count());
  for (Mask m : ideal.gens()) {
    Mask out = 0;
    for (Cell c : cells_of_mask(g, m)) out |= Mask{1} << wide.index({c.p, col_map[c.q]});
    gens.push_back(out);
  }
  return Ideal(wide, std::move(gens));
}

}  // namespace isodual
