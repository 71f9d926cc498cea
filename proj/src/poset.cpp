#include "isodual/poset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <string>

namespace isodual {

std::vector<int> elements_of(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

Mask mask_of(const std::vector<int>& elems) {
  Mask m = 0;
  for (int e : elems) m |= Mask{1} << e;
  return m;
}

namespace {

// Cycle witness over the cover digraph, formatted as "a -> b -> ... -> a".
std::string find_cycle(int n, const std::vector<std::vector<int>>& succ) {
  std::vector<int> state(static_cast<std::size_t>(n), 0);  // 0 new, 1 on stack, 2 done
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  for (int start = 0; start < n; ++start) {
    if (state[static_cast<std::size_t>(start)] != 0) continue;
    std::vector<std::pair<int, std::size_t>> stack{{start, 0}};
    state[static_cast<std::size_t>(start)] = 1;
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      if (idx < succ[static_cast<std::size_t>(v)].size()) {
        int w = succ[static_cast<std::size_t>(v)][idx++];
        if (state[static_cast<std::size_t>(w)] == 1) {
          std::vector<int> cyc{w};
          for (int u = v; u != w; u = parent[static_cast<std::size_t>(u)]) cyc.push_back(u);
          cyc.push_back(w);
          std::reverse(cyc.begin() + 1, cyc.end());
          std::string s;
          for (std::size_t k = 0; k < cyc.size(); ++k) {
            if (k) s += " -> ";
            s += std::to_string(cyc[k]);
          }
          return s;
        }
        if (state[static_cast<std::size_t>(w)] == 0) {
          state[static_cast<std::size_t>(w)] = 1;
          parent[static_cast<std::size_t>(w)] = v;
          stack.emplace_back(w, 0);
        }
      } else {
        state[static_cast<std::size_t>(v)] = 2;
        stack.pop_back();
      }
    }
  }
  return "unlocated";
}

}  // namespace

Poset Poset::from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
  if (n < 1) throw Error("poset must have at least one element");
  if (n > kMaxElements) throw Error("poset too large: at most 64 elements supported");

  std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  for (auto [i, j] : covers) {
    if (i < 0 || i >= n || j < 0 || j >= n)
      throw Error("cover pair (" + std::to_string(i) + "," + std::to_string(j) +
                  ") out of range for n=" + std::to_string(n));
    if (i == j) throw Error("cycle detected in cover relation: " + std::to_string(i) + " -> " + std::to_string(i));
    succ[static_cast<std::size_t>(i)].push_back(j);
    ++indeg[static_cast<std::size_t>(j)];
  }

  // Kahn topological sort; leftovers mean a cycle.
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  std::vector<int> queue;
  for (int i = 0; i < n; ++i)
    if (indeg[static_cast<std::size_t>(i)] == 0) queue.push_back(i);
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    order.push_back(v);
    for (int w : succ[static_cast<std::size_t>(v)])
      if (--indeg[static_cast<std::size_t>(w)] == 0) queue.push_back(w);
  }
  if (static_cast<int>(order.size()) != n)
    throw Error("cycle detected in cover relation: " + find_cycle(n, succ));

  Poset p;
  p.n_ = n;
  p.up_.assign(static_cast<std::size_t>(n), 0);
  p.down_.assign(static_cast<std::size_t>(n), 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    Mask up = Mask{1} << v;
    for (int w : succ[static_cast<std::size_t>(v)]) up |= p.up_[static_cast<std::size_t>(w)];
    p.up_[static_cast<std::size_t>(v)] = up;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((p.up_[static_cast<std::size_t>(i)] >> j) & 1u) p.down_[static_cast<std::size_t>(j)] |= Mask{1} << i;

  // Transitive reduction: (i,j) is a cover iff nothing sits strictly between.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && ((p.up_[static_cast<std::size_t>(i)] >> j) & 1u) &&
          std::popcount(p.up_[static_cast<std::size_t>(i)] & p.down_[static_cast<std::size_t>(j)]) == 2)
        p.covers_.emplace_back(i, j);
  std::sort(p.covers_.begin(), p.covers_.end());
  return p;
}

Mask Poset::minimal_elements() const {
  Mask m = 0;
  for (int i = 0; i < n_; ++i)
    if (down_[static_cast<std::size_t>(i)] == (Mask{1} << i)) m |= Mask{1} << i;
  return m;
}

Mask Poset::maximal_elements() const {
  Mask m = 0;
  for (int i = 0; i < n_; ++i)
    if (up_[static_cast<std::size_t>(i)] == (Mask{1} << i)) m |= Mask{1} << i;
  return m;
}

bool Poset::has_unique_min_or_max() const {
  return std::popcount(minimal_elements()) == 1 || std::popcount(maximal_elements()) == 1;
}

bool is_connected(const Poset& p) {
  return decompose_direct_sum(p).size() == 1;
}

bool is_rooted(const Poset& p) {
  const int n = p.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!p.comparable(i, j) && (p.up_set(i) & p.up_set(j)) != 0) return false;
  return true;
}

bool is_co_rooted(const Poset& p) {
  const int n = p.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!p.comparable(i, j) && (p.down_set(i) & p.down_set(j)) != 0) return false;
  return true;
}

bool is_chain(const Poset& p) {
  const int n = p.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!p.comparable(i, j)) return false;
  return true;
}

bool is_sum_of_chains(const Poset& p) { return is_rooted(p) && is_co_rooted(p); }

Poset opposite(const Poset& p) {
  std::vector<std::pair<int, int>> flipped;
  flipped.reserve(p.covers().size());
  for (auto [i, j] : p.covers()) flipped.emplace_back(j, i);
  return Poset::from_covers(p.size(), flipped);
}

std::vector<Component> decompose_direct_sum(const Poset& p) {
  const int n = p.size();
  std::vector<Component> out;
  Mask seen = 0;
  for (int s = 0; s < n; ++s) {
    if ((seen >> s) & 1u) continue;
    // flood fill on comparability
    Mask comp = Mask{1} << s;
    for (;;) {
      Mask grown = comp;
      for (int i : elements_of(comp)) grown |= p.up_set(i) | p.down_set(i);
      if (grown == comp) break;
      comp = grown;
    }
    seen |= comp;
    std::vector<int> elems = elements_of(comp);
    std::vector<int> local(static_cast<std::size_t>(n), -1);
    for (std::size_t k = 0; k < elems.size(); ++k) local[static_cast<std::size_t>(elems[k])] = static_cast<int>(k);
    std::vector<std::pair<int, int>> covers;
    for (auto [i, j] : p.covers())
      if ((comp >> i) & 1u) covers.emplace_back(local[static_cast<std::size_t>(i)], local[static_cast<std::size_t>(j)]);
    out.push_back({Poset::from_covers(static_cast<int>(elems.size()), covers), std::move(elems)});
  }
  return out;
}

namespace {

CanonicalKey key_from_perm_search(const Poset& p, Poset* canonical_out) {
  const int n = p.size();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  const std::size_t nbytes = (static_cast<std::size_t>(n) * static_cast<std::size_t>(n) + 7) / 8;

  std::vector<std::uint8_t> best;
  std::vector<int> best_perm;
  std::vector<std::uint8_t> cur(nbytes);
  do {
    std::fill(cur.begin(), cur.end(), 0);
    std::size_t bit = 0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b, ++bit)
        if (p.leq(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]))
          cur[bit >> 3] |= static_cast<std::uint8_t>(0x80u >> (bit & 7));
    if (best.empty() || cur < best) {
      best = cur;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  if (canonical_out) {
    std::vector<std::pair<int, int>> covers;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b && p.leq(best_perm[static_cast<std::size_t>(a)], best_perm[static_cast<std::size_t>(b)]))
          covers.emplace_back(a, b);
    *canonical_out = Poset::from_covers(n, covers);
  }

  CanonicalKey key;
  key.bytes.push_back(static_cast<std::uint8_t>(n));
  key.bytes.insert(key.bytes.end(), best.begin(), best.end());
  return key;
}

}  // namespace

CanonicalKey canonical_key(const Poset& p, int max_n) {
  if (p.size() > max_n)
    throw Error("canonical key limited to " + std::to_string(max_n) + " elements, got " +
                std::to_string(p.size()));
  return key_from_perm_search(p, nullptr);
}

namespace {

// Depth-first enumeration of labeled posets, one new element at a time.
// The new element's strict down-set must be down-closed, its strict up-set
// up-closed, and every chosen lower element must already lie below every
// chosen upper one.
void extend_labeled(int k, int n, std::vector<Mask>& up, std::vector<Mask>& down,
                    std::map<CanonicalKey, Poset>& classes) {
  if (k == n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j : elements_of(up[static_cast<std::size_t>(i)] & ~(Mask{1} << i))) pairs.emplace_back(i, j);
    Poset p = Poset::from_covers(n, pairs);
    Poset canonical = p;
    CanonicalKey key = key_from_perm_search(p, &canonical);
    classes.emplace(std::move(key), std::move(canonical));
    return;
  }

  const Mask universe = (k == 0) ? 0 : ((Mask{1} << k) - 1);
  for (Mask below = 0;; below = (below - universe) & universe) {
    // iterate subsets of universe, 0 first
    bool down_closed = true;
    for (int i : elements_of(below))
      if ((down[static_cast<std::size_t>(i)] & ~below) != 0) {
        down_closed = false;
        break;
      }
    if (down_closed) {
      Mask allowed = universe & ~below;
      for (int i : elements_of(below)) allowed &= up[static_cast<std::size_t>(i)];
      for (Mask above = 0;; above = (above - allowed) & allowed) {
        bool up_closed = true;
        for (int j : elements_of(above))
          if ((up[static_cast<std::size_t>(j)] & universe & ~above) != 0) {
            up_closed = false;
            break;
          }
        if (up_closed) {
          const Mask self = Mask{1} << k;
          up.push_back(above | self);
          down.push_back(below | self);
          for (int i : elements_of(below)) up[static_cast<std::size_t>(i)] |= self;
          for (int j : elements_of(above)) down[static_cast<std::size_t>(j)] |= self;
          extend_labeled(k + 1, n, up, down, classes);
          for (int i : elements_of(below)) up[static_cast<std::size_t>(i)] &= ~self;
          for (int j : elements_of(above)) down[static_cast<std::size_t>(j)] &= ~self;
          up.pop_back();
          down.pop_back();
        }
        if (above == allowed) break;
      }
    }
    if (below == universe) break;
  }
}

}  // namespace

std::vector<Poset> generate_posets(int n, int max_n) {
  if (n < 1) throw Error("poset size must be at least 1");
  if (n > max_n)
    throw Error("generation limited to " + std::to_string(max_n) + " elements, got " + std::to_string(n));

  std::map<CanonicalKey, Poset> classes;
  std::vector<Mask> up, down;
  extend_labeled(0, n, up, down, classes);

  std::vector<Poset> out;
  out.reserve(classes.size());
  for (auto& [key, poset] : classes) out.push_back(std::move(poset));
  return out;
}

}  // namespace isodual
