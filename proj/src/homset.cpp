#include "isodual/homset.hpp"

#include <algorithm>
#include <string>

namespace isodual {

IsotoneMap::IsotoneMap(Poset source, Poset target, std::vector<int> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
  if (!is_isotone(source_, target_, image_)) throw Error("image is not order preserving");
}

bool is_isotone(const Poset& p, const Poset& q, std::span<const int> image) {
  if (static_cast<int>(image.size()) != p.size())
    throw Error("image length " + std::to_string(image.size()) + " does not match |P| = " +
                std::to_string(p.size()));
  for (int v : image)
    if (v < 0 || v >= q.size()) throw Error("image value " + std::to_string(v) + " not an element of Q");
  for (auto [a, b] : p.covers())
    if (!q.leq(image[static_cast<std::size_t>(a)], image[static_cast<std::size_t>(b)])) return false;
  return true;
}

namespace {

std::uint64_t saturating_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

void check_cap(const Poset& p, const Poset& q, std::uint64_t cap) {
  const std::uint64_t space = saturating_pow(static_cast<std::uint64_t>(q.size()), p.size());
  if (space > cap)
    throw CapExceeded("|Q|^|P| = " + (space == UINT64_MAX ? std::string("overflow") : std::to_string(space)) +
                          " exceeds enumeration cap " + std::to_string(cap),
                      0);
}

// Linear extension by repeatedly taking the smallest-index minimal element.
std::vector<int> linear_extension(const Poset& p) {
  const int n = p.size();
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  Mask remaining = (n == 64) ? ~Mask{0} : ((Mask{1} << n) - 1);
  while (remaining) {
    for (int i = 0; i < n; ++i) {
      if (!((remaining >> i) & 1u)) continue;
      if ((p.down_set(i) & remaining) == (Mask{1} << i)) {
        order.push_back(i);
        remaining &= ~(Mask{1} << i);
        break;
      }
    }
  }
  return order;
}

void search(const Poset& p, const Poset& q, const std::vector<int>& ext,
            const std::vector<std::vector<int>>& lower_covers, std::size_t depth,
            std::vector<int>& image, std::vector<std::vector<int>>& out) {
  if (depth == ext.size()) {
    out.push_back(image);
    return;
  }
  const int elem = ext[depth];
  for (int v = 0; v < q.size(); ++v) {
    bool ok = true;
    for (int c : lower_covers[static_cast<std::size_t>(elem)])
      if (!q.leq(image[static_cast<std::size_t>(c)], v)) {
        ok = false;
        break;
      }
    if (ok) {
      image[static_cast<std::size_t>(elem)] = v;
      search(p, q, ext, lower_covers, depth + 1, image, out);
    }
  }
}

std::vector<std::vector<int>> hom_images(const Poset& p, const Poset& q, std::uint64_t cap) {
  check_cap(p, q, cap);
  std::vector<int> ext = linear_extension(p);
  std::vector<std::vector<int>> lower_covers(static_cast<std::size_t>(p.size()));
  for (auto [a, b] : p.covers()) lower_covers[static_cast<std::size_t>(b)].push_back(a);

  std::vector<std::vector<int>> images;
  std::vector<int> image(static_cast<std::size_t>(p.size()), 0);
  search(p, q, ext, lower_covers, 0, image, images);
  std::sort(images.begin(), images.end());
  return images;
}

}  // namespace

std::vector<IsotoneMap> enumerate_hom(const Poset& p, const Poset& q, std::uint64_t cap) {
  std::vector<IsotoneMap> maps;
  for (auto& image : hom_images(p, q, cap)) maps.emplace_back(p, q, std::move(image));
  return maps;
}

std::uint64_t count_hom(const Poset& p, const Poset& q, std::uint64_t cap) {
  return hom_images(p, q, cap).size();
}

Mask fixpoints(const IsotoneMap& phi) {
  if (!(phi.source() == phi.target())) throw Error("fixpoints requires a self-map");
  Mask m = 0;
  for (int i = 0; i < phi.source().size(); ++i)
    if (phi(i) == i) m |= Mask{1} << i;
  return m;
}

IsotoneMap compose(const IsotoneMap& f, const IsotoneMap& g) {
  if (!(f.target() == g.source())) throw Error("compose: target of f must equal source of g");
  std::vector<int> image(static_cast<std::size_t>(f.source().size()));
  for (int i = 0; i < f.source().size(); ++i) image[static_cast<std::size_t>(i)] = g(f(i));
  return IsotoneMap(f.source(), g.target(), std::move(image));
}

}  // namespace isodual
