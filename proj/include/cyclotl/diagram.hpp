#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "union_find.hpp"

namespace cyclotl {

// Boundary points are signed integers: +j is bottom point j, -i is top
// point i (both 1-based). Internally a point is a label in
// 0..bottom+top-1 with bottom j at j-1 and top i at bottom+i-1.
using point = int;

class skeleton {
 public:
  // The empty matching between zero points.
  skeleton() = default;

  // Builds a matching from signed point pairs; throws unless every point
  // occurs exactly once and no two pairs cross.
  skeleton(std::size_t bottom, std::size_t top,
           std::vector<std::pair<point, point>> const& pairs)
      : _bottom(static_cast<std::uint32_t>(bottom)),
        _top(static_cast<std::uint32_t>(top)),
        _partner(bottom + top, unset) {
    for (auto [p, q] : pairs) {
      std::uint32_t x = label_of(p);
      std::uint32_t y = label_of(q);
      if (x == y || _partner[x] != unset || _partner[y] != unset) {
        throw precondition_error("skeleton: point used twice");
      }
      _partner[x] = y;
      _partner[y] = x;
    }
    validate();
  }

  // Builds a matching from a partner array over labels.
  static skeleton from_partners(std::size_t bottom, std::size_t top,
                                std::vector<std::uint32_t> partner) {
    skeleton s;
    s._bottom = static_cast<std::uint32_t>(bottom);
    s._top = static_cast<std::uint32_t>(top);
    s._partner = std::move(partner);
    s.validate();
    return s;
  }

  static skeleton identity(std::size_t n) {
    std::vector<std::uint32_t> partner(2 * n);
    for (std::uint32_t j = 0; j < n; ++j) {
      partner[j] = static_cast<std::uint32_t>(n) + j;
      partner[n + j] = j;
    }
    return unchecked(n, n, std::move(partner));
  }

  // The hook u_i on n strands: cup (i, i+1) on top and cap (i, i+1) below.
  static skeleton hook(std::size_t n, std::size_t i) {
    if (i < 1 || i + 1 > n) {
      throw precondition_error("hook index out of range");
    }
    skeleton s = identity(n);
    auto a = static_cast<std::uint32_t>(i - 1);
    auto t = static_cast<std::uint32_t>(n);
    s._partner[a] = a + 1;
    s._partner[a + 1] = a;
    s._partner[t + a] = t + a + 1;
    s._partner[t + a + 1] = t + a;
    return s;
  }

  std::size_t bottom_count() const noexcept { return _bottom; }
  std::size_t top_count() const noexcept { return _top; }
  std::size_t point_count() const noexcept { return _partner.size(); }

  std::uint32_t partner_label(std::uint32_t label) const { return _partner[label]; }
  std::vector<std::uint32_t> const& partners() const noexcept { return _partner; }

  bool is_bottom_label(std::uint32_t label) const noexcept { return label < _bottom; }
  bool is_through_label(std::uint32_t label) const noexcept {
    return is_bottom_label(label) != is_bottom_label(_partner[label]);
  }

  point partner(point p) const { return point_of(_partner[label_of(p)]); }

  std::uint32_t label_of(point p) const {
    if (p > 0 && static_cast<std::uint32_t>(p) <= _bottom) {
      return static_cast<std::uint32_t>(p - 1);
    }
    if (p < 0 && static_cast<std::uint32_t>(-p) <= _top) {
      return _bottom + static_cast<std::uint32_t>(-p - 1);
    }
    throw precondition_error("point " + std::to_string(p) + " out of range");
  }

  point point_of(std::uint32_t label) const noexcept {
    return label < _bottom ? static_cast<point>(label + 1)
                           : -static_cast<point>(label - _bottom + 1);
  }

  std::size_t through() const noexcept {
    std::size_t count = 0;
    for (std::uint32_t j = 0; j < _bottom; ++j) {
      count += _partner[j] >= _bottom;
    }
    return count;
  }

  // Pairs with both ends on top.
  std::size_t cups() const noexcept { return (_top - through()) / 2; }
  // Pairs with both ends on the bottom.
  std::size_t caps() const noexcept { return (_bottom - through()) / 2; }

  // Signed pairs [p, q] with p < q, sorted by p.
  std::vector<std::pair<point, point>> pairs() const {
    std::vector<std::pair<point, point>> out;
    for (std::uint32_t x = 0; x < _partner.size(); ++x) {
      if (x < _partner[x]) {
        point p = point_of(x);
        point q = point_of(_partner[x]);
        out.emplace_back(std::min(p, q), std::max(p, q));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Pairs over labels 1..bottom (bottom) and bottom+1..bottom+top (top),
  // each written (smaller, larger), sorted; the canonical order compares these.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> canonical_pairs() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t x = 0; x < _partner.size(); ++x) {
      if (x < _partner[x]) {
        out.emplace_back(x + 1, _partner[x] + 1);
      }
    }
    return out;
  }

  friend bool operator==(skeleton const& a, skeleton const& b) {
    return a._bottom == b._bottom && a._top == b._top && a._partner == b._partner;
  }

  friend bool operator<(skeleton const& a, skeleton const& b) {
    if (a._bottom != b._bottom || a._top != b._top) {
      return std::pair(a._bottom, a._top) < std::pair(b._bottom, b._top);
    }
    return a.canonical_pairs() < b.canonical_pairs();
  }

  std::size_t hash() const noexcept {
    std::size_t h = _bottom * 1000003u + _top;
    for (auto x : _partner) {
      h = h * 1000003u ^ x;
    }
    return h;
  }

  // Non-crossing test in the boundary circular order: bottom 1..m left to
  // right, then top n..1 right to left.
  bool is_planar() const {
    std::vector<std::uint32_t> order = boundary_order();
    std::vector<std::uint32_t> position(order.size());
    for (std::uint32_t r = 0; r < order.size(); ++r) {
      position[order[r]] = r;
    }
    std::vector<std::uint32_t> stack;
    for (auto x : order) {
      if (position[_partner[x]] > position[x]) {
        stack.push_back(x);
      } else {
        if (stack.empty() || stack.back() != _partner[x]) {
          return false;
        }
        stack.pop_back();
      }
    }
    return true;
  }

  // Labels listed in boundary order.
  std::vector<std::uint32_t> boundary_order() const {
    std::vector<std::uint32_t> order;
    order.reserve(_partner.size());
    for (std::uint32_t j = 0; j < _bottom; ++j) {
      order.push_back(j);
    }
    for (std::uint32_t i = _top; i > 0; --i) {
      order.push_back(_bottom + i - 1);
    }
    return order;
  }

 private:
  static constexpr std::uint32_t unset = 0xffffffffu;

  static skeleton unchecked(std::size_t bottom, std::size_t top,
                            std::vector<std::uint32_t> partner) {
    skeleton s;
    s._bottom = static_cast<std::uint32_t>(bottom);
    s._top = static_cast<std::uint32_t>(top);
    s._partner = std::move(partner);
    return s;
  }

  void validate() const {
    if (_partner.size() != std::size_t{_bottom} + _top) {
      throw precondition_error("skeleton: partner array has wrong size");
    }
    for (std::uint32_t x = 0; x < _partner.size(); ++x) {
      std::uint32_t y = _partner[x];
      if (y >= _partner.size() || y == x || _partner[y] != x) {
        throw precondition_error("skeleton: not a perfect matching");
      }
    }
    if (!is_planar()) {
      throw precondition_error("skeleton: strands cross");
    }
  }

  friend skeleton make_unchecked_skeleton(std::size_t, std::size_t,
                                          std::vector<std::uint32_t>);

  std::uint32_t _bottom = 0;
  std::uint32_t _top = 0;
  std::vector<std::uint32_t> _partner;
};

inline skeleton make_unchecked_skeleton(std::size_t bottom, std::size_t top,
                                        std::vector<std::uint32_t> partner) {
  return skeleton::unchecked(bottom, top, std::move(partner));
}

struct skeleton_product {
  skeleton result;
  std::uint64_t loops;
};

// Stacks a above b (b acts first) and counts closed components made only of
// middle points.
inline skeleton_product compose_skeletons(skeleton const& a, skeleton const& b) {
  if (a.bottom_count() != b.top_count()) {
    throw precondition_error("compose: boundary mismatch");
  }
  auto const ab = static_cast<std::uint32_t>(a.bottom_count());
  auto const at = static_cast<std::uint32_t>(a.top_count());
  auto const bb = static_cast<std::uint32_t>(b.bottom_count());
  auto const offset = ab + at;
  std::uint32_t const total = offset + static_cast<std::uint32_t>(b.point_count());

  union_find sets(total);
  for (std::uint32_t x = 0; x < offset; ++x) {
    sets.unite(x, a.partner_label(x));
  }
  for (std::uint32_t x = 0; x < b.point_count(); ++x) {
    sets.unite(offset + x, offset + b.partner_label(x));
  }
  for (std::uint32_t j = 0; j < ab; ++j) {
    sets.unite(j, offset + bb + j);
  }

  // Result labels: bottom j of b stays j, top i of a becomes bb + i.
  std::vector<std::uint32_t> owner(total, 0xffffffffu);
  std::vector<std::uint32_t> partner(bb + at);
  auto visit = [&](std::uint32_t id, std::uint32_t label) {
    std::uint32_t r = sets.find(id);
    if (owner[r] == 0xffffffffu) {
      owner[r] = label;
    } else {
      partner[label] = owner[r];
      partner[owner[r]] = label;
    }
  };
  for (std::uint32_t j = 0; j < bb; ++j) {
    visit(offset + j, j);
  }
  for (std::uint32_t i = 0; i < at; ++i) {
    visit(ab + i, bb + i);
  }

  std::uint64_t loops = 0;
  for (std::uint32_t j = 0; j < ab; ++j) {
    std::uint32_t r = sets.find(j);
    if (owner[r] == 0xffffffffu) {
      owner[r] = 0xfffffffeu;
      ++loops;
    }
  }
  return {make_unchecked_skeleton(bb, at, std::move(partner)), loops};
}

// Number of closed components created when a is stacked on b.
inline std::uint64_t phi(skeleton const& a, skeleton const& b) {
  return compose_skeletons(a, b).loops;
}

// Places b to the right of a.
inline skeleton tensor(skeleton const& a, skeleton const& b) {
  auto const ab = static_cast<std::uint32_t>(a.bottom_count());
  auto const at = static_cast<std::uint32_t>(a.top_count());
  auto const bb = static_cast<std::uint32_t>(b.bottom_count());
  auto const bt = static_cast<std::uint32_t>(b.top_count());
  auto map_a = [&](std::uint32_t x) { return x < ab ? x : ab + bb + (x - ab); };
  auto map_b = [&](std::uint32_t x) { return x < bb ? ab + x : ab + bb + at + (x - bb); };
  std::vector<std::uint32_t> partner(ab + bb + at + bt);
  for (std::uint32_t x = 0; x < a.point_count(); ++x) {
    partner[map_a(x)] = map_a(a.partner_label(x));
  }
  for (std::uint32_t x = 0; x < b.point_count(); ++x) {
    partner[map_b(x)] = map_b(b.partner_label(x));
  }
  return make_unchecked_skeleton(ab + bb, at + bt, std::move(partner));
}

// Reflection swapping top and bottom.
inline skeleton involute(skeleton const& a) {
  auto const ab = static_cast<std::uint32_t>(a.bottom_count());
  auto const at = static_cast<std::uint32_t>(a.top_count());
  auto flip = [&](std::uint32_t x) { return x < ab ? at + x : x - ab; };
  std::vector<std::uint32_t> partner(a.point_count());
  for (std::uint32_t x = 0; x < a.point_count(); ++x) {
    partner[flip(x)] = flip(a.partner_label(x));
  }
  return make_unchecked_skeleton(at, ab, std::move(partner));
}

// All planar matchings between `bottom` and `top` points in canonical order.
inline std::vector<skeleton> enumerate_skeletons(std::size_t bottom, std::size_t top) {
  if ((bottom + top) % 2 != 0) {
    throw precondition_error("enumerate_skeletons: bottom and top differ in parity");
  }
  std::size_t const total = bottom + top;
  std::vector<std::uint32_t> order;
  for (std::uint32_t j = 0; j < bottom; ++j) {
    order.push_back(j);
  }
  for (auto i = static_cast<std::uint32_t>(top); i > 0; --i) {
    order.push_back(static_cast<std::uint32_t>(bottom) + i - 1);
  }

  std::vector<skeleton> out;
  std::vector<std::uint32_t> partner(total);
  std::vector<std::uint32_t> stack;
  std::function<void(std::size_t)> extend = [&](std::size_t pos) {
    if (pos == total) {
      out.push_back(make_unchecked_skeleton(bottom, top, partner));
      return;
    }
    std::uint32_t x = order[pos];
    if (stack.size() + 2 <= total - pos) {
      stack.push_back(x);
      extend(pos + 1);
      stack.pop_back();
    }
    if (!stack.empty()) {
      std::uint32_t y = stack.back();
      stack.pop_back();
      partner[x] = y;
      partner[y] = x;
      extend(pos + 1);
      stack.push_back(y);
    }
  };
  extend(0);
  std::sort(out.begin(), out.end());
  return out;
}

// Skeleton plus an internal-component count. Modulus 0 keeps the count
// unreduced; modulus m >= 1 reduces it mod m.
class diagram {
 public:
  diagram() = default;

  diagram(skeleton s, std::uint64_t loops, std::uint32_t modulus)
      : _skeleton(std::move(s)),
        _loops(modulus == 0 ? loops : loops % modulus),
        _modulus(modulus) {}

  skeleton const& shape() const noexcept { return _skeleton; }
  std::uint64_t loops() const noexcept { return _loops; }
  std::uint32_t modulus() const noexcept { return _modulus; }
  std::size_t bottom_count() const noexcept { return _skeleton.bottom_count(); }
  std::size_t top_count() const noexcept { return _skeleton.top_count(); }
  std::size_t through() const noexcept { return _skeleton.through(); }

  friend bool operator==(diagram const& a, diagram const& b) {
    require_same_modulus(a, b);
    return a._loops == b._loops && a._skeleton == b._skeleton;
  }

  friend bool operator<(diagram const& a, diagram const& b) {
    require_same_modulus(a, b);
    if (a._skeleton == b._skeleton) {
      return a._loops < b._loops;
    }
    return a._skeleton < b._skeleton;
  }

  std::size_t hash() const noexcept { return _skeleton.hash() * 31 + _loops; }

  static void require_same_modulus(diagram const& a, diagram const& b) {
    if (a._modulus != b._modulus) {
      throw precondition_error("diagrams have different moduli");
    }
  }

 private:
  skeleton _skeleton;
  std::uint64_t _loops = 0;
  std::uint32_t _modulus = 0;
};

inline diagram identity(std::size_t n, std::uint32_t modulus) {
  return {skeleton::identity(n), 0, modulus};
}

inline diagram compose(diagram const& a, diagram const& b) {
  diagram::require_same_modulus(a, b);
  auto [s, loops] = compose_skeletons(a.shape(), b.shape());
  return {std::move(s), a.loops() + b.loops() + loops, a.modulus()};
}

inline diagram tensor(diagram const& a, diagram const& b) {
  diagram::require_same_modulus(a, b);
  return {tensor(a.shape(), b.shape()), a.loops() + b.loops(), a.modulus()};
}

inline diagram involute(diagram const& a) {
  return {involute(a.shape()), a.loops(), a.modulus()};
}

inline diagram generator_o(std::size_t n, std::uint32_t modulus) {
  return {skeleton::identity(n), 1, modulus};
}

inline diagram generator_hook(std::size_t n, std::uint32_t modulus, std::size_t i) {
  return {skeleton::hook(n, i), 0, modulus};
}

// u^[i,j] = u_i u_{i-1} ... u_j.
inline diagram generator_block(std::size_t n, std::uint32_t modulus, std::size_t i,
                               std::size_t j) {
  if (j < 1 || j > i || i + 1 > n) {
    throw precondition_error("block index out of range");
  }
  diagram d = identity(n, modulus);
  for (std::size_t h = i + 1; h-- > j;) {
    d = compose(d, generator_hook(n, modulus, h));
  }
  return d;
}

// Diagram = (top_half, 0) (Id_k, mid_loops) (bottom_half, 0).
struct factorisation {
  skeleton top_half;
  std::uint64_t mid_loops;
  std::size_t through;
  skeleton bottom_half;
};

inline factorisation factorise(diagram const& d) {
  skeleton const& s = d.shape();
  auto const bottom = static_cast<std::uint32_t>(s.bottom_count());
  auto const top = static_cast<std::uint32_t>(s.top_count());
  auto const k = static_cast<std::uint32_t>(s.through());

  // Through strands appear in the same left-to-right order on both sides.
  std::vector<std::uint32_t> top_partner(k + top);
  std::vector<std::uint32_t> bottom_partner(bottom + k);
  std::uint32_t r = 0;
  for (std::uint32_t j = 0; j < bottom; ++j) {
    std::uint32_t y = s.partner_label(j);
    if (y < bottom) {
      bottom_partner[j] = y;
      continue;
    }
    bottom_partner[j] = bottom + r;
    bottom_partner[bottom + r] = j;
    top_partner[r] = y - bottom + k;
    top_partner[y - bottom + k] = r;
    ++r;
  }
  for (std::uint32_t i = 0; i < top; ++i) {
    std::uint32_t y = s.partner_label(bottom + i);
    if (y >= bottom) {
      top_partner[k + i] = y - bottom + k;
    }
  }
  return {make_unchecked_skeleton(k, top, std::move(top_partner)), d.loops(), k,
          make_unchecked_skeleton(bottom, k, std::move(bottom_partner))};
}

inline diagram recompose(factorisation const& f, std::uint32_t modulus) {
  diagram top{f.top_half, 0, modulus};
  diagram middle{skeleton::identity(f.through), f.mid_loops, modulus};
  diagram bottom{f.bottom_half, 0, modulus};
  return compose(compose(top, middle), bottom);
}

// All elements of mTL_n: each skeleton in canonical order with loops 0..m-1.
inline std::vector<diagram> enumerate_monoid(std::size_t n, std::uint32_t modulus) {
  if (modulus == 0) {
    throw precondition_error("enumerate_monoid: modulus must be at least 1");
  }
  std::vector<diagram> out;
  for (auto const& s : enumerate_skeletons(n, n)) {
    for (std::uint32_t l = 0; l < modulus; ++l) {
      out.emplace_back(s, l, modulus);
    }
  }
  return out;
}

}  // namespace cyclotl

template <>
struct std::hash<cyclotl::skeleton> {
  std::size_t operator()(cyclotl::skeleton const& s) const noexcept { return s.hash(); }
};

template <>
struct std::hash<cyclotl::diagram> {
  std::size_t operator()(cyclotl::diagram const& d) const noexcept { return d.hash(); }
};
