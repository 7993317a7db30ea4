#pragma once

// Independent reference implementations used only by the tests.

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "cyclotl/diagram.hpp"
#include "cyclotl/monoid.hpp"

namespace oracle {

using cyclotl::point;
using cyclotl::skeleton;

// Catalan numbers by C_{n+1} = sum C_i C_{n-i}.
inline std::vector<std::uint64_t> catalan_table(std::size_t n) {
  std::vector<std::uint64_t> c(n + 1, 0);
  c[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < k; ++i) {
      c[k] += c[i] * c[k - 1 - i];
    }
  }
  return c;
}

// Composition by walking along strands of a stacked over b.
struct traced {
  skeleton result;
  std::uint64_t loops;
};

inline traced trace_compose(skeleton const& a, skeleton const& b) {
  std::set<std::size_t> middle_seen;
  // Layer 0 is b, layer 1 is a; middle point j is top j of b and bottom j
  // of a. Returns the outer end of the strand through (layer, p).
  auto walk = [&](int layer, point p) {
    while (true) {
      point q = (layer == 0 ? b : a).partner(p);
      if ((layer == 0 && q > 0) || (layer == 1 && q < 0)) {
        return q;
      }
      std::size_t j = static_cast<std::size_t>(q < 0 ? -q : q);
      middle_seen.insert(j);
      layer = 1 - layer;
      p = layer == 1 ? static_cast<point>(j) : -static_cast<point>(j);
    }
  };
  std::vector<std::pair<point, point>> pairs;
  std::set<point> used;
  auto start = [&](int layer, point p) {
    if (used.count(p)) {
      return;
    }
    point q = walk(layer, p);
    used.insert(p);
    used.insert(q);
    pairs.emplace_back(p, q);
  };
  for (std::size_t j = 1; j <= b.bottom_count(); ++j) {
    start(0, static_cast<point>(j));
  }
  for (std::size_t i = 1; i <= a.top_count(); ++i) {
    start(1, -static_cast<point>(i));
  }
  std::uint64_t loops = 0;
  for (std::size_t j = 1; j <= a.bottom_count(); ++j) {
    if (middle_seen.count(j)) {
      continue;
    }
    ++loops;
    int layer = 1;
    point p = static_cast<point>(j);
    while (true) {
      middle_seen.insert(static_cast<std::size_t>(p < 0 ? -p : p));
      point q = (layer == 0 ? b : a).partner(p);
      std::size_t next = static_cast<std::size_t>(q < 0 ? -q : q);
      if (next == j) {
        break;
      }
      middle_seen.insert(next);
      layer = 1 - layer;
      p = layer == 1 ? static_cast<point>(next) : -static_cast<point>(next);
    }
  }
  return {skeleton(b.bottom_count(), a.top_count(), pairs), loops};
}

// Non-crossing perfect matchings of 2n points on a line, by brute force
// over all perfect matchings.
inline std::size_t noncrossing_matchings(std::size_t points) {
  std::size_t count = 0;
  std::vector<int> partner(points, -1);
  auto crossing = [&] {
    for (std::size_t a = 0; a < points; ++a) {
      for (std::size_t c = a + 1; c < points; ++c) {
        if (static_cast<std::size_t>(partner[a]) <= a || static_cast<std::size_t>(partner[c]) <= c) {
          continue;
        }
        std::size_t b = partner[a];
        std::size_t d = partner[c];
        if (a < c && c < b && b < d) {
          return true;
        }
      }
    }
    return false;
  };
  auto go = [&](auto&& self) -> void {
    std::size_t first = 0;
    while (first < points && partner[first] != -1) {
      ++first;
    }
    if (first == points) {
      count += !crossing();
      return;
    }
    for (std::size_t x = first + 1; x < points; ++x) {
      if (partner[x] == -1) {
        partner[first] = static_cast<int>(x);
        partner[x] = static_cast<int>(first);
        self(self);
        partner[first] = partner[x] = -1;
      }
    }
  };
  go(go);
  return count;
}

// Green's R, L and J classes by explicit principal ideals.
struct naive_green {
  std::vector<std::set<std::uint32_t>> right_ideal, left_ideal, two_sided;
};

inline naive_green naive_ideals(cyclotl::finite_monoid const& m) {
  naive_green g;
  std::size_t const n = m.size();
  for (std::uint32_t a = 0; a < n; ++a) {
    std::set<std::uint32_t> r, l, j;
    for (std::uint32_t x = 0; x < n; ++x) {
      r.insert(m.mul(a, x));
      l.insert(m.mul(x, a));
      for (std::uint32_t y = 0; y < n; ++y) {
        j.insert(m.mul(m.mul(x, a), y));
      }
    }
    g.right_ideal.push_back(std::move(r));
    g.left_ideal.push_back(std::move(l));
    g.two_sided.push_back(std::move(j));
  }
  return g;
}

}  // namespace oracle
