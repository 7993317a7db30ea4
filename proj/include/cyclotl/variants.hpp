#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cells.hpp"
#include "combinatorics.hpp"
#include "diagram.hpp"
#include "error.hpp"
#include "field.hpp"
#include "monoid.hpp"
#include "reptheory.hpp"
#include "union_find.hpp"
#include "words.hpp"

namespace cyclotl {

enum class flavour { planar_partition, motzkin, planar_rook };

inline std::string to_string(flavour f) {
  switch (f) {
    case flavour::planar_partition:
      return "planar_partition";
    case flavour::motzkin:
      return "motzkin";
    case flavour::planar_rook:
      return "planar_rook";
  }
  return {};
}

inline flavour parse_flavour(std::string const& s) {
  if (s == "planar_partition" || s == "ppa") {
    return flavour::planar_partition;
  }
  if (s == "motzkin" || s == "mo") {
    return flavour::motzkin;
  }
  if (s == "planar_rook" || s == "pro") {
    return flavour::planar_rook;
  }
  throw parse_error("unknown flavour '" + s + "'", 0);
}

// A partition of the 2n points of a rectangle plus an internal-component
// count mod m. Label j-1 is bottom point j, label n+i-1 is top point i.
// Block ids are numbered by first appearance in label order.
class partition_diagram {
 public:
  partition_diagram() = default;

  partition_diagram(std::size_t n, std::vector<std::uint32_t> block_of, std::uint64_t loops,
                    std::uint32_t modulus, flavour kind)
      : _n(n),
        _block(std::move(block_of)),
        _loops(modulus == 0 ? loops : loops % modulus),
        _modulus(modulus),
        _flavour(kind) {
    if (_block.size() != 2 * n) {
      throw precondition_error("partition_diagram: need one block id per point");
    }
    canonicalise();
    validate();
  }

  // Builds from blocks of signed points: +j bottom j, -i top i.
  static partition_diagram from_blocks(std::size_t n,
                                       std::vector<std::vector<std::int64_t>> const& blocks,
                                       std::uint64_t loops, std::uint32_t modulus, flavour kind) {
    std::vector<std::uint32_t> block_of(2 * n, ~std::uint32_t{0});
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) {
        throw precondition_error("partition_diagram: empty block");
      }
      for (std::int64_t x : blocks[b]) {
        std::size_t label = label_of(n, x);
        if (block_of[label] != ~std::uint32_t{0}) {
          throw precondition_error("partition_diagram: point in two blocks");
        }
        block_of[label] = static_cast<std::uint32_t>(b);
      }
    }
    if (std::find(block_of.begin(), block_of.end(), ~std::uint32_t{0}) != block_of.end()) {
      throw precondition_error("partition_diagram: point in no block");
    }
    return {n, std::move(block_of), loops, modulus, kind};
  }

  static partition_diagram identity(std::size_t n, std::uint32_t modulus, flavour kind) {
    std::vector<std::uint32_t> block_of(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
      block_of[j] = block_of[n + j] = static_cast<std::uint32_t>(j);
    }
    return {n, std::move(block_of), 0, modulus, kind};
  }

  static std::size_t label_of(std::size_t n, std::int64_t x) {
    if (x == 0 || (x > 0 && static_cast<std::size_t>(x) > n) ||
        (x < 0 && static_cast<std::size_t>(-x) > n)) {
      throw precondition_error("partition_diagram: point out of range");
    }
    return x > 0 ? static_cast<std::size_t>(x) - 1 : n + static_cast<std::size_t>(-x) - 1;
  }
  static std::int64_t point_of(std::size_t n, std::size_t label) {
    return label < n ? static_cast<std::int64_t>(label) + 1
                     : -static_cast<std::int64_t>(label - n) - 1;
  }

  std::size_t n() const noexcept { return _n; }
  std::uint64_t loops() const noexcept { return _loops; }
  std::uint32_t modulus() const noexcept { return _modulus; }
  flavour kind() const noexcept { return _flavour; }
  std::vector<std::uint32_t> const& block_ids() const noexcept { return _block; }
  std::uint32_t block_of(std::int64_t point) const { return _block[label_of(_n, point)]; }

  std::size_t block_count() const {
    return _block.empty() ? 0 : *std::max_element(_block.begin(), _block.end()) + 1;
  }

  // Blocks as signed points, blocks by first appearance, points by label.
  std::vector<std::vector<std::int64_t>> blocks() const {
    std::vector<std::vector<std::int64_t>> out(block_count());
    for (std::size_t x = 0; x < _block.size(); ++x) {
      out[_block[x]].push_back(point_of(_n, x));
    }
    return out;
  }

  // Number of blocks meeting both the bottom and the top.
  std::size_t through() const {
    std::vector<std::uint8_t> side(block_count(), 0);
    for (std::size_t x = 0; x < _block.size(); ++x) {
      side[_block[x]] |= x < _n ? 1 : 2;
    }
    return static_cast<std::size_t>(std::count(side.begin(), side.end(), 3));
  }

  // Non-crossing in the boundary order (bottom left to right, then top
  // right to left).
  bool is_planar() const {
    std::size_t const size = 2 * _n;
    std::vector<std::uint32_t> cyc(size);
    for (std::size_t j = 0; j < _n; ++j) {
      cyc[j] = _block[j];
      cyc[2 * _n - 1 - j] = _block[_n + j];
    }
    for (std::size_t a = 0; a < size; ++a) {
      for (std::size_t b = a + 1; b < size; ++b) {
        if (cyc[b] == cyc[a]) {
          continue;
        }
        for (std::size_t c = b + 1; c < size; ++c) {
          if (cyc[c] != cyc[a]) {
            continue;
          }
          for (std::size_t d = c + 1; d < size; ++d) {
            if (cyc[d] == cyc[b]) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  bool satisfies_flavour() const {
    if (!is_planar()) {
      return false;
    }
    if (_flavour == flavour::planar_partition) {
      return true;
    }
    std::vector<std::uint32_t> bottom(block_count(), 0);
    std::vector<std::uint32_t> top(block_count(), 0);
    for (std::size_t x = 0; x < _block.size(); ++x) {
      ++(x < _n ? bottom : top)[_block[x]];
    }
    for (std::size_t b = 0; b < bottom.size(); ++b) {
      if (bottom[b] + top[b] > 2) {
        return false;
      }
      if (_flavour == flavour::planar_rook && bottom[b] + top[b] == 2 &&
          (bottom[b] != 1 || top[b] != 1)) {
        return false;
      }
    }
    return true;
  }

  friend bool operator==(partition_diagram const& a, partition_diagram const& b) {
    if (a._modulus != b._modulus || a._flavour != b._flavour) {
      throw precondition_error("partition_diagram: comparing different monoids");
    }
    return a._n == b._n && a._loops == b._loops && a._block == b._block;
  }
  friend bool operator<(partition_diagram const& a, partition_diagram const& b) {
    if (a._modulus != b._modulus || a._flavour != b._flavour) {
      throw precondition_error("partition_diagram: comparing different monoids");
    }
    return std::tie(a._n, a._block, a._loops) < std::tie(b._n, b._block, b._loops);
  }

  std::size_t hash() const noexcept {
    std::size_t h = _n * 1000003u + _loops;
    for (auto b : _block) {
      h = h * 31 + b;
    }
    return h;
  }

 private:
  void canonicalise() {
    std::unordered_map<std::uint32_t, std::uint32_t> rename;
    for (auto& b : _block) {
      auto [it, fresh] = rename.emplace(b, static_cast<std::uint32_t>(rename.size()));
      b = it->second;
    }
  }

  void validate() const {
    if (!satisfies_flavour()) {
      throw precondition_error("partition_diagram: not a valid " + to_string(_flavour) +
                               " diagram");
    }
  }

  std::size_t _n = 0;
  std::vector<std::uint32_t> _block;
  std::uint64_t _loops = 0;
  std::uint32_t _modulus = 1;
  flavour _flavour = flavour::planar_partition;
};

}  // namespace cyclotl

template <>
struct std::hash<cyclotl::partition_diagram> {
  std::size_t operator()(cyclotl::partition_diagram const& d) const noexcept { return d.hash(); }
};

namespace cyclotl {

// a above b: a's bottom is glued to b's top. Middle-only components add
// to the loop count.
inline partition_diagram compose_partition(partition_diagram const& a,
                                           partition_diagram const& b) {
  if (a.n() != b.n() || a.modulus() != b.modulus() || a.kind() != b.kind()) {
    throw precondition_error("compose_partition: parameter mismatch");
  }
  std::size_t const n = a.n();
  // 0..n-1: b bottom; n..2n-1: middle; 2n..3n-1: a top.
  union_find uf(3 * n);
  auto const& ab = a.block_ids();
  auto const& bb = b.block_ids();
  auto join_blocks = [&](std::vector<std::uint32_t> const& ids, std::size_t bottom_offset,
                         std::size_t top_offset) {
    std::vector<std::optional<std::size_t>> first(2 * n);
    for (std::size_t x = 0; x < 2 * n; ++x) {
      std::size_t node = x < n ? bottom_offset + x : top_offset + (x - n);
      if (first[ids[x]]) {
        uf.unite(*first[ids[x]], node);
      } else {
        first[ids[x]] = node;
      }
    }
  };
  join_blocks(bb, 0, n);
  join_blocks(ab, n, 2 * n);

  std::vector<std::uint32_t> out(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = static_cast<std::uint32_t>(uf.find(j));
    out[n + j] = static_cast<std::uint32_t>(uf.find(2 * n + j));
  }
  std::vector<bool> outer(3 * n, false);
  for (auto r : out) {
    outer[r] = true;
  }
  std::uint64_t internal = 0;
  std::vector<bool> counted(3 * n, false);
  for (std::size_t x = n; x < 2 * n; ++x) {
    std::size_t r = uf.find(x);
    if (!outer[r] && !counted[r]) {
      counted[r] = true;
      ++internal;
    }
  }
  partition_diagram result(n, std::move(out), a.loops() + b.loops() + internal, a.modulus(),
                           a.kind());
  return result;
}

// All diagrams of the given flavour, sorted.
inline std::vector<partition_diagram> enumerate_partitions(std::size_t n, std::uint32_t modulus,
                                                           flavour kind) {
  if (modulus == 0) {
    throw precondition_error("enumerate_partitions: modulus must be positive");
  }
  std::size_t const size = 2 * n;
  std::vector<partition_diagram> out;
  std::vector<std::uint32_t> rgs(size, 0);
  // Restricted growth strings: rgs[x] <= 1 + max(rgs[0..x-1]).
  std::function<void(std::size_t, std::uint32_t)> extend = [&](std::size_t x, std::uint32_t used) {
    if (x == size) {
      std::vector<std::uint32_t> ids = rgs;
      bool ok = true;
      try {
        partition_diagram probe(n, ids, 0, modulus, kind);
      } catch (precondition_error const&) {
        ok = false;
      }
      if (ok) {
        for (std::uint32_t l = 0; l < modulus; ++l) {
          out.emplace_back(n, ids, l, modulus, kind);
        }
      }
      return;
    }
    for (std::uint32_t b = 0; b <= used && b < size; ++b) {
      rgs[x] = b;
      extend(x + 1, std::max(used, b + 1));
    }
  };
  extend(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// Expected monoid size: m Ca(2n), m M_{2n} or m C(2n, n).
inline big_int partition_monoid_size(std::size_t n, std::uint32_t modulus, flavour kind) {
  auto const two_n = static_cast<std::int64_t>(2 * n);
  switch (kind) {
    case flavour::planar_partition:
      return modulus * catalan(two_n);
    case flavour::motzkin:
      return modulus * motzkin(two_n);
    case flavour::planar_rook:
      return modulus * binomial(two_n, static_cast<std::int64_t>(n));
  }
  return 0;
}

inline concrete_monoid<partition_diagram> partition_monoid(std::size_t n, std::uint32_t modulus,
                                                           flavour kind) {
  return make_monoid(enumerate_partitions(n, modulus, kind), compose_partition);
}

// Generators of mpPa_n indexed by twice their index: p_{h/2} for h = 2..2n.
struct ppa_generator {
  std::size_t twice_index = 0;  // 0 stands for c

  bool is_loop() const noexcept { return twice_index == 0; }
  bool is_integral() const noexcept { return twice_index % 2 == 0; }

  std::string name() const {
    if (is_loop()) {
      return "c";
    }
    std::string s = "p" + std::to_string(twice_index / 2);
    return is_integral() ? s : s + ".5";
  }
};

inline partition_diagram ppa_generator_diagram(std::size_t n, std::uint32_t modulus,
                                               ppa_generator g) {
  auto id = partition_diagram::identity(n, modulus, flavour::planar_partition);
  if (g.is_loop()) {
    return {n, id.block_ids(), 1, modulus, flavour::planar_partition};
  }
  std::size_t const h = g.twice_index;
  if (h < 2 || h > 2 * n || (h % 2 == 1 && h + 1 > 2 * n)) {
    throw precondition_error("ppa_generator: index out of range");
  }
  std::vector<std::uint32_t> ids = id.block_ids();
  std::size_t const i = h / 2;
  if (g.is_integral()) {
    ids[i - 1] = static_cast<std::uint32_t>(2 * n);
    ids[n + i - 1] = static_cast<std::uint32_t>(2 * n + 1);
  } else {
    ids[i] = ids[n + i] = ids[i - 1];
  }
  return {n, std::move(ids), 0, modulus, flavour::planar_partition};
}

// c, p_1, p_{3/2}, ..., p_n.
inline std::vector<ppa_generator> ppa_generators(std::size_t n) {
  if (n < 1) {
    throw precondition_error("ppa_generators: n must be positive");
  }
  std::vector<ppa_generator> out{{0}};
  for (std::size_t h = 2; h <= 2 * n; ++h) {
    out.push_back({h});
  }
  return out;
}

inline ppa_generator parse_ppa_generator(std::string const& s, std::size_t n) {
  if (s == "c") {
    return {0};
  }
  if (s.size() < 2 || s[0] != 'p') {
    throw parse_error("bad generator '" + s + "'", 0);
  }
  std::string body = s.substr(1);
  bool half = false;
  if (body.size() > 2 && body.compare(body.size() - 2, 2, ".5") == 0) {
    half = true;
    body.resize(body.size() - 2);
  }
  if (body.empty() || !std::all_of(body.begin(), body.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    throw parse_error("bad generator '" + s + "'", 1);
  }
  std::size_t i = std::stoul(body);
  std::size_t h = 2 * i + (half ? 1 : 0);
  if (i < 1 || h > 2 * n || (half && h + 1 > 2 * n)) {
    throw parse_error("generator '" + s + "' out of range", 1);
  }
  return {h};
}

struct relation_check {
  std::string relation;
  bool holds = false;
};

// Every relation of the presentation of mpPa_n, checked on diagrams.
inline std::vector<relation_check> ppa_relations(std::size_t n, std::uint32_t modulus) {
  auto gens = ppa_generators(n);
  auto d = [&](ppa_generator g) { return ppa_generator_diagram(n, modulus, g); };
  auto mul = [](partition_diagram const& x, partition_diagram const& y) {
    return compose_partition(x, y);
  };
  partition_diagram const c = d({0});
  std::vector<relation_check> out;
  for (auto g : gens) {
    if (g.is_loop()) {
      continue;
    }
    partition_diagram p = d(g);
    out.push_back({"c" + g.name() + "=" + g.name() + "c", mul(c, p) == mul(p, c)});
    if (g.is_integral()) {
      out.push_back({g.name() + "^2=c" + g.name(), mul(p, p) == mul(c, p)});
    } else {
      out.push_back({g.name() + "^2=" + g.name(), mul(p, p) == p});
    }
    for (auto h : gens) {
      if (h.is_loop()) {
        continue;
      }
      std::size_t gap = g.twice_index > h.twice_index ? g.twice_index - h.twice_index
                                                       : h.twice_index - g.twice_index;
      partition_diagram q = d(h);
      if (gap == 1) {
        out.push_back({g.name() + h.name() + g.name() + "=" + g.name(), mul(mul(p, q), p) == p});
      } else if (gap > 1 && g.twice_index < h.twice_index) {
        out.push_back({g.name() + h.name() + "=" + h.name() + g.name(), mul(p, q) == mul(q, p)});
      }
    }
  }
  partition_diagram power = partition_diagram::identity(n, modulus, flavour::planar_partition);
  for (std::uint32_t i = 0; i < modulus; ++i) {
    power = mul(power, c);
  }
  out.push_back({"c^m=1", power == partition_diagram::identity(n, modulus,
                                                               flavour::planar_partition)});
  return out;
}

// Image of a generator in 2m-TL_{2n}.
inline diagram ppa_generator_image(std::size_t n, std::uint32_t m, ppa_generator g) {
  std::uint32_t const big = 2 * m;
  if (g.is_loop()) {
    return {skeleton::identity(2 * n), 2, big};
  }
  std::size_t const h = g.twice_index;
  diagram u = generator_hook(2 * n, big, h - 1);
  std::uint64_t shift = g.is_integral() ? 1 : 2 * m - 1;
  return {u.shape(), u.loops() + shift, big};
}

struct embedding_report {
  std::size_t n = 0;
  std::uint32_t m = 0;
  std::size_t domain_size = 0;
  std::size_t image_size = 0;
  big_int expected_size = 0;
  bool generated = false;
  bool well_defined = false;
  bool homomorphism = false;
  bool injective = false;
  bool image_size_ok = false;
  std::optional<bool> j_cells_restrict;
  std::vector<std::pair<partition_diagram, diagram>> map;

  bool ok() const {
    return generated && well_defined && homomorphism && injective && image_size_ok &&
           j_cells_restrict.value_or(true);
  }
};

// Extends the generator images along the right Cayley graph of mpPa_n and
// checks the result is an injective homomorphism into 2m-TL_{2n}.
inline embedding_report embed_ppa_in_tl(std::size_t n, std::uint32_t m,
                                        bool check_cells = false) {
  if (n < 1 || m < 1) {
    throw precondition_error("embed_ppa_in_tl: need n, m >= 1");
  }
  embedding_report out;
  out.n = n;
  out.m = m;
  out.expected_size = m * catalan(static_cast<std::int64_t>(2 * n));
  if (out.expected_size > big_int(brute_force_limit)) {
    throw size_guard_error("embed_ppa_in_tl: domain too large");
  }
  auto gens = ppa_generators(n);
  std::vector<partition_diagram> gen_d;
  std::vector<diagram> gen_i;
  for (auto g : gens) {
    gen_d.push_back(ppa_generator_diagram(n, m, g));
    gen_i.push_back(ppa_generator_image(n, m, g));
  }
  std::unordered_map<partition_diagram, std::size_t> seen;
  std::deque<std::size_t> queue;
  out.map.emplace_back(partition_diagram::identity(n, m, flavour::planar_partition),
                       identity(2 * n, 2 * m));
  seen.emplace(out.map[0].first, 0);
  queue.push_back(0);
  out.well_defined = true;
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < gens.size(); ++g) {
      partition_diagram y = compose_partition(out.map[x].first, gen_d[g]);
      diagram fy = compose(out.map[x].second, gen_i[g]);
      auto it = seen.find(y);
      if (it == seen.end()) {
        seen.emplace(y, out.map.size());
        queue.push_back(out.map.size());
        out.map.emplace_back(std::move(y), std::move(fy));
      } else if (!(out.map[it->second].second == fy)) {
        out.well_defined = false;
      }
    }
  }
  auto all = enumerate_partitions(n, m, flavour::planar_partition);
  out.domain_size = all.size();
  out.generated = out.map.size() == all.size();

  out.homomorphism = out.well_defined;
  for (std::size_t a = 0; a < out.map.size() && out.homomorphism; ++a) {
    for (std::size_t b = 0; b < out.map.size() && out.homomorphism; ++b) {
      auto xy = seen.at(compose_partition(out.map[a].first, out.map[b].first));
      out.homomorphism = out.map[xy].second == compose(out.map[a].second, out.map[b].second);
    }
  }
  std::unordered_map<diagram, std::size_t> images;
  for (auto const& [x, fx] : out.map) {
    images.emplace(fx, 0);
  }
  out.image_size = images.size();
  out.injective = out.image_size == out.map.size();
  out.image_size_ok = big_int(out.image_size) == out.expected_size &&
                      2 * out.image_size == enumerate_monoid(2 * n, 2 * m).size();

  if (check_cells) {
    auto tl = tl_monoid(2 * n, 2 * m);
    auto tl_cells = green_cells_bruteforce(tl.table);
    auto ppa = make_monoid(all, compose_partition);
    auto ppa_cells = green_cells_bruteforce(ppa.table);
    bool restrict_ok = true;
    for (auto const& cell : ppa_cells.j_cells) {
      std::optional<std::uint32_t> target;
      for (auto x : cell) {
        std::uint32_t j = tl_cells.j_class[tl.index_of(out.map[seen.at(ppa.elements[x])].second)];
        if (target && *target != j) {
          restrict_ok = false;
        }
        target = j;
      }
    }
    out.j_cells_restrict = restrict_ok;
  }
  return out;
}

// Number of simple F_p[C_m]-modules and the sum of their dimensions over
// their endomorphism fields: the p-cyclotomic cosets of Z_{m'} where m' is
// the p-free part of m. p = 0 stands for a splitting field of
// characteristic zero.
struct cyclic_simple_data {
  std::size_t count = 0;
  std::uint64_t semisimple_dimension = 0;
  std::vector<std::uint64_t> coset_sizes;
};

inline cyclic_simple_data cyclic_simples(std::uint64_t m, std::uint64_t p) {
  cyclic_simple_data out;
  std::uint64_t mm = m;
  if (p != 0) {
    while (mm % p == 0) {
      mm /= p;
    }
  }
  std::vector<bool> seen(mm, false);
  for (std::uint64_t x = 0; x < mm; ++x) {
    if (seen[x]) {
      continue;
    }
    std::uint64_t size = 0;
    std::uint64_t y = x;
    do {
      seen[y] = true;
      ++size;
      y = p == 0 ? y : (y * (p % mm)) % mm;
    } while (!seen[y]);
    out.coset_sizes.push_back(size);
    out.semisimple_dimension += size;
  }
  out.count = out.coset_sizes.size();
  return out;
}

struct prook_report {
  std::size_t n = 0;
  std::uint32_t m = 0;
  std::uint64_t p = 0;
  std::size_t size = 0;
  bool size_matches = false;
  bool is_regular = false;
  bool is_inverse = false;
  bool idempotents_commute = false;
  bool stops_law = false;
  big_int census = 0;
  bool semisimple_census_ok = false;
  bool semisimple_expected = false;
};

// Inverse-monoid and semisimplicity checks for mpRo_n over F_p.
inline prook_report prook_checks(std::size_t n, std::uint32_t m, std::uint64_t p) {
  if (!prime_field::is_prime(p)) {
    throw precondition_error("prook_checks: p must be prime");
  }
  prook_report out;
  out.n = n;
  out.m = m;
  out.p = p;
  auto mon = partition_monoid(n, m, flavour::planar_rook);
  auto const& s = mon.table;
  out.size = s.size();
  out.size_matches = big_int(out.size) == partition_monoid_size(n, m, flavour::planar_rook);

  out.is_regular = true;
  out.is_inverse = true;
  for (std::uint32_t x = 0; x < s.size(); ++x) {
    std::size_t inverses = 0;
    bool regular = false;
    for (std::uint32_t y = 0; y < s.size(); ++y) {
      bool xyx = s.mul(s.mul(x, y), x) == x;
      regular = regular || xyx;
      if (xyx && s.mul(s.mul(y, x), y) == y) {
        ++inverses;
      }
    }
    out.is_regular = out.is_regular && regular;
    out.is_inverse = out.is_inverse && inverses == 1;
  }
  std::vector<std::uint32_t> idem;
  for (std::uint32_t x = 0; x < s.size(); ++x) {
    if (s.is_idempotent(x)) {
      idem.push_back(x);
    }
  }
  out.idempotents_commute = true;
  for (auto e : idem) {
    for (auto f : idem) {
      out.idempotents_commute = out.idempotents_commute && s.mul(e, f) == s.mul(f, e);
    }
  }

  // Stops law at each point: a straight strand against a pair of facing
  // stops leaves the stops; two facing stops close a loop.
  out.stops_law = true;
  auto id = partition_diagram::identity(n, m, flavour::planar_rook);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint32_t> ids = id.block_ids();
    ids[i] = static_cast<std::uint32_t>(2 * n);
    ids[n + i] = static_cast<std::uint32_t>(2 * n + 1);
    partition_diagram stops(n, ids, 0, m, flavour::planar_rook);
    partition_diagram looped(n, ids, 1, m, flavour::planar_rook);
    out.stops_law = out.stops_law && compose_partition(id, stops) == stops &&
                    compose_partition(stops, id) == stops &&
                    compose_partition(stops, stops) == looped;
  }

  // Sum over J-cells of r^2 times the dimension of the semisimple quotient
  // of F_p[C_m], with r = |L| / |H| the number of R-cells in J.
  auto cells = green_cells_bruteforce(s);
  auto group = cyclic_simples(m, p);
  for (std::size_t j = 0; j < cells.j_cells.size(); ++j) {
    std::size_t h = cells.h_cells[cells.j_h_cells[j].front()].size();
    std::size_t l = cells.l_cells[cells.j_l_cells[j].front()].size();
    big_int r = l / h;
    big_int hdim = (h == m) ? big_int(group.semisimple_dimension) : big_int(h);
    out.census += r * r * hdim;
  }
  out.semisimple_census_ok = out.census == big_int(out.size);
  out.semisimple_expected = m % p != 0;
  return out;
}

struct prook_gap {
  big_int bound = 0;
  std::size_t range_k = 0;
  std::size_t range_l = 0;
  big_int range_bound = 0;
};

// min{C(n,k), C(n,l)} and the bound on the range
// floor(n/2 - sqrt n) .. ceil(n/2 + sqrt n), clamped to 0..n.
inline prook_gap prook_gap_bound(std::size_t n, std::size_t k, std::size_t l) {
  if (k > l || l > n) {
    throw precondition_error("prook_gap_bound: need 0 <= k <= l <= n");
  }
  prook_gap out;
  auto const nn = static_cast<std::int64_t>(n);
  out.bound = std::min(binomial(nn, static_cast<std::int64_t>(k)),
                       binomial(nn, static_cast<std::int64_t>(l)));
  std::int64_t low = std::max<std::int64_t>(floor_half_minus_root(n), 0);
  out.range_k = static_cast<std::size_t>(low);
  out.range_l = std::min<std::size_t>(n, n - static_cast<std::size_t>(low));
  out.range_bound = binomial(nn, low);
  return out;
}

struct motzkin_apex {
  std::size_t through = 0;
  std::size_t j_size = 0;
  std::size_t l_size = 0;
  std::size_t h_size = 0;
  bool idempotent = false;
  bool h_cyclic = false;
  std::size_t characters = 0;
};

struct motzkin_report {
  std::size_t n = 0;
  std::uint32_t m = 0;
  std::size_t size = 0;
  std::size_t base_size = 0;
  bool inflation_ok = false;
  bool apex_by_through = false;
  std::vector<motzkin_apex> apexes;
  cell_table cells;

  bool ok() const {
    if (!inflation_ok || !apex_by_through) {
      return false;
    }
    return std::all_of(apexes.begin(), apexes.end(), [&](motzkin_apex const& a) {
      return a.idempotent && a.h_cyclic && a.h_size == m && a.characters <= m;
    });
  }
};

// Cell structure of mMo_n against Mo_n; p = 0 counts characters over a
// splitting field of characteristic zero.
inline motzkin_report motzkin_structure(std::size_t n, std::uint32_t m, std::uint64_t p = 0) {
  motzkin_report out;
  out.n = n;
  out.m = m;
  auto mon = partition_monoid(n, m, flavour::motzkin);
  auto base = partition_monoid(n, 1, flavour::motzkin);
  out.size = mon.table.size();
  out.base_size = base.table.size();
  out.cells = green_cells_bruteforce(mon.table);
  auto base_cells = green_cells_bruteforce(base.table);
  out.inflation_ok = out.size == std::size_t{m} * out.base_size &&
                     out.cells.j_cells.size() == base_cells.j_cells.size();
  out.apex_by_through = true;
  auto group = cyclic_simples(m, p);
  for (std::size_t j = 0; j < out.cells.j_cells.size(); ++j) {
    auto const& cell = out.cells.j_cells[j];
    motzkin_apex apex;
    apex.through = mon.elements[cell.front()].through();
    for (auto x : cell) {
      out.apex_by_through = out.apex_by_through && mon.elements[x].through() == apex.through;
    }
    apex.j_size = cell.size();
    apex.l_size = out.cells.l_cells[out.cells.j_l_cells[j].front()].size();
    std::uint32_t hid = out.cells.j_h_cells[j].front();
    for (auto h : out.cells.j_h_cells[j]) {
      if (out.cells.h_idempotent[h]) {
        hid = h;
      }
    }
    apex.h_size = out.cells.h_cells[hid].size();
    apex.idempotent = out.cells.j_idempotent[j];
    apex.h_cyclic = out.cells.h_idempotent[hid] &&
                    cyclic_generator(mon.table, out.cells.h_cells[hid]).has_value();
    apex.characters = group.count;
    out.apexes.push_back(apex);
  }
  // Base J-cells, matched by size, inflate by m.
  std::vector<std::size_t> ours;
  std::vector<std::size_t> theirs;
  for (auto const& c : out.cells.j_cells) {
    ours.push_back(c.size());
  }
  for (auto const& c : base_cells.j_cells) {
    theirs.push_back(c.size() * m);
  }
  std::sort(ours.begin(), ours.end());
  std::sort(theirs.begin(), theirs.end());
  out.inflation_ok = out.inflation_ok && ours == theirs;
  return out;
}

}  // namespace cyclotl

