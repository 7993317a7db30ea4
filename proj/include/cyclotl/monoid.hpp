#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "union_find.hpp"

namespace cyclotl {

// Largest monoid the brute-force cell computation accepts.
inline constexpr std::size_t brute_force_limit = 5000;

// A finite monoid given by its multiplication table over indices 0..size-1.
class finite_monoid {
 public:
  finite_monoid() = default;

  finite_monoid(std::size_t size, std::vector<std::uint32_t> table, std::uint32_t identity,
                std::optional<std::uint32_t> zero = std::nullopt)
      : _size(size), _table(std::move(table)), _identity(identity), _zero(zero) {
    if (_table.size() != size * size || identity >= size || (zero && *zero >= size)) {
      throw precondition_error("finite_monoid: inconsistent table");
    }
  }

  std::size_t size() const noexcept { return _size; }
  std::uint32_t identity() const noexcept { return _identity; }
  std::optional<std::uint32_t> zero() const noexcept { return _zero; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return _table[std::size_t{a} * _size + b];
  }

  bool is_idempotent(std::uint32_t a) const noexcept { return mul(a, a) == a; }

  bool is_associative() const {
    for (std::uint32_t a = 0; a < _size; ++a) {
      for (std::uint32_t b = 0; b < _size; ++b) {
        std::uint32_t ab = mul(a, b);
        for (std::uint32_t c = 0; c < _size; ++c) {
          if (mul(ab, c) != mul(a, mul(b, c))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool has_identity_laws() const {
    for (std::uint32_t a = 0; a < _size; ++a) {
      if (mul(_identity, a) != a || mul(a, _identity) != a) {
        return false;
      }
      if (_zero && (mul(*_zero, a) != *_zero || mul(a, *_zero) != *_zero)) {
        return false;
      }
    }
    return true;
  }

  // Elements with a two-sided inverse.
  std::vector<std::uint32_t> units() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t a = 0; a < _size; ++a) {
      for (std::uint32_t b = 0; b < _size; ++b) {
        if (mul(a, b) == _identity && mul(b, a) == _identity) {
          out.push_back(a);
          break;
        }
      }
    }
    return out;
  }

  bool is_group() const { return units().size() == _size; }

 private:
  std::size_t _size = 0;
  std::vector<std::uint32_t> _table;
  std::uint32_t _identity = 0;
  std::optional<std::uint32_t> _zero;
};

// A finite monoid together with the elements its indices stand for.
template <typename T>
struct concrete_monoid {
  std::vector<T> elements;
  finite_monoid table;
  std::unordered_map<T, std::uint32_t> index;

  std::uint32_t index_of(T const& x) const {
    auto it = index.find(x);
    if (it == index.end()) {
      throw precondition_error("element not in monoid");
    }
    return it->second;
  }
};

// Tabulates the products of a closed set of elements. The identity is found
// by search; products outside the set are an error.
template <typename T, typename Mul>
concrete_monoid<T> make_monoid(std::vector<T> elements, Mul mul) {
  std::size_t const size = elements.size();
  if (size > brute_force_limit) {
    throw size_guard_error("make_monoid: more than " + std::to_string(brute_force_limit) +
                           " elements");
  }
  std::unordered_map<T, std::uint32_t> index;
  for (std::uint32_t i = 0; i < size; ++i) {
    if (!index.emplace(elements[i], i).second) {
      throw precondition_error("make_monoid: repeated element");
    }
  }
  std::vector<std::uint32_t> table(size * size);
  for (std::uint32_t a = 0; a < size; ++a) {
    for (std::uint32_t b = 0; b < size; ++b) {
      auto it = index.find(mul(elements[a], elements[b]));
      if (it == index.end()) {
        throw precondition_error("make_monoid: set not closed under multiplication");
      }
      table[std::size_t{a} * size + b] = it->second;
    }
  }
  std::optional<std::uint32_t> identity;
  for (std::uint32_t e = 0; e < size && !identity; ++e) {
    bool ok = true;
    for (std::uint32_t a = 0; a < size && ok; ++a) {
      ok = table[std::size_t{e} * size + a] == a && table[std::size_t{a} * size + e] == a;
    }
    if (ok) {
      identity = e;
    }
  }
  if (!identity) {
    throw precondition_error("make_monoid: no identity element");
  }
  finite_monoid m(size, std::move(table), *identity);
  return {std::move(elements), std::move(m), std::move(index)};
}

// Cyclic group of order m: element i is g^i.
inline finite_monoid cyclic_group(std::size_t m) {
  std::vector<std::uint32_t> table(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      table[a * m + b] = static_cast<std::uint32_t>((a + b) % m);
    }
  }
  return {m, std::move(table), 0};
}

// The monoid {1, x, ..., x^(index+period-1)} with x^(index+period) = x^index.
inline finite_monoid monogenic_monoid(std::size_t index, std::size_t period) {
  if (index < 1 || period < 1) {
    throw precondition_error("monogenic_monoid: index and period must be positive");
  }
  std::size_t const size = index + period;
  auto reduce = [&](std::size_t e) { return e < size ? e : index + (e - index) % period; };
  std::vector<std::uint32_t> table(size * size);
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      table[a * size + b] = static_cast<std::uint32_t>(reduce(a + b));
    }
  }
  return {size, std::move(table), 0};
}

// Green's structure. J-cells are listed so that a <=_lr b implies a comes
// first; a <=_lr b means b = c a d for some c, d.
struct cell_table {
  std::vector<std::uint32_t> l_class, r_class, j_class, h_class;
  std::vector<std::vector<std::uint32_t>> l_cells, r_cells, j_cells, h_cells;
  std::vector<std::vector<bool>> j_leq;
  std::vector<bool> h_idempotent;
  std::vector<bool> j_idempotent;
  // For each J-cell, its L-, R- and H-cell ids.
  std::vector<std::vector<std::uint32_t>> j_l_cells, j_r_cells, j_h_cells;

  bool j_is_total_order() const {
    for (std::size_t a = 0; a < j_cells.size(); ++a) {
      for (std::size_t b = 0; b < j_cells.size(); ++b) {
        if (!j_leq[a][b] && !j_leq[b][a]) {
          return false;
        }
      }
    }
    return true;
  }
};

namespace detail {

class bitset {
 public:
  explicit bitset(std::size_t n) : _words((n + 63) / 64, 0) {}
  void set(std::size_t i) { _words[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (_words[i / 64] >> (i % 64)) & 1; }
  bitset& operator|=(bitset const& other) {
    for (std::size_t w = 0; w < _words.size(); ++w) {
      _words[w] |= other._words[w];
    }
    return *this;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : _words) {
      c += static_cast<std::size_t>(__builtin_popcountll(w));
    }
    return c;
  }
  friend bool operator<(bitset const& a, bitset const& b) { return a._words < b._words; }
  friend bool operator==(bitset const& a, bitset const& b) { return a._words == b._words; }

 private:
  std::vector<std::uint64_t> _words;
};

// Groups elements with equal keys; ids follow first appearance.
inline std::vector<std::uint32_t> classes_by_key(std::vector<bitset> const& keys) {
  std::map<bitset, std::uint32_t> ids;
  std::vector<std::uint32_t> out(keys.size());
  for (std::size_t a = 0; a < keys.size(); ++a) {
    auto [it, fresh] = ids.emplace(keys[a], static_cast<std::uint32_t>(ids.size()));
    out[a] = it->second;
  }
  return out;
}

}  // namespace detail

// Green's relations by brute force: principal right ideals aS, left ideals
// Sa and two-sided ideals SaS computed from the multiplication table.
inline cell_table green_cells_bruteforce(finite_monoid const& m) {
  std::size_t const size = m.size();
  if (size > brute_force_limit) {
    throw size_guard_error("green_cells_bruteforce: more than " +
                           std::to_string(brute_force_limit) + " elements");
  }
  std::vector<detail::bitset> right(size, detail::bitset(size));
  std::vector<detail::bitset> left(size, detail::bitset(size));
  for (std::uint32_t a = 0; a < size; ++a) {
    for (std::uint32_t s = 0; s < size; ++s) {
      right[a].set(m.mul(a, s));
      left[a].set(m.mul(s, a));
    }
  }
  std::vector<std::uint32_t> r_raw = detail::classes_by_key(right);
  std::vector<std::uint32_t> l_raw = detail::classes_by_key(left);

  union_find joined(size);
  {
    std::vector<std::uint32_t> first_r(size, 0xffffffffu);
    std::vector<std::uint32_t> first_l(size, 0xffffffffu);
    for (std::uint32_t a = 0; a < size; ++a) {
      if (first_r[r_raw[a]] == 0xffffffffu) {
        first_r[r_raw[a]] = a;
      }
      if (first_l[l_raw[a]] == 0xffffffffu) {
        first_l[l_raw[a]] = a;
      }
      joined.unite(a, first_r[r_raw[a]]);
      joined.unite(a, first_l[l_raw[a]]);
    }
  }

  // One representative per J-class, with its two-sided ideal.
  std::vector<std::uint32_t> reps;
  std::vector<std::uint32_t> rep_of_root(size, 0xffffffffu);
  for (std::uint32_t a = 0; a < size; ++a) {
    std::uint32_t r = joined.find(a);
    if (rep_of_root[r] == 0xffffffffu) {
      rep_of_root[r] = static_cast<std::uint32_t>(reps.size());
      reps.push_back(a);
    }
  }
  std::vector<detail::bitset> ideal(reps.size(), detail::bitset(size));
  for (std::size_t c = 0; c < reps.size(); ++c) {
    for (std::uint32_t s = 0; s < size; ++s) {
      ideal[c] |= left[m.mul(reps[c], s)];
    }
  }
  std::vector<std::size_t> order(reps.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return ideal[x].count() > ideal[y].count();
  });
  std::vector<std::uint32_t> j_id_of_raw(reps.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    j_id_of_raw[order[pos]] = static_cast<std::uint32_t>(pos);
  }

  cell_table t;
  std::size_t const nj = reps.size();
  t.j_class.resize(size);
  t.j_cells.resize(nj);
  for (std::uint32_t a = 0; a < size; ++a) {
    t.j_class[a] = j_id_of_raw[rep_of_root[joined.find(a)]];
    t.j_cells[t.j_class[a]].push_back(a);
  }
  t.j_leq.assign(nj, std::vector<bool>(nj, false));
  for (std::size_t x = 0; x < nj; ++x) {
    for (std::size_t y = 0; y < nj; ++y) {
      t.j_leq[j_id_of_raw[x]][j_id_of_raw[y]] = ideal[x].test(reps[y]);
    }
  }

  // Renumber L, R and H classes in order of (J-cell, first element).
  auto renumber = [&](std::vector<std::uint32_t> const& raw, std::vector<std::uint32_t>& cls,
                      std::vector<std::vector<std::uint32_t>>& cells) {
    std::map<std::uint32_t, std::uint32_t> ids;
    cls.resize(size);
    for (auto const& members : t.j_cells) {
      for (auto a : members) {
        auto [it, fresh] = ids.emplace(raw[a], static_cast<std::uint32_t>(ids.size()));
        cls[a] = it->second;
        if (fresh) {
          cells.emplace_back();
        }
        cells[it->second].push_back(a);
      }
    }
  };
  renumber(l_raw, t.l_class, t.l_cells);
  renumber(r_raw, t.r_class, t.r_cells);
  std::vector<std::uint32_t> h_raw(size);
  for (std::uint32_t a = 0; a < size; ++a) {
    h_raw[a] = t.l_class[a] * static_cast<std::uint32_t>(size) + t.r_class[a];
  }
  renumber(h_raw, t.h_class, t.h_cells);
  for (auto& cells : {&t.l_cells, &t.r_cells, &t.h_cells}) {
    for (auto& c : *cells) {
      std::sort(c.begin(), c.end());
    }
  }

  t.h_idempotent.assign(t.h_cells.size(), false);
  t.j_idempotent.assign(nj, false);
  for (std::uint32_t a = 0; a < size; ++a) {
    if (m.is_idempotent(a)) {
      t.h_idempotent[t.h_class[a]] = true;
      t.j_idempotent[t.j_class[a]] = true;
    }
  }

  t.j_l_cells.resize(nj);
  t.j_r_cells.resize(nj);
  t.j_h_cells.resize(nj);
  auto attach = [&](std::vector<std::vector<std::uint32_t>> const& cells,
                    std::vector<std::vector<std::uint32_t>>& into) {
    for (std::uint32_t c = 0; c < cells.size(); ++c) {
      into[t.j_class[cells[c].front()]].push_back(c);
    }
  };
  attach(t.l_cells, t.j_l_cells);
  attach(t.r_cells, t.j_r_cells);
  attach(t.h_cells, t.j_h_cells);
  return t;
}

// True when the elements form a cyclic group under the monoid product,
// witnessed by an element whose powers exhaust them.
inline std::optional<std::uint32_t> cyclic_generator(finite_monoid const& m,
                                                     std::vector<std::uint32_t> const& cell) {
  for (auto g : cell) {
    std::vector<std::uint32_t> powers{g};
    std::uint32_t x = m.mul(g, g);
    while (x != g && powers.size() <= cell.size()) {
      powers.push_back(x);
      x = m.mul(x, g);
    }
    if (x != g || powers.size() != cell.size()) {
      continue;
    }
    std::sort(powers.begin(), powers.end());
    std::vector<std::uint32_t> sorted = cell;
    std::sort(sorted.begin(), sorted.end());
    if (powers == sorted) {
      return g;
    }
  }
  return std::nullopt;
}

struct index_period {
  std::size_t index;
  std::size_t period;
};

// Smallest i, d >= 1 with x^i = x^(i+d).
inline index_period period_index(finite_monoid const& m, std::uint32_t x) {
  std::unordered_map<std::uint32_t, std::size_t> seen;
  std::uint32_t power = x;
  for (std::size_t e = 1;; ++e) {
    auto [it, fresh] = seen.emplace(power, e);
    if (!fresh) {
      return {it->second, e - it->second};
    }
    power = m.mul(power, x);
  }
}

struct connectivity_report {
  bool left = false;
  bool right = false;
  bool null = false;
  bool well = false;
};

// Connectivity of S \ G where G is the group of units: ab ~r a and ab ~l b
// for non-units a, b, closed under symmetry and transitivity; null means
// every non-unit is a product of two non-units.
inline connectivity_report connectivity(finite_monoid const& m) {
  std::size_t const size = m.size();
  std::vector<bool> unit(size, false);
  for (auto u : m.units()) {
    unit[u] = true;
  }
  std::vector<std::uint32_t> rest;
  for (std::uint32_t a = 0; a < size; ++a) {
    if (!unit[a]) {
      rest.push_back(a);
    }
  }
  connectivity_report out;
  if (rest.empty()) {
    out.left = out.right = out.null = out.well = true;
    return out;
  }
  union_find left(size);
  union_find right(size);
  std::vector<bool> product(size, false);
  for (auto a : rest) {
    for (auto b : rest) {
      std::uint32_t ab = m.mul(a, b);
      right.unite(a, ab);
      left.unite(b, ab);
      product[ab] = true;
    }
  }
  auto single_class = [&](union_find& uf) {
    std::uint32_t root = uf.find(rest.front());
    return std::all_of(rest.begin(), rest.end(), [&](std::uint32_t a) { return uf.find(a) == root; });
  };
  out.left = single_class(left);
  out.right = single_class(right);
  out.null = std::all_of(rest.begin(), rest.end(), [&](std::uint32_t a) { return product[a]; });
  out.well = (out.left && out.right && out.null) || m.is_group();
  return out;
}

// Dimension of the space of homomorphisms (S, *) -> (F_p, +).
inline std::size_t additive_homs(finite_monoid const& m, std::uint64_t p) {
  prime_field field(p);
  std::size_t const size = m.size();

  // Greedy generating set: add any element not yet generated.
  std::vector<std::uint32_t> gens;
  std::vector<bool> reached(size, false);
  std::vector<std::vector<std::uint64_t>> coeff(size);
  auto close = [&] {
    std::fill(reached.begin(), reached.end(), false);
    std::deque<std::uint32_t> queue{m.identity()};
    reached[m.identity()] = true;
    coeff[m.identity()].assign(gens.size(), 0);
    while (!queue.empty()) {
      std::uint32_t x = queue.front();
      queue.pop_front();
      for (std::size_t g = 0; g < gens.size(); ++g) {
        std::uint32_t y = m.mul(x, gens[g]);
        if (!reached[y]) {
          reached[y] = true;
          coeff[y] = coeff[x];
          coeff[y][g] = field.add(coeff[y][g], 1);
          queue.push_back(y);
        }
      }
    }
  };
  close();
  for (std::uint32_t a = 0; a < size; ++a) {
    if (!reached[a]) {
      gens.push_back(a);
      close();
    }
  }

  // f(x g) = f(x) + f(g) for all x and generators g, in terms of f on gens.
  matrix<std::uint64_t> constraints;
  for (std::uint32_t x = 0; x < size; ++x) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      std::uint32_t y = m.mul(x, gens[g]);
      std::vector<std::uint64_t> row(gens.size());
      bool nonzero = false;
      for (std::size_t h = 0; h < gens.size(); ++h) {
        std::uint64_t v = field.sub(coeff[x][h], coeff[y][h]);
        if (h == g) {
          v = field.add(v, 1);
        }
        row[h] = v;
        nonzero = nonzero || v != 0;
      }
      if (nonzero) {
        constraints.push_back(std::move(row));
      }
    }
  }
  return gens.size() - rank(field, std::move(constraints));
}

}  // namespace cyclotl
