#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cells.hpp"
#include "combinatorics.hpp"
#include "diagram.hpp"
#include "field.hpp"
#include "monoid.hpp"
#include "reptheory.hpp"
#include "variants.hpp"
#include "words.hpp"

namespace cyclotl::acceptance {

struct outcome {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
};

struct options {
  std::uint64_t seed = 1;
};

namespace detail {

inline std::vector<std::uint64_t> const& test_primes() {
  static std::vector<std::uint64_t> const primes{5, 7, 13, 31};
  return primes;
}

// Fields used for the formula and boundary checks: generic delta, delta in
// {0, 1} over Q and each F_p, and zeta_m in F_p for m | p-1.
inline std::vector<field_spec> test_fields(std::uint64_t seed) {
  std::vector<field_spec> out{field_spec::generic(seed), field_spec::rational_delta(0),
                              field_spec::rational_delta(1)};
  for (auto p : test_primes()) {
    out.push_back(field_spec::prime_delta(p, 0));
    out.push_back(field_spec::prime_delta(p, 1));
    for (std::uint32_t m : {2u, 3u, 4u, 6u}) {
      if ((p - 1) % m == 0) {
        out.push_back(field_spec::with_root(p, m, smallest_root_of_unity(p, m)));
      }
    }
  }
  return out;
}

inline outcome counting(options const&) {
  outcome r{1, "counting", true, "", 0, 10};
  std::size_t cases = 0;
  for (std::size_t n = 1; n <= 10; ++n) {
    for (std::uint32_t m : {1u, 2u, 3u, 5u}) {
      auto all = enumerate_monoid(n, m);
      ++cases;
      if (big_int(all.size()) != m * catalan(static_cast<std::int64_t>(n))) {
        r.pass = false;
        r.detail += " n=" + std::to_string(n) + ",m=" + std::to_string(m);
      }
    }
  }
  r.detail = std::to_string(cases) + " cases" + r.detail;
  return r;
}

inline outcome cell_picture(options const&) {
  outcome r{2, "cell_picture_2TL4", true, "", 0, 1};
  auto mon = tl_monoid(4, 2);
  auto t = green_cells_bruteforce(mon.table);
  std::vector<std::size_t> sizes(3, 0);
  bool shapes = t.j_cells.size() == 3;
  for (std::size_t j = 0; j < t.j_cells.size() && shapes; ++j) {
    std::size_t k = mon.elements[t.j_cells[j].front()].through();
    sizes[k / 2] = t.j_cells[j].size();
    std::size_t rows = t.j_r_cells[j].size();
    std::size_t cols = t.j_l_cells[j].size();
    shapes = shapes && rows == cols && rows * cols == t.j_h_cells[j].size() &&
             t.j_cells[j].size() == 2 * rows * cols;
    for (auto l : t.j_l_cells[j]) {
      shapes = shapes && t.l_cells[l].size() == 2 * rows;
    }
    for (auto rc : t.j_r_cells[j]) {
      shapes = shapes && t.r_cells[rc].size() == 2 * cols;
    }
  }
  bool h_ok = true;
  for (std::size_t h = 0; h < t.h_cells.size(); ++h) {
    h_ok = h_ok && t.h_cells[h].size() == 2;
    if (t.h_idempotent[h]) {
      h_ok = h_ok && cyclic_generator(mon.table, t.h_cells[h]).has_value();
    }
  }
  r.pass = shapes && h_ok && sizes == std::vector<std::size_t>{8, 18, 2};
  r.detail = "J sizes by through strands (" + std::to_string(sizes[0]) + "," +
             std::to_string(sizes[1]) + "," + std::to_string(sizes[2]) + ")" +
             (h_ok ? ", H-cells C2" : ", H-cell mismatch") + (shapes ? ", grids ok" : ", grid mismatch");
  return r;
}

inline outcome structural(options const&) {
  outcome r{3, "structural_vs_bruteforce", true, "", 0, 30};
  std::size_t cases = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::uint32_t m = 1; m <= 3; ++m) {
      auto mon = tl_monoid(n, m);
      auto t = green_cells_bruteforce(mon.table);
      bool ok = t.j_is_total_order();
      std::vector<std::size_t> through(t.j_cells.size());
      for (std::size_t j = 0; j < t.j_cells.size(); ++j) {
        through[j] = mon.elements[t.j_cells[j].front()].through();
        auto want = cell_sizes_structural(n, m, through[j]);
        auto const& cell = t.j_cells[j];
        ok = ok && cell.size() == want.j_size &&
             t.l_cells[t.l_class[cell.front()]].size() == want.l_size &&
             t.r_cells[t.r_class[cell.front()]].size() == want.r_size &&
             t.h_cells[t.h_class[cell.front()]].size() == want.h_size;
        for (auto x : cell) {
          ok = ok && mon.elements[x].through() == through[j];
        }
      }
      for (std::size_t a = 0; a < through.size(); ++a) {
        for (std::size_t b = 0; b < through.size(); ++b) {
          ok = ok && t.j_leq[a][b] == (through[b] <= through[a]);
        }
      }
      ++cases;
      if (!ok) {
        r.pass = false;
        r.detail += " n=" + std::to_string(n) + ",m=" + std::to_string(m);
      }
    }
  }
  r.detail = std::to_string(cases) + " monoids" + r.detail;
  return r;
}

inline word random_word(std::mt19937_64& rng, std::size_t n, std::uint32_t m, std::size_t length) {
  word w{n, m, {}};
  std::uniform_int_distribution<int> kind(0, 9);
  std::uniform_int_distribution<std::size_t> index(1, n - 1);
  for (std::size_t i = 0; i < length; ++i) {
    int k = kind(rng);
    if (k == 0) {
      w.letters.push_back(letter::o());
    } else if (k == 1) {
      std::size_t a = index(rng);
      std::size_t b = index(rng);
      w.letters.push_back(letter::block(std::max(a, b), std::min(a, b)));
    } else {
      w.letters.push_back(letter::hook(index(rng)));
    }
  }
  return w;
}

inline outcome normal_forms(options const& opt) {
  outcome r{4, "normal_form_soundness", true, "", 0, 30};
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> pick_n(2, 6);
  std::uniform_int_distribution<std::uint32_t> pick_m(1, 4);
  std::uniform_int_distribution<std::size_t> pick_len(0, 50);
  std::size_t bad_words = 0;
  std::size_t rewrites = 0;
  for (int i = 0; i < 10000; ++i) {
    word w = random_word(rng, pick_n(rng), pick_m(rng), pick_len(rng));
    normalize_stats stats;
    normal_form nf = normalize(w, &stats);
    rewrites += stats.total();
    if (!(eval_word(normal_form_to_word(nf, w.n, w.modulus)) == eval_word(w))) {
      ++bad_words;
    }
  }
  std::size_t bad_round_trips = 0;
  std::size_t diagrams = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::uint32_t m = 1; m <= 3; ++m) {
      std::vector<normal_form> seen;
      for (auto const& d : enumerate_monoid(n, m)) {
        ++diagrams;
        normal_form nf = diagram_to_normal_form(d);
        word w = normal_form_to_word(nf, n, m);
        if (!(eval_word(w) == d) || !(normalize(w) == nf)) {
          ++bad_round_trips;
        }
        seen.push_back(nf);
      }
      std::sort(seen.begin(), seen.end(), [](normal_form const& a, normal_form const& b) {
        return std::tie(a.loops, a.blocks) < std::tie(b.loops, b.blocks);
      });
      if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
        ++bad_round_trips;
      }
    }
  }
  r.pass = bad_words == 0 && bad_round_trips == 0;
  r.detail = "10000 words (" + std::to_string(rewrites) + " rewrites, " +
             std::to_string(bad_words) + " bad), " + std::to_string(diagrams) + " diagrams (" +
             std::to_string(bad_round_trips) + " bad)";
  return r;
}

inline outcome formula_vs_gram(options const& opt) {
  outcome r{5, "formula_vs_gram", true, "", 0, 120};
  std::size_t cases = 0;
  std::size_t mismatches = 0;
  std::size_t shifted_differs = 0;
  std::size_t shifted_undefined = 0;
  for (auto const& f : test_fields(opt.seed)) {
    for (std::size_t n = 1; n <= 10; ++n) {
      for (std::size_t k = n % 2; k <= n; k += 2) {
        ++cases;
        std::size_t oracle = gram_rank(n, k, f);
        auto standard = dim_simple_formula(n, k, f, convention::standard);
        if (!standard || *standard != big_int(oracle)) {
          ++mismatches;
          if (mismatches <= 3) {
            r.detail += " [" + f.describe() + " n=" + std::to_string(n) + " k=" +
                        std::to_string(k) + "]";
          }
        }
        auto shifted = dim_simple_formula(n, k, f, convention::shifted);
        if (!shifted) {
          ++shifted_undefined;
        } else if (*shifted != big_int(oracle)) {
          ++shifted_differs;
        }
      }
    }
  }
  r.pass = mismatches == 0;
  r.detail = std::to_string(cases) + " cases, " + std::to_string(mismatches) +
             " mismatches; shifted convention: " + std::to_string(shifted_differs) + " differ, " +
             std::to_string(shifted_undefined) + " undefined" + r.detail;
  return r;
}

inline outcome monoid_vs_algebra(options const&) {
  outcome r{6, "monoid_vs_algebra", true, "", 0, 120};
  std::size_t cases = 0;
  std::size_t mismatches = 0;
  for (std::uint32_t m : {2u, 3u, 4u, 6u}) {
    for (auto p : test_primes()) {
      if ((p - 1) % m != 0) {
        continue;
      }
      auto f = field_spec::with_root(p, m, smallest_root_of_unity(p, m));
      prime_field field(p);
      for (std::size_t n = 1; n <= 8; ++n) {
        for (std::size_t k = n % 2; k <= n; k += 2) {
          for (std::uint32_t t = 0; t < m; ++t) {
            ++cases;
            auto ft = f.with_delta_p(field.pow(f.zeta, t));
            if (monoid_simple_dim(n, m, k, t, f) != gram_rank(n, k, ft)) {
              ++mismatches;
            }
          }
        }
      }
    }
  }
  r.pass = mismatches == 0;
  r.detail = std::to_string(cases) + " cases, " + std::to_string(mismatches) + " mismatches";
  return r;
}

inline outcome boundary_dims(options const& opt) {
  outcome r{7, "boundary_dims", true, "", 0, 60};
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::size_t failures_k0 = 0;
  std::size_t failures_k1 = 0;
  std::string first;
  for (auto const& f : test_fields(opt.seed)) {
    for (std::size_t n = 1; n <= 10; ++n) {
      for (std::size_t k : {std::size_t{0}, std::size_t{1}, n}) {
        if ((n - k) % 2 != 0 || (k == n && k <= 1)) {
          continue;
        }
        ++cases;
        std::size_t d = gram_rank(n, k, f);
        if (d != 1) {
          ++failures;
          failures_k0 += k == 0;
          failures_k1 += k == 1;
          if (first.empty()) {
            first = " first: " + f.describe() + " n=" + std::to_string(n) + " k=" +
                    std::to_string(k) + " dim=" + std::to_string(d);
          }
        }
      }
    }
  }
  r.pass = failures == 0;
  r.detail = std::to_string(cases) + " cases, " + std::to_string(failures) + " with dim != 1 (k=0: " +
             std::to_string(failures_k0) + ", k=1: " + std::to_string(failures_k1) + ")" + first;
  return r;
}

inline outcome gap_consistency(options const&) {
  outcome r{8, "gap_bound_consistency", true, "", 0, 60};
  std::size_t cases = 0;
  std::size_t violations = 0;
  for (std::size_t n = 9; n <= 16; ++n) {
    for (std::uint32_t m : {2u, 3u, 5u}) {
      std::uint64_t p = auto_prime(n, m);
      auto f = field_spec::with_root(p, m, smallest_root_of_unity(p, m));
      std::size_t lo = ceil_root_minus_two(n);
      std::size_t hi = std::min<std::size_t>(floor_two_root(n), n);
      for (std::size_t k = lo; k <= hi; ++k) {
        for (std::size_t l = k; l <= hi; ++l) {
          truncation_spec spec{n, m, k, l};
          try {
            spec.validate();
          } catch (precondition_error const&) {
            continue;
          }
          ++cases;
          auto g = gap_bounds(spec, f);
          if (!g.hypotheses_hold || !g.min_simple_dim || !g.bound_respected) {
            ++violations;
            if (violations <= 3) {
              r.detail += " [n=" + std::to_string(n) + " m=" + std::to_string(m) + " k=" +
                          std::to_string(k) + " l=" + std::to_string(l) + "]";
            }
          }
        }
      }
    }
  }
  r.pass = violations == 0 && cases > 0;
  r.detail = std::to_string(cases) + " truncations, " + std::to_string(violations) +
             " violations" + r.detail;
  return r;
}

inline outcome connectivity_homs(options const&) {
  outcome r{9, "connectivity_and_homs", true, "", 0, 60};
  std::size_t cases = 0;
  std::size_t not_well = 0;
  std::size_t not_well_wide = 0;
  std::size_t nonzero_homs = 0;
  std::string first;
  for (std::size_t n : {4u, 5u}) {
    for (std::uint32_t m : {2u, 3u}) {
      for (std::size_t k = 0; k <= n; ++k) {
        for (std::size_t l = k; l <= n; ++l) {
          truncation_spec spec{n, m, k, l};
          try {
            spec.validate();
          } catch (precondition_error const&) {
            continue;
          }
          ++cases;
          auto t = truncate(spec);
          if (!connectivity(t.table).well) {
            ++not_well;
            // Widest non-unit cell; the connectivity argument needs >= 3.
            std::size_t widest = spec.highest() == n ? n - 2 : spec.highest();
            not_well_wide += widest >= 3;
            if (first.empty()) {
              first = " first: n=" + std::to_string(n) + " m=" + std::to_string(m) + " k=" +
                      std::to_string(k) + " l=" + std::to_string(l);
            }
          }
          for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
            if (m % p != 0 && additive_homs(t.table, p) != 0) {
              ++nonzero_homs;
            }
          }
        }
      }
    }
  }
  r.pass = not_well == 0 && nonzero_homs == 0;
  r.detail = std::to_string(cases) + " truncations, " + std::to_string(not_well) +
             " not well-connected (" + std::to_string(not_well_wide) +
             " with >= 3 non-unit through strands), " + std::to_string(nonzero_homs) +
             " nonzero hom spaces for p not dividing m" + first;
  return r;
}

inline outcome periods(options const&) {
  outcome r{10, "periods", true, "", 0, 30};
  std::size_t elements = 0;
  std::size_t failures = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::uint32_t m : {2u, 3u, 4u, 6u}) {
      auto mon = tl_monoid(n, m);
      for (std::uint32_t x = 0; x < mon.table.size(); ++x) {
        ++elements;
        if (m % period_index(mon.table, x).period != 0) {
          ++failures;
        }
      }
      if (period_index(mon.table, mon.index_of(generator_o(n, m))).period != m) {
        ++failures;
      }
    }
  }
  r.pass = failures == 0;
  r.detail = std::to_string(elements) + " elements, " + std::to_string(failures) + " failures";
  return r;
}

inline outcome variants(options const&) {
  outcome r{11, "variants", true, "", 0, 120};
  std::size_t relations = 0;
  std::size_t bad_relations = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::uint32_t m = 1; m <= 3; ++m) {
      for (auto const& rel : ppa_relations(n, m)) {
        ++relations;
        bad_relations += !rel.holds;
      }
    }
  }
  std::size_t bad_embeddings = 0;
  for (std::size_t n = 1; n <= 2; ++n) {
    for (std::uint32_t m = 1; m <= 3; ++m) {
      bad_embeddings += !embed_ppa_in_tl(n, m, n <= 2).ok();
    }
  }
  std::size_t bad_rook = 0;
  std::size_t census_pass = 0;
  std::size_t census_fail = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint32_t m = 1; m <= 3; ++m) {
      for (std::uint64_t p : {2u, 3u, 5u}) {
        auto rep = prook_checks(n, m, p);
        bool census_as_expected = rep.semisimple_census_ok == rep.semisimple_expected;
        bad_rook += !(rep.size_matches && rep.is_inverse && rep.idempotents_commute &&
                      rep.stops_law && census_as_expected);
        (rep.semisimple_census_ok ? census_pass : census_fail) += 1;
      }
    }
  }
  bool bound_ok = prook_gap_bound(4, 1, 3).bound == 4;
  r.pass = bad_relations == 0 && bad_embeddings == 0 && bad_rook == 0 && bound_ok;
  r.detail = std::to_string(relations) + " relations (" + std::to_string(bad_relations) +
             " bad), embeddings bad " + std::to_string(bad_embeddings) + ", rook bad " +
             std::to_string(bad_rook) + " (census " + std::to_string(census_pass) + " pass, " +
             std::to_string(census_fail) + " fail as p|m), prook_gap_bound(4,1,3)=" +
             prook_gap_bound(4, 1, 3).bound.str();
  return r;
}

// Seeded parts of the suite run twice in-process must agree.
inline outcome determinism(options const& opt) {
  outcome r{12, "determinism", true, "", 0, 60};
  auto run = [&] {
    std::ostringstream out;
    for (auto const& f : test_fields(opt.seed)) {
      out << f.describe() << ":" << f.delta_p << ":" << f.delta_alt << "\n";
    }
    std::mt19937_64 rng(opt.seed);
    for (int i = 0; i < 200; ++i) {
      word w = random_word(rng, 5, 3, 30);
      out << render(w) << " -> " << render(normalize(w)) << "\n";
    }
    return out.str();
  };
  std::string first = run();
  std::string second = run();
  r.pass = first == second;
  r.detail = std::to_string(first.size()) + " bytes compared";
  return r;
}

}  // namespace detail

inline std::vector<std::function<outcome(options const&)>> const& criteria() {
  static std::vector<std::function<outcome(options const&)>> const all{
      detail::counting,       detail::cell_picture,      detail::structural,
      detail::normal_forms,   detail::formula_vs_gram,   detail::monoid_vs_algebra,
      detail::boundary_dims,  detail::gap_consistency,   detail::connectivity_homs,
      detail::periods,        detail::variants,          detail::determinism};
  return all;
}

inline outcome run_criterion(int id, options const& opt) {
  if (id < 1 || id > static_cast<int>(criteria().size())) {
    throw precondition_error("unknown criterion " + std::to_string(id));
  }
  auto start = std::chrono::steady_clock::now();
  outcome r;
  try {
    r = criteria()[id - 1](opt);
  } catch (std::exception const& e) {
    static char const* const names[] = {
        "counting",         "cell_picture_2TL4",     "structural_vs_bruteforce",
        "normal_form_soundness", "formula_vs_gram", "monoid_vs_algebra",
        "boundary_dims",    "gap_bound_consistency", "connectivity_and_homs",
        "periods",          "variants",              "determinism"};
    r.id = id;
    r.name = names[id - 1];
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// "criterion NN name: PASS|FAIL detail", without timings.
inline std::string format_line(outcome const& r) {
  std::ostringstream out;
  out << "criterion " << (r.id < 10 ? "0" : "") << r.id << " " << r.name << ": "
      << (r.pass ? "PASS" : "FAIL") << " " << r.detail;
  return out.str();
}

}  // namespace cyclotl::acceptance
