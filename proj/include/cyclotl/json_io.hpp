#pragma once

#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cells.hpp"
#include "diagram.hpp"
#include "error.hpp"
#include "monoid.hpp"
#include "reptheory.hpp"
#include "variants.hpp"

namespace cyclotl {

using json = nlohmann::ordered_json;

// Numbers that fit in 64 bits stay numbers; larger ones become strings.
inline json to_json_number(big_int const& x) {
  if (x >= 0 && x <= big_int(std::numeric_limits<std::uint64_t>::max())) {
    return x.convert_to<std::uint64_t>();
  }
  return x.str();
}

inline json to_json(diagram const& d) {
  json pairs = json::array();
  for (auto [p, q] : d.shape().pairs()) {
    pairs.push_back({p, q});
  }
  return {{"n_bottom", d.bottom_count()},
          {"n_top", d.top_count()},
          {"pairs", std::move(pairs)},
          {"loops", d.loops()},
          {"modulus", d.modulus()}};
}

inline diagram diagram_from_json(json const& j) {
  try {
    std::vector<std::pair<point, point>> pairs;
    for (auto const& pq : j.at("pairs")) {
      if (pq.size() != 2) {
        throw parse_error("diagram json: each pair needs two points", 0);
      }
      pairs.emplace_back(pq[0].get<point>(), pq[1].get<point>());
    }
    skeleton s(j.at("n_bottom").get<std::size_t>(), j.at("n_top").get<std::size_t>(), pairs);
    return {std::move(s), j.at("loops").get<std::uint64_t>(), j.at("modulus").get<std::uint32_t>()};
  } catch (json::exception const& e) {
    throw parse_error(std::string("diagram json: ") + e.what(), 0);
  }
}

inline json to_json(partition_diagram const& d) {
  return {{"n", d.n()},
          {"blocks", d.blocks()},
          {"loops", d.loops()},
          {"modulus", d.modulus()},
          {"flavour", to_string(d.kind())}};
}

inline partition_diagram partition_from_json(json const& j) {
  try {
    return partition_diagram::from_blocks(
        j.at("n").get<std::size_t>(), j.at("blocks").get<std::vector<std::vector<std::int64_t>>>(),
        j.at("loops").get<std::uint64_t>(), j.at("modulus").get<std::uint32_t>(),
        parse_flavour(j.at("flavour").get<std::string>()));
  } catch (json::exception const& e) {
    throw parse_error(std::string("partition json: ") + e.what(), 0);
  }
}

// Compact one-line form: pairs separated by spaces, then "|loops".
inline std::string render_diagram(diagram const& d) {
  std::ostringstream out;
  bool first = true;
  for (auto [p, q] : d.shape().pairs()) {
    out << (first ? "" : " ") << p << ":" << q;
    first = false;
  }
  out << "|" << d.loops();
  return out.str();
}

inline std::string render_partition(partition_diagram const& d) {
  std::ostringstream out;
  bool first_block = true;
  for (auto const& block : d.blocks()) {
    out << (first_block ? "{" : " {");
    first_block = false;
    for (std::size_t i = 0; i < block.size(); ++i) {
      out << (i ? "," : "") << block[i];
    }
    out << "}";
  }
  out << "|" << d.loops();
  return out.str();
}

// Cell table with elements named by labels[i]. Each J-cell lists its
// R-cells as rows and L-cells as columns; entry (r, c) is the H-cell
// R_r cap L_c.
inline json cell_table_json(cell_table const& t, std::vector<std::string> const& labels,
                            std::vector<json> const& j_extra = {}) {
  json cells = json::array();
  for (std::size_t j = 0; j < t.j_cells.size(); ++j) {
    json cell;
    if (j < j_extra.size()) {
      for (auto const& [key, value] : j_extra[j].items()) {
        cell[key] = value;
      }
    }
    cell["size"] = t.j_cells[j].size();
    cell["idempotent"] = static_cast<bool>(t.j_idempotent[j]);
    cell["r_cells"] = t.j_r_cells[j].size();
    cell["l_cells"] = t.j_l_cells[j].size();
    json grid = json::array();
    for (auto r : t.j_r_cells[j]) {
      json row = json::array();
      for (auto l : t.j_l_cells[j]) {
        json h;
        for (auto hid : t.j_h_cells[j]) {
          auto const& members = t.h_cells[hid];
          if (t.r_class[members.front()] == r && t.l_class[members.front()] == l) {
            json names = json::array();
            for (auto x : members) {
              names.push_back(labels[x]);
            }
            h = {{"idempotent", static_cast<bool>(t.h_idempotent[hid])},
                 {"elements", std::move(names)}};
          }
        }
        row.push_back(std::move(h));
      }
      grid.push_back(std::move(row));
    }
    cell["grid"] = std::move(grid);
    cells.push_back(std::move(cell));
  }
  json order = json::array();
  for (auto const& row : t.j_leq) {
    json r = json::array();
    for (bool b : row) {
      r.push_back(b);
    }
    order.push_back(std::move(r));
  }
  return {{"j_cells", std::move(cells)}, {"j_leq", std::move(order)},
          {"j_total_order", t.j_is_total_order()}};
}

// Cell table of mTL_n, J-cells annotated with their through-strand count.
inline json tl_cells_json(std::size_t n, std::uint32_t m) {
  auto mon = tl_monoid(n, m);
  auto table = green_cells_bruteforce(mon.table);
  std::vector<std::string> labels;
  for (auto const& d : mon.elements) {
    labels.push_back(render_diagram(d));
  }
  std::vector<json> extra;
  for (auto const& cell : table.j_cells) {
    extra.push_back({{"through", mon.elements[cell.front()].through()}});
  }
  json out = {{"n", n}, {"m", m}, {"size", mon.elements.size()}};
  json cells = cell_table_json(table, labels, extra);
  for (auto const& [key, value] : cells.items()) {
    out[key] = value;
  }
  return out;
}

inline json partition_cells_json(std::size_t n, std::uint32_t m, flavour kind) {
  auto mon = partition_monoid(n, m, kind);
  auto table = green_cells_bruteforce(mon.table);
  std::vector<std::string> labels;
  for (auto const& d : mon.elements) {
    labels.push_back(render_partition(d));
  }
  std::vector<json> extra;
  for (auto const& cell : table.j_cells) {
    extra.push_back({{"through", mon.elements[cell.front()].through()}});
  }
  json out = {{"n", n}, {"m", m}, {"flavour", to_string(kind)}, {"size", mon.elements.size()}};
  json cells = cell_table_json(table, labels, extra);
  for (auto const& [key, value] : cells.items()) {
    out[key] = value;
  }
  return out;
}

inline std::string const& dim_csv_header() {
  static std::string const header = "n,m,k,t,formula_dim,oracle_dim,ssdim,convention";
  return header;
}

inline std::string dim_csv_row(dim_report const& r) {
  std::ostringstream out;
  out << r.n << "," << r.m << "," << r.k << "," << r.t << ","
      << (r.formula_dim ? r.formula_dim->str() : "") << ","
      << (r.oracle_dim ? std::to_string(*r.oracle_dim) : "") << "," << r.ssdim_value.str() << ","
      << to_string(r.used);
  return out.str();
}

inline json to_json(dim_report const& r) {
  return {{"n", r.n},
          {"m", r.m},
          {"k", r.k},
          {"t", r.t},
          {"formula_dim", r.formula_dim ? to_json_number(*r.formula_dim) : json(nullptr)},
          {"oracle_dim", r.oracle_dim ? json(*r.oracle_dim) : json(nullptr)},
          {"ssdim", to_json_number(r.ssdim_value)},
          {"convention", to_string(r.used)},
          {"consistent", r.consistent()},
          {"notes", r.notes}};
}

inline json surd_json(quadratic_surd const& x) {
  return {{"exact", x.str()}, {"approx", x.to_double()}};
}

inline json to_json(gap_report const& g) {
  json out = {{"n", g.n}, {"m", g.m}, {"k", g.k}, {"l", g.l}};
  out["gap_lower"] = surd_json(g.gap_lower);
  out["ssgap_lower"] = surd_json(g.ssgap_lower);
  out["faith_lower"] = g.faith_lower ? json(g.faith_lower->str()) : json(nullptr);
  out["gapr_lower"] = g.gapr_lower;
  out["ssgapr_lower"] = g.ssgapr_lower;
  out["monoid_size"] = to_json_number(g.monoid_size);
  out["min_simple_dim"] = g.min_simple_dim ? to_json_number(*g.min_simple_dim) : json(nullptr);
  out["min_ssdim"] = to_json_number(g.min_ssdim);
  out["hypotheses_hold"] = g.hypotheses_hold;
  out["characteristic_zero_regime"] = g.characteristic_zero_regime;
  out["bound_respected"] = g.bound_respected;
  out["warnings"] = g.warnings;
  return out;
}

}  // namespace cyclotl
