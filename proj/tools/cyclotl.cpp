#include <charconv>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cyclotl/acceptance.hpp"
#include "cyclotl/cells.hpp"
#include "cyclotl/json_io.hpp"
#include "cyclotl/reptheory.hpp"
#include "cyclotl/variants.hpp"
#include "cyclotl/words.hpp"

namespace {

using namespace cyclotl;

enum exit_code { ok = 0, mismatch = 1, usage = 2, precondition = 3 };

struct run_config {
  std::size_t n = 0;
  std::uint32_t m = 1;
  std::optional<std::size_t> k;
  std::optional<std::size_t> l;
  std::string flavour_name = "tl";
  std::string p = "";
  std::string delta = "";
  std::optional<std::uint32_t> char_t;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::string convention_name = "standard";
  std::vector<std::string> words;

  convention conv() const {
    return convention_name == "shifted" ? convention::shifted : convention::standard;
  }
  bool is_tl() const { return flavour_name == "tl"; }
  flavour kind() const { return parse_flavour(flavour_name); }
};

template <typename T>
T parse_number(std::string const& text, char const* what) {
  T value{};
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw parse_error(std::string(what), static_cast<std::size_t>(end - text.data()));
  }
  return value;
}

std::uint64_t resolve_prime(run_config const& c) {
  if (c.p == "auto") {
    return auto_prime(c.n, c.m);
  }
  auto p = parse_number<std::uint64_t>(c.p, "--p expects a prime or 'auto'");
  if (!prime_field::is_prime(p)) {
    throw precondition_error("--p " + c.p + " is not prime");
  }
  return p;
}

field_spec root_field(run_config const& c) {
  std::uint64_t p = resolve_prime(c);
  return field_spec::with_root(p, c.m, smallest_root_of_unity(p, c.m));
}

std::optional<field_spec> delta_field(run_config const& c) {
  if (c.delta.empty()) {
    return std::nullopt;
  }
  if (c.delta == "generic") {
    return field_spec::generic(c.seed);
  }
  auto d = parse_number<std::int64_t>(c.delta, "--delta expects an integer or 'generic'");
  if (c.p.empty()) {
    return field_spec::rational_delta(d);
  }
  return field_spec::prime_delta(resolve_prime(c), d);
}

void require_format(run_config const& c, std::initializer_list<char const*> allowed) {
  for (auto f : allowed) {
    if (c.format == f) {
      return;
    }
  }
  throw parse_error("--format " + c.format + " is not available for this subcommand", 0);
}

int cmd_normalize(run_config const& c) {
  require_format(c, {"text", "json"});
  std::string text = c.words.empty() ? "" : c.words.front();
  word w = parse_word(text, c.n, c.m);
  normalize_stats stats;
  normal_form nf = normalize(w, &stats);
  if (c.format == "json") {
    json blocks = json::array();
    for (auto [b, a] : nf.blocks) {
      blocks.push_back({b, a});
    }
    json out = {{"n", c.n},
                {"m", c.m},
                {"input", text},
                {"normal_form", render(nf)},
                {"loops", nf.loops},
                {"blocks", std::move(blocks)},
                {"rewrites",
                 {{"commutations", stats.commutations},
                  {"merges", stats.merges},
                  {"loop_merges", stats.loop_merges},
                  {"derived", stats.derived}}},
                {"diagram", to_json(eval_word(w))}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << render(nf) << "\n";
  }
  return ok;
}

partition_diagram eval_partition_word(std::string const& text, run_config const& c) {
  flavour kind = c.kind();
  if (kind != flavour::planar_partition) {
    throw precondition_error("generator words are available for planar_partition only");
  }
  auto d = partition_diagram::identity(c.n, c.m, kind);
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    d = compose_partition(d, ppa_generator_diagram(c.n, c.m, parse_ppa_generator(token, c.n)));
  }
  return d;
}

int cmd_mul(run_config const& c) {
  require_format(c, {"text", "json"});
  if (c.words.empty()) {
    throw parse_error("mul expects at least one word", 0);
  }
  if (c.is_tl()) {
    word product{c.n, c.m, {}};
    for (auto const& text : c.words) {
      word w = parse_word(text, c.n, c.m);
      product.letters.insert(product.letters.end(), w.letters.begin(), w.letters.end());
    }
    diagram d = eval_word(product);
    normal_form nf = diagram_to_normal_form(d);
    if (c.format == "json") {
      json out = {{"normal_form", render(nf)}, {"through", d.through()}, {"diagram", to_json(d)}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << render(nf) << "\n" << render_diagram(d) << "\n";
    }
    return ok;
  }
  auto d = partition_diagram::identity(c.n, c.m, c.kind());
  for (auto const& text : c.words) {
    d = compose_partition(d, eval_partition_word(text, c));
  }
  if (c.format == "json") {
    std::cout << to_json(d).dump(2) << "\n";
  } else {
    std::cout << render_partition(d) << "\n";
  }
  return ok;
}

int cmd_cells(run_config const& c) {
  require_format(c, {"json", "text"});
  json out = c.is_tl() ? tl_cells_json(c.n, c.m) : partition_cells_json(c.n, c.m, c.kind());
  if (c.format == "json") {
    std::cout << out.dump(2) << "\n";
    return ok;
  }
  std::cout << "size " << out["size"] << "\n";
  for (auto const& cell : out["j_cells"]) {
    std::cout << "J through=" << cell["through"] << " size=" << cell["size"]
              << " rows=" << cell["r_cells"] << " cols=" << cell["l_cells"] << "\n";
    for (auto const& row : cell["grid"]) {
      std::cout << " ";
      for (auto const& h : row) {
        std::cout << " [" << (h["idempotent"].get<bool>() ? "*" : " ") << h["elements"].size()
                  << "]";
      }
      std::cout << "\n";
    }
  }
  return ok;
}

void print_dims(run_config const& c, std::vector<dim_report> const& rows) {
  if (c.format == "csv") {
    std::cout << dim_csv_header() << "\n";
    for (auto const& r : rows) {
      std::cout << dim_csv_row(r) << "\n";
    }
  } else if (c.format == "json") {
    json out = json::array();
    for (auto const& r : rows) {
      out.push_back(to_json(r));
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (auto const& r : rows) {
      std::cout << "k=" << r.k << " t=" << r.t
                << " formula=" << (r.formula_dim ? r.formula_dim->str() : "undefined")
                << " oracle=" << (r.oracle_dim ? std::to_string(*r.oracle_dim) : "-")
                << " ssdim=" << r.ssdim_value.str()
                << (r.notes.empty() ? "" : " (" + r.notes + ")") << "\n";
    }
  }
}

int cmd_dims(run_config const& c) {
  require_format(c, {"csv", "json", "text"});
  std::vector<dim_report> rows;
  if (auto f = delta_field(c)) {
    for (std::size_t k = c.n % 2; k <= c.n; k += 2) {
      if (c.k && *c.k != k) {
        continue;
      }
      dim_report r;
      r.n = c.n;
      r.m = c.m;
      r.k = k;
      r.used = c.conv();
      r.formula_dim = dim_simple_formula(c.n, k, *f, c.conv());
      r.oracle_dim = gram_rank(c.n, k, *f);
      r.ssdim_value = ssdim(c.n, k, 1);
      r.notes = f->describe();
      rows.push_back(std::move(r));
    }
  } else {
    if (c.p.empty()) {
      throw precondition_error("dims needs --p (a prime with m | p-1, or auto) or --delta");
    }
    for (auto& r : dims_table(c.n, root_field(c), c.conv())) {
      if ((c.k && *c.k != r.k) || (c.char_t && *c.char_t != r.t)) {
        continue;
      }
      rows.push_back(std::move(r));
    }
  }
  print_dims(c, rows);
  bool consistent = std::all_of(rows.begin(), rows.end(), [](dim_report const& r) {
    return r.consistent();
  });
  return consistent || c.conv() == convention::shifted ? ok : mismatch;
}

int cmd_gap(run_config const& c) {
  require_format(c, {"json", "text", "csv"});
  truncation_spec spec{c.n, c.m, c.k.value_or(0), c.l.value_or(c.n)};
  std::optional<field_spec> f;
  if (!c.p.empty()) {
    f = root_field(c);
  }
  gap_report g = gap_bounds(spec, f, c.conv());
  json out = to_json(g);
  if (f) {
    out["field"] = f->describe();
  }
  if (c.format == "json") {
    std::cout << out.dump(2) << "\n";
  } else {
    char const* sep = c.format == "csv" ? "," : " ";
    if (c.format == "csv") {
      std::cout << "key,value\n";
    }
    for (auto const& [key, value] : out.items()) {
      std::string v;
      if (value.is_object() && value.contains("exact")) {
        v = value["exact"].get<std::string>();
      } else if (value.is_string()) {
        v = value.get<std::string>();
      } else if (value.is_array()) {
        for (auto const& w : value) {
          v += (v.empty() ? "" : ";") + w.get<std::string>();
        }
      } else {
        v = value.dump();
      }
      std::cout << key << sep << v << "\n";
    }
  }
  return g.bound_respected ? ok : mismatch;
}

int cmd_enumerate(run_config const& c) {
  require_format(c, {"text", "json", "csv"});
  std::vector<std::string> text;
  json out = json::array();
  if (c.is_tl()) {
    for (auto const& d : enumerate_monoid(c.n, c.m)) {
      text.push_back(render_diagram(d));
      out.push_back(to_json(d));
    }
  } else {
    for (auto const& d : enumerate_partitions(c.n, c.m, c.kind())) {
      text.push_back(render_partition(d));
      out.push_back(to_json(d));
    }
  }
  if (c.format == "json") {
    std::cout << out.dump(2) << "\n";
  } else if (c.format == "csv") {
    std::cout << "index,element\n";
    for (std::size_t i = 0; i < text.size(); ++i) {
      std::cout << i << ",\"" << text[i] << "\"\n";
    }
  } else {
    for (auto const& t : text) {
      std::cout << t << "\n";
    }
  }
  return ok;
}

int cmd_verify(run_config const& c) {
  require_format(c, {"text"});
  acceptance::options opt{c.seed};
  bool all = true;
  for (int id = 1; id <= static_cast<int>(acceptance::criteria().size()); ++id) {
    auto r = acceptance::run_criterion(id, opt);
    all = all && r.pass;
    std::cout << acceptance::format_line(r) << std::endl;
  }
  return all ? ok : mismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclic Temperley-Lieb monoids: diagrams, normal forms, cells and dimensions"};
  app.require_subcommand(1);
  run_config c;

  auto common = [&](CLI::App* sub, bool needs_n) {
    auto* n = sub->add_option("-n", c.n, "number of strands");
    if (needs_n) {
      n->required();
    }
    sub->add_option("-m", c.m, "cyclic modulus (0 keeps loop counts unreduced)");
    sub->add_option("-k", c.k, "lowest through-strand count or apex");
    sub->add_option("-l", c.l, "highest through-strand count");
    sub->add_option("--flavour", c.flavour_name, "tl, planar_partition, motzkin or planar_rook")
        ->check(CLI::IsMember({"tl", "planar_partition", "motzkin", "planar_rook"}));
    sub->add_option("--p", c.p, "field characteristic, or auto");
    sub->add_option("--delta", c.delta, "loop value (integer or generic)");
    sub->add_option("--char-t", c.char_t, "character index t of C_m");
    sub->add_option("--format", c.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--seed", c.seed, "seed for generic delta and random words");
    sub->add_option("--convention", c.convention_name, "quantum characteristic convention")
        ->check(CLI::IsMember({"standard", "shifted"}));
  };

  auto* normalize_cmd = app.add_subcommand("normalize", "normal form of a generator word");
  common(normalize_cmd, true);
  normalize_cmd->add_option("word", c.words, "word such as \"o u1 u2 U[3,1]\"");
  auto* mul_cmd = app.add_subcommand("mul", "product of words, left factor on top");
  common(mul_cmd, true);
  mul_cmd->add_option("words", c.words, "one or more words");
  auto* cells_cmd = app.add_subcommand("cells", "Green's cell table by brute force");
  common(cells_cmd, true);
  auto* dims_cmd = app.add_subcommand("dims", "simple dimensions: formula against Gram oracle");
  common(dims_cmd, true);
  auto* gap_cmd = app.add_subcommand("gap", "gap bounds for a truncation");
  common(gap_cmd, true);
  auto* enumerate_cmd = app.add_subcommand("enumerate", "list all monoid elements");
  common(enumerate_cmd, true);
  auto* verify_cmd = app.add_subcommand("verify", "run the acceptance suite");
  common(verify_cmd, false);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (c.flavour_name != "tl" && c.m == 0) {
      throw precondition_error("partition monoids need m >= 1");
    }
    if (*normalize_cmd) {
      return cmd_normalize(c);
    }
    if (*mul_cmd) {
      return cmd_mul(c);
    }
    if (*cells_cmd) {
      return cmd_cells(c);
    }
    if (*dims_cmd) {
      return cmd_dims(c);
    }
    if (*gap_cmd) {
      return cmd_gap(c);
    }
    if (*enumerate_cmd) {
      return cmd_enumerate(c);
    }
    if (*verify_cmd) {
      return cmd_verify(c);
    }
  } catch (parse_error const& e) {
    std::cerr << "error[parse]: " << e.what() << "\n";
    return usage;
  } catch (precondition_error const& e) {
    std::cerr << "error[precondition]: " << e.what() << "\n";
    return precondition;
  } catch (size_guard_error const& e) {
    std::cerr << "error[size_guard]: " << e.what() << "\n";
    return precondition;
  } catch (std::invalid_argument const& e) {
    std::cerr << "error[parse]: " << e.what() << "\n";
    return usage;
  } catch (std::out_of_range const& e) {
    std::cerr << "error[parse]: " << e.what() << "\n";
    return usage;
  }
  return usage;
}
