// Simple dimensions of 3TL_6 over F_7 from the closed formula and from
// Gram ranks, with the gap bounds of a truncation.

#include <iostream>

#include "cyclotl/json_io.hpp"

using namespace cyclotl;

int main() {
  std::size_t const n = 6;
  std::uint32_t const m = 3;
  std::uint64_t const p = auto_prime(n, m);
  auto f = field_spec::with_root(p, m, smallest_root_of_unity(p, m));
  std::cout << f.describe() << "\n" << dim_csv_header() << "\n";
  for (auto const& row : dims_table(n, f)) {
    std::cout << dim_csv_row(row) << "\n";
  }
  std::cout << "\n" << to_json(gap_bounds({16, 5, 4, 8}, std::nullopt)).dump(2) << "\n";
}
