// Composes a few diagrams of 3TL_4 and prints its Green's cells.

#include <iostream>

#include "cyclotl/cells.hpp"
#include "cyclotl/json_io.hpp"

using namespace cyclotl;

int main() {
  std::size_t const n = 4;
  std::uint32_t const m = 3;
  diagram u1 = generator_hook(n, m, 1);
  diagram u2 = generator_hook(n, m, 2);
  diagram o = generator_o(n, m);

  std::cout << "u1        " << render_diagram(u1) << "\n";
  std::cout << "u1 u1     " << render_diagram(compose(u1, u1)) << "\n";
  std::cout << "u1 u2 u1  " << render_diagram(compose(compose(u1, u2), u1)) << "\n";
  std::cout << "o^3       " << render_diagram(compose(compose(o, o), o)) << "\n\n";

  auto mon = tl_monoid(n, m);
  auto cells = green_cells_bruteforce(mon.table);
  std::cout << "|" << m << "TL_" << n << "| = " << mon.elements.size() << "\n";
  for (auto const& j : cells.j_cells) {
    std::size_t k = mon.elements[j.front()].through();
    auto want = cell_sizes_structural(n, m, k);
    std::cout << "  through " << k << ": |J| = " << j.size() << " (expected " << want.j_size
              << "), |H| = " << want.h_size << "\n";
  }
}
