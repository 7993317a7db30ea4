// Normalises words in 3TL_5 and checks them against diagram evaluation.

#include <iostream>

#include "cyclotl/words.hpp"

using namespace cyclotl;

int main() {
  std::size_t const n = 5;
  std::uint32_t const m = 3;
  for (char const* text : {"o u1 u2 u1", "u2 u1 u2 u3", "u4 u2 u3 u1 u2", "u1 u1 u1 u1", "o^3 u3"}) {
    word w = parse_word(text, n, m);
    normalize_stats stats;
    normal_form nf = normalize(w, &stats);
    bool agrees = nf == diagram_to_normal_form(eval_word(w));
    std::cout << text << "  ->  " << (render(nf).empty() ? "1" : render(nf)) << "  (" << stats.total()
              << " rewrites, " << (agrees ? "agrees" : "DISAGREES") << ")\n";
  }
  try {
    parse_word("u1 u9", n, m);
  } catch (parse_error const& e) {
    std::cout << "error: " << e.what() << "\n";
  }
}
