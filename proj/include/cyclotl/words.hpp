#pragma once

#include <cctype>
#include <cstdlib>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "diagram.hpp"
#include "error.hpp"

namespace cyclotl {

struct letter {
  enum class kind_t { o, hook, block };

  kind_t kind = kind_t::o;
  std::size_t i = 0;
  std::size_t j = 0;

  static letter o() { return {kind_t::o, 0, 0}; }
  static letter hook(std::size_t i) { return {kind_t::hook, i, i}; }
  static letter block(std::size_t i, std::size_t j) { return {kind_t::block, i, j}; }

  friend bool operator==(letter const&, letter const&) = default;
};

// A generator word for mTL_n; the empty word is the identity.
struct word {
  std::size_t n = 0;
  std::uint32_t modulus = 0;
  std::vector<letter> letters;

  friend bool operator==(word const&, word const&) = default;
};

// o^loops u^[b1,a1] ... u^[bk,ak] with a and b strictly increasing. Blocks
// are stored as (b, a).
struct normal_form {
  std::uint64_t loops = 0;
  std::vector<std::pair<std::size_t, std::size_t>> blocks;

  friend bool operator==(normal_form const&, normal_form const&) = default;
};

struct normalize_stats {
  std::size_t commutations = 0;
  std::size_t merges = 0;
  std::size_t loop_merges = 0;
  std::size_t derived = 0;

  std::size_t total() const noexcept { return commutations + merges + loop_merges + derived; }
};

inline void validate_letter(letter const& x, std::size_t n) {
  switch (x.kind) {
    case letter::kind_t::o:
      return;
    case letter::kind_t::hook:
      if (x.i < 1 || x.i + 1 > n) {
        throw precondition_error("hook index out of range");
      }
      return;
    case letter::kind_t::block:
      if (x.j < 1 || x.j > x.i || x.i + 1 > n) {
        throw precondition_error("block index out of range");
      }
      return;
  }
}

namespace detail {

class word_parser {
 public:
  word_parser(std::string_view text, std::size_t n) : _text(text), _n(n) {}

  std::vector<letter> run() {
    std::vector<letter> out;
    skip_space();
    while (_pos < _text.size()) {
      term(out);
      std::size_t before = _pos;
      skip_space();
      if (_pos < _text.size() && before == _pos) {
        throw parse_error("expected whitespace between terms", _pos);
      }
    }
    return out;
  }

 private:
  void skip_space() {
    while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
      ++_pos;
    }
  }

  void expect(char c) {
    if (_pos >= _text.size() || _text[_pos] != c) {
      throw parse_error(std::string("expected '") + c + "'", _pos);
    }
    ++_pos;
  }

  std::size_t number() {
    std::size_t start = _pos;
    std::uint64_t value = 0;
    while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
      value = value * 10 + static_cast<std::uint64_t>(_text[_pos] - '0');
      if (value > 1'000'000'000u) {
        throw parse_error("number too large", start);
      }
      ++_pos;
    }
    if (start == _pos) {
      throw parse_error("expected a number", _pos);
    }
    return static_cast<std::size_t>(value);
  }

  void term(std::vector<letter>& out) {
    std::size_t start = _pos;
    char c = _text[_pos++];
    if (c == 'o') {
      if (_pos < _text.size() && _text[_pos] == '^') {
        ++_pos;
        std::size_t exponent_at = _pos;
        std::size_t k = number();
        if (k > max_exponent) {
          throw parse_error("exponent too large", exponent_at);
        }
        out.insert(out.end(), k, letter::o());
      } else {
        out.push_back(letter::o());
      }
    } else if (c == 'u') {
      std::size_t i = number();
      if (i < 1 || i + 1 > _n) {
        throw parse_error("index out of range", start);
      }
      out.push_back(letter::hook(i));
    } else if (c == 'U') {
      expect('[');
      std::size_t i = number();
      expect(',');
      std::size_t j = number();
      expect(']');
      if (j < 1 || j > i || i + 1 > _n) {
        throw parse_error("index out of range", start);
      }
      out.push_back(letter::block(i, j));
    } else {
      throw parse_error(std::string("unexpected character '") + c + "'", start);
    }
  }

  static constexpr std::size_t max_exponent = 1u << 20;

  std::string_view _text;
  std::size_t _n;
  std::size_t _pos = 0;
};

}  // namespace detail

// Grammar: word := empty | term (SP term)*;
// term := "o" | "o^" uint | "u" uint | "U[" uint "," uint "]".
inline word parse_word(std::string_view text, std::size_t n, std::uint32_t modulus) {
  return {n, modulus, detail::word_parser(text, n).run()};
}

// Canonical spelling: runs of o become "o" or "o^k", hooks "uI", blocks "U[I,J]".
inline std::string render(word const& w) {
  std::string out;
  auto sep = [&] {
    if (!out.empty()) {
      out += ' ';
    }
  };
  std::size_t run = 0;
  auto flush = [&] {
    if (run == 1) {
      sep();
      out += "o";
    } else if (run > 1) {
      sep();
      out += "o^" + std::to_string(run);
    }
    run = 0;
  };
  for (auto const& x : w.letters) {
    if (x.kind == letter::kind_t::o) {
      ++run;
      continue;
    }
    flush();
    sep();
    if (x.kind == letter::kind_t::hook) {
      out += "u" + std::to_string(x.i);
    } else {
      out += "U[" + std::to_string(x.i) + "," + std::to_string(x.j) + "]";
    }
  }
  flush();
  return out;
}

inline std::string render(normal_form const& nf) {
  std::string out;
  if (nf.loops > 0) {
    out += "o^" + std::to_string(nf.loops);
  }
  for (auto [b, a] : nf.blocks) {
    if (!out.empty()) {
      out += ' ';
    }
    out += "U[" + std::to_string(b) + "," + std::to_string(a) + "]";
  }
  return out;
}

inline diagram letter_diagram(letter const& x, std::size_t n, std::uint32_t modulus) {
  validate_letter(x, n);
  switch (x.kind) {
    case letter::kind_t::o:
      return generator_o(n, modulus);
    case letter::kind_t::hook:
      return generator_hook(n, modulus, x.i);
    default:
      return generator_block(n, modulus, x.i, x.j);
  }
}

// Product of the letters; the leftmost letter is on top.
inline diagram eval_word(word const& w) {
  diagram d = identity(w.n, w.modulus);
  for (auto const& x : w.letters) {
    d = compose(d, letter_diagram(x, w.n, w.modulus));
  }
  return d;
}

inline word normal_form_to_word(normal_form const& nf, std::size_t n, std::uint32_t modulus) {
  word w{n, modulus, {}};
  w.letters.assign(nf.loops, letter::o());
  for (auto [b, a] : nf.blocks) {
    w.letters.push_back(letter::block(b, a));
  }
  return w;
}

// Length of any reduced hook word for a skeleton on n strands: the areas
// under the top cups and the bottom caps, less the number of cups, plus half
// the horizontal travel of the through strands.
inline std::size_t reduced_length(skeleton const& s) {
  if (s.bottom_count() != s.top_count()) {
    throw precondition_error("reduced_length: skeleton must be square");
  }
  auto const n = static_cast<std::uint32_t>(s.top_count());
  std::size_t length = 0;
  std::vector<std::uint32_t> bottom_through;
  std::vector<std::uint32_t> top_through;
  for (std::uint32_t side = 0; side < 2; ++side) {
    std::uint32_t base = side == 0 ? 0 : n;
    for (std::uint32_t p = 0; p < n; ++p) {
      std::uint32_t q = s.partner_label(base + p);
      bool same_side = (q >= n) == (side == 1);
      if (!same_side) {
        (side == 0 ? bottom_through : top_through).push_back(p);
      } else if (q > base + p) {
        length += (q - base - p + 1) / 2;
      }
    }
  }
  length -= s.cups();
  for (std::size_t r = 0; r < top_through.size(); ++r) {
    auto x = static_cast<std::int64_t>(top_through[r]);
    auto y = static_cast<std::int64_t>(bottom_through[r]);
    length += static_cast<std::size_t>(std::abs(x - y) / 2);
  }
  return length;
}

// A reduced hook word u_{w1} u_{w2} ... for a skeleton on n strands, found by
// repeatedly peeling off the hook under the leftmost adjacent top cup.
inline std::vector<std::size_t> reduced_hook_word(skeleton const& s) {
  std::vector<std::size_t> out;
  skeleton current = s;
  auto const n = static_cast<std::uint32_t>(s.top_count());
  std::size_t length = reduced_length(current);
  while (length > 0) {
    std::uint32_t b = 0;
    while (current.partner_label(n + b) != n + b + 1) {
      ++b;
    }
    std::uint32_t const left = n + b;
    std::uint32_t const right = n + b + 1;
    bool found = false;
    for (std::uint32_t x = 0; x < 2 * n && !found; ++x) {
      std::uint32_t y = current.partner_label(x);
      if (x > y || x == left || x == right) {
        continue;
      }
      for (auto [p, q] : {std::pair{x, y}, std::pair{y, x}}) {
        std::vector<std::uint32_t> partner = current.partners();
        partner[p] = left;
        partner[left] = p;
        partner[q] = right;
        partner[right] = q;
        skeleton candidate = make_unchecked_skeleton(n, n, std::move(partner));
        if (candidate.is_planar() && reduced_length(candidate) + 1 == length) {
          current = std::move(candidate);
          found = true;
          break;
        }
      }
    }
    if (!found) {
      throw std::logic_error("reduced_hook_word: no shorter factor found");
    }
    out.push_back(b + 1);
    --length;
  }
  return out;
}

// Sorts a reduced hook word into block normal form using commutations only:
// each block starts at the smallest generator that can be moved to the
// front and extends downwards while the next generator can follow it.
inline std::vector<std::pair<std::size_t, std::size_t>> commutation_normal_form(
    std::vector<std::size_t> w) {
  auto movable = [&](std::size_t s) -> std::ptrdiff_t {
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (w[p] == s) {
        return static_cast<std::ptrdiff_t>(p);
      }
      if (w[p] + 1 >= s && w[p] <= s + 1) {
        return -1;
      }
    }
    return -1;
  };
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  while (!w.empty()) {
    std::size_t b = 0;
    std::ptrdiff_t at = -1;
    for (std::size_t p = 0; p < w.size(); ++p) {
      std::ptrdiff_t q = movable(w[p]);
      if (q >= 0 && (at < 0 || w[p] < b)) {
        b = w[p];
        at = q;
      }
    }
    w.erase(w.begin() + at);
    std::size_t a = b;
    while (a > 1) {
      std::ptrdiff_t q = movable(a - 1);
      if (q < 0) {
        break;
      }
      w.erase(w.begin() + q);
      --a;
    }
    blocks.emplace_back(b, a);
  }
  return blocks;
}

inline normal_form diagram_to_normal_form(diagram const& d) {
  return {d.loops(), commutation_normal_form(reduced_hook_word(d.shape()))};
}

namespace detail {

using block_pair = std::pair<std::size_t, std::size_t>;

inline bool in_order(block_pair const& x, block_pair const& y) {
  return x.second < y.second && x.first < y.first;
}

inline auto local_measure(std::vector<block_pair> const& blocks) {
  std::size_t hook_length = 0;
  for (auto [b, a] : blocks) {
    hook_length += b - a + 1;
  }
  return std::tuple(hook_length, blocks.size(), blocks);
}

}  // namespace detail

// Rewrites a word to its normal form. Letters o are pooled, hooks become
// one-letter blocks, then adjacent out-of-order blocks are rewritten scanning
// from the right; the o exponent is reduced mod m at the end.
inline normal_form normalize(word const& w, normalize_stats* stats = nullptr) {
  using detail::block_pair;
  normalize_stats local;
  normalize_stats& st = stats ? *stats : local;

  std::uint64_t loops = 0;
  std::vector<block_pair> blocks;
  for (auto const& x : w.letters) {
    validate_letter(x, w.n);
    if (x.kind == letter::kind_t::o) {
      ++loops;
    } else {
      blocks.emplace_back(x.i, x.j);
    }
  }

  std::size_t p = blocks.size() >= 2 ? blocks.size() - 2 : 0;
  while (blocks.size() >= 2) {
    block_pair x = blocks[p];
    block_pair y = blocks[p + 1];
    if (detail::in_order(x, y)) {
      if (p == 0) {
        break;
      }
      --p;
      continue;
    }
    auto [i, j] = x;
    auto [k, l] = y;
    std::vector<block_pair> replacement;
    if (j >= k + 2) {
      replacement = {y, x};
      ++st.commutations;
    } else if ((k == j + 1 || j == k + 1) && i >= l) {
      replacement = {{i, l}};
      ++st.merges;
    } else if (j == k) {
      replacement = {{i, l}};
      ++loops;
      ++st.loop_merges;
    } else {
      diagram product = compose(generator_block(w.n, 0, i, j), generator_block(w.n, 0, k, l));
      normal_form nf = diagram_to_normal_form(product);
      replacement = nf.blocks;
      loops += nf.loops;
      ++st.derived;
    }
    if (!(detail::local_measure(replacement) < detail::local_measure({x, y}))) {
      throw std::logic_error("normalize: rewrite did not decrease the measure");
    }
    blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(p),
                 blocks.begin() + static_cast<std::ptrdiff_t>(p) + 2);
    blocks.insert(blocks.begin() + static_cast<std::ptrdiff_t>(p), replacement.begin(),
                  replacement.end());
    // Pairs right of the rewrite are untouched and already in order.
    if (blocks.size() < 2) {
      break;
    }
    p = std::min(p + 1, blocks.size() - 2);
  }

  if (w.modulus > 0) {
    loops %= w.modulus;
  }
  return {loops, std::move(blocks)};
}

inline bool word_equal(word const& a, word const& b) {
  if (a.n != b.n || a.modulus != b.modulus) {
    throw precondition_error("word_equal: words belong to different monoids");
  }
  return normalize(a) == normalize(b);
}

}  // namespace cyclotl
