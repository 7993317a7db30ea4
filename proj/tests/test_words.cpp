#include <gtest/gtest.h>

#include <deque>
#include <map>
#include <random>
#include <set>

#include "cyclotl/diagram.hpp"
#include "cyclotl/words.hpp"
#include "oracles.hpp"

using namespace cyclotl;

namespace {

// All sequences of blocks (b_t, a_t) with 1 <= a_t <= b_t < n and both
// coordinates strictly increasing.
std::vector<normal_form> all_normal_forms(std::size_t n) {
  std::vector<normal_form> out;
  normal_form cur;
  auto go = [&](auto&& self, std::size_t min_b, std::size_t min_a) -> void {
    out.push_back(cur);
    for (std::size_t b = min_b; b < n; ++b) {
      for (std::size_t a = min_a; a <= b; ++a) {
        cur.blocks.emplace_back(b, a);
        self(self, b + 1, a + 1);
        cur.blocks.pop_back();
      }
    }
  };
  go(go, 1, 1);
  return out;
}

// Shortest hook word for each skeleton by breadth-first search.
std::map<skeleton, std::size_t> hook_distances(std::size_t n) {
  std::map<skeleton, std::size_t> dist;
  std::deque<skeleton> queue{skeleton::identity(n)};
  dist[queue.front()] = 0;
  while (!queue.empty()) {
    skeleton x = queue.front();
    queue.pop_front();
    for (std::size_t i = 1; i < n; ++i) {
      skeleton y = compose_skeletons(x, skeleton::hook(n, i)).result;
      if (!dist.count(y)) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

}  // namespace

TEST(Parse, AcceptsGrammar) {
  word w = parse_word("o u1  U[3,1] o^2", 4, 3);
  ASSERT_EQ(w.letters.size(), 5u);
  EXPECT_EQ(w.letters[0], letter::o());
  EXPECT_EQ(w.letters[1], letter::hook(1));
  EXPECT_EQ(w.letters[2], letter::block(3, 1));
  EXPECT_EQ(render(w), "o u1 U[3,1] o^2");
  EXPECT_TRUE(parse_word("", 4, 3).letters.empty());
  EXPECT_TRUE(parse_word("   ", 4, 3).letters.empty());
}

TEST(Parse, ReportsPositions) {
  auto position = [](std::string const& text) -> std::optional<std::size_t> {
    try {
      parse_word(text, 3, 2);
    } catch (parse_error const& e) {
      return e.position();
    }
    return std::nullopt;
  };
  EXPECT_EQ(position("u1 u3"), 3u);
  EXPECT_EQ(position("u1 x"), 3u);
  EXPECT_EQ(position("u0"), 0u);
  EXPECT_EQ(position("U[1,2]"), 0u);
  EXPECT_EQ(position("U[2 1]"), 3u);
  EXPECT_EQ(position("u1u2"), 2u);
  EXPECT_EQ(position("o^"), 2u);
  EXPECT_EQ(position("o^99999999"), 2u);
  EXPECT_FALSE(position("u1 u2"));
}

TEST(Normalize, Examples) {
  EXPECT_EQ(render(normalize(parse_word("o u1 u2 u1", 3, 3))), "o^1 U[1,1]");
  EXPECT_EQ(render(normalize(parse_word("", 4, 2))), "");
  EXPECT_EQ(render(normalize(parse_word("o^2", 4, 2))), "");
  EXPECT_EQ(render(normalize(parse_word("u1 u1", 3, 0))), "o^1 U[1,1]");
  EXPECT_EQ(render(normalize(parse_word("u2 u1", 3, 2))), "U[2,1]");
  EXPECT_EQ(render(normalize(parse_word("u1 u2", 3, 2))), "U[1,1] U[2,2]");
  EXPECT_EQ(render(normalize(parse_word("u3 u1", 4, 2))), "U[1,1] U[3,3]");
}

TEST(Normalize, StatedRules) {
  normalize_stats stats;
  // Far commutation only.
  normalize(parse_word("u3 u1", 4, 2), &stats);
  EXPECT_EQ(stats.commutations, 1u);
  EXPECT_EQ(stats.derived, 0u);
  // u_i u_i = o u_i.
  stats = {};
  normalize(parse_word("u2 u2", 4, 5), &stats);
  EXPECT_EQ(stats.loop_merges, 1u);
}

TEST(NormalForm, CountIsCatalanAndBijective) {
  auto cat = oracle::catalan_table(7);
  for (std::size_t n = 1; n <= 7; ++n) {
    auto forms = all_normal_forms(n);
    EXPECT_EQ(forms.size(), cat[n]) << n;
    std::set<skeleton> shapes;
    for (auto const& nf : forms) {
      diagram d = eval_word(normal_form_to_word(nf, n, 0));
      EXPECT_EQ(d.loops(), 0u) << render(nf);
      EXPECT_EQ(diagram_to_normal_form(d), nf) << render(nf);
      shapes.insert(d.shape());
    }
    EXPECT_EQ(shapes.size(), forms.size());
  }
}

TEST(NormalForm, ReducedLengthIsShortestHookWord) {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (auto const& [s, d] : hook_distances(n)) {
      EXPECT_EQ(reduced_length(s), d);
      auto w = reduced_hook_word(s);
      EXPECT_EQ(w.size(), d);
      word hooks{n, 0, {}};
      for (auto i : w) {
        hooks.letters.push_back(letter::hook(i));
      }
      EXPECT_EQ(eval_word(hooks), (diagram{s, 0, 0}));
    }
  }
}

TEST(Normalize, RandomWordsAgreeWithEvaluation) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    std::size_t n = 2 + rng() % 6;
    std::uint32_t m = static_cast<std::uint32_t>(rng() % 5);
    word w{n, m, {}};
    std::size_t len = rng() % 30;
    for (std::size_t i = 0; i < len; ++i) {
      if (rng() % 8 == 0) {
        w.letters.push_back(letter::o());
      } else {
        w.letters.push_back(letter::hook(1 + rng() % (n - 1)));
      }
    }
    normal_form nf = normalize(w);
    diagram d = eval_word(w);
    EXPECT_EQ(nf, diagram_to_normal_form(d)) << render(w);
    EXPECT_EQ(normalize(normal_form_to_word(nf, n, m)), nf);
    if (m > 0) {
      EXPECT_LT(nf.loops, m);
    }
  }
}

TEST(Words, EqualityNeedsMatchingParameters) {
  EXPECT_TRUE(word_equal(parse_word("u1 u2 u1", 3, 2), parse_word("u1", 3, 2)));
  EXPECT_FALSE(word_equal(parse_word("u1 u1", 3, 2), parse_word("u1", 3, 2)));
  EXPECT_TRUE(word_equal(parse_word("u1 u1 u1", 3, 2), parse_word("u1", 3, 2)));
  EXPECT_THROW(word_equal(parse_word("u1", 3, 2), parse_word("u1", 4, 2)), precondition_error);
  EXPECT_THROW(word_equal(parse_word("u1", 3, 2), parse_word("u1", 3, 3)), precondition_error);
}
