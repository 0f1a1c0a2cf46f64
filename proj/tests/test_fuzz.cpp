#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace russell;

// Random byte strings from the expression alphabet: the parser either
// succeeds with a polynomial that round-trips or throws ParseError.
TEST(ParserFuzz, NeverCrashes) {
  const std::string alphabet = "xyzt0123456789+-*/^() \t_wq";
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1), len(0, 24);
  int parsed = 0;
  for (int i = 0; i < 20000; ++i) {
    std::string s;
    for (std::size_t n = len(rng); n > 0; --n) s += alphabet[pick(rng)];
    try {
      Polynomial f = parse(s, xyzt_context());
      EXPECT_EQ(parse(print(f), xyzt_context()), f) << s;
      ++parsed;
    } catch (const ParseError& e) {
      EXPECT_LE(e.position(), s.size()) << s;
    } catch (const AlgebraError&) {
      // e.g. 0^-1 style unit failures
    } catch (const DivisionByZero&) {
    }
  }
  EXPECT_GT(parsed, 0);
}

TEST(ParserFuzz, MutatedValidInputs) {
  const std::vector<std::string> seeds = {"x + x^2*y + z^3 + t^2", "(z+t)^2 - 3/4*x*y",
                                          "-(x - y)^3*t"};
  std::mt19937_64 rng(7);
  for (int i = 0; i < 5000; ++i) {
    std::string s = seeds[i % seeds.size()];
    std::uniform_int_distribution<std::size_t> pos(0, s.size() - 1);
    s[pos(rng)] = static_cast<char>(std::uniform_int_distribution<int>(32, 126)(rng));
    try {
      parse(s, xyzt_context());
    } catch (const ParseError&) {
    } catch (const AlgebraError&) {
    } catch (const DivisionByZero&) {
    }
  }
}
