#include "fg/word.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using fg::Word;

namespace {

Word W(const char* text, int rank = 4) { return Word::parse(text, rank); }

Word random_word(std::mt19937_64& rng, int rank, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> gen(1, rank);
  std::bernoulli_distribution inv(0.5);
  std::vector<fg::Letter> raw;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) {
    raw.emplace_back(gen(rng), inv(rng));
  }
  return Word(rank, raw);
}

}  // namespace

TEST(WordText, ParsesCompactAndVerbose) {
  EXPECT_EQ(W("CBaaaabc").str(), "CBaaaabc");
  EXPECT_EQ(W("E3 E2 e1 e1 e1 e1 e2 e3"), W("CBaaaabc"));
  EXPECT_EQ(W("1").size(), 0U);
  EXPECT_EQ(W("1").str(), "1");
  EXPECT_EQ(W("abBA c").str(), "c");
  EXPECT_EQ(W("aA").str(), "1");
}

TEST(WordText, VerboseBeyondTwentySixGenerators) {
  const Word w = Word::parse("e27 E3 e1", 30);
  EXPECT_EQ(w.str(), "e27 E3 e1");
  EXPECT_EQ(Word::parse(w.str(), 30), w);
  EXPECT_EQ(Word(30).str(), "1");
}

TEST(WordText, RejectsBadInput) {
  EXPECT_THROW(W("ab%"), fg::ParseError);
  EXPECT_THROW(W("e"), fg::ParseError);  // generator 5 not in F_4
  EXPECT_THROW(W(""), fg::ParseError);
  EXPECT_THROW(Word::parse("e3", 2), fg::ParseError);
  EXPECT_THROW(Word(1), std::invalid_argument);
}

TEST(Reduce, SpecExamples) {
  EXPECT_EQ(W("a A"), Word(4));
  EXPECT_EQ(W("a b B A c").str(), "c");
  // Already reduced: w^{-1} e_1^4 w for w = bc.
  const Word w = W("CBaaaabc");
  EXPECT_EQ(w.size(), 8U);
  EXPECT_EQ(fg::reduce({4, {w.letters().begin(), w.letters().end()}}), w);
}

TEST(Multiply, SpecExamples) {
  const Word u = W("abC");
  EXPECT_EQ(fg::multiply(u, Word(4)), u);
  EXPECT_EQ(fg::multiply(Word(4), u), u);
  EXPECT_EQ(fg::multiply(W("ab"), W("BA")), Word(4));
  EXPECT_EQ(fg::multiply(W("cB"), W("ba")), W("ca"));
}

TEST(Multiply, RejectsMismatchedRank) {
  EXPECT_THROW((void)fg::multiply(Word::parse("a", 2), Word::parse("a", 3)), fg::ContextMismatch);
}

TEST(Invert, SpecExamples) {
  EXPECT_EQ(fg::invert(Word(4)), Word(4));
  EXPECT_EQ(fg::invert(W("a")), W("A"));
  EXPECT_EQ(fg::invert(W("abC")), W("cBA"));
}

TEST(Power, SpecExamples) {
  EXPECT_EQ(fg::power(W("abc"), 0), Word(4));
  EXPECT_EQ(fg::power(W("a"), 4), W("aaaa"));
  EXPECT_EQ(fg::power(W("Bab"), 2), W("Baab"));
  EXPECT_EQ(fg::power(W("Bab"), -2), W("BAAb"));
}

TEST(Power, MatchesRepeatedMultiplication) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const Word u = random_word(rng, 3, 8);
    Word acc(3);
    for (int m = 0; m <= 5; ++m) {
      ASSERT_EQ(fg::power(u, m), acc) << u.str() << "^" << m;
      acc = fg::multiply(acc, u);
    }
  }
}

TEST(Conjugate, SpecExamples) {
  const Word x = W("abC");
  EXPECT_EQ(fg::conjugate(x, Word(4)), x);
  EXPECT_EQ(fg::conjugate(W("a"), W("c")), W("Cac"));
  EXPECT_EQ(fg::conjugate(W("aaaa"), W("bc")), W("CBaaaabc"));
}

TEST(CyclicReduce, SpecExamples) {
  auto [c1, g1] = fg::cyclic_reduce(W("ab"));
  EXPECT_EQ(c1, W("ab"));
  EXPECT_EQ(g1, Word(4));
  auto [c2, g2] = fg::cyclic_reduce(W("Bab"));
  EXPECT_EQ(c2, W("a"));
  EXPECT_EQ(g2, W("b"));
  auto [c3, g3] = fg::cyclic_reduce(W("CBabc"));
  EXPECT_EQ(c3, W("a"));
  EXPECT_EQ(g3, W("bc"));
  EXPECT_EQ(fg::conjugate(c3, g3), W("CBabc"));
}

TEST(PrimitiveRoot, SpecExamples) {
  auto r1 = fg::primitive_root(W("a"));
  EXPECT_EQ(r1.root, W("a"));
  EXPECT_EQ(r1.exponent, 1);
  auto r2 = fg::primitive_root(W("abab"));
  EXPECT_EQ(r2.root, W("ab"));
  EXPECT_EQ(r2.exponent, 2);
  auto r3 = fg::primitive_root(W("Baab"));
  EXPECT_EQ(r3.root, W("Bab"));
  EXPECT_EQ(r3.exponent, 2);
  EXPECT_THROW((void)fg::primitive_root(Word(4)), fg::DomainError);
}

TEST(PrimitiveRoot, ExhaustiveSoundnessUpToTwelve) {
  for (const auto& s : oracle::all_reduced(2, 12)) {
    if (s.empty()) {
      continue;
    }
    const Word w = oracle::word_of(2, s);
    const auto [root, k] = fg::primitive_root(w);
    ASSERT_EQ(fg::power(root, k), w) << w.str();
    // root is not a proper power: no d > 1 with root = v^d.
    const auto [core, g] = fg::cyclic_reduce(root);
    for (std::size_t d = 2; d <= core.size(); ++d) {
      if (core.size() % d != 0) {
        continue;
      }
      const Word block = core.factor(0, core.size() / d);
      ASSERT_NE(fg::power(block, static_cast<long long>(d)), core) << w.str();
    }
    for (long long m = 1; m <= 4; ++m) {
      ASSERT_EQ(fg::is_mth_power(w, m), k % m == 0);
    }
  }
}

TEST(Commutes, SpecExamples) {
  const Word w = W("aBc");
  EXPECT_TRUE(fg::commutes(w, fg::power(w, 3)));
  EXPECT_FALSE(fg::commutes(W("a"), W("b")));
  EXPECT_TRUE(fg::commutes(W("abab"), W("ab")));
}

TEST(AreConjugate, SpecExamples) {
  const Word w = W("abCa");
  EXPECT_EQ(fg::are_conjugate(w, w), Word(4));
  EXPECT_FALSE(fg::are_conjugate(W("a"), W("b")).has_value());
  const auto g = fg::are_conjugate(W("ab"), W("ba"));
  ASSERT_TRUE(g);
  EXPECT_EQ(fg::conjugate(W("ab"), *g), W("ba"));
}

TEST(AreConjugate, ExhaustiveAgainstConjugatorSearch) {
  // Pairs of words up to length 4 over F_2. Conjugate words of length <= 4
  // are related by a conjugator of length <= 4 (cyclic cores share length).
  const auto corpus = oracle::all_reduced(2, 4);
  for (const auto& a : corpus) {
    const Word u = oracle::word_of(2, a);
    for (const auto& b : corpus) {
      const Word v = oracle::word_of(2, b);
      const auto g = fg::are_conjugate(u, v);
      if (g) {
        ASSERT_EQ(fg::conjugate(u, *g), v) << u.str() << " ~ " << v.str();
        ASSERT_TRUE(fg::are_conjugate(v, u).has_value()) << "symmetry " << u.str() << " " << v.str();
      } else {
        ASSERT_FALSE(oracle::conjugate_by_search(u, v, 4)) << u.str() << " vs " << v.str();
      }
    }
  }
}

TEST(Endomorphism, SpecExamples) {
  const Word w = W("abCdA");
  EXPECT_EQ(fg::endomorphism_apply(fg::GeneratorMap::identity(4), w), w);
  const fg::GeneratorMap m1({Word::parse("ab", 2), Word::parse("b", 2)});
  EXPECT_EQ(fg::endomorphism_apply(m1, Word::parse("ab", 2)), Word::parse("abb", 2));
  const fg::GeneratorMap m2({Word::parse("a", 2), Word::parse("ab", 2)});
  EXPECT_EQ(fg::endomorphism_apply(m2, Word::parse("b", 2)), Word::parse("ab", 2));
  EXPECT_THROW((void)fg::endomorphism_apply(m2, W("a")), fg::ContextMismatch);
}

TEST(Endomorphism, IsHomomorphism) {
  std::mt19937_64 rng(5);
  const fg::GeneratorMap m({W("abA"), W("cc"), W("Db"), W("1")});
  for (int t = 0; t < 500; ++t) {
    const Word u = random_word(rng, 4, 10);
    const Word v = random_word(rng, 4, 10);
    ASSERT_EQ(fg::endomorphism_apply(m, fg::multiply(u, v)),
              fg::multiply(fg::endomorphism_apply(m, u), fg::endomorphism_apply(m, v)));
    ASSERT_EQ(fg::endomorphism_apply(m, fg::invert(u)), fg::invert(fg::endomorphism_apply(m, u)));
  }
}

TEST(SquareCube, SpecExamples) {
  auto e = fg::square_cube_decompose(Word(4), 3);
  ASSERT_TRUE(e);
  EXPECT_EQ(e->first, Word(4));
  EXPECT_EQ(e->second, Word(4));

  auto a5 = fg::square_cube_decompose(W("aaaaa"), 3);
  ASSERT_TRUE(a5);
  EXPECT_EQ(a5->first, W("a"));
  EXPECT_EQ(a5->second, W("a"));

  // Regression value from a test-side enumeration of all x with |x| <= 6
  // over F_2 and all y with |y| <= |x^-2 w|: first witness is x = BA, y = ab.
  const Word ab = Word::parse("ab", 2);
  auto r = fg::square_cube_decompose(ab, 6);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->first, Word::parse("BA", 2));
  EXPECT_EQ(r->second, Word::parse("ab", 2));
  EXPECT_EQ(fg::multiply(fg::power(r->first, 2), fg::power(r->second, 3)), ab);
}

TEST(SquareCube, AbsenceWithinBoundIsNotAnError) {
  EXPECT_FALSE(fg::square_cube_decompose(Word::parse("ab", 2), 1).has_value());
}

TEST(ExponentSums, CountsSignedOccurrences) {
  EXPECT_EQ(fg::exponent_sums(W("aaBcA")), (std::vector<long long>{1, -1, 1, 0}));
}
