#include "fg/families.hpp"

#include <gtest/gtest.h>

#include <set>

using fg::Word;
namespace fam = fg::families;

namespace {

Word W(const char* text) { return Word::parse(text, 4); }

}  // namespace

TEST(Cyclic, Examples) {
  EXPECT_EQ(fam::gen_cyclic(W("a"), 3), W("aaa"));
  EXPECT_EQ(fam::gen_cyclic(W("ab"), 2), W("abab"));
  EXPECT_EQ(fam::gen_cyclic(W("Bab"), 3), W("Baaab"));
}

TEST(Borel, Examples) {
  EXPECT_EQ(fam::gen_borel_conjugate(4, W("bc")), W("CBaaaabc"));
  EXPECT_EQ(fam::gen_borel_conjugate(1, Word(4)), W("a"));
  EXPECT_EQ(fam::gen_borel_conjugate(-2, W("b")), W("BAAb"));
  EXPECT_THROW((void)fam::gen_borel_conjugate(0, W("b")), fg::DomainError);
}

TEST(Borel, CyclicCoreIsThePower) {
  for (long long m = -5; m <= 5; ++m) {
    if (m == 0) {
      continue;
    }
    for (const char* g : {"b", "cd", "Dcb", "bbC"}) {
      const Word w = fam::gen_borel_conjugate(m, W(g));
      EXPECT_EQ(w.size(), static_cast<std::size_t>(std::llabs(m)) + 2 * std::string(g).size());
      EXPECT_EQ(fg::cyclic_reduce(w).core, fg::power(W("a"), m));
    }
  }
}

TEST(Y, Examples) {
  EXPECT_EQ(fam::gen_Y(4, 1, 1), W("a"));
  EXPECT_EQ(fam::gen_Y(4, 1, 2), W("aDad"));
  EXPECT_EQ(fam::gen_Y(4, 2, 3), W("aaDaaDDaaddd"));
}

TEST(Y, LengthFormula) {
  for (long long k = 1; k <= 5; ++k) {
    for (long long n = 1; n <= 15; ++n) {
      EXPECT_EQ(fam::gen_Y(4, k, n).size(), static_cast<std::size_t>(n * k + n * (n - 1))) << k << "," << n;
    }
  }
}

TEST(Y, RejectsBadArguments) {
  EXPECT_THROW((void)fam::gen_Y(3, 1, 2), std::exception);
  EXPECT_THROW((void)fam::gen_Y(4, 0, 2), std::exception);
  EXPECT_THROW((void)fam::gen_Y(4, 1, 0), std::exception);
}

TEST(C, Examples) {
  for (long long k = 1; k <= 3; ++k) {
    EXPECT_EQ(fam::gen_c(4, k, 0), W("b"));
  }
  EXPECT_EQ(fam::gen_c(4, 1, 1), W("bCac"));
  EXPECT_EQ(fam::gen_c(4, 1, 2), W("bCaDadc"));
  EXPECT_EQ(fam::closed_form_c(4, 1, 1), W("bCac"));
  EXPECT_EQ(fam::closed_form_c(4, 1, 2), W("bCaDadc"));
}

TEST(C, RecursionMatchesClosedForm) {
  for (long long k = 1; k <= 4; ++k) {
    for (long long n = 1; n <= 12; ++n) {
      const Word c = fam::gen_c(4, k, n);
      const Word y = fam::gen_Y(4, k, n);
      EXPECT_EQ(c, fam::closed_form_c(4, k, n));
      EXPECT_EQ(c, fg::multiply(fg::multiply(W("bC"), y), W("c")));
      EXPECT_EQ(c.size(), static_cast<std::size_t>(n * (n - 1) + n * k + 3));
    }
  }
}

TEST(Commutator, Examples) {
  EXPECT_EQ(fam::commutator(W("a"), W("b")), W("ABab"));
  EXPECT_EQ(fam::gen_commutator_product(4, 0, 3, {1, 0}), Word(4));
}

TEST(Commutator, ProductHasZeroExponentSums) {
  for (std::uint64_t i = 0; i < 50; ++i) {
    const Word w = fam::gen_commutator_product(4, 3, 4, {9, i});
    for (long long s : fg::exponent_sums(w)) {
      EXPECT_EQ(s, 0);
    }
  }
}

TEST(Random, LengthDeterminismAndSpread) {
  EXPECT_EQ(fam::random_reduced(4, 0, {1, 2}), Word(4));
  std::set<std::string> seen;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const Word w = fam::random_reduced(4, 10, {3, i});
    EXPECT_EQ(w.size(), 10U);
    EXPECT_EQ(w, fam::random_reduced(4, 10, {3, i}));
    seen.insert(w.str());
  }
  EXPECT_GT(seen.size(), 190U);
  EXPECT_NE(fam::random_reduced(4, 10, {3, 0}), fam::random_reduced(4, 10, {4, 0}));
}

TEST(Random, RestrictedGenerators) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    const Word g = fam::random_reduced_over(4, 2, 6, {5, i});
    EXPECT_EQ(g.size(), 6U);
    EXPECT_EQ(fg::exponent_sums(g)[0], 0);
    for (auto l : g.letters()) {
      EXPECT_NE(l.generator(), 1);
    }
  }
}

TEST(Closure, Examples) {
  const auto inner = fam::FamilySpec::parse("Y k=1");
  EXPECT_EQ(fam::gen_conjugation_closure(inner, 2, 0, {1, 2}), W("aDad"));
  EXPECT_EQ(fg::conjugate(W("a"), W("b")), W("Bab"));
  EXPECT_EQ(fg::conjugate(fam::gen_Y(4, 1, 2), W("c")), W("CaDadc"));
  const Word w = fam::gen_conjugation_closure(inner, 4, 2, {8, 4});
  ASSERT_TRUE(fg::are_conjugate(fam::gen_Y(4, 1, 4), w).has_value());
}

TEST(FamilySpec, ParsesAndPrints) {
  for (const char* text : {"Y k=2", "c k=1", "borel m=4 g=bc", "commprod m=3 seed=7", "cyclic w=ab", "mth m=2 seed=3",
                           "borel g=bc", "borel m=4 seed=7", "random seed=5", "commprod len=2 m=3 seed=7",
                           "closure glen=2 seed=5 of Y k=2"}) {
    const auto spec = fam::FamilySpec::parse(text);
    const auto again = fam::FamilySpec::parse(spec.str());
    EXPECT_EQ(again.str(), spec.str()) << text;
    for (long long n = 1; n <= 4; ++n) {
      EXPECT_EQ(spec.at(n), again.at(n)) << text << " n=" << n;
    }
  }
  EXPECT_EQ(fam::FamilySpec::parse("Y k=2").name(), "Y");
  EXPECT_EQ(fam::FamilySpec::parse("Y k=2").params(), "k=2");
}

TEST(FamilySpec, StreamsMatchGenerators) {
  EXPECT_EQ(fam::FamilySpec::parse("Y k=2").at(3), W("aaDaaDDaaddd"));
  EXPECT_EQ(fam::FamilySpec::parse("c k=1").at(2), W("bCaDadc"));
  EXPECT_EQ(fam::FamilySpec::parse("cyclic w=Bab").at(3), W("Baaab"));
  EXPECT_EQ(fam::FamilySpec::parse("borel g=bc").at(4), W("CBaaaabc"));
  EXPECT_EQ(fam::FamilySpec::parse("borel m=4 g=bc").at(9), W("CBaaaabc"));
  const Word b = fam::FamilySpec::parse("borel m=4 seed=7").at(3);
  EXPECT_EQ(b.size(), 10U);
  EXPECT_EQ(fg::cyclic_reduce(b).core, W("aaaa"));
  EXPECT_TRUE(fg::is_mth_power(fam::FamilySpec::parse("mth m=3 seed=1").at(5), 3));
}

TEST(FamilySpec, ReseedChangesSampledFamiliesOnly) {
  const auto y = fam::FamilySpec::parse("Y k=2");
  EXPECT_EQ(y.reseeded(99).str(), y.str());
  const auto r = fam::FamilySpec::parse("random seed=5");
  EXPECT_EQ(r.reseeded(6).str(), "random seed=6");
  EXPECT_NE(r.at(20), r.reseeded(6).at(20));
}

TEST(FamilySpec, RejectsMalformedText) {
  for (const char* text : {"", "Y", "Y k=", "Y k=two", "bogus k=1", "borel", "closure glen=2 seed=1", "Y k=2 r=3",
                           "cyclic w=a%"}) {
    EXPECT_THROW((void)fam::FamilySpec::parse(text), fg::ParseError) << text;
  }
}
