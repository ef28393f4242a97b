#pragma once

#include "fg/sampling.hpp"
#include "fg/word.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace fg::families {

using fg::SampleKey;

/// Uniform reduced word of exactly `length` letters: 2r choices for the
/// first letter, 2r-1 non-cancelling choices for each successor.
[[nodiscard]] Word random_reduced(int rank, std::size_t length, SampleKey key);

/// Same, restricted to generators [first_generator, rank].
[[nodiscard]] Word random_reduced_over(int rank, int first_generator, std::size_t length, SampleKey key);

[[nodiscard]] Word gen_cyclic(const Word& w, long long n);

/// conjugate(e_1^m, g). m == 0 is rejected.
[[nodiscard]] Word gen_borel_conjugate(long long m, const Word& g);

/// e_1^k (e_4^{-1} e_1^k)(e_4^{-2} e_1^k) ... (e_4^{-(n-1)} e_1^k) e_4^{n(n-1)/2}.
/// Requires rank >= 4, k >= 1, n >= 1.
[[nodiscard]] Word gen_Y(int rank, long long k, long long n);

/// c_0 = e_2, c_i = c_{i-1} * conjugate(e_1^k, h_{i-1}) with
/// h_i = e_4^{i(i+1)/2} e_3.
[[nodiscard]] Word gen_c(int rank, long long k, long long n);

/// e_2 e_3^{-1} e_1^k (e_4^{-1} e_1^k) ... (e_4^{-(n-1)} e_1^k) e_4^{n(n-1)/2} e_3,
/// written out block by block rather than by the recursion.
[[nodiscard]] Word closed_form_c(int rank, long long k, long long n);

/// Product of m commutators [u_i, v_i] = u_i^{-1} v_i^{-1} u_i v_i with
/// u_i, v_i sampled reduced words of length `factor_length`.
[[nodiscard]] Word gen_commutator_product(int rank, long long m, std::size_t factor_length, SampleKey key);

[[nodiscard]] Word commutator(const Word& u, const Word& v);

// ---------------------------------------------------------------------------
// FamilySpec: single-line textual family description used by the CLI.
//
//   cyclic w=ab               n -> w^n
//   mth m=2 seed=3            n -> (random reduced word of length n)^m
//   borel g=bc                n -> conjugate(a^n, g)
//   borel m=4 seed=7          n -> conjugate(a^4, g), g random of length n over e_2..e_r
//   borel m=4 g=bc            constant stream
//   Y k=2                     n -> gen_Y(k, n)
//   c k=1                     n -> gen_c(k, n)
//   commprod m=3 seed=7       n -> gen_commutator_product(m, factor length n)
//   commprod m=3 len=2 seed=7 n -> gen_commutator_product(m, factor length 2), index n
//   random seed=5             n -> random reduced word of length n
//   closure glen=2 seed=5 of Y k=2
//                             n -> conjugate(inner(n), g), |g| = glen
//
// Every spec also accepts r=<rank> (default 4).
// ---------------------------------------------------------------------------

struct CyclicPowers { Word base; };
struct MthPowers { long long m; std::uint64_t seed; };
struct BorelConjugate {
  std::optional<long long> m;
  std::optional<Word> g;
  std::uint64_t seed;
};
struct YFamily { long long k; };
struct CFamily { long long k; };
struct CommutatorProduct {
  long long m;
  std::optional<std::size_t> factor_length;
  std::uint64_t seed;
};
struct RandomWords { std::uint64_t seed; };
struct ConjugationClosure;

using FamilyKind = std::variant<CyclicPowers, MthPowers, BorelConjugate, YFamily, CFamily, CommutatorProduct,
                                RandomWords, std::shared_ptr<const ConjugationClosure>>;

class FamilySpec {
 public:
  FamilySpec(int rank, FamilyKind kind);

  /// Throws ParseError on malformed text.
  static FamilySpec parse(std::string_view text);

  [[nodiscard]] int rank() const { return rank_; }
  [[nodiscard]] const FamilyKind& kind() const { return kind_; }

  /// Family name as printed in profile CSVs ("Y", "borel", ...).
  [[nodiscard]] std::string name() const;
  /// Parameter part ("k=2"), canonical key order.
  [[nodiscard]] std::string params() const;
  /// name + " " + params; parse(str()) reproduces the spec.
  [[nodiscard]] std::string str() const;

  /// The n-th member of the stream. Pure in (spec, n).
  [[nodiscard]] Word at(long long n) const;

  /// Copy with every sampler seed (including an inner closure's) replaced.
  /// Families without sampling are returned unchanged.
  [[nodiscard]] FamilySpec reseeded(std::uint64_t seed) const;

 private:
  int rank_;
  FamilyKind kind_;
};

struct ConjugationClosure {
  FamilySpec inner;
  std::size_t conjugator_length;
  std::uint64_t seed;
};

[[nodiscard]] Word gen_conjugation_closure(const FamilySpec& inner, long long n, std::size_t conjugator_length,
                                           SampleKey key);

}  // namespace fg::families
