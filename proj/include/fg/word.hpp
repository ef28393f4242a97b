#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fg {

/// Raised when two words from free groups of different rank are combined.
class ContextMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised for malformed word text.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation is undefined on its input (e.g. the root of 1).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A generator e_i or its inverse. Stored as a signed index: +i for e_i,
/// -i for e_i^{-1}; zero never occurs.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(int generator, bool inverse) : value_(inverse ? -generator : generator) {}

  static constexpr Letter from_signed(int value) {
    Letter l;
    l.value_ = value;
    return l;
  }

  [[nodiscard]] constexpr int generator() const { return value_ < 0 ? -value_ : value_; }
  [[nodiscard]] constexpr bool is_inverse() const { return value_ < 0; }
  [[nodiscard]] constexpr int sign() const { return value_ < 0 ? -1 : 1; }
  [[nodiscard]] constexpr int signed_value() const { return value_; }
  [[nodiscard]] constexpr Letter inverse() const { return from_signed(-value_); }
  [[nodiscard]] constexpr bool cancels(Letter other) const { return value_ == -other.value_; }

  /// Dense code in [0, 2r): e_i -> 2(i-1), e_i^{-1} -> 2(i-1)+1.
  [[nodiscard]] constexpr int code() const { return 2 * (generator() - 1) + (is_inverse() ? 1 : 0); }
  static constexpr Letter from_code(int code) { return Letter(code / 2 + 1, (code % 2) != 0); }

  constexpr auto operator<=>(const Letter&) const = default;

 private:
  std::int32_t value_ = 1;
};

/// A possibly unreduced letter sequence, the input type of reduce().
struct RawSequence {
  int rank = 2;
  std::vector<Letter> letters;
};

/// A reduced word in the free group of the given rank (rank >= 2).
///
/// Every constructor reduces eagerly, so a Word never holds an adjacent
/// cancelling pair. The empty word is the identity and prints as "1".
class Word {
 public:
  explicit Word(int rank = 2);
  Word(int rank, std::span<const Letter> letters);

  /// Parses compact ("CBaaaabc") or verbose ("E3 E2 e1") text. Whitespace
  /// is ignored in compact form. "1" denotes the identity.
  static Word parse(std::string_view text, int rank);

  /// e_i as a one-letter word.
  static Word generator(int rank, int index);

  [[nodiscard]] int rank() const { return rank_; }
  [[nodiscard]] std::size_t size() const { return letters_.size(); }
  [[nodiscard]] bool empty() const { return letters_.empty(); }
  [[nodiscard]] std::span<const Letter> letters() const { return letters_; }
  [[nodiscard]] Letter operator[](std::size_t i) const { return letters_[i]; }

  /// Subword on the half-open letter interval [start, end). Factors of a
  /// reduced word are reduced, so no work is needed.
  [[nodiscard]] Word factor(std::size_t start, std::size_t end) const;

  /// Compact text when rank <= 26, verbose otherwise.
  [[nodiscard]] std::string str() const;
  [[nodiscard]] std::string verbose_str() const;

  bool operator==(const Word&) const = default;
  /// Shortlex order: by length, then letter by letter with a < A < b < B < ...
  [[nodiscard]] bool shortlex_less(const Word& other) const;

 private:
  int rank_;
  std::vector<Letter> letters_;
};

[[nodiscard]] Word reduce(const RawSequence& raw);

[[nodiscard]] Word multiply(const Word& u, const Word& v);
[[nodiscard]] Word invert(const Word& u);
[[nodiscard]] Word power(const Word& u, long long m);

/// x^g := g^{-1} x g.
[[nodiscard]] Word conjugate(const Word& x, const Word& g);

struct CyclicDecomposition {
  Word core;       ///< cyclically reduced
  Word conjugator; ///< w == conjugate(core, conjugator)
};
[[nodiscard]] CyclicDecomposition cyclic_reduce(const Word& w);

struct PrimitiveRoot {
  Word root;
  long long exponent;
};
/// w == power(root, exponent) with root not a proper power. Throws
/// DomainError on the identity.
[[nodiscard]] PrimitiveRoot primitive_root(const Word& w);
[[nodiscard]] bool is_mth_power(const Word& w, long long m);

[[nodiscard]] bool commutes(const Word& u, const Word& v);

/// Some g with conjugate(u, g) == v, if u and v are conjugate.
[[nodiscard]] std::optional<Word> are_conjugate(const Word& u, const Word& v);

/// Images of e_1..e_r. Inverse letters map to inverted images.
class GeneratorMap {
 public:
  explicit GeneratorMap(std::vector<Word> images);
  static GeneratorMap identity(int rank);

  [[nodiscard]] int domain_rank() const { return static_cast<int>(images_.size()); }
  [[nodiscard]] int target_rank() const { return images_.front().rank(); }
  [[nodiscard]] const Word& image(int generator) const { return images_[generator - 1]; }

 private:
  std::vector<Word> images_;
};

[[nodiscard]] Word endomorphism_apply(const GeneratorMap& map, const Word& w);

/// First x in shortlex order with |x| <= max_length such that x^{-2} w is a
/// cube y^3. Absence means no witness within the bound, not a refutation.
[[nodiscard]] std::optional<std::pair<Word, Word>> square_cube_decompose(const Word& w, int max_length);

/// Signed occurrence count of each generator (index 0 is e_1).
[[nodiscard]] std::vector<long long> exponent_sums(const Word& w);

}  // namespace fg
