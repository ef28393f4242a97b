#include "fg/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace fg {

namespace {

void check_rank(int rank) {
  if (rank < 2) {
    throw std::invalid_argument("free group rank must be at least 2, got " + std::to_string(rank));
  }
}

void check_same_context(const Word& u, const Word& v) {
  if (u.rank() != v.rank()) {
    throw ContextMismatch("words from F_" + std::to_string(u.rank()) + " and F_" + std::to_string(v.rank()));
  }
}

// Stack-based free reduction; appends onto an already reduced prefix.
void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back().cancels(l)) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace

Word::Word(int rank) : rank_(rank) { check_rank(rank); }

Word::Word(int rank, std::span<const Letter> letters) : rank_(rank) {
  check_rank(rank);
  letters_.reserve(letters.size());
  for (Letter l : letters) {
    if (l.generator() < 1 || l.generator() > rank) {
      throw std::invalid_argument("generator e" + std::to_string(l.generator()) + " outside F_" +
                                  std::to_string(rank));
    }
    push_reduced(letters_, l);
  }
}

Word Word::generator(int rank, int index) {
  const Letter l(index, false);
  return Word(rank, std::span<const Letter>(&l, 1));
}

Word Word::parse(std::string_view text, int rank) {
  check_rank(rank);
  std::vector<Letter> letters;
  std::size_t i = 0;
  const auto n = text.size();
  bool saw_token = false;
  while (i < n) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch)) != 0) {
      ++i;
      continue;
    }
    // Verbose token e<digits> / E<digits>. A bare 'e' or 'E' is the compact
    // letter for generator 5.
    if ((ch == 'e' || ch == 'E') && i + 1 < n && std::isdigit(static_cast<unsigned char>(text[i + 1])) != 0) {
      std::size_t j = i + 1;
      while (j < n && std::isdigit(static_cast<unsigned char>(text[j])) != 0) {
        ++j;
      }
      int index = 0;
      const auto [ptr, ec] = std::from_chars(text.data() + i + 1, text.data() + j, index);
      if (ec != std::errc() || index < 1) {
        throw ParseError("bad generator token '" + std::string(text.substr(i, j - i)) + "'");
      }
      if (index > rank) {
        throw ParseError("generator e" + std::to_string(index) + " outside F_" + std::to_string(rank));
      }
      letters.emplace_back(index, ch == 'E');
      saw_token = true;
      i = j;
      continue;
    }
    if (ch == '1') {
      ++i;
      continue;
    }
    if (ch >= 'a' && ch <= 'z') {
      letters.emplace_back(ch - 'a' + 1, false);
    } else if (ch >= 'A' && ch <= 'Z') {
      letters.emplace_back(ch - 'A' + 1, true);
    } else {
      throw ParseError(std::string("unexpected character '") + ch + "' in word");
    }
    if (letters.back().generator() > rank) {
      throw ParseError(std::string("letter '") + ch + "' outside F_" + std::to_string(rank));
    }
    saw_token = true;
    ++i;
  }
  if (!saw_token && text.find('1') == std::string_view::npos) {
    throw ParseError("empty word text (write 1 for the identity)");
  }
  return Word(rank, letters);
}

Word Word::factor(std::size_t start, std::size_t end) const {
  Word out(rank_);
  out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(start),
                      letters_.begin() + static_cast<std::ptrdiff_t>(end));
  return out;
}

std::string Word::str() const {
  if (rank_ > 26) {
    return verbose_str();
  }
  if (letters_.empty()) {
    return "1";
  }
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_) {
    s.push_back(static_cast<char>((l.is_inverse() ? 'A' : 'a') + l.generator() - 1));
  }
  return s;
}

std::string Word::verbose_str() const {
  if (letters_.empty()) {
    return "1";
  }
  std::string s;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i != 0) {
      s.push_back(' ');
    }
    s.push_back(letters_[i].is_inverse() ? 'E' : 'e');
    s += std::to_string(letters_[i].generator());
  }
  return s;
}

bool Word::shortlex_less(const Word& other) const {
  if (letters_.size() != other.letters_.size()) {
    return letters_.size() < other.letters_.size();
  }
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i].code() != other.letters_[i].code()) {
      return letters_[i].code() < other.letters_[i].code();
    }
  }
  return false;
}

Word reduce(const RawSequence& raw) { return Word(raw.rank, raw.letters); }

Word multiply(const Word& u, const Word& v) {
  check_same_context(u, v);
  const auto a = u.letters();
  const auto b = v.letters();
  std::size_t k = 0;
  while (k < a.size() && k < b.size() && a[a.size() - 1 - k].cancels(b[k])) {
    ++k;
  }
  std::vector<Letter> out;
  out.reserve(a.size() + b.size() - 2 * k);
  out.insert(out.end(), a.begin(), a.end() - static_cast<std::ptrdiff_t>(k));
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(k), b.end());
  return Word(u.rank(), out);
}

Word invert(const Word& u) {
  std::vector<Letter> out;
  out.reserve(u.size());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(u.rank(), out);
}

Word power(const Word& u, long long m) {
  if (m < 0) {
    return power(invert(u), -m);
  }
  if (m == 0 || u.empty()) {
    return Word(u.rank());
  }
  // u = g^{-1} c g with c cyclically reduced, so u^m = g^{-1} c^m g.
  const auto [core, g] = cyclic_reduce(u);
  std::vector<Letter> body;
  body.reserve(core.size() * static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    body.insert(body.end(), core.letters().begin(), core.letters().end());
  }
  return conjugate(Word(u.rank(), body), g);
}

Word conjugate(const Word& x, const Word& g) { return multiply(multiply(invert(g), x), g); }

CyclicDecomposition cyclic_reduce(const Word& w) {
  const auto l = w.letters();
  const std::size_t n = l.size();
  std::size_t t = 0;
  while (2 * t + 1 < n && l[t].cancels(l[n - 1 - t])) {
    ++t;
  }
  return {w.factor(t, n - t), w.factor(n - t, n)};
}

PrimitiveRoot primitive_root(const Word& w) {
  if (w.empty()) {
    throw DomainError("the identity has no primitive root");
  }
  const auto [core, g] = cyclic_reduce(w);
  const auto c = core.letters();
  const std::size_t n = c.size();
  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p != 0) {
      continue;
    }
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) {
      periodic = c[i] == c[i - p];
    }
    if (periodic) {
      return {conjugate(core.factor(0, p), g), static_cast<long long>(n / p)};
    }
  }
  return {w, 1};  // unreachable: p == n always succeeds
}

bool is_mth_power(const Word& w, long long m) {
  if (m == 0) {
    return w.empty();
  }
  if (w.empty()) {
    return true;
  }
  return primitive_root(w).exponent % m == 0;
}

bool commutes(const Word& u, const Word& v) { return multiply(u, v) == multiply(v, u); }

std::optional<Word> are_conjugate(const Word& u, const Word& v) {
  check_same_context(u, v);
  const auto [cu, gu] = cyclic_reduce(u);
  const auto [cv, gv] = cyclic_reduce(v);
  if (cu.size() != cv.size()) {
    return std::nullopt;
  }
  const std::size_t n = cu.size();
  const auto a = cu.letters();
  const auto b = cv.letters();
  // cv = s p where cu = p s, i.e. cv is cu rotated left by |p|.
  for (std::size_t shift = 0; shift < std::max<std::size_t>(n, 1); ++shift) {
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i) {
      match = b[i] == a[(i + shift) % n];
    }
    if (match) {
      // v = gv^{-1} cv gv, cv = p^{-1} cu p, cu = gu u gu^{-1}.
      const Word p = cu.factor(0, shift);
      return multiply(multiply(invert(gu), p), gv);
    }
  }
  return std::nullopt;
}

GeneratorMap::GeneratorMap(std::vector<Word> images) : images_(std::move(images)) {
  if (images_.size() < 2) {
    throw std::invalid_argument("generator map needs an image for every generator of F_r, r >= 2");
  }
  for (const auto& w : images_) {
    if (w.rank() != images_.front().rank()) {
      throw ContextMismatch("generator images live in different free groups");
    }
  }
}

GeneratorMap GeneratorMap::identity(int rank) {
  std::vector<Word> images;
  for (int i = 1; i <= rank; ++i) {
    images.push_back(Word::generator(rank, i));
  }
  return GeneratorMap(std::move(images));
}

Word endomorphism_apply(const GeneratorMap& map, const Word& w) {
  if (w.rank() != map.domain_rank()) {
    throw ContextMismatch("word in F_" + std::to_string(w.rank()) + " but map defined on F_" +
                          std::to_string(map.domain_rank()));
  }
  std::vector<Letter> raw;
  for (Letter l : w.letters()) {
    const Word& img = map.image(l.generator());
    if (l.is_inverse()) {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) {
        raw.push_back(it->inverse());
      }
    } else {
      raw.insert(raw.end(), img.letters().begin(), img.letters().end());
    }
  }
  return Word(map.target_rank(), raw);
}

namespace {

std::optional<Word> cube_root(const Word& z) {
  if (z.empty()) {
    return z;
  }
  const auto [root, k] = primitive_root(z);
  if (k % 3 != 0) {
    return std::nullopt;
  }
  return power(root, k / 3);
}

// Depth-first over reduced words of exactly `length` letters in shortlex order.
bool search_length(const Word& w, std::vector<Letter>& prefix, std::size_t length, std::optional<std::pair<Word, Word>>& found) {
  if (prefix.size() == length) {
    const Word x(w.rank(), prefix);
    if (auto y = cube_root(multiply(invert(power(x, 2)), w))) {
      found.emplace(x, *y);
      return true;
    }
    return false;
  }
  for (int code = 0; code < 2 * w.rank(); ++code) {
    const Letter l = Letter::from_code(code);
    if (!prefix.empty() && prefix.back().cancels(l)) {
      continue;
    }
    prefix.push_back(l);
    const bool done = search_length(w, prefix, length, found);
    prefix.pop_back();
    if (done) {
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::pair<Word, Word>> square_cube_decompose(const Word& w, int max_length) {
  std::optional<std::pair<Word, Word>> found;
  std::vector<Letter> prefix;
  for (int len = 0; len <= max_length; ++len) {
    if (search_length(w, prefix, static_cast<std::size_t>(len), found)) {
      return found;
    }
  }
  return std::nullopt;
}

std::vector<long long> exponent_sums(const Word& w) {
  std::vector<long long> sums(static_cast<std::size_t>(w.rank()), 0);
  for (Letter l : w.letters()) {
    sums[static_cast<std::size_t>(l.generator() - 1)] += l.sign();
  }
  return sums;
}

}  // namespace fg
