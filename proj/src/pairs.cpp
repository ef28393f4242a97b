#include "fg/negligibility.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace fg::cover {

namespace {

// Longest common extension table of two sequences, kept one row at a time.
// row(i)[j] = length of the longest common prefix of x[i..] and y[j..].
template <typename Visit>
void for_each_common_extension(std::span<const Letter> x, std::span<const Letter> y, Visit&& visit) {
  const std::size_t n = x.size();
  const std::size_t m = y.size();
  std::vector<std::size_t> next(m + 1, 0);
  std::vector<std::size_t> cur(m + 1, 0);
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = m; j-- > 0;) {
      cur[j] = x[i] == y[j] ? next[j + 1] + 1 : 0;
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (cur[j] != 0) {
        visit(i, j, cur[j]);
      }
    }
    std::swap(cur, next);
  }
}

}  // namespace

std::optional<std::string> validate_pair(const Word& w, const MatchedPair& pair) {
  const std::size_t n = w.size();
  for (const Interval& iv : {pair.first, pair.second}) {
    if (iv.start >= iv.end) {
      return "empty interval (" + std::to_string(iv.start) + "," + std::to_string(iv.end) + ")";
    }
    if (iv.end > n) {
      return "interval (" + std::to_string(iv.start) + "," + std::to_string(iv.end) + ") runs past the word";
    }
    if (iv.length() >= n) {
      return "interval (" + std::to_string(iv.start) + "," + std::to_string(iv.end) + ") is not a proper subword";
    }
  }
  if (pair.first.length() != pair.second.length()) {
    return std::string("intervals have different lengths");
  }
  if (pair.first == pair.second) {
    return std::string("the two embedded subwords coincide");
  }
  const std::size_t len = pair.first.length();
  const auto l = w.letters();
  for (std::size_t t = 0; t < len; ++t) {
    const Letter a = l[pair.first.start + t];
    const bool ok = pair.kind == MatchKind::Equal ? a == l[pair.second.start + t]
                                                  : a.cancels(l[pair.second.end - 1 - t]);
    if (!ok) {
      return pair.kind == MatchKind::Equal ? std::string("factors are not equal")
                                           : std::string("factors are not mutually inverse");
    }
  }
  return std::nullopt;
}

std::vector<MatchedPair> enumerate_matching_pairs(const Word& w, std::size_t min_length) {
  std::vector<MatchedPair> out;
  const std::size_t n = w.size();
  if (n < 2) {
    return out;
  }
  min_length = std::max<std::size_t>(min_length, 1);
  const auto x = w.letters();
  const Word winv = invert(w);
  const auto y = winv.letters();

  // Equal pairs: repeated factors of w against itself. Right-maximality is
  // built into the extension length; left-maximality is checked here.
  for_each_common_extension(x, x, [&](std::size_t i, std::size_t j, std::size_t len) {
    if (j <= i || len < min_length) {
      return;
    }
    if (i > 0 && x[i - 1] == x[j - 1]) {
      return;
    }
    out.push_back({{i, i + len}, {j, j + len}, MatchKind::Equal});
  });

  // Inverse pairs: factors of w that reappear in w^{-1}. A match of
  // w[j, j+len) with winv[q, q+len) means w[j, j+len) is the inverse of
  // w[n-q-len, n-q). Each unordered pair shows up twice; keep first < second.
  for_each_common_extension(x, y, [&](std::size_t j, std::size_t q, std::size_t len) {
    if (len < min_length) {
      return;
    }
    if (j > 0 && q > 0 && x[j - 1] == y[q - 1]) {
      return;
    }
    const std::size_t i = n - q - len;
    if (i >= j) {
      return;
    }
    out.push_back({{i, i + len}, {j, j + len}, MatchKind::Inverse});
  });

  std::sort(out.begin(), out.end(), [](const MatchedPair& a, const MatchedPair& b) {
    if (a.first.start != b.first.start) {
      return a.first.start < b.first.start;
    }
    if (a.second.start != b.second.start) {
      return a.second.start < b.second.start;
    }
    if (a.kind != b.kind) {
      return a.kind < b.kind;
    }
    return a.factor_length() < b.factor_length();
  });
  return out;
}

std::string format_pairs(const std::vector<MatchedPair>& pairs) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    if (i != 0) {
      os << "; ";
    }
    os << '(' << p.first.start << ',' << p.first.end << ")~(" << p.second.start << ',' << p.second.end << "):"
       << (p.kind == MatchKind::Equal ? 'E' : 'I');
  }
  os << ']';
  return os.str();
}

namespace {

class PairLexer {
 public:
  explicit PairLexer(const std::string& text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
      ++pos_;
    }
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) {
      throw ParseError(std::string("cover text: expected '") + c + "' at offset " + std::to_string(pos_));
    }
    ++pos_;
  }

  std::size_t number() {
    skip_space();
    const std::size_t begin = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) {
      ++pos_;
    }
    if (begin == pos_) {
      throw ParseError("cover text: expected a number at offset " + std::to_string(begin));
    }
    return std::stoul(text_.substr(begin, pos_ - begin));
  }

  char kind() {
    skip_space();
    if (pos_ >= text_.size() || (text_[pos_] != 'E' && text_[pos_] != 'I')) {
      throw ParseError("cover text: expected E or I at offset " + std::to_string(pos_));
    }
    return text_[pos_++];
  }

  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

Interval parse_interval(PairLexer& lex) {
  lex.expect('(');
  const std::size_t s = lex.number();
  lex.expect(',');
  const std::size_t e = lex.number();
  lex.expect(')');
  return {s, e};
}

}  // namespace

std::vector<MatchedPair> parse_pairs(const std::string& text) {
  PairLexer lex(text);
  std::vector<MatchedPair> out;
  lex.expect('[');
  if (lex.peek(']')) {
    lex.expect(']');
  } else {
    while (true) {
      MatchedPair p;
      p.first = parse_interval(lex);
      lex.expect('~');
      p.second = parse_interval(lex);
      lex.expect(':');
      p.kind = lex.kind() == 'E' ? MatchKind::Equal : MatchKind::Inverse;
      out.push_back(p);
      if (lex.peek(';')) {
        lex.expect(';');
        continue;
      }
      lex.expect(']');
      break;
    }
  }
  if (!lex.at_end()) {
    throw ParseError("cover text: trailing characters");
  }
  return out;
}

}  // namespace fg::cover
