#include "fg/families.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <sstream>

namespace fg::families {

namespace {

Word a_power(int rank, long long m) { return power(Word::generator(rank, 1), m); }

void require_rank(int rank, int needed, const char* what) {
  if (rank < needed) {
    throw std::invalid_argument(std::string(what) + " needs at least " + std::to_string(needed) + " generators");
  }
}

}  // namespace

Word random_reduced_over(int rank, int first_generator, std::size_t length, SampleKey key) {
  const int alphabet = 2 * (rank - first_generator + 1);
  if (alphabet < 2) {
    throw std::invalid_argument("empty sampling alphabet");
  }
  Sampler rng(key);
  std::vector<Letter> letters;
  letters.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    if (letters.empty()) {
      letters.push_back(Letter::from_code(2 * (first_generator - 1) + static_cast<int>(rng.below(alphabet))));
      continue;
    }
    // Skip the inverse of the previous letter among the 2r-1 remaining codes.
    const int forbidden = letters.back().inverse().code() - 2 * (first_generator - 1);
    int pick = static_cast<int>(rng.below(static_cast<std::uint64_t>(alphabet - 1)));
    if (pick >= forbidden) {
      ++pick;
    }
    letters.push_back(Letter::from_code(2 * (first_generator - 1) + pick));
  }
  return Word(rank, letters);
}

Word random_reduced(int rank, std::size_t length, SampleKey key) { return random_reduced_over(rank, 1, length, key); }

Word gen_cyclic(const Word& w, long long n) {
  if (w.empty()) {
    throw DomainError("cyclic family needs a nontrivial base word");
  }
  return power(w, n);
}

Word gen_borel_conjugate(long long m, const Word& g) {
  if (m == 0) {
    throw DomainError("Borel conjugate needs m != 0");
  }
  return conjugate(a_power(g.rank(), m), g);
}

Word gen_Y(int rank, long long k, long long n) {
  require_rank(rank, 4, "the Y family");
  if (k < 1 || n < 1) {
    throw DomainError("the Y family needs k >= 1 and n >= 1");
  }
  const Letter a(1, false);
  const Letter D(4, true);
  const Letter d(4, false);
  std::vector<Letter> raw;
  for (long long i = 0; i < n; ++i) {
    raw.insert(raw.end(), static_cast<std::size_t>(i), D);
    raw.insert(raw.end(), static_cast<std::size_t>(k), a);
  }
  raw.insert(raw.end(), static_cast<std::size_t>(n * (n - 1) / 2), d);
  return Word(rank, raw);
}

Word gen_c(int rank, long long k, long long n) {
  require_rank(rank, 4, "the c family");
  if (k < 1 || n < 0) {
    throw DomainError("the c family needs k >= 1 and n >= 0");
  }
  const Word ak = a_power(rank, k);
  const Word e3 = Word::generator(rank, 3);
  const Word e4 = Word::generator(rank, 4);
  Word c = Word::generator(rank, 2);
  for (long long i = 1; i <= n; ++i) {
    const long long j = i - 1;
    const Word h = multiply(power(e4, j * (j + 1) / 2), e3);
    c = multiply(c, conjugate(ak, h));
  }
  return c;
}

Word closed_form_c(int rank, long long k, long long n) {
  require_rank(rank, 4, "the c family");
  if (k < 1 || n < 1) {
    throw DomainError("closed form needs k >= 1 and n >= 1");
  }
  const Word ak = a_power(rank, k);
  const Word e4 = Word::generator(rank, 4);
  Word w = multiply(Word::generator(rank, 2), invert(Word::generator(rank, 3)));
  w = multiply(w, ak);
  for (long long i = 1; i <= n - 1; ++i) {
    w = multiply(w, multiply(power(e4, -i), ak));
  }
  w = multiply(w, power(e4, n * (n - 1) / 2));
  return multiply(w, Word::generator(rank, 3));
}

Word commutator(const Word& u, const Word& v) {
  return multiply(multiply(invert(u), invert(v)), multiply(u, v));
}

Word gen_commutator_product(int rank, long long m, std::size_t factor_length, SampleKey key) {
  Word out(rank);
  for (long long i = 0; i < m; ++i) {
    const std::uint64_t base = key.index * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(2 * i);
    const Word u = random_reduced(rank, factor_length, {key.seed, base});
    const Word v = random_reduced(rank, factor_length, {key.seed, base + 1});
    out = multiply(out, commutator(u, v));
  }
  return out;
}

Word gen_conjugation_closure(const FamilySpec& inner, long long n, std::size_t conjugator_length, SampleKey key) {
  const Word g = random_reduced(inner.rank(), conjugator_length, key);
  return conjugate(inner.at(n), g);
}

// ---------------------------------------------------------------------------

FamilySpec::FamilySpec(int rank, FamilyKind kind) : rank_(rank), kind_(std::move(kind)) {
  if (rank < 2) {
    throw std::invalid_argument("free group rank must be at least 2");
  }
}

namespace {

template <class... Ts>
struct Visitor : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Visitor(Ts...) -> Visitor<Ts...>;

long long to_integer(const std::string& key, const std::string& value) {
  long long out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ParseError("family parameter " + key + "=" + value + " is not an integer");
  }
  return out;
}

class KeyValues {
 public:
  explicit KeyValues(std::map<std::string, std::string> values) : values_(std::move(values)) {}

  bool has(const std::string& key) const { return values_.count(key) != 0; }

  long long integer(const std::string& key) {
    const auto it = values_.find(key);
    if (it == values_.end()) {
      throw ParseError("family is missing parameter " + key);
    }
    used_.push_back(key);
    return to_integer(key, it->second);
  }

  long long integer_or(const std::string& key, long long fallback) { return has(key) ? integer(key) : fallback; }

  std::string text(const std::string& key) {
    const auto it = values_.find(key);
    if (it == values_.end()) {
      throw ParseError("family is missing parameter " + key);
    }
    used_.push_back(key);
    return it->second;
  }

  void finish(const std::string& family) const {
    for (const auto& [key, value] : values_) {
      if (std::find(used_.begin(), used_.end(), key) == used_.end()) {
        throw ParseError("unknown parameter " + key + " for family " + family);
      }
    }
  }

 private:
  std::map<std::string, std::string> values_;
  std::vector<std::string> used_;
};

std::uint64_t to_seed(long long v) {
  if (v < 0) {
    throw ParseError("seed must be non-negative");
  }
  return static_cast<std::uint64_t>(v);
}

long long positive(long long v, const char* what) {
  if (v < 1) {
    throw ParseError(std::string(what) + " must be >= 1");
  }
  return v;
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string name;
  if (!(in >> name)) {
    throw ParseError("empty family spec");
  }
  std::map<std::string, std::string> values;
  std::string token;
  std::string inner_text;
  while (in >> token) {
    if (token == "of") {
      std::getline(in, inner_text);
      break;
    }
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ParseError("expected key=value in family spec, got '" + token + "'");
    }
    if (!values.emplace(token.substr(0, eq), token.substr(eq + 1)).second) {
      throw ParseError("duplicate family parameter " + token.substr(0, eq));
    }
  }
  KeyValues kv(std::move(values));
  const long long r = kv.integer_or("r", 4);
  if (r < 2 || r > 1000) {
    throw ParseError("family rank r must be in [2, 1000]");
  }
  const int rank = static_cast<int>(r);
  if (name != "closure" && !inner_text.empty()) {
    throw ParseError("only the closure family takes an 'of' clause");
  }

  FamilyKind kind;
  if (name == "cyclic") {
    const Word base = Word::parse(kv.text("w"), rank);
    if (base.empty()) {
      throw ParseError("cyclic family needs a nontrivial base word");
    }
    kind = CyclicPowers{base};
  } else if (name == "mth") {
    kind = MthPowers{positive(kv.integer("m"), "m"), to_seed(kv.integer_or("seed", 0))};
  } else if (name == "borel") {
    BorelConjugate b{std::nullopt, std::nullopt, to_seed(kv.integer_or("seed", 0))};
    if (kv.has("m")) {
      b.m = kv.integer("m");
      if (*b.m == 0) {
        throw ParseError("borel family needs m != 0");
      }
    }
    if (kv.has("g")) {
      b.g = Word::parse(kv.text("g"), rank);
    }
    if (!b.m && !b.g) {
      throw ParseError("borel family needs m, g, or both");
    }
    kind = b;
  } else if (name == "Y") {
    if (rank < 4) {
      throw ParseError("the Y family needs r >= 4");
    }
    kind = YFamily{positive(kv.integer("k"), "k")};
  } else if (name == "c") {
    if (rank < 4) {
      throw ParseError("the c family needs r >= 4");
    }
    kind = CFamily{positive(kv.integer("k"), "k")};
  } else if (name == "commprod") {
    CommutatorProduct c{kv.integer("m"), std::nullopt, to_seed(kv.integer_or("seed", 0))};
    if (c.m < 0) {
      throw ParseError("commprod needs m >= 0");
    }
    if (kv.has("len")) {
      const long long len = kv.integer("len");
      if (len < 0) {
        throw ParseError("commprod len must be >= 0");
      }
      c.factor_length = static_cast<std::size_t>(len);
    }
    kind = c;
  } else if (name == "random") {
    kind = RandomWords{to_seed(kv.integer_or("seed", 0))};
  } else if (name == "closure") {
    if (inner_text.empty()) {
      throw ParseError("closure family needs 'of <inner spec>'");
    }
    const long long glen = kv.integer("glen");
    if (glen < 0) {
      throw ParseError("closure glen must be >= 0");
    }
    auto inner = FamilySpec::parse(inner_text);
    if (inner.rank() != rank) {
      throw ParseError("closure and inner family must use the same rank");
    }
    kind = std::make_shared<const ConjugationClosure>(
        ConjugationClosure{std::move(inner), static_cast<std::size_t>(glen), to_seed(kv.integer_or("seed", 0))});
  } else {
    throw ParseError("unknown family '" + name + "'");
  }
  kv.finish(name);
  return FamilySpec(rank, std::move(kind));
}

std::string FamilySpec::name() const {
  return std::visit(Visitor{
                        [](const CyclicPowers&) { return std::string("cyclic"); },
                        [](const MthPowers&) { return std::string("mth"); },
                        [](const BorelConjugate&) { return std::string("borel"); },
                        [](const YFamily&) { return std::string("Y"); },
                        [](const CFamily&) { return std::string("c"); },
                        [](const CommutatorProduct&) { return std::string("commprod"); },
                        [](const RandomWords&) { return std::string("random"); },
                        [](const std::shared_ptr<const ConjugationClosure>&) { return std::string("closure"); },
                    },
                    kind_);
}

std::string FamilySpec::params() const {
  std::vector<std::string> parts;
  std::visit(Visitor{
                 [&](const CyclicPowers& c) { parts.push_back("w=" + c.base.str()); },
                 [&](const MthPowers& m) {
                   parts.push_back("m=" + std::to_string(m.m));
                   parts.push_back("seed=" + std::to_string(m.seed));
                 },
                 [&](const BorelConjugate& b) {
                   if (b.m) {
                     parts.push_back("m=" + std::to_string(*b.m));
                   }
                   if (b.g) {
                     parts.push_back("g=" + b.g->str());
                   } else {
                     parts.push_back("seed=" + std::to_string(b.seed));
                   }
                 },
                 [&](const YFamily& y) { parts.push_back("k=" + std::to_string(y.k)); },
                 [&](const CFamily& c) { parts.push_back("k=" + std::to_string(c.k)); },
                 [&](const CommutatorProduct& c) {
                   parts.push_back("m=" + std::to_string(c.m));
                   if (c.factor_length) {
                     parts.push_back("len=" + std::to_string(*c.factor_length));
                   }
                   parts.push_back("seed=" + std::to_string(c.seed));
                 },
                 [&](const RandomWords& r) { parts.push_back("seed=" + std::to_string(r.seed)); },
                 [&](const std::shared_ptr<const ConjugationClosure>& c) {
                   parts.push_back("glen=" + std::to_string(c->conjugator_length));
                   parts.push_back("seed=" + std::to_string(c->seed));
                   parts.push_back("of " + c->inner.str());
                 },
             },
             kind_);
  if (rank_ != 4) {
    parts.insert(parts.begin(), "r=" + std::to_string(rank_));
  }
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) {
      out.push_back(' ');
    }
    out += p;
  }
  return out;
}

std::string FamilySpec::str() const {
  const auto p = params();
  return p.empty() ? name() : name() + " " + p;
}

Word FamilySpec::at(long long n) const {
  const auto index = static_cast<std::uint64_t>(n);
  return std::visit(
      Visitor{
          [&](const CyclicPowers& c) { return gen_cyclic(c.base, n); },
          [&](const MthPowers& m) {
            return power(random_reduced(rank_, static_cast<std::size_t>(n), {m.seed, index}), m.m);
          },
          [&](const BorelConjugate& b) {
            if (b.m && b.g) {
              return gen_borel_conjugate(*b.m, *b.g);
            }
            if (b.g) {
              return gen_borel_conjugate(n, *b.g);
            }
            // Conjugators avoid e_1 so the a-block survives reduction intact.
            const Word g = random_reduced_over(rank_, 2, static_cast<std::size_t>(n), {b.seed, index});
            return gen_borel_conjugate(*b.m, g);
          },
          [&](const YFamily& y) { return gen_Y(rank_, y.k, n); },
          [&](const CFamily& c) { return gen_c(rank_, c.k, n); },
          [&](const CommutatorProduct& c) {
            const std::size_t len = c.factor_length.value_or(static_cast<std::size_t>(n));
            return gen_commutator_product(rank_, c.m, len, {c.seed, index});
          },
          [&](const RandomWords& r) { return random_reduced(rank_, static_cast<std::size_t>(n), {r.seed, index}); },
          [&](const std::shared_ptr<const ConjugationClosure>& c) {
            return gen_conjugation_closure(c->inner, n, c->conjugator_length, {c->seed, index});
          },
      },
      kind_);
}

FamilySpec FamilySpec::reseeded(std::uint64_t seed) const {
  FamilyKind kind = std::visit(
      Visitor{
          [&](MthPowers m) -> FamilyKind {
            m.seed = seed;
            return m;
          },
          [&](BorelConjugate b) -> FamilyKind {
            b.seed = seed;
            return b;
          },
          [&](CommutatorProduct c) -> FamilyKind {
            c.seed = seed;
            return c;
          },
          [&](RandomWords r) -> FamilyKind {
            r.seed = seed;
            return r;
          },
          [&](const std::shared_ptr<const ConjugationClosure>& c) -> FamilyKind {
            return std::make_shared<const ConjugationClosure>(
                ConjugationClosure{c->inner.reseeded(seed), c->conjugator_length, seed});
          },
          [&](const auto& other) -> FamilyKind { return other; },
      },
      kind_);
  return FamilySpec(rank_, std::move(kind));
}

}  // namespace fg::families
