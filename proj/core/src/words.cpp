#include "escapelab/words.hpp"

#include <algorithm>

namespace escapelab {

namespace {

char symbol_char(unsigned s) {
  return static_cast<char>(s < 10 ? '0' + s : 'a' + (s - 10));
}

int char_symbol(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  return -1;
}

}  // namespace

Word::Word(std::vector<Symbol> symbols, unsigned alphabet)
    : symbols_(std::move(symbols)), alphabet_(alphabet) {
  if (alphabet_ < 2 || alphabet_ > 36) throw Error("alphabet size must be in [2, 36]");
  if (symbols_.empty()) throw Error("words must have length >= 1");
  for (Symbol s : symbols_)
    if (s >= alphabet_) throw Error("symbol out of range for alphabet of size " + std::to_string(alphabet_));
}

Word Word::parse(std::string_view text, unsigned alphabet) {
  std::vector<Symbol> symbols;
  symbols.reserve(text.size());
  for (char c : text) {
    int s = char_symbol(c);
    if (s < 0 || static_cast<unsigned>(s) >= alphabet)
      throw Error("malformed word '" + std::string(text) + "' for alphabet of size " + std::to_string(alphabet));
    symbols.push_back(static_cast<Symbol>(s));
  }
  return Word(std::move(symbols), alphabet);
}

Word Word::from_index(std::uint64_t index, std::size_t length, unsigned alphabet) {
  std::vector<Symbol> symbols(length);
  for (std::size_t k = length; k-- > 0;) {
    symbols[k] = static_cast<Symbol>(index % alphabet);
    index /= alphabet;
  }
  if (index != 0) throw Error("cylinder index out of range for word length");
  return Word(std::move(symbols), alphabet);
}

Word Word::repeat(Symbol s, std::size_t length, unsigned alphabet) {
  return Word(std::vector<Symbol>(length, s), alphabet);
}

std::uint64_t Word::index() const {
  std::uint64_t v = 0;
  for (Symbol s : symbols_) v = v * alphabet_ + s;
  return v;
}

Word Word::prefix(std::size_t n) const {
  return Word({symbols_.begin(), symbols_.begin() + static_cast<std::ptrdiff_t>(n)}, alphabet_);
}

Word Word::suffix_from(std::size_t start) const {
  return Word({symbols_.begin() + static_cast<std::ptrdiff_t>(start), symbols_.end()}, alphabet_);
}

Word Word::reversed() const { return Word({symbols_.rbegin(), symbols_.rend()}, alphabet_); }

Word Word::complement() const {
  std::vector<Symbol> c(symbols_.size());
  std::transform(symbols_.begin(), symbols_.end(), c.begin(),
                 [m = alphabet_](Symbol s) { return static_cast<Symbol>(m - 1 - s); });
  return Word(std::move(c), alphabet_);
}

Word operator+(const Word& a, const Word& b) {
  if (a.alphabet_ != b.alphabet_) throw Error("cannot concatenate words over different alphabets");
  std::vector<Word::Symbol> s = a.symbols_;
  s.insert(s.end(), b.symbols_.begin(), b.symbols_.end());
  return Word(std::move(s), a.alphabet_);
}

std::string Word::str() const {
  std::string out;
  out.reserve(symbols_.size());
  for (Symbol s : symbols_) out.push_back(symbol_char(s));
  return out;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.alphabet_ <=> b.alphabet_; c != 0) return c;
  if (auto c = a.symbols_.size() <=> b.symbols_.size(); c != 0) return c;
  return a.symbols_ <=> b.symbols_;
}

std::string Correlation::str() const {
  std::string out = "[";
  for (auto b : bits) out.push_back(b ? '1' : '0');
  out.push_back(']');
  return out;
}

BigInt Correlation::number() const {
  BigInt v = 0;
  for (auto b : bits) {
    v <<= 1;
    if (b) v += 1;
  }
  return v;
}

BigInt CorrelationPolynomial::evaluate(const BigInt& z) const {
  BigInt acc = 0;
  for (const auto& b : descending) acc = acc * z + b;
  return acc;
}

Polynomial CorrelationPolynomial::as_polynomial() const {
  std::vector<Rational> asc;
  asc.reserve(descending.size());
  for (auto it = descending.rbegin(); it != descending.rend(); ++it) asc.emplace_back(*it);
  return Polynomial(std::move(asc));
}

Correlation autocorrelation(const Word& w) {
  const std::size_t k = w.size();
  Correlation c;
  c.bits.assign(k, 0);
  for (std::size_t l = 0; l < k; ++l) {
    bool match = true;
    for (std::size_t i = 0; i + l < k && match; ++i) match = (w[i] == w[i + l]);
    c.bits[l] = match ? 1 : 0;
  }
  return c;
}

BigInt correlation_number(const Word& w) { return autocorrelation(w).number(); }

CorrelationPolynomial correlation_polynomial(const Word& w) {
  Correlation c = autocorrelation(w);
  CorrelationPolynomial p;
  p.descending.reserve(c.size());
  for (auto b : c.bits) p.descending.emplace_back(b);
  return p;
}

std::size_t recurrence_time(const Correlation& c) {
  for (std::size_t l = 1; l < c.size(); ++l)
    if (c[l]) return l;
  return c.size();
}

std::size_t recurrence_time(const Word& w) { return recurrence_time(autocorrelation(w)); }

std::size_t first_difference(const Correlation& a, const Correlation& b) {
  if (a.size() != b.size()) throw Error("correlations of different lengths");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.bits[i] != b.bits[i]) return i + 1;
  return 0;
}

std::vector<Word> all_words(std::size_t length, unsigned alphabet) {
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < length; ++k) total *= alphabet;
  std::vector<Word> out;
  out.reserve(total);
  for (std::uint64_t i = 0; i < total; ++i) out.push_back(Word::from_index(i, length, alphabet));
  return out;
}

}  // namespace escapelab
