#include "dessins/word.hpp"

#include <cctype>
#include <limits>
#include <ostream>

#include "dessins/error.hpp"

namespace dessins {

Word Word::letter(Generator g, long long exp) {
  Word w;
  w.push({g, exp});
  return w;
}

void Word::push(Letter l) {
  if (l.exp == 0)
    return;
  if (!letters_.empty() && letters_.back().gen == l.gen) {
    letters_.back().exp += l.exp;
    if (letters_.back().exp == 0)
      letters_.pop_back();
    return;
  }
  letters_.push_back(l);
}

std::size_t Word::length() const noexcept {
  std::size_t n = 0;
  for (const auto &l : letters_)
    n += static_cast<std::size_t>(l.exp < 0 ? -l.exp : l.exp);
  return n;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back({it->gen, -it->exp});
  return w;
}

Word &Word::operator*=(const Word &rhs) {
  for (const auto &l : rhs.letters_)
    push(l);
  return *this;
}

Word Word::operator*(const Word &rhs) const {
  Word w = *this;
  w *= rhs;
  return w;
}

Word Word::pow(long long k) const {
  if (k < 0)
    return inverse().pow(-k);
  Word result;
  Word base = *this;
  while (k) {
    if (k & 1)
      result *= base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

Word Word::conjugated_by(const Word &b) const { return b.inverse() * *this * b; }

std::string Word::to_string() const {
  if (letters_.empty())
    return "1";
  std::string out;
  for (const auto &l : letters_) {
    out += l.gen == Generator::x ? 'x' : 'y';
    if (l.exp != 1)
      out += '^' + std::to_string(l.exp);
  }
  return out;
}

Word commutator(const Word &a, const Word &b) { return a.inverse() * b.inverse() * a * b; }

std::ostream &operator<<(std::ostream &os, const Word &w) { return os << w.to_string(); }

namespace {

class WordParser {
public:
  explicit WordParser(std::string_view text) : text_(text) {}

  Word run() {
    skip_ws();
    if (peek() == '1') {
      ++pos_;
      skip_ws();
      if (pos_ != text_.size())
        throw ParseError("unexpected input after identity", pos_);
      return {};
    }
    Word w = word();
    if (pos_ != text_.size())
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return w;
  }

private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_atom_start() const {
    char c = peek();
    return c == 'x' || c == 'y' || c == '(' || c == '[';
  }

  Word word() {
    skip_ws();
    if (!at_atom_start())
      throw ParseError(pos_ < text_.size() ? std::string("unexpected '") + text_[pos_] + "'"
                                           : std::string("unexpected end of input"),
                       pos_);
    Word w;
    while (at_atom_start()) {
      w *= term();
      skip_ws();
    }
    return w;
  }

  Word term() {
    Word w = atom();
    skip_ws();
    while (peek() == '^') {
      ++pos_;
      skip_ws();
      char c = peek();
      if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t at = pos_;
        long long k = integer();
        if (k == 0)
          throw ParseError("zero exponent", at);
        w = w.pow(k);
      } else if (at_atom_start()) {
        w = w.conjugated_by(atom());
      } else {
        throw ParseError("expected exponent or conjugating word after '^'", pos_);
      }
      skip_ws();
    }
    return w;
  }

  Word atom() {
    skip_ws();
    char c = peek();
    if (c == 'x' || c == 'y') {
      ++pos_;
      return Word::letter(c == 'x' ? Generator::x : Generator::y);
    }
    if (c == '(') {
      ++pos_;
      Word w = word();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word a = word();
      expect(',');
      Word b = word();
      expect(']');
      return commutator(a, b);
    }
    throw ParseError("expected 'x', 'y', '(' or '['", pos_);
  }

  long long integer() {
    std::size_t start = pos_;
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected an integer", pos_);
    long long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      if (value > (std::numeric_limits<int>::max() - 9) / 10)
        throw ParseError("exponent too large", start);
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return negative ? -value : value;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

Word parse_word(std::string_view text) { return WordParser(text).run(); }

Permutation evaluate(const Word &w, const Permutation &sx, const Permutation &sy) {
  if (sx.degree() != sy.degree())
    throw DomainError("degree mismatch: " + std::to_string(sx.degree()) + " vs " +
                      std::to_string(sy.degree()));
  Permutation result = Permutation::identity(sx.degree());
  for (const auto &l : w.letters())
    result = compose(result, power(l.gen == Generator::x ? sx : sy, l.exp));
  return result;
}

Word substitute(const Word &w, const Word &image_x, const Word &image_y) {
  Word out;
  for (const auto &l : w.letters())
    out *= (l.gen == Generator::x ? image_x : image_y).pow(l.exp);
  return out;
}

long long exponent_sum(const Word &w, Generator g) {
  long long s = 0;
  for (const auto &l : w.letters())
    if (l.gen == g)
      s += l.exp;
  return s;
}

} // namespace dessins
