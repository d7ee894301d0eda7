// qsqrt3.cpp - sign, floor, parsing and printing for Q(sqrt 3)

#include <tessera/qsqrt3.hpp>

#include <cctype>

namespace tessera {

int Qs3::sign() const {
  int sa = a_.sign();
  int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: a + b*sqrt(3) has the sign of a exactly when
  // a^2 > 3 b^2. Equality is impossible with both parts nonzero.
  int sd = (a_ * a_ - Rat(3) * b_ * b_).sign();
  if (sd == 0) throw std::logic_error("Qs3: a^2 = 3 b^2 with nonzero parts");
  return sa * sd;
}

namespace {

// Rational bracket lo < sqrt(3) < hi from consecutive continued-fraction
// convergents, validated once: a one-sided "bracket" would silently turn the
// floor correction below into a unit-step crawl.
struct Sqrt3Bracket {
  Rat lo, hi;
  Sqrt3Bracket()
      : lo(Integer("100568547815"), Integer("58063278153")),
        hi(Integer("137379191137"), Integer("79315912984")) {
    if (!(lo * lo < Rat(3)) || !(Rat(3) < hi * hi) || !(lo < hi))
      throw std::logic_error("sqrt(3) bracket constants are invalid");
  }
};

const Sqrt3Bracket& sqrt3_bracket() {
  static const Sqrt3Bracket b;
  return b;
}

}  // namespace

Integer Qs3::floor() const {
  if (b_.is_zero()) return a_.floor();
  Rat lo = sqrt3_bracket().lo;
  Rat hi = sqrt3_bracket().hi;
  // Tighten by bisection until the bracket width is below 1/(2|b|), so the
  // initial guess is off by at most one.
  Rat babs = b_.abs();
  while ((hi - lo) * babs >= Rat(1, 2)) {
    Rat mid = (lo + hi) * Rat(1, 2);
    if ((mid * mid) <= Rat(3))
      lo = mid;
    else
      hi = mid;
  }
  Rat approx = b_.sign() > 0 ? a_ + b_ * lo : a_ + b_ * hi;
  Integer n = approx.floor();
  while ((*this - Qs3(Rat(n))).sign() < 0) --n;
  while ((*this - Qs3(Rat(Integer(n + 1)))).sign() >= 0) ++n;
  return n;
}

double Qs3::to_double() const {
  return a_.to_double() + b_.to_double() * 1.7320508075688772;
}

std::string Qs3::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  if (a_.is_zero()) return b_.to_string() + "s3";
  std::string s = a_.to_string();
  s += b_.sign() < 0 ? "-" : "+";
  s += b_.abs().to_string();
  s += "s3";
  return s;
}

namespace {

struct Scanner {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos); }

  Integer integer(const char* what) {
    if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail(std::string("expected ") + what);
    std::size_t start = pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    return Integer(std::string(text.substr(start, pos - start)));
  }

  Rat rat() {
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos;
    }
    if (peek() == '.') fail("decimal input not supported; use rationals like 3/10");
    Integer num = integer("integer");
    if (peek() == '.') fail("decimal input not supported; use rationals like 3/10");
    Integer den = 1;
    if (peek() == '/') {
      ++pos;
      den = integer("positive denominator");
      if (den == 0) fail("zero denominator");
    }
    if (neg) num = -num;
    return Rat(num, den);
  }

  bool eat_s3() {
    if (pos + 1 < text.size() && text[pos] == 's' && text[pos + 1] == '3') {
      pos += 2;
      return true;
    }
    return false;
  }
};

}  // namespace

Qs3 Qs3::parse(std::string_view text) {
  Scanner sc{text};
  if (sc.done()) sc.fail("empty scalar");
  Rat first = sc.rat();
  Qs3 value;
  if (sc.eat_s3()) {
    value = Qs3(Rat(0), first);
  } else if (sc.peek() == '+' || sc.peek() == '-') {
    bool neg = sc.peek() == '-';
    ++sc.pos;
    Rat second = sc.rat();
    if (!sc.eat_s3()) sc.fail("expected 's3' after second term");
    value = Qs3(first, neg ? -second : second);
  } else {
    value = Qs3(first);
  }
  if (!sc.done()) sc.fail("trailing characters after scalar");
  return value;
}

}  // namespace tessera
