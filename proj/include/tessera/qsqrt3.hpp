// qsqrt3.hpp - exact arithmetic in the quadratic field Q(sqrt 3)
//
// Every coordinate of the three exact map cases lives here: values are
// a + b*sqrt(3) with rational a, b, a representation that is unique because
// sqrt(3) is irrational. Sign, order and floor are decided exactly.
#pragma once

#include <tessera/rational.hpp>

#include <cstddef>
#include <string>
#include <string_view>

namespace tessera {

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        message(what),
        position(pos) {}
  std::string message;
  std::size_t position;
};

class Qs3 {
 public:
  Qs3() = default;
  Qs3(int n) : a_(n) {}
  Qs3(long n) : a_(n) {}
  Qs3(long long n) : a_(n) {}
  Qs3(const Integer& n) : a_(n) {}
  Qs3(const Rat& a) : a_(a) {}
  Qs3(const Rat& a, const Rat& b) : a_(a), b_(b) {}

  static Qs3 sqrt3() { return Qs3(Rat(0), Rat(1)); }

  const Rat& rational_part() const { return a_; }
  const Rat& sqrt3_coeff() const { return b_; }

  bool is_rational() const { return b_.is_zero(); }
  bool is_integer() const { return b_.is_zero() && a_.is_integer(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  friend Qs3 operator+(const Qs3& x, const Qs3& y) { return Qs3(x.a_ + y.a_, x.b_ + y.b_); }
  friend Qs3 operator-(const Qs3& x, const Qs3& y) { return Qs3(x.a_ - y.a_, x.b_ - y.b_); }
  Qs3 operator-() const { return Qs3(-a_, -b_); }

  // (a1 + b1 s)(a2 + b2 s) = (a1 a2 + 3 b1 b2) + (a1 b2 + a2 b1) s,  s^2 = 3
  friend Qs3 operator*(const Qs3& x, const Qs3& y) {
    return Qs3(x.a_ * y.a_ + Rat(3) * x.b_ * y.b_, x.a_ * y.b_ + y.a_ * x.b_);
  }

  friend Qs3 operator/(const Qs3& x, const Qs3& y) {
    if (y.is_zero()) throw std::domain_error("Qs3: division by zero");
    // 1/(a + b s) = (a - b s) / (a^2 - 3 b^2); the norm is nonzero for y != 0
    Rat norm = y.a_ * y.a_ - Rat(3) * y.b_ * y.b_;
    return Qs3((x.a_ * y.a_ - Rat(3) * x.b_ * y.b_) / norm, (x.b_ * y.a_ - x.a_ * y.b_) / norm);
  }

  Qs3& operator+=(const Qs3& o) { a_ += o.a_; b_ += o.b_; return *this; }
  Qs3& operator-=(const Qs3& o) { a_ -= o.a_; b_ -= o.b_; return *this; }

  friend bool operator==(const Qs3& x, const Qs3& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  // Exact sign of the real number a + b*sqrt(3).
  int sign() const;

  static int compare(const Qs3& x, const Qs3& y) { return (x - y).sign(); }
  friend std::strong_ordering operator<=>(const Qs3& x, const Qs3& y) {
    int c = compare(x, y);
    return c < 0   ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

  Qs3 abs() const { return sign() < 0 ? -*this : *this; }

  // Greatest integer n with n <= value, decided by exact sign tests; a
  // rational bracket of sqrt(3) only seeds the search.
  Integer floor() const;

  double to_double() const;

  // Canonical text form, e.g. "1/2", "-5/6s3", "3+1/2s3", "1-1/2s3".
  std::string to_string() const;

  // Parses the scalar grammar:
  //   scalar := rat | rat sign rat "s3" | rat "s3"
  //   rat    := ["-"] int ["/" posint]
  //   sign   := "+" | "-"
  // Throws ParseError with the offending position on malformed text.
  static Qs3 parse(std::string_view text);

 private:
  Rat a_, b_;
};

}  // namespace tessera
