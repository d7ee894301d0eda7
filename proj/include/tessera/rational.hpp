// rational.hpp - exact arbitrary-precision rationals, wrapping GMP's mpq
#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace tessera {

using Integer = mpz_class;

inline bool fits_i64(const Integer& n) { return n.fits_slong_p(); }

inline long long to_i64(const Integer& n) {
  if (!n.fits_slong_p())
    throw std::overflow_error("integer out of machine range: " + n.get_str());
  return n.get_si();
}

// Canonical-form rational: denominator > 0 and gcd(|num|, den) = 1.
// Canonicalization happens on construction, so equality and hashing are
// structural and exact orbit-return tests are plain comparisons.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}
  Rat(long n) : v_(static_cast<long>(n)) {}
  Rat(long long n) : v_(Integer(std::to_string(n))) {}
  Rat(const Integer& n) : v_(n) {}
  Rat(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  Rat(long num, long den) : Rat(Integer(num), Integer(den)) {}

  Integer numerator() const { return v_.get_num(); }
  Integer denominator() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  Rat abs() const { return Rat(mpq_class(::abs(v_))); }

  // Greatest integer <= value.
  Integer floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
  }

  double to_double() const { return v_.get_d(); }

  std::string to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  static int compare(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_); }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::domain_error("Rat: division by zero");
    return Rat(mpq_class(a.v_ / b.v_));
  }
  Rat operator-() const { return Rat(mpq_class(-v_)); }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0   ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

 private:
  explicit Rat(const mpq_class& q) : v_(q) {}
  mpq_class v_;
};

inline Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace tessera
