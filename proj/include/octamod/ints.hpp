#pragma once

#include <gmp.h>

#include <cstdint>
#include <string>
#include <utility>

namespace octamod {

// Arbitrary-precision integer with an inline int64 fast path. Values that fit
// a machine word never touch GMP; overflow promotes transparently. Canonical
// form: big_ is null whenever the value fits int64, so comparisons on the
// small path are plain integer compares.
class Int {
 public:
  Int() = default;
  Int(int v) : s_(v) {}
  Int(long v) : s_(v) {}
  Int(long long v) : s_(v) {}
  Int(unsigned v) : s_(static_cast<std::int64_t>(v)) {}

  Int(const Int& o);
  Int(Int&& o) noexcept : s_(o.s_), big_(o.big_) { o.big_ = nullptr; }
  Int& operator=(const Int& o);
  Int& operator=(Int&& o) noexcept;
  ~Int() { clear_big(); }

  static Int from_string(const std::string& s);

  bool is_small() const { return big_ == nullptr; }
  bool is_zero() const { return big_ == nullptr && s_ == 0; }
  bool is_one() const { return big_ == nullptr && s_ == 1; }
  bool is_unit() const { return big_ == nullptr && (s_ == 1 || s_ == -1); }
  int sign() const;

  // Valid only when fits; checked.
  std::int64_t to_i64() const;
  bool fits_i64() const { return big_ == nullptr; }

  // Nonnegative residue mod p, p < 2^31.
  std::uint32_t mod_u32(std::uint32_t p) const;

  std::string to_string() const;
  std::size_t bit_length() const;

  Int& operator+=(const Int& o);
  Int& operator-=(const Int& o);
  Int& operator*=(const Int& o);
  Int& addmul(const Int& a, const Int& b);  // *this += a*b
  Int& submul(const Int& a, const Int& b);  // *this -= a*b
  void negate();

  friend Int operator+(Int a, const Int& b) { return a += b; }
  friend Int operator-(Int a, const Int& b) { return a -= b; }
  friend Int operator*(Int a, const Int& b) { return a *= b; }
  friend Int operator-(Int a) {
    a.negate();
    return a;
  }

  friend bool operator==(const Int& a, const Int& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const Int& a, const Int& b) { return cmp(a, b) != 0; }
  friend bool operator<(const Int& a, const Int& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const Int& a, const Int& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const Int& a, const Int& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const Int& a, const Int& b) { return cmp(a, b) >= 0; }

  static int cmp(const Int& a, const Int& b);
  static int cmp_abs(const Int& a, const Int& b);

  static Int abs(Int a) {
    if (a.sign() < 0) a.negate();
    return a;
  }

  // Quotient of an exact division; aborts if not exact.
  static Int divexact(const Int& a, const Int& b);
  // Floor division / nonnegative remainder (b != 0).
  static Int fdiv_q(const Int& a, const Int& b);
  static Int fdiv_r(const Int& a, const Int& b);
  // Round-to-nearest quotient, used to keep HNF reductions small.
  static Int ndiv_q(const Int& a, const Int& b);
  static Int gcd(const Int& a, const Int& b);
  // g = gcd(a,b) = u*a + v*b
  static void gcdext(const Int& a, const Int& b, Int& g, Int& u, Int& v);

  void swap(Int& o) noexcept {
    std::swap(s_, o.s_);
    std::swap(big_, o.big_);
  }

 private:
  std::int64_t s_ = 0;
  mpz_ptr big_ = nullptr;

  void clear_big();
  void promote();             // make big_ valid (copying s_ if needed)
  void normalize();           // demote to small path when it fits
  mpz_srcptr view(mpz_t tmp) const;  // read-only mpz view without promotion

  friend struct IntOps;
};

inline Int operator*(const Int& a, long b) { return a * Int(b); }

std::ostream& operator<<(std::ostream& os, const Int& v);

// Exact rational, normalized with positive denominator and gcd 1. Only used
// in low-volume spots (solve oracles, skew averages); matrices stay integral.
struct Rat {
  Int num;
  Int den;  // > 0

  Rat() : num(0), den(1) {}
  Rat(Int n) : num(std::move(n)), den(1) {}
  Rat(Int n, Int d);

  bool is_zero() const { return num.is_zero(); }
  bool is_integer() const { return den.is_one(); }

  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b);
  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num == b.num && a.den == b.den;
  }
  std::string to_string() const;
};

}  // namespace octamod
