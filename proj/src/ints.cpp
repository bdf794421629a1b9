#include "octamod/ints.hpp"

#include <cstdlib>
#include <ostream>

#include "octamod/util.hpp"

namespace octamod {

namespace {
mpz_ptr alloc_mpz() {
  auto* p = static_cast<mpz_ptr>(std::malloc(sizeof(__mpz_struct)));
  if (!p) fail("out of memory (mpz)");
  mpz_init(p);
  return p;
}
}  // namespace

void Int::clear_big() {
  if (big_) {
    mpz_clear(big_);
    std::free(big_);
    big_ = nullptr;
  }
}

void Int::promote() {
  if (!big_) {
    big_ = alloc_mpz();
    mpz_set_si(big_, s_);
  }
}

void Int::normalize() {
  if (big_ && mpz_fits_slong_p(big_)) {
    s_ = mpz_get_si(big_);
    clear_big();
  }
}

mpz_srcptr Int::view(mpz_t tmp) const {
  if (big_) return big_;
  mpz_init_set_si(tmp, s_);
  return tmp;
}

Int::Int(const Int& o) : s_(o.s_) {
  if (o.big_) {
    big_ = alloc_mpz();
    mpz_set(big_, o.big_);
  }
}

Int& Int::operator=(const Int& o) {
  if (this == &o) return *this;
  if (o.big_) {
    promote();
    mpz_set(big_, o.big_);
  } else {
    clear_big();
    s_ = o.s_;
  }
  return *this;
}

Int& Int::operator=(Int&& o) noexcept {
  if (this == &o) return *this;
  clear_big();
  s_ = o.s_;
  big_ = o.big_;
  o.big_ = nullptr;
  return *this;
}

Int Int::from_string(const std::string& s) {
  Int r;
  r.big_ = alloc_mpz();
  if (mpz_set_str(r.big_, s.c_str(), 10) != 0) fail("bad integer literal: " + s);
  r.normalize();
  return r;
}

int Int::sign() const {
  if (big_) return mpz_sgn(big_);
  return s_ > 0 ? 1 : (s_ < 0 ? -1 : 0);
}

std::int64_t Int::to_i64() const {
  require(big_ == nullptr, "Int::to_i64: value out of range");
  return s_;
}

std::uint32_t Int::mod_u32(std::uint32_t p) const {
  if (big_) return static_cast<std::uint32_t>(mpz_fdiv_ui(big_, p));
  std::int64_t r = s_ % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::string Int::to_string() const {
  if (!big_) return std::to_string(s_);
  char* raw = mpz_get_str(nullptr, 10, big_);
  std::string s(raw);
  void (*freefn)(void*, std::size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(raw, s.size() + 1);
  return s;
}

std::size_t Int::bit_length() const {
  if (big_) return mpz_sizeinbase(big_, 2);
  std::uint64_t a = s_ < 0 ? static_cast<std::uint64_t>(-(s_ + 1)) + 1
                           : static_cast<std::uint64_t>(s_);
  std::size_t b = 0;
  while (a) {
    ++b;
    a >>= 1;
  }
  return b;
}

Int& Int::operator+=(const Int& o) {
  if (!big_ && !o.big_) {
    std::int64_t r;
    if (!__builtin_add_overflow(s_, o.s_, &r)) {
      s_ = r;
      return *this;
    }
  }
  promote();
  mpz_t tmp;
  mpz_srcptr ov = o.view(tmp);
  mpz_add(big_, big_, ov);
  if (ov == tmp) mpz_clear(tmp);
  normalize();
  return *this;
}

Int& Int::operator-=(const Int& o) {
  if (!big_ && !o.big_) {
    std::int64_t r;
    if (!__builtin_sub_overflow(s_, o.s_, &r)) {
      s_ = r;
      return *this;
    }
  }
  promote();
  mpz_t tmp;
  mpz_srcptr ov = o.view(tmp);
  mpz_sub(big_, big_, ov);
  if (ov == tmp) mpz_clear(tmp);
  normalize();
  return *this;
}

Int& Int::operator*=(const Int& o) {
  if (!big_ && !o.big_) {
    std::int64_t r;
    if (!__builtin_mul_overflow(s_, o.s_, &r)) {
      s_ = r;
      return *this;
    }
  }
  promote();
  mpz_t tmp;
  mpz_srcptr ov = o.view(tmp);
  mpz_mul(big_, big_, ov);
  if (ov == tmp) mpz_clear(tmp);
  normalize();
  return *this;
}

Int& Int::addmul(const Int& a, const Int& b) {
  if (!big_ && !a.big_ && !b.big_) {
    std::int64_t prod, r;
    if (!__builtin_mul_overflow(a.s_, b.s_, &prod) &&
        !__builtin_add_overflow(s_, prod, &r)) {
      s_ = r;
      return *this;
    }
  }
  promote();
  mpz_t ta, tb;
  mpz_srcptr av = a.view(ta), bv = b.view(tb);
  mpz_addmul(big_, av, bv);
  if (av == ta) mpz_clear(ta);
  if (bv == tb) mpz_clear(tb);
  normalize();
  return *this;
}

Int& Int::submul(const Int& a, const Int& b) {
  if (!big_ && !a.big_ && !b.big_) {
    std::int64_t prod, r;
    if (!__builtin_mul_overflow(a.s_, b.s_, &prod) &&
        !__builtin_sub_overflow(s_, prod, &r)) {
      s_ = r;
      return *this;
    }
  }
  promote();
  mpz_t ta, tb;
  mpz_srcptr av = a.view(ta), bv = b.view(tb);
  mpz_submul(big_, av, bv);
  if (av == ta) mpz_clear(ta);
  if (bv == tb) mpz_clear(tb);
  normalize();
  return *this;
}

void Int::negate() {
  if (!big_) {
    std::int64_t r;
    if (!__builtin_sub_overflow(std::int64_t{0}, s_, &r)) {
      s_ = r;
      return;
    }
  }
  promote();
  mpz_neg(big_, big_);
  normalize();
}

int Int::cmp(const Int& a, const Int& b) {
  if (!a.big_ && !b.big_) return a.s_ < b.s_ ? -1 : (a.s_ > b.s_ ? 1 : 0);
  mpz_t ta, tb;
  mpz_srcptr av = a.view(ta), bv = b.view(tb);
  int c = mpz_cmp(av, bv);
  if (av == ta) mpz_clear(ta);
  if (bv == tb) mpz_clear(tb);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

int Int::cmp_abs(const Int& a, const Int& b) {
  if (!a.big_ && !b.big_ && a.s_ > INT64_MIN && b.s_ > INT64_MIN) {
    std::int64_t x = a.s_ < 0 ? -a.s_ : a.s_;
    std::int64_t y = b.s_ < 0 ? -b.s_ : b.s_;
    return x < y ? -1 : (x > y ? 1 : 0);
  }
  mpz_t ta, tb;
  mpz_srcptr av = a.view(ta), bv = b.view(tb);
  int c = mpz_cmpabs(av, bv);
  if (av == ta) mpz_clear(ta);
  if (bv == tb) mpz_clear(tb);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

Int Int::divexact(const Int& a, const Int& b) {
  require(!b.is_zero(), "divexact by zero");
  if (!a.big_ && !b.big_ && b.s_ != -1 && a.s_ != INT64_MIN) {
    require(a.s_ % b.s_ == 0, "divexact: not divisible");
    Int r;
    r.s_ = a.s_ / b.s_;
    return r;
  }
  Int r;
  r.big_ = alloc_mpz();
  mpz_t ta, tb;
  mpz_srcptr av = a.view(ta), bv = b.view(tb);
  if (!mpz_divisible_p(av, bv)) fail("divexact: not divisible");
  mpz_divexact(r.big_, av, bv);
  if (av == ta) mpz_clear(ta);
  if (bv == tb) mpz_clear(tb);
  r.normalize();
  return r;
}

Int Int::fdiv_q(const Int& a, const Int& b) {
  require(!b.is_zero(), "fdiv_q by zero");
  if (!a.big_ && !b.big_ && b.s_ != -1 && a.s_ != INT64_MIN) {
    std::int64_t q = a.s_ / b.s_, r = a.s_ % b.s_;
    if (r != 0 && ((r < 0) != (b.s_ < 0))) --q;
    Int out;
    out.s_ = q;
    return out;
  }
  Int out;
  out.big_ = alloc_mpz();
  mpz_t ta, tb;
  mpz_srcptr av = a.view(ta), bv = b.view(tb);
  mpz_fdiv_q(out.big_, av, bv);
  if (av == ta) mpz_clear(ta);
  if (bv == tb) mpz_clear(tb);
  out.normalize();
  return out;
}

Int Int::fdiv_r(const Int& a, const Int& b) {
  Int q = fdiv_q(a, b);
  Int r = a;
  r.submul(q, b);
  return r;
}

Int Int::ndiv_q(const Int& a, const Int& b) {
  // floor((2a + b) / 2b) rounds a/b to nearest for b > 0 (ties toward +inf);
  // a/b = (-a)/(-b) reduces the negative-divisor case to it
  if (b.sign() < 0) return ndiv_q(-a, -b);
  return fdiv_q(a + a + b, b + b);
}

Int Int::gcd(const Int& a, const Int& b) {
  Int r;
  if (!a.big_ && !b.big_ && a.s_ != INT64_MIN && b.s_ != INT64_MIN) {
    std::int64_t x = a.s_ < 0 ? -a.s_ : a.s_;
    std::int64_t y = b.s_ < 0 ? -b.s_ : b.s_;
    while (y) {
      std::int64_t t = x % y;
      x = y;
      y = t;
    }
    r.s_ = x;
    return r;
  }
  r.big_ = alloc_mpz();
  mpz_t ta, tb;
  mpz_srcptr av = a.view(ta), bv = b.view(tb);
  mpz_gcd(r.big_, av, bv);
  if (av == ta) mpz_clear(ta);
  if (bv == tb) mpz_clear(tb);
  r.normalize();
  return r;
}

void Int::gcdext(const Int& a, const Int& b, Int& g, Int& u, Int& v) {
  g.promote();
  u.promote();
  v.promote();
  mpz_t ta, tb;
  mpz_srcptr av = a.view(ta), bv = b.view(tb);
  mpz_gcdext(g.big_, u.big_, v.big_, av, bv);
  if (av == ta) mpz_clear(ta);
  if (bv == tb) mpz_clear(tb);
  g.normalize();
  u.normalize();
  v.normalize();
}

std::ostream& operator<<(std::ostream& os, const Int& v) {
  return os << v.to_string();
}

Rat::Rat(Int n, Int d) : num(std::move(n)), den(std::move(d)) {
  require(!den.is_zero(), "rational with zero denominator");
  if (den.sign() < 0) {
    num.negate();
    den.negate();
  }
  Int g = Int::gcd(num, den);
  if (!g.is_one() && !g.is_zero()) {
    num = Int::divexact(num, g);
    den = Int::divexact(den, g);
  }
  if (num.is_zero()) den = Int(1);
}

Rat operator+(const Rat& a, const Rat& b) {
  return Rat(a.num * b.den + b.num * a.den, a.den * b.den);
}
Rat operator-(const Rat& a, const Rat& b) {
  return Rat(a.num * b.den - b.num * a.den, a.den * b.den);
}
Rat operator*(const Rat& a, const Rat& b) {
  return Rat(a.num * b.num, a.den * b.den);
}
Rat operator/(const Rat& a, const Rat& b) {
  require(!b.num.is_zero(), "rational division by zero");
  return Rat(a.num * b.den, a.den * b.num);
}

std::string Rat::to_string() const {
  if (den.is_one()) return num.to_string();
  return num.to_string() + "/" + den.to_string();
}

}  // namespace octamod
