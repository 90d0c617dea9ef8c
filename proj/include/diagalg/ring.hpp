#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace diagalg {

using Int = mpz_class;
using Rat = mpq_class;

// Sparse integer Laurent polynomial in q.  Exponents may be negative.
// Zero coefficients are never stored.
class IntLaurent {
 public:
  IntLaurent() = default;
  IntLaurent(long v) { set_term(0, Int(v)); }
  IntLaurent(const Int& v) { set_term(0, v); }
  static IntLaurent mono(const Int& coef, int exp);

  bool is_zero() const { return c_.empty(); }
  int min_exp() const;  // requires nonzero
  int max_exp() const;  // requires nonzero
  Int coeff(int exp) const;
  const std::map<int, Int>& terms() const { return c_; }
  void set_term(int exp, const Int& v);

  IntLaurent operator-() const;
  IntLaurent operator+(const IntLaurent& o) const;
  IntLaurent operator-(const IntLaurent& o) const;
  IntLaurent operator*(const IntLaurent& o) const;
  IntLaurent shifted(int k) const;  // multiply by q^k
  bool operator==(const IntLaurent& o) const { return c_ == o.c_; }
  auto operator<=>(const IntLaurent& o) const { return c_ <=> o.c_; }

  Int eval_one() const;                 // value at q = 1
  Int content() const;                  // gcd of coefficients, >= 0
  bool is_constant() const { return c_.empty() || (min_exp() == 0 && max_exp() == 0); }

  std::string str() const;

 private:
  std::map<int, Int> c_;
};

// Dense ordinary polynomial helpers over Z (used for gcd / divisibility).
using ZPoly = std::vector<Int>;  // coefficient of x^i at index i, no trailing zeros

ZPoly zp_from_laurent(const IntLaurent& f);  // requires min_exp >= 0
IntLaurent zp_to_laurent(const ZPoly& f);
ZPoly zp_mul(const ZPoly& a, const ZPoly& b);
// Exact division; returns nullopt if b does not divide a over Q[x].
std::optional<ZPoly> zp_divide_exact(const ZPoly& a, const ZPoly& b);
ZPoly zp_gcd(ZPoly a, ZPoly b);  // primitive gcd, positive leading coeff
ZPoly zp_primitive(ZPoly a);

// Element of Q(q) in canonical form: num/den with integer Laurent num and
// ordinary-polynomial den, den(0) != 0 (lowest exponent normalised to 0),
// num and den coprime in Q[q], integer contents coprime, den has positive
// leading coefficient.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(long v) : num_(v) {}
  RatFunc(const Int& v) : num_(v) {}
  RatFunc(const Rat& v);
  RatFunc(const IntLaurent& num) : num_(num) {}
  RatFunc(IntLaurent num, IntLaurent den);  // canonicalises

  static RatFunc q_power(int k) { return RatFunc(IntLaurent::mono(1, k)); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_constant() && num_ == den_; }
  const IntLaurent& num() const { return num_; }
  const IntLaurent& den() const { return den_; }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  RatFunc inverse() const;
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  auto operator<=>(const RatFunc& o) const;

  // Value at q = 1; nullopt when the (reduced) denominator vanishes there.
  std::optional<Rat> specialize_one() const;
  // Value at q = q0 over F_p; nullopt if the denominator vanishes mod p.
  std::optional<uint64_t> eval_mod(uint64_t q0, uint64_t p) const;

  // Membership in A_q = C[q^{1}] localised at q, [2]_q, [3]_q, [3]_q - 1:
  // true iff the reduced denominator divides a product of powers of these.
  bool in_Aq() const;

  std::string str() const;
  static RatFunc parse(const std::string& s);

 private:
  void canonicalize();
  IntLaurent num_;       // zero element: num_ = 0, den_ = 1
  IntLaurent den_ = IntLaurent(1);
};

// Quantum integer [n]_q = (q^n - q^{-n})/(q - q^{-1}) = q^{n-1} + q^{n-3} + ... + q^{1-n}.
RatFunc qint(int n);

// Modular arithmetic in F_p (p an odd prime below 2^31).
uint64_t fp_add(uint64_t a, uint64_t b, uint64_t p);
uint64_t fp_sub(uint64_t a, uint64_t b, uint64_t p);
uint64_t fp_mul(uint64_t a, uint64_t b, uint64_t p);
uint64_t fp_pow(uint64_t a, long long e, uint64_t p);
uint64_t fp_inv(uint64_t a, uint64_t p);

}  // namespace diagalg
