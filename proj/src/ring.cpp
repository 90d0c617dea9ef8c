#include "diagalg/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace diagalg {

IntLaurent IntLaurent::mono(const Int& coef, int exp) {
  IntLaurent f;
  f.set_term(exp, coef);
  return f;
}

int IntLaurent::min_exp() const {
  if (c_.empty()) throw std::logic_error("min_exp of zero");
  return c_.begin()->first;
}

int IntLaurent::max_exp() const {
  if (c_.empty()) throw std::logic_error("max_exp of zero");
  return c_.rbegin()->first;
}

Int IntLaurent::coeff(int exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? Int(0) : it->second;
}

void IntLaurent::set_term(int exp, const Int& v) {
  if (v == 0)
    c_.erase(exp);
  else
    c_[exp] = v;
}

IntLaurent IntLaurent::operator-() const {
  IntLaurent r;
  for (auto& [e, v] : c_) r.c_[e] = -v;
  return r;
}

IntLaurent IntLaurent::operator+(const IntLaurent& o) const {
  IntLaurent r = *this;
  for (auto& [e, v] : o.c_) {
    auto it = r.c_.find(e);
    if (it == r.c_.end()) {
      r.c_[e] = v;
    } else {
      it->second += v;
      if (it->second == 0) r.c_.erase(it);
    }
  }
  return r;
}

IntLaurent IntLaurent::operator-(const IntLaurent& o) const { return *this + (-o); }

IntLaurent IntLaurent::operator*(const IntLaurent& o) const {
  IntLaurent r;
  for (auto& [e1, v1] : c_)
    for (auto& [e2, v2] : o.c_) {
      auto it = r.c_.find(e1 + e2);
      if (it == r.c_.end()) {
        Int p = v1 * v2;
        if (p != 0) r.c_[e1 + e2] = p;
      } else {
        it->second += v1 * v2;
        if (it->second == 0) r.c_.erase(it);
      }
    }
  return r;
}

IntLaurent IntLaurent::shifted(int k) const {
  IntLaurent r;
  for (auto& [e, v] : c_) r.c_[e + k] = v;
  return r;
}

Int IntLaurent::eval_one() const {
  Int s = 0;
  for (auto& [e, v] : c_) s += v;
  return s;
}

Int IntLaurent::content() const {
  Int g = 0;
  for (auto& [e, v] : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

std::string IntLaurent::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest exponent first
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    if (!first) os << "+";
    os << it->second.get_str() << "*q^" << it->first;
    first = false;
  }
  return os.str();
}

// ---- dense ordinary polynomial helpers ----

static void zp_trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zp_from_laurent(const IntLaurent& f) {
  ZPoly r;
  if (f.is_zero()) return r;
  if (f.min_exp() < 0) throw std::logic_error("negative exponent in zp_from_laurent");
  r.assign(f.max_exp() + 1, Int(0));
  for (auto& [e, v] : f.terms()) r[e] = v;
  return r;
}

IntLaurent zp_to_laurent(const ZPoly& f) {
  IntLaurent r;
  for (size_t i = 0; i < f.size(); ++i) r.set_term((int)i, f[i]);
  return r;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  zp_trim(r);
  return r;
}

std::optional<ZPoly> zp_divide_exact(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) return std::nullopt;
  if (a.empty()) return ZPoly{};
  if (a.size() < b.size()) return std::nullopt;
  // rational long division
  std::vector<Rat> rem(a.begin(), a.end());
  std::vector<Rat> quo(a.size() - b.size() + 1);
  Rat lead(b.back());
  for (int i = (int)rem.size() - 1; i >= (int)b.size() - 1; --i) {
    Rat c = rem[i] / lead;
    quo[i - b.size() + 1] = c;
    if (c != 0)
      for (size_t j = 0; j < b.size(); ++j) rem[i - b.size() + 1 + j] -= c * Rat(b[j]);
  }
  for (size_t i = 0; i + 1 < b.size(); ++i)
    if (rem[i] != 0) return std::nullopt;
  // clear denominators: exactness over Q[x] is all we assert; scale back to Z
  Int lcm = 1;
  for (auto& c : quo) {
    c.canonicalize();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  if (lcm != 1) return std::nullopt;  // caller wants Z[x] quotient
  ZPoly out(quo.size());
  for (size_t i = 0; i < quo.size(); ++i) out[i] = quo[i].get_num();
  zp_trim(out);
  return out;
}

ZPoly zp_primitive(ZPoly a) {
  zp_trim(a);
  if (a.empty()) return a;
  Int g = 0;
  for (auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

// pseudo-remainder based primitive PRS
static ZPoly zp_prem(ZPoly a, const ZPoly& b) {
  Int lb = b.back();
  int d = (int)a.size() - (int)b.size();
  while ((int)a.size() >= (int)b.size() && !a.empty()) {
    Int la = a.back();
    size_t off = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (size_t j = 0; j < b.size(); ++j) a[off + j] -= la * b[j];
    zp_trim(a);
    (void)d;
  }
  return a;
}

ZPoly zp_gcd(ZPoly a, ZPoly b) {
  zp_trim(a);
  zp_trim(b);
  if (a.empty()) return zp_primitive(b);
  if (b.empty()) return zp_primitive(a);
  a = zp_primitive(a);
  b = zp_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = zp_prem(a, b);
    a = std::move(b);
    b = zp_primitive(std::move(r));
  }
  return zp_primitive(a);
}

// ---- RatFunc ----

RatFunc::RatFunc(const Rat& v) {
  Rat c = v;
  c.canonicalize();
  num_ = IntLaurent(Int(c.get_num()));
  den_ = IntLaurent(Int(c.get_den()));
}

RatFunc::RatFunc(IntLaurent num, IntLaurent den) : num_(num), den_(den) { canonicalize(); }

void RatFunc::canonicalize() {
  if (den_.is_zero()) throw std::domain_error("division by zero in Q(q)");
  if (num_.is_zero()) {
    den_ = IntLaurent(1);
    return;
  }
  // shift so den has min exponent 0, num absorbs the q-power
  int sd = den_.min_exp();
  den_ = den_.shifted(-sd);
  num_ = num_.shifted(-sd);
  int sn = std::min(num_.min_exp(), 0);
  ZPoly n = zp_from_laurent(num_.shifted(-sn));
  ZPoly d = zp_from_laurent(den_);
  ZPoly g = zp_gcd(n, d);
  if (g.size() > 1) {
    n = *zp_divide_exact(n, g);
    d = *zp_divide_exact(d, g);
  }
  // strip integer content jointly
  Int cn = zp_to_laurent(n).content();
  Int cd = zp_to_laurent(d).content();
  Int c;
  mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (d.back() < 0) c = -c;
  for (auto& v : n) v /= c;
  for (auto& v : d) v /= c;
  num_ = zp_to_laurent(n).shifted(sn);
  den_ = zp_to_laurent(d);
  // re-shift: dividing by gcd may have introduced a q factor in den
  int s2 = den_.min_exp();
  if (s2 != 0) {
    den_ = den_.shifted(-s2);
    num_ = num_.shifted(-s2);
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero in Q(q)");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inverse() const { return RatFunc(1) / *this; }

auto RatFunc::operator<=>(const RatFunc& o) const {
  if (auto c = num_ <=> o.num_; c != 0) return c;
  return den_ <=> o.den_;
}

std::optional<Rat> RatFunc::specialize_one() const {
  Int d = den_.eval_one();
  if (d == 0) return std::nullopt;  // reduced form, so this is a genuine pole
  Rat r(num_.eval_one(), d);
  r.canonicalize();
  return r;
}

static uint64_t laurent_eval_mod(const IntLaurent& f, uint64_t q0, uint64_t p) {
  uint64_t s = 0;
  for (auto& [e, v] : f.terms()) {
    Int m = v % Int((unsigned long)p);
    if (m < 0) m += Int((unsigned long)p);
    uint64_t c = m.get_ui();
    uint64_t qe = e >= 0 ? fp_pow(q0, e, p) : fp_inv(fp_pow(q0, -(long long)e, p), p);
    s = fp_add(s, fp_mul(c, qe, p), p);
  }
  return s;
}

std::optional<uint64_t> RatFunc::eval_mod(uint64_t q0, uint64_t p) const {
  uint64_t d = laurent_eval_mod(den_, q0, p);
  if (d == 0) return std::nullopt;
  return fp_mul(laurent_eval_mod(num_, q0, p), fp_inv(d, p), p);
}

bool RatFunc::in_Aq() const {
  if (is_zero()) return true;
  // den divides q^a [2]^b [3]^c ([3]-1)^d  up to scalar; in polynomial form
  // (min exp already 0, so no q factor) the irreducible candidates are
  // q^2+1 (= q[2]), q^4+q^2+1 (= q^2[3]) and q^4+1 (= q^2([3]-1)).
  ZPoly d = zp_from_laurent(den_);
  const std::vector<ZPoly> factors = {
      ZPoly{Int(1), Int(0), Int(1)},                          // q^2+1
      ZPoly{Int(1), Int(0), Int(1), Int(0), Int(1)},          // q^4+q^2+1
      ZPoly{Int(1), Int(0), Int(0), Int(0), Int(1)},          // q^4+1
  };
  bool progress = true;
  while (d.size() > 1 && progress) {
    progress = false;
    for (auto& f : factors) {
      if (auto r = zp_divide_exact(d, f)) {
        d = zp_primitive(*r);
        progress = true;
      }
    }
  }
  return d.size() <= 1;
}

std::string RatFunc::str() const {
  if (den_.is_constant() && den_.coeff(0) == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

RatFunc qint(int n) {
  IntLaurent f;
  for (int i = 0; i < n; ++i) f.set_term(n - 1 - 2 * i, 1);
  return RatFunc(f);
}

// ---- parser: monomials "c*q^k" (or "c", "q^k", "q") joined by '+'/'-',
// optionally "num/den" ----

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;
  explicit Parser(const std::string& str) : s(str) {}
  void skip_ws() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  long long integer() {
    skip_ws();
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
    skip_ws();
    if (i >= s.size() || !std::isdigit((unsigned char)s[i])) throw std::invalid_argument("expected integer in rational function: " + s);
    long long v = 0;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) v = v * 10 + (s[i++] - '0');
    return neg ? -v : v;
  }
  IntLaurent laurent() {
    IntLaurent f;
    while (true) {
      skip_ws();
      int sign = 1;
      while (true) {
        if (eat('-'))
          sign = -sign;
        else if (!eat('+'))
          break;
      }
      skip_ws();
      Int coef = 1;
      bool saw_coef = false;
      if (i < s.size() && std::isdigit((unsigned char)s[i])) {
        std::string digits;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) digits += s[i++];
        coef = Int(digits);
        saw_coef = true;
      }
      int exp = 0;
      skip_ws();
      bool star = eat('*');
      skip_ws();
      if (i < s.size() && s[i] == 'q') {
        ++i;
        exp = eat('^') ? (int)integer() : 1;
      } else if (star || !saw_coef) {
        throw std::invalid_argument("malformed monomial in: " + s);
      }
      f = f + IntLaurent::mono(sign * coef, exp);
      skip_ws();
      if (i >= s.size() || s[i] == '/' || s[i] == ')') break;
      if (s[i] != '+' && s[i] != '-') throw std::invalid_argument("unexpected character in: " + s);
    }
    return f;
  }
};

}  // namespace

RatFunc RatFunc::parse(const std::string& s) {
  Parser p(s);
  IntLaurent num = p.laurent();
  IntLaurent den(1);
  if (p.eat('/')) den = p.laurent();
  p.skip_ws();
  if (p.i != s.size()) throw std::invalid_argument("trailing characters in: " + s);
  return RatFunc(num, den);
}

// ---- F_p ----

uint64_t fp_add(uint64_t a, uint64_t b, uint64_t p) {
  uint64_t s = a + b;
  return s >= p ? s - p : s;
}
uint64_t fp_sub(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + p - b; }
uint64_t fp_mul(uint64_t a, uint64_t b, uint64_t p) { return (a * (unsigned __int128)b) % p; }
uint64_t fp_pow(uint64_t a, long long e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = fp_mul(r, a, p);
    a = fp_mul(a, a, p);
    e >>= 1;
  }
  return r;
}
uint64_t fp_inv(uint64_t a, uint64_t p) {
  if (a == 0) throw std::domain_error("inverse of 0 mod p");
  return fp_pow(a, (long long)p - 2, p);
}

}  // namespace diagalg
