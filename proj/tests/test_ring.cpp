#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diagalg/ring.hpp"

using namespace diagalg;

static RatFunc q_pow(int k) { return RatFunc::q_power(k); }

TEST_CASE("quantum integers") {
  CHECK(qint(1) == RatFunc(1));
  CHECK(qint(2) == q_pow(1) + q_pow(-1));
  CHECK(qint(3) == q_pow(2) + RatFunc(1) + q_pow(-2));
  // [n][2] = [n+1] + [n-1]
  for (int n = 1; n < 8; ++n) CHECK(qint(n) * qint(2) == qint(n + 1) + qint(n - 1));
  CHECK(qint(0).is_zero());
}

TEST_CASE("field arithmetic and canonical form") {
  // (q^2 - q^-2) / (q - q^-1) = q + q^-1
  RatFunc a = q_pow(2) - q_pow(-2);
  RatFunc b = q_pow(1) - q_pow(-1);
  CHECK(a / b == qint(2));

  // z^-1 (z + y^-1 - y) = [3]_q  with  y = q^-4, z = q^2 - q^-2
  RatFunc y = q_pow(-4), z = q_pow(2) - q_pow(-2);
  CHECK((z + y.inverse() - y) / z == qint(3));

  // denominator normalisation: lowest exponent 0, positive leading coeff
  RatFunc c = RatFunc(1) / (q_pow(3) - q_pow(1));
  CHECK(c.den().min_exp() == 0);
  CHECK(c.den().coeff(c.den().max_exp()) > 0);
  CHECK(c * (q_pow(3) - q_pow(1)) == RatFunc(1));

  RatFunc half(Rat(1, 2));
  CHECK(half + half == RatFunc(1));
  CHECK((half * RatFunc(2)) == RatFunc(1));

  // subtraction to zero resets the denominator
  RatFunc d = a / b - qint(2);
  CHECK(d.is_zero());
  CHECK(d == RatFunc(0));
}

TEST_CASE("specialisation at q=1") {
  CHECK(*qint(3).specialize_one() == 3);
  CHECK(*qint(2).specialize_one() == 2);
  RatFunc y = q_pow(-4);
  CHECK(*((RatFunc(1) - y) / (RatFunc(1) - y * y)).specialize_one() == Rat(1, 2));
  // 1/(q-1) has a pole at q=1
  CHECK(!(RatFunc(1) / (q_pow(1) - RatFunc(1))).specialize_one().has_value());
  // (q^2-1)/(q-1) does not (it reduces to q+1)
  auto v = ((q_pow(2) - RatFunc(1)) / (q_pow(1) - RatFunc(1))).specialize_one();
  REQUIRE(v.has_value());
  CHECK(*v == 2);
}

TEST_CASE("modular evaluation") {
  const uint64_t p = 2147483647;
  RatFunc f = (q_pow(2) - q_pow(-2)) / (q_pow(1) - q_pow(-1));
  uint64_t q0 = 12345;
  uint64_t lhs = *f.eval_mod(q0, p);
  uint64_t rhs = fp_add(q0, fp_inv(q0, p), p);
  CHECK(lhs == rhs);
  // evaluation at a denominator root is rejected
  RatFunc g = RatFunc(1) / (q_pow(1) - RatFunc(1));
  CHECK(!g.eval_mod(1, p).has_value());
}

TEST_CASE("A_q membership probe") {
  RatFunc three = qint(3);
  RatFunc y = q_pow(-4);
  CHECK((RatFunc(1) / three).in_Aq());
  CHECK((RatFunc(1) / (three - RatFunc(1))).in_Aq());
  CHECK((RatFunc(1) / (qint(2) * three * three)).in_Aq());
  CHECK((q_pow(-7) / (three * (three - RatFunc(1)))).in_Aq());
  CHECK(RatFunc(Rat(3, 4)).in_Aq());         // scalars are allowed
  CHECK(!(RatFunc(1) / (q_pow(1) - RatFunc(1))).in_Aq());
  CHECK((RatFunc(1) / (three + RatFunc(1))).in_Aq());  // [3]+1 = [2]^2
  CHECK(!(RatFunc(1) / (qint(2) + RatFunc(1))).in_Aq());
  CHECK(!(RatFunc(1) / qint(5)).in_Aq());
  (void)y;
}

TEST_CASE("text round trip") {
  RatFunc f = (q_pow(2) + RatFunc(3)) / (q_pow(4) - q_pow(-1) * RatFunc(7));
  CHECK(RatFunc::parse(f.str()) == f);
  CHECK(RatFunc::parse("1*q^2+1*q^0+1*q^-2") == qint(3));
  CHECK(RatFunc::parse("q^2 + 1 + q^-2") == qint(3));
  CHECK(RatFunc::parse("-2*q^-1/ q^2+1") == RatFunc(-2) * q_pow(-1) / (q_pow(2) + RatFunc(1)));
  CHECK(RatFunc::parse("0") == RatFunc(0));
  CHECK(RatFunc::parse(RatFunc(0).str()) == RatFunc(0));
  CHECK_THROWS(RatFunc::parse("q^"));
  CHECK_THROWS(RatFunc::parse("1,2"));
}

TEST_CASE("F_p helpers") {
  const uint64_t p = 1000003;
  for (uint64_t a : {1ull, 2ull, 999999ull}) CHECK(fp_mul(a, fp_inv(a, p), p) == 1);
  CHECK(fp_pow(5, 0, p) == 1);
  CHECK(fp_sub(3, 7, p) == p - 4);
}
