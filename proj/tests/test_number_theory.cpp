#include <doctest.h>

#include "ringdef/decomposition.hpp"
#include "ringdef/hensel.hpp"
#include "test_helpers.hpp"

using namespace ringdef;

namespace {

// independent oracle: all roots of P modulo m by full scan
std::vector<BigInt> scan_roots(const IntPoly& P, const BigInt& m) {
  std::vector<BigInt> out;
  for (BigInt x = 0; x < m; ++x) {
    BigInt v = P.eval(x) % m;
    if (v < 0) v += m;
    if (v == 0) out.push_back(x);
  }
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("number_theory");

TEST_CASE("lifting X^2-8 at p=7 matches exhaustive scans") {
  IntPoly P = IntPoly::parse("X^2-8");
  CHECK(hensel_lift(P, 7, 1, 2) == 29);  // 29^2 = 841 = 17*49 + 8
  CHECK(hensel_lift(P, 7, 6, 2) == 20);  // 20^2 = 400 =  8*49 + 8

  BigInt mod = 1;
  for (unsigned q = 1; q <= 5; ++q) {
    mod *= 7;
    std::vector<BigInt> roots = scan_roots(P, mod);
    REQUIRE(roots.size() == 2);
    for (const BigInt& x0 : {BigInt(1), BigInt(6)}) {
      BigInt lift = hensel_lift(P, 7, x0, q);
      CHECK((lift - x0) % 7 == 0);
      bool found = false;
      int matching = 0;
      for (const BigInt& r : roots) {
        if (r == lift) found = true;
        if ((r - x0) % 7 == 0) ++matching;
      }
      CHECK(found);
      CHECK(matching == 1);  // uniqueness of the lift above x0
    }
  }
}

TEST_CASE("lift tower compatibility up to exponent 12") {
  IntPoly P = IntPoly::parse("X^2-8");
  BigInt full = hensel_lift(P, 7, 1, 12);
  BigInt mod = 1;
  for (unsigned q = 1; q <= 12; ++q) {
    mod *= 7;
    CHECK(full % mod == hensel_lift(P, 7, 1, q));
  }
  // the lifted value really is a root at the top level
  BigInt v = P.eval(full) % mod;
  if (v < 0) v += mod;
  CHECK(v == 0);
}

TEST_CASE("non-simple roots are rejected") {
  IntPoly P = IntPoly::parse("X^2-8");
  CHECK_ERROR(hensel_lift(P, 2, 0, 3), ErrorCode::NotASimpleRoot);
  CHECK_ERROR(hensel_lift(P, 7, 3, 2), ErrorCode::NotASimpleRoot);  // P(3) != 0 (7)
  CHECK_ERROR(hensel_lift(P, 6, 1, 2), ErrorCode::NotPrime);
}

TEST_CASE("polynomial text syntax") {
  CHECK(IntPoly::parse("X^2-8").coeffs == std::vector<BigInt>{-8, 0, 1});
  CHECK(IntPoly::parse("2*X^3 + X - 5").coeffs == std::vector<BigInt>{-5, 1, 0, 2});
  CHECK(IntPoly::parse("42").coeffs == std::vector<BigInt>{42});
  CHECK(IntPoly::parse("X^2-8").to_string() == "X^2 - 8");
  CHECK_ERROR(IntPoly::parse("X^"), ErrorCode::ParseError);
  CHECK_ERROR(IntPoly::parse("+"), ErrorCode::ParseError);
}

TEST_CASE("composition series of Z/n") {
  FiltrationData F12 = composition_series(RingSpec::zmod(12));
  REQUIRE(F12.primes.size() == 3);
  RingSpec A = F12.ring;
  CHECK(A.encode(F12.gens[0]) == "1");
  CHECK(A.encode(F12.gens[1]) == "2");
  CHECK(A.encode(F12.gens[2]) == "4");
  CHECK(A.encode(F12.primes[0].generators()[0]) == "2");
  CHECK(A.encode(F12.primes[1].generators()[0]) == "2");
  CHECK(A.encode(F12.primes[2].generators()[0]) == "3");
  CHECK(F12.ideals.front().contains(A.from_int(1)));
  CHECK(F12.ideals.back().is_zero_ideal());

  FiltrationData F4 = composition_series(RingSpec::zmod(4));
  REQUIRE(F4.primes.size() == 2);
  CHECK(F4.ring.encode(F4.gens[1]) == "2");

  FiltrationData F1 = composition_series(RingSpec::zmod(1));
  CHECK(F1.primes.empty());
  CHECK(F1.ideals.size() == 1);
}

TEST_CASE("chain length equals the number of prime factors with multiplicity") {
  for (long n = 1; n <= 60; ++n) {
    FiltrationData F = composition_series(RingSpec::zmod(n));
    CHECK(F.primes.size() == prime_factors_with_multiplicity(n).size());
  }
}

TEST_CASE("associated primes of Z/n") {
  AssociatedPrimesData D12 = associated_primes(RingSpec::zmod(12));
  REQUIRE(D12.pairs.size() == 2);
  RingSpec A = D12.ring;
  CHECK(A.encode(D12.pairs[0].first.generators()[0]) == "2");
  CHECK(A.encode(D12.pairs[0].second) == "6");
  CHECK(A.encode(D12.pairs[1].first.generators()[0]) == "3");
  CHECK(A.encode(D12.pairs[1].second) == "4");

  AssociatedPrimesData D4 = associated_primes(RingSpec::zmod(4));
  REQUIRE(D4.pairs.size() == 1);
  CHECK(D4.ring.encode(D4.pairs[0].second) == "2");

  // Z/6 is reduced: the zero-divisors are exactly the union of the primes
  AssociatedPrimesData D6 = associated_primes(RingSpec::zmod(6));
  RingSpec Z6 = D6.ring;
  for (const Elem& e : Z6.enumerate(0)) {
    bool zero_divisor = false;
    for (const Elem& b : Z6.enumerate(0))
      if (!Z6.is_zero(b) && Z6.is_zero(Z6.mul(e, b))) zero_divisor = true;
    bool in_union = false;
    for (const auto& [p, alpha] : D6.pairs) {
      (void)alpha;
      if (p.contains(e)) in_union = true;
    }
    if (!Z6.is_zero(e)) CHECK(zero_divisor == in_union);
  }

  CHECK_ERROR(associated_primes(RingSpec::zmod(1)), ErrorCode::BadArgument);
}

TEST_SUITE_END();
