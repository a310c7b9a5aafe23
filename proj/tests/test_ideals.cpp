#include "ringdef/ideal.hpp"

#include <doctest.h>

#include "test_helpers.hpp"

using namespace ringdef;

TEST_SUITE_BEGIN("ideals");

TEST_CASE("principal gcd membership") {
  RingSpec Z = RingSpec::integers();
  Ideal unit = Ideal::make(Z, {Elem(2L), Elem(3L)});
  CHECK(unit.contains(Elem(1L)));

  RingSpec Z12 = RingSpec::zmod(12);
  Ideal two = Ideal::make(Z12, {Z12.from_int(2)});
  CHECK(!two.contains(Z12.from_int(7)));
  CHECK(two.contains(Z12.from_int(10)));

  Ideal zero = Ideal::make(Z, {Elem(0L)});
  CHECK(zero.contains(Elem(0L)));
  CHECK(!zero.contains(Elem(4L)));
  CHECK(zero.is_zero_ideal());
}

TEST_CASE("kernel ideal membership via quotient map") {
  RingSpec B = RingSpec::monic_ext(RingSpec::integers(), {Elem(5L), Elem(1L)});
  RingHom h = RingHom::ext_eval_mod_p(B, 5, 0);
  Ideal I = Ideal::kernel(B, {B.from_int(5), B.decode("[0,1]")}, h);
  CHECK(I.contains(B.decode("[10,3]")));
  CHECK(!I.contains(B.decode("[7,3]")));
  CHECK(I.certified_prime() == std::optional<bool>(true));
}

TEST_CASE("finite scan agrees with principal gcd on Z/n") {
  for (long n = 2; n <= 20; ++n) {
    RingSpec A = RingSpec::zmod(n);
    for (long d = 0; d < n; ++d) {
      Ideal fast = Ideal::make(A, {A.from_int(d)}, MembershipStrategy::PrincipalGcd);
      Ideal scan = Ideal::make(A, {A.from_int(d)}, MembershipStrategy::FiniteScan);
      for (const Elem& e : A.enumerate(0))
        CHECK(fast.contains(e) == scan.contains(e));
    }
  }
}

TEST_CASE("poly division membership and primality") {
  RingSpec P5 = RingSpec::poly(RingSpec::prime_field(5), "X");
  Elem X = P5.decode("0,1");
  Ideal IX = Ideal::make(P5, {X});
  CHECK(IX.contains(P5.decode("0,3")));
  CHECK(!IX.contains(P5.decode("1,3")));
  CHECK(IX.certified_prime() == std::optional<bool>(true));

  // X^2-1 = (X-1)(X+1) is not irreducible
  Ideal red = Ideal::make(P5, {P5.decode("4,0,1")});
  CHECK(red.certified_prime() == std::optional<bool>(false));

  RingSpec P3 = RingSpec::poly(RingSpec::prime_field(3), "X");
  Ideal irr = Ideal::make(P3, {P3.decode("1,0,1")});  // X^2+1, no roots mod 3
  CHECK(irr.certified_prime() == std::optional<bool>(true));
}

TEST_CASE("integer ideal primality certificates") {
  RingSpec Z = RingSpec::integers();
  CHECK(Ideal::make(Z, {Elem(5L)}).certified_prime() == std::optional<bool>(true));
  CHECK(Ideal::make(Z, {Elem(6L)}).certified_prime() == std::optional<bool>(false));
  // (5) inside Z/35 is prime: the quotient is the field Z/5
  RingSpec Z35 = RingSpec::zmod(35);
  CHECK(Ideal::make(Z35, {Z35.from_int(5)}).certified_prime() ==
        std::optional<bool>(true));
}

TEST_CASE("supported quotient constructions with sections") {
  RingSpec Z = RingSpec::integers();
  auto [q5, pi5] = quotient(Z, Ideal::make(Z, {Elem(5L)}));
  CHECK(q5.to_string() == "zmod:5");
  CHECK(pi5.apply(Elem(12L)) == q5.from_int(2));
  for (const Elem& e : q5.enumerate(0)) CHECK(pi5.apply(pi5.section(e)) == e);

  RingSpec Z12 = RingSpec::zmod(12);
  auto [q2, pi2] = quotient(Z12, Ideal::make(Z12, {Z12.from_int(2)}));
  CHECK(q2.to_string() == "zmod:2");
  CHECK(pi2.apply(Z12.from_int(7)) == q2.from_int(1));

  // evaluation quotient of F_5[X] at a linear modulus
  RingSpec P5 = RingSpec::poly(RingSpec::prime_field(5), "X");
  auto [r, ev] = quotient(P5, Ideal::make(P5, {P5.decode("4,1")}));  // (X - 1)
  CHECK(r.to_string() == "gfp:5");
  CHECK(ev.apply(P5.decode("0,0,1")) == r.from_int(1));  // X^2 at X=1
  CHECK(ev.apply(ev.section(r.from_int(3))) == r.from_int(3));

  // residue field of a monic extension at (5, x); there is no default
  // membership strategy over the infinite extension, only the kernel route
  RingSpec B = RingSpec::monic_ext(Z, {Elem(5L), Elem(1L)});
  CHECK_ERROR(Ideal::make(B, {B.from_int(5)}), ErrorCode::UnsupportedStrategy);
  Ideal I2 = Ideal::kernel(B, {B.from_int(5), B.decode("[0,1]")},
                           RingHom::ext_eval_mod_p(B, 5, 0));
  auto [f5, pi] = quotient(B, I2);
  CHECK(f5.to_string() == "gfp:5");
  CHECK(pi.apply(B.decode("[10,3]")) == f5.from_int(0));
  CHECK(pi.apply(B.decode("[7,3]")) == f5.from_int(2));
  CHECK(pi.apply(pi.section(f5.from_int(4))) == f5.from_int(4));
}

TEST_CASE("monic quotient of a polynomial ring") {
  RingSpec P2 = RingSpec::poly(RingSpec::prime_field(2), "X");
  auto [f4, pi] = quotient(P2, Ideal::make(P2, {P2.decode("1,1,1")}));  // X^2+X+1
  CHECK(f4.to_string() == "monicext:gfp:2:[1,1]");
  // X * X = X + 1 in F_4
  Elem x = f4.decode("[0,1]");
  CHECK(f4.encode(f4.mul(x, x)) == "[1,1]");
  CHECK(pi.apply(P2.decode("0,0,1")) == f4.mul(x, x));
}

TEST_CASE("unsupported quotients are reported") {
  RingSpec Z = RingSpec::integers();
  CHECK_ERROR(quotient(Z, Ideal::make(Z, {Elem(0L)})), ErrorCode::UnsupportedQuotient);
  RingSpec P = RingSpec::product(RingSpec::zmod(2), RingSpec::zmod(3));
  CHECK_ERROR(quotient(P, Ideal::make(P, {P.from_int(2)})),
              ErrorCode::UnsupportedQuotient);
}

TEST_SUITE_END();
