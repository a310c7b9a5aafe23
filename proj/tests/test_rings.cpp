#include "ringdef/ring.hpp"

#include <doctest.h>

#include "test_helpers.hpp"

using namespace ringdef;
using ringdef::testing::encode_all;

TEST_SUITE_BEGIN("rings");

TEST_CASE("zmod arithmetic agrees with integer arithmetic mod n") {
  for (long n = 1; n <= 36; ++n) {
    RingSpec A = RingSpec::zmod(n);
    for (long x = 0; x < n; ++x) {
      for (long y = 0; y < n; ++y) {
        Elem a = A.from_int(x), b = A.from_int(y);
        CHECK(A.add(a, b) == A.from_int(x + y));
        CHECK(A.mul(a, b) == A.from_int(x * y));
        CHECK(A.neg(a) == A.from_int(-x));
      }
    }
  }
}

TEST_CASE("frozen arithmetic examples") {
  RingSpec Z12 = RingSpec::zmod(12);
  CHECK(Z12.add(Z12.from_int(7), Z12.from_int(8)) == Z12.from_int(3));

  // x*x reduced by x^2 = -x - 5 in Z[x]/(x^2+x+5); oracle: schoolbook
  // division of X^2 by X^2+X+5 leaves remainder -X-5
  RingSpec B = RingSpec::monic_ext(RingSpec::integers(), {Elem(5L), Elem(1L)});
  Elem x = Elem(std::vector<Elem>{Elem(0L), Elem(1L)});
  Elem xx = B.mul(x, x);
  CHECK(B.encode(xx) == "[-5,-1]");

  RingSpec P = RingSpec::product(RingSpec::zmod(2), RingSpec::zmod(3));
  Elem e = P.decode("[1,2]");
  CHECK(P.encode(P.mul(e, e)) == "[1,1]");
}

TEST_CASE("monic extension multiplication is associative and commutative") {
  // over the integers: all coordinate pairs of height <= 2
  RingSpec B = RingSpec::monic_ext(RingSpec::integers(), {Elem(5L), Elem(1L)});
  const auto& elems = B.enumerate(2);
  REQUIRE(elems.size() == 25);
  for (const Elem& a : elems)
    for (const Elem& b : elems) {
      CHECK(B.mul(a, b) == B.mul(b, a));
      for (const Elem& c : elems)
        CHECK(B.mul(B.mul(a, b), c) == B.mul(a, B.mul(b, c)));
    }

  // exhaustively over a finite base: the 9-element field
  RingSpec F9 = RingSpec::monic_ext(RingSpec::prime_field(3), {Elem(1L), Elem(0L)});
  const auto& all = F9.enumerate(0);
  REQUIRE(all.size() == 9);
  for (const Elem& a : all)
    for (const Elem& b : all) {
      CHECK(F9.mul(a, b) == F9.mul(b, a));
      for (const Elem& c : all)
        CHECK(F9.mul(F9.mul(a, b), c) == F9.mul(a, F9.mul(b, c)));
    }
}

TEST_CASE("canonical enumeration") {
  RingSpec Z = RingSpec::integers();
  std::vector<std::string> got;
  for (const Elem& e : Z.enumerate(2)) got.push_back(Z.encode(e));
  CHECK(got == std::vector<std::string>{"0", "1", "-1", "2", "-2"});

  RingSpec Z4 = RingSpec::zmod(4);
  got.clear();
  for (const Elem& e : Z4.enumerate(7)) got.push_back(Z4.encode(e));
  CHECK(got == std::vector<std::string>{"0", "1", "2", "3"});

  RingSpec P2 = RingSpec::poly(RingSpec::prime_field(2), "X");
  got.clear();
  for (const Elem& e : P2.enumerate(1)) got.push_back(P2.encode(e));
  CHECK(got == std::vector<std::string>{"0", "1", "0,1", "1,1"});
}

TEST_CASE("enumeration is prefix-stable, duplicate-free and height-bounded") {
  std::vector<RingSpec> specs = {
      RingSpec::integers(),
      RingSpec::poly(RingSpec::prime_field(3), "X"),
      RingSpec::monic_ext(RingSpec::integers(), {Elem(5L), Elem(1L)}),
      RingSpec::product(RingSpec::integers(), RingSpec::zmod(3)),
  };
  for (const RingSpec& A : specs) {
    for (std::uint64_t h = 1; h <= 4; ++h) {
      const auto& prev = A.enumerate(h - 1);
      const auto& cur = A.enumerate(h);
      REQUIRE(prev.size() <= cur.size());
      for (size_t i = 0; i < prev.size(); ++i) CHECK(prev[i] == cur[i]);
      std::set<std::string> seen;
      for (const Elem& e : cur) {
        CHECK(A.height(e) <= h);
        CHECK(seen.insert(e.bytes()).second);
      }
    }
  }
}

TEST_CASE("element encodings round-trip") {
  std::vector<RingSpec> specs = {
      RingSpec::integers(),
      RingSpec::zmod(12),
      RingSpec::prime_field(5),
      RingSpec::poly(RingSpec::prime_field(5), "X"),
      RingSpec::monic_ext(RingSpec::integers(), {Elem(5L), Elem(1L)}),
      RingSpec::product(RingSpec::zmod(2),
                        RingSpec::monic_ext(RingSpec::prime_field(3), {Elem(1L), Elem(0L)})),
  };
  for (const RingSpec& A : specs)
    for (const Elem& e : A.enumerate(3))
      CHECK(A.decode(A.encode(e)) == e);
}

TEST_CASE("ring spec mini-language round-trips") {
  for (const char* s : {"int", "zmod:12", "gfp:5", "poly:gfp:5:X",
                        "monicext:int:[5,1]", "prod(zmod:2,zmod:3)",
                        "prod(monicext:gfp:3:[1,0],int)"}) {
    RingSpec A = RingSpec::parse(s);
    CHECK(A.to_string() == s);
    CHECK(RingSpec::parse(A.to_string()) == A);
  }
  CHECK_ERROR(RingSpec::parse("zmod:0"), ErrorCode::BadArgument);
  CHECK_ERROR(RingSpec::parse("gfp:6"), ErrorCode::NotPrime);
  CHECK_ERROR(RingSpec::parse("frob:3"), ErrorCode::ParseError);
  CHECK_ERROR(RingSpec::parse("int!!"), ErrorCode::ParseError);
  CHECK_ERROR(RingSpec::parse("zmod:12??"), ErrorCode::EncodingMismatch);
}

TEST_CASE("finiteness and cardinality") {
  CHECK(!RingSpec::integers().finite());
  CHECK(RingSpec::zmod(1).finite());
  CHECK(RingSpec::zmod(1).cardinality() == 1);
  RingSpec F9 = RingSpec::monic_ext(RingSpec::prime_field(3), {Elem(1L), Elem(0L)});
  CHECK(F9.finite());
  CHECK(F9.cardinality() == 9);
  CHECK(!RingSpec::poly(RingSpec::prime_field(2), "X").finite());
  CHECK(RingSpec::product(RingSpec::zmod(2), RingSpec::zmod(3)).cardinality() == 6);
}

TEST_CASE("the zero ring is a first-class spec") {
  RingSpec Z1 = RingSpec::zmod(1);
  CHECK(Z1.eq(Z1.zero(), Z1.one()));
  CHECK(Z1.enumerate(0).size() == 1);
  CHECK(Z1.from_int(12345) == Z1.zero());
}

TEST_SUITE_END();
