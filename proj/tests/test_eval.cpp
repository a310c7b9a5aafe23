#include "ringdef/eval.hpp"

#include <doctest.h>

#include "ringdef/constructions.hpp"
#include "ringdef/formula_text.hpp"
#include "test_helpers.hpp"

using namespace ringdef;

namespace {

std::map<VarId, std::string> witness_map(const RingSpec& ring, const Verdict& v) {
  std::map<VarId, std::string> out;
  for (const auto& [var, e] : v.witness) out[var] = ring.encode(e);
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("eval");

TEST_CASE("field formula over F_5: canonical witness") {
  Certificate c = cert_field(RingSpec::prime_field(5));
  Verdict v = eval_formula(c.ring, c.formula, {{"t", c.ring.from_int(3)}},
                           SearchBudget::defaults());
  REQUIRE(v.is_true());
  CHECK(witness_map(c.ring, v) == std::map<VarId, std::string>{{"x", "2"}});

  Verdict z = eval_formula(c.ring, c.formula, {{"t", c.ring.zero()}},
                           SearchBudget::defaults());
  CHECK(z.kind == VerdictKind::FalseExhaustive);
}

TEST_CASE("the empty disjunction is exhaustively false, even on the zero ring") {
  RingSpec Z1 = RingSpec::zmod(1);
  Verdict v = eval_formula(Z1, Formula::false_formula(), {{"t", Z1.zero()}},
                           SearchBudget::defaults());
  CHECK(v.kind == VerdictKind::FalseExhaustive);
}

TEST_CASE("classical integer certificate: frozen canonical witnesses") {
  Certificate c = cert_int_classic();
  SearchBudget b = SearchBudget::defaults();

  Verdict v6 = eval_formula(c.ring, c.formula, {{"t", Elem(6L)}}, b);
  REQUIRE(v6.is_true());
  CHECK(witness_map(c.ring, v6) ==
        std::map<VarId, std::string>{{"x", "1"}, {"y", "1"}, {"w", "2"}});
  CHECK(v6.height <= 2);

  Verdict v1 = eval_formula(c.ring, c.formula, {{"t", Elem(1L)}}, b);
  REQUIRE(v1.is_true());
  CHECK(witness_map(c.ring, v1) ==
        std::map<VarId, std::string>{{"x", "0"}, {"y", "0"}, {"w", "1"}});

  Verdict v0 = eval_formula(c.ring, c.formula, {{"t", Elem(0L)}}, b);
  CHECK(v0.kind == VerdictKind::Unknown);
}

TEST_CASE("lifted field certificate over the integers") {
  RingSpec Z = RingSpec::integers();
  Certificate inner = cert_field(RingSpec::zmod(2));
  Certificate lifted = quotient_lift(Ideal::make(Z, {Elem(2L)}), inner);

  Verdict v = eval_formula(Z, lifted.formula, {{"t", Elem(3L)}}, SearchBudget::defaults());
  REQUIRE(v.is_true());
  CHECK(witness_map(Z, v) == std::map<VarId, std::string>{{"x", "1"}, {"c", "1"}});

  // t = 5 with ideal (5): reduction mod 5 kills every candidate
  Certificate lifted5 =
      quotient_lift(Ideal::make(Z, {Elem(5L)}), cert_field(RingSpec::zmod(5)));
  Verdict v5 = eval_formula(Z, lifted5.formula, {{"t", Elem(5L)}}, SearchBudget::defaults());
  CHECK(v5.kind == VerdictKind::Unknown);
}

TEST_CASE("membership witness for the unit ideal (2,3)") {
  RingSpec Z = RingSpec::integers();
  Formula f = ideal_membership_formula(Ideal::make(Z, {Elem(2L), Elem(3L)}));
  Verdict v = eval_formula(Z, f, {{"t", Elem(1L)}}, SearchBudget::defaults());
  REQUIRE(v.is_true());
  CHECK(witness_map(Z, v) == std::map<VarId, std::string>{{"c1", "-1"}, {"c2", "1"}});
}

TEST_CASE("two-ideal certificate over Z: frozen witness at t=6") {
  RingSpec Z = RingSpec::integers();
  Certificate c = two_ideals(Ideal::make(Z, {Elem(2L)}), Ideal::make(Z, {Elem(3L)}),
                             cert_field(RingSpec::zmod(2)), cert_field(RingSpec::zmod(3)));
  Verdict v = eval_formula(Z, c.formula, {{"t", Elem(6L)}}, SearchBudget::defaults());
  REQUIRE(v.is_true());
  auto w = witness_map(Z, v);
  CHECK(w.at("x1") == "3");
  CHECK(w.at("x2") == "2");
  CHECK(w.at("w") == "1");

  Verdict v0 = eval_formula(Z, c.formula, {{"t", Elem(0L)}}, SearchBudget::defaults());
  CHECK(v0.kind == VerdictKind::Unknown);
}

TEST_CASE("exact linear solving can refute over an infinite ring") {
  RingSpec Z = RingSpec::integers();
  // exists c: 2c = 3 has no integer solution: decisively false, no sweep
  Formula f = parse_formula("(exists (c) (= (* (const 2) (var c)) (const 3)))", Z);
  Verdict v = eval_formula(Z, f, {}, SearchBudget::defaults());
  CHECK(v.kind == VerdictKind::FalseExhaustive);

  // whereas a genuinely open failure stays unknown
  Formula g = parse_formula(
      "(exists (x y) (and (= (* (var x) (var y)) (const 2)) (= (* (var x) (var y)) "
      "(const 3))))",
      Z);
  CHECK(eval_formula(Z, g, {}, SearchBudget::defaults()).kind == VerdictKind::Unknown);
}

TEST_CASE("node budget exhaustion reports unknown") {
  Certificate c = cert_int_classic();
  SearchBudget tiny = SearchBudget::heights({64}, 50);
  Verdict v = eval_formula(c.ring, c.formula, {{"t", Elem(97L)}}, tiny);
  CHECK(v.kind == VerdictKind::Unknown);
  CHECK(v.nodes >= 50);
}

TEST_CASE("budget monotonicity: schedule extension preserves verdicts and witnesses") {
  Certificate c = cert_int_classic();
  for (long t : {6L, 7L, 30L, -15L}) {
    Verdict a = eval_formula(c.ring, c.formula, {{"t", Elem(t)}},
                             SearchBudget::heights({2, 4, 8}));
    Verdict b = eval_formula(c.ring, c.formula, {{"t", Elem(t)}},
                             SearchBudget::heights({2, 4, 8, 16, 32, 64}));
    REQUIRE(a.is_true());
    REQUIRE(b.is_true());
    CHECK(witness_map(c.ring, a) == witness_map(c.ring, b));
  }
}

TEST_CASE("exhaustive truth sets over finite rings") {
  RingSpec Z4 = RingSpec::zmod(4);
  Certificate c = cert_finite(Z4);
  CHECK(ringdef::testing::encode_all(Z4, truth_set_exhaustive(Z4, c.formula)) ==
        std::set<std::string>{"1", "2", "3"});

  CHECK(truth_set_exhaustive(RingSpec::zmod(1), Formula::false_formula()).empty());
  CHECK_ERROR(truth_set_exhaustive(RingSpec::integers(), Formula::false_formula()),
              ErrorCode::NotFinite);
}

TEST_CASE("evaluation rejects malformed inputs") {
  RingSpec Z = RingSpec::integers();
  Formula f = Formula::eq(Term::var("t"), Term::constant(Elem(0L)));
  CHECK_ERROR(eval_formula(Z, f, {}, SearchBudget::defaults()), ErrorCode::BadArgument);
  RingSpec Z5 = RingSpec::prime_field(5);
  CHECK_ERROR(eval_formula(Z5, f, {{"t", Elem(7L)}}, SearchBudget::defaults()),
              ErrorCode::EncodingMismatch);
}

TEST_CASE("budget text round-trip") {
  SearchBudget b = SearchBudget::parse("2,4,8");
  CHECK(b.schedule == std::vector<std::uint64_t>{2, 4, 8});
  CHECK(b.to_string() == "2,4,8");
  CHECK_ERROR(SearchBudget::parse("4,2"), ErrorCode::BadArgument);
  CHECK_ERROR(SearchBudget::parse(""), ErrorCode::ParseError);
}

TEST_SUITE_END();
