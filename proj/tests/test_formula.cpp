#include "ringdef/formula.hpp"

#include <doctest.h>

#include "ringdef/formula_text.hpp"
#include "test_helpers.hpp"

using namespace ringdef;

namespace {

RingSpec Z() { return RingSpec::integers(); }
Term C(long k) { return Term::constant(Elem(k)); }
Term V(const char* v) { return Term::var(v); }

}  // namespace

TEST_SUITE_BEGIN("formula");

TEST_CASE("classification: positive-existential iff no disequation") {
  CHECK(classify(Formula::false_formula()) == FragmentClass::PositiveExistential);

  Formula field = Formula::exists({"x"}, Formula::eq(Term::prod({V("t"), V("x")}), C(1)));
  CHECK(classify(field) == FragmentClass::PositiveExistential);

  Formula with_neq = Formula::exists(
      {"w"}, Formula::conj({Formula::eq(Term::prod({V("x"), V("w")}), C(4)),
                            Formula::neq(V("w"), C(0))}));
  CHECK(classify(with_neq) == FragmentClass::Existential);
}

TEST_CASE("free variables") {
  Formula f1 = Formula::eq(V("t"), C(0));
  CHECK(free_vars(f1) == std::set<VarId>{"t"});

  Formula f2 = Formula::exists({"x"}, Formula::eq(Term::prod({V("t"), V("x")}), C(1)));
  CHECK(free_vars(f2) == std::set<VarId>{"t"});

  CHECK(free_vars(Formula::false_formula()).empty());
}

TEST_CASE("substitution") {
  Formula f = Formula::eq(Term::prod({V("t"), V("x")}), C(1));
  Formula g = substitute(f, {{"t", C(5)}});
  CHECK(g == Formula::eq(Term::prod({C(5), V("x")}), C(1)));

  // bound-variable clash forces renaming: Exists x (x*t = 1) with t -> x
  Formula h = Formula::exists({"x"}, Formula::eq(Term::prod({V("x"), V("t")}), C(1)));
  Formula hs = substitute(h, {{"t", V("x")}});
  CHECK(free_vars(hs) == std::set<VarId>{"x"});
  REQUIRE(hs.kind() == FormulaKind::Exists);
  CHECK(hs.bound_vars()[0] != "x");

  // composition with disjoint domains
  Formula two = Formula::eq(Term::sum({V("u"), V("v")}), C(0));
  Formula a = substitute(substitute(two, {{"u", C(3)}}), {{"v", C(-3)}});
  Formula b = substitute(two, {{"u", C(3)}, {"v", C(-3)}});
  CHECK(a == b);
}

TEST_CASE("canonical ordering and duplicate collapse in And/Or") {
  Formula e1 = Formula::eq(V("t"), C(1));
  Formula e2 = Formula::eq(V("t"), C(2));
  CHECK(Formula::conj({e1, e2}) == Formula::conj({e2, e1}));
  CHECK(Formula::disj({e1, e1}) == e1);
  CHECK(Formula::conj({e1, e1}) == e1);
  // nested same-kind children flatten
  CHECK(Formula::conj({e1, Formula::conj({e2, e1})}) == Formula::conj({e1, e2}));
}

TEST_CASE("nested exists flatten") {
  Formula inner = Formula::eq(Term::prod({V("x"), V("y")}), C(2));
  Formula f = Formula::exists({"x"}, Formula::exists({"y"}, inner));
  REQUIRE(f.kind() == FormulaKind::Exists);
  CHECK(f.bound_vars() == std::vector<VarId>{"x", "y"});
}

TEST_CASE("parse and print round-trip") {
  RingSpec ring = Z();
  for (const char* text : {
           "false",
           "(= (var t) (const 0))",
           "(exists (x) (= (* (var t) (var x)) (const 1)))",
           "(exists (x y w) (= (* (var t) (var w)) (* (+ (const 1) (* (const 2) (var x))) (+ (const 1) (* (const 3) (var y))))))",
           "(or (= (var t) (const 1)) (neq (var t) (const 2)))",
           "(exists (x) (and (= (var x) (const 0)) (= (var t) (- (var x)))))",
       }) {
    Formula f = parse_formula(text, ring);
    CHECK(parse_formula(print_formula(f, ring), ring) == f);
  }
}

TEST_CASE("parser reports positions and bad constants") {
  RingSpec ring = Z();
  CHECK_ERROR(parse_formula("(= (var t) (const 0)", ring), ErrorCode::ParseError);
  CHECK_ERROR(parse_formula("(exists () (= (var t) (const 0)))", ring),
              ErrorCode::ParseError);
  CHECK_ERROR(parse_formula("(= (var t) (const 1,2))", ring), ErrorCode::ParseError);
  CHECK_ERROR(parse_formula("(flip (var t))", ring), ErrorCode::ParseError);
  try {
    parse_formula("(= (var t) (const zz))", ring);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("offset") != std::string::npos);
  }

  // encodings are ring-specific: the same text parses over F_5[X]
  RingSpec P5 = RingSpec::poly(RingSpec::prime_field(5), "X");
  Formula f = parse_formula("(= (var t) (const 1,2))", P5);
  CHECK(print_formula(f, P5) == "(= (var t) (const 1,2))");
}

TEST_CASE("pretty printing") {
  RingSpec ring = Z();
  Formula f = parse_formula(
      "(exists (x y w) (= (* (var t) (var w)) (* (+ (const 1) (* (const 2) (var x))) "
      "(+ (const 1) (* (const 3) (var y))))))",
      ring);
  std::string p = pretty_formula(f, ring);
  CHECK(p == "∃x,y,w: t·w = (1+2·x)·(1+3·y)");
  CHECK(pretty_formula(Formula::false_formula(), ring) == "false");
}

TEST_CASE("unique binders") {
  Formula clash = Formula::conj(
      {Formula::exists({"x"}, Formula::eq(Term::prod({V("t"), V("x")}), C(1))),
       Formula::exists({"x"}, Formula::eq(Term::prod({V("t"), V("x")}), C(2)))});
  Formula fixed = ensure_unique_binders(clash);
  std::set<VarId> binders;
  size_t total = 0;
  for (const Formula& c : fixed.children()) {
    for (const VarId& v : c.bound_vars()) {
      binders.insert(v);
      ++total;
    }
  }
  CHECK(binders.size() == total);  // all distinct now
}

TEST_SUITE_END();
