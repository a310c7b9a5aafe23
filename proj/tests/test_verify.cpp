#include "ringdef/verify.hpp"

#include <doctest.h>

#include "ringdef/constructions.hpp"
#include "ringdef/json_io.hpp"
#include "test_helpers.hpp"

using namespace ringdef;

namespace {

std::vector<Elem> int_range(long lo, long hi) {
  std::vector<Elem> out;
  for (long v = lo; v <= hi; ++v) out.push_back(Elem(v));
  return out;
}

PhiSystem univariate(const char* text) {
  IntPoly P = IntPoly::parse(text);
  std::vector<Term> monomials;
  for (size_t e = 0; e < P.coeffs.size(); ++e) {
    if (P.coeffs[e] == 0) continue;
    std::vector<Term> fs{Term::constant(Elem(P.coeffs[e]))};
    for (size_t i = 0; i < e; ++i) fs.push_back(Term::var("X"));
    monomials.push_back(Term::prod(std::move(fs)));
  }
  PhiSystem S;
  S.polys = {Term::sum(std::move(monomials))};
  S.vars = {"X"};
  return S;
}

}  // namespace

TEST_SUITE_BEGIN("verify");

TEST_CASE("bounded verification of the classical integer certificate") {
  Certificate c = cert_int_classic();
  VerifyConfig cfg;
  cfg.elements = int_range(-10, 10);
  Report rep = verify_cert(c, cfg, SearchBudget::defaults());
  CHECK(rep.true_count == 20);
  CHECK(rep.unknown_count == 1);
  CHECK(rep.false_count == 0);
  CHECK(rep.falsifications.empty());
  CHECK(rep.pass);
}

TEST_CASE("exhaustive verification of a field certificate") {
  Certificate c = cert_field(RingSpec::prime_field(7));
  VerifyConfig cfg;
  cfg.exhaustive = true;
  Report rep = verify_cert(c, cfg, SearchBudget::defaults());
  CHECK(rep.true_count == 6);
  CHECK(rep.false_count == 1);
  CHECK(rep.pass);
}

TEST_CASE("falsification detection on the Z/35 counterexample") {
  RingSpec Z35 = RingSpec::zmod(35);
  Certificate c = two_ideals(Ideal::make(Z35, {Z35.from_int(5)}),
                             Ideal::make(Z35, {Z35.from_int(7)}),
                             cert_field(RingSpec::zmod(5)), cert_field(RingSpec::zmod(7)));
  VerifyConfig cfg;
  cfg.exhaustive = true;
  Report rep = verify_cert(c, cfg, SearchBudget::defaults());
  CHECK(!rep.pass);
  REQUIRE(rep.falsifications.size() == 1);
  CHECK(rep.falsifications[0].rfind("t=0", 0) == 0);
}

TEST_CASE("phi: X^2-8 at p=7 witnesses the failure") {
  Report rep = phi_experiment(univariate("X^2-8"), 7, 12, SearchBudget::defaults());
  REQUIRE(rep.phi_levels.size() == 12);
  for (const auto& l : rep.phi_levels) CHECK(l.solvable);
  bool saw_scan = false, saw_hensel = false;
  for (const auto& l : rep.phi_levels) {
    if (l.method == "scan") saw_scan = true;
    if (l.method == "hensel") saw_hensel = true;
  }
  CHECK(saw_scan);
  CHECK(saw_hensel);
  CHECK(rep.phi_global.find("no integer solution") != std::string::npos);
  CHECK(rep.conclusion.find("PHI(Z,(7)) fails") != std::string::npos);
}

TEST_CASE("phi: X^2-9 has a global solution, no violation") {
  Report rep = phi_experiment(univariate("X^2-9"), 7, 6, SearchBudget::defaults());
  for (const auto& l : rep.phi_levels) CHECK(l.solvable);
  CHECK(rep.phi_global.find("X=3") != std::string::npos);
  CHECK(rep.conclusion.rfind("no-violation-witnessed", 0) == 0);
}

TEST_CASE("phi: X^2-7 breaks at the second level") {
  // oracle: x^2 = 7 mod 49 forces 7 | x, then 49 | x^2, contradiction
  bool any = false;
  for (long x = 0; x < 49; ++x)
    if ((x * x - 7) % 49 == 0) any = true;
  REQUIRE(!any);

  Report rep = phi_experiment(univariate("X^2-7"), 7, 3, SearchBudget::defaults());
  REQUIRE(rep.phi_levels.size() == 2);
  CHECK(rep.phi_levels[0].solvable);
  CHECK(!rep.phi_levels[1].solvable);
  CHECK(rep.conclusion.rfind("chain-broken", 0) == 0);
}

TEST_CASE("phi: infeasible scans without a simple root are reported") {
  // (X-101)^2 is solvable at every level but has no simple residual root;
  // the level-4 space exceeds the scan limit
  CHECK_ERROR(
      phi_experiment(univariate("X^2-202*X+10201"), 101, 4, SearchBudget::defaults()),
      ErrorCode::InfeasibleScan);
}

TEST_CASE("integer k-th roots") {
  CHECK(integer_kth_root(9, 2) == BigInt(3));
  CHECK(integer_kth_root(8, 3) == BigInt(2));
  CHECK(integer_kth_root(-8, 3) == BigInt(-2));
  CHECK(!integer_kth_root(8, 2).has_value());
  CHECK(!integer_kth_root(-9, 2).has_value());
  CHECK(integer_kth_root(0, 5) == BigInt(0));
  BigInt big = BigInt("1000000000000000000000000");  // 10^24 = (10^12)^2
  CHECK(integer_kth_root(big, 2) == BigInt("1000000000000"));
}

TEST_CASE("closedness demo at small exponent") {
  Certificate c = cert_int_classic();
  Report rep = closedness_demo(c, 7, 3, SearchBudget::heights({2, 4, 8, 16, 32, 64, 128}));
  CHECK(rep.conclusion.rfind("not closed", 0) == 0);
  CHECK(rep.true_count == 3);

  Report empty = closedness_demo(c, 7, 0, SearchBudget::defaults());
  CHECK(empty.conclusion.rfind("inconclusive", 0) == 0);
}

TEST_CASE("random normalization differential stays clean") {
  Report r6 = random_formula_equivalence(RingSpec::zmod(6), 1, 100);
  CHECK(r6.pass);
  Report r1 = random_formula_equivalence(RingSpec::zmod(1), 3, 50);
  CHECK(r1.pass);
}

TEST_CASE("certificate JSON round-trips") {
  RingSpec Z = RingSpec::integers();
  RingSpec Z12 = RingSpec::zmod(12);
  std::vector<Certificate> certs;
  certs.push_back(cert_int_classic());
  certs.push_back(quotient_lift(Ideal::make(Z12, {Z12.from_int(2)}),
                                cert_field(RingSpec::zmod(2))));
  certs.push_back(doubling_cert(Z, Ideal::make(Z, {Elem(5L)}),
                                cert_field(RingSpec::zmod(5)), 16));
  certs.push_back(product_cert(cert_field(RingSpec::zmod(2)), cert_field(RingSpec::zmod(3))));
  certs.push_back(cert_ideal_membership(Ideal::make(Z, {Elem(2L), Elem(3L)})));
  {
    AssociatedPrimesData D = associated_primes(Z12);
    certs.push_back(regular_via_base(D, cert_finite(Z12)));
  }
  for (const Certificate& c : certs) {
    Json j = certificate_to_json(c);
    Certificate back = certificate_from_json(j);
    CHECK(back.formula == c.formula);
    CHECK(back.ring == c.ring);
    CHECK(back.target.describe(back.ring) == c.target.describe(c.ring));
    CHECK(back.assumptions.size() == c.assumptions.size());
    CHECK(certificate_to_json(back).dump() == j.dump());
  }
}

TEST_CASE("reports are byte-identical across runs") {
  Certificate c = cert_int_classic();
  VerifyConfig cfg;
  cfg.elements = int_range(-5, 5);
  Report a = verify_cert(c, cfg, SearchBudget::defaults());
  Report b = verify_cert(c, cfg, SearchBudget::defaults());
  CHECK(report_to_json(a).dump() == report_to_json(b).dump());

  Report p1 = phi_experiment(univariate("X^2-8"), 7, 6, SearchBudget::defaults());
  Report p2 = phi_experiment(univariate("X^2-8"), 7, 6, SearchBudget::defaults());
  CHECK(report_to_json(p1).dump() == report_to_json(p2).dump());

  // timing is excluded unless requested
  Report t = a;
  t.wallclock_ms = 1234;
  CHECK(report_to_json(t).dump() == report_to_json(a).dump());
  CHECK(report_to_json(t, true).dump() != report_to_json(a).dump());
}

TEST_SUITE_END();
