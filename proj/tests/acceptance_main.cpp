// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Criteria marked by runtime bounds run under the budgets
// fixed below; reports feed the byte-level determinism check at the end.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "ringdef/constructions.hpp"
#include "ringdef/eval.hpp"
#include "ringdef/json_io.hpp"
#include "ringdef/verify.hpp"

using namespace ringdef;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::set<std::string> truth(const Certificate& c) {
  std::set<std::string> out;
  for (const Elem& e : truth_set_exhaustive(c.ring, c.formula))
    out.insert(c.ring.encode(e));
  return out;
}

std::set<std::string> target_set(const Certificate& c) {
  std::set<std::string> out;
  for (const Elem& e : c.ring.enumerate(0))
    if (c.target.member(c.ring, e)) out.insert(c.ring.encode(e));
  return out;
}

std::vector<Elem> int_range(long lo, long hi, bool skip_zero = false) {
  std::vector<Elem> out;
  for (long v = lo; v <= hi; ++v) {
    if (skip_zero && v == 0) continue;
    out.push_back(Elem(v));
  }
  return out;
}

Certificate field_cert_for_quotient(const RingSpec& A, const Ideal& p) {
  auto [Q, pi] = quotient(A, p);
  (void)pi;
  return cert_field(Q);
}

PhiSystem univariate_system(const char* text) {
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

// ---------------------------------------------------------------------------
// report bundle shared between the per-criterion checks and criterion 10

struct Bundle {
  Report classic;      // criterion 2
  Report z35;          // criterion 4
  Report phi;          // criterion 6
  Report closedness;   // criterion 7
  Report polyring;     // criterion 8
  Report diff6;        // criterion 9
  Report diff22;       // criterion 9
  std::string dump;
};

Bundle run_bundle() {
  Bundle b;
  {
    VerifyConfig cfg;
    cfg.elements = int_range(-100, 100);
    EvalSession ses;
    b.classic = verify_cert(cert_int_classic(), cfg, SearchBudget::defaults(), &ses);
  }
  {
    RingSpec Z35 = RingSpec::zmod(35);
    Certificate c = two_ideals(
        Ideal::make(Z35, {Z35.from_int(5)}), Ideal::make(Z35, {Z35.from_int(7)}),
        cert_field(RingSpec::zmod(5)), cert_field(RingSpec::zmod(7)));
    VerifyConfig cfg;
    cfg.exhaustive = true;
    b.z35 = verify_cert(c, cfg, SearchBudget::defaults());
  }
  b.phi = phi_experiment(univariate_system("X^2-8"), 7, 12, SearchBudget::defaults());
  b.closedness = closedness_demo(
      cert_int_classic(), 7, 6,
      SearchBudget::heights({2, 4, 8, 16, 32, 64, 128, 256, 512, 1024}));
  {
    Certificate c = polyring_cert(cert_field(RingSpec::prime_field(5)));
    VerifyConfig cfg;
    cfg.elements = c.ring.enumerate(3);
    EvalSession ses;
    b.polyring = verify_cert(c, cfg, SearchBudget::heights({1, 2, 3, 4}), &ses);
  }
  b.diff6 = random_formula_equivalence(RingSpec::zmod(6), 1, 500);
  b.diff22 = random_formula_equivalence(
      RingSpec::product(RingSpec::zmod(2), RingSpec::zmod(2)), 7, 200);

  Json j;
  j["classic"] = report_to_json(b.classic);
  j["z35"] = report_to_json(b.z35);
  j["phi"] = report_to_json(b.phi);
  j["closedness"] = report_to_json(b.closedness);
  j["polyring"] = report_to_json(b.polyring);
  j["diff6"] = report_to_json(b.diff6);
  j["diff22"] = report_to_json(b.diff22);
  b.dump = j.dump(2);
  return b;
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
  std::vector<std::pair<std::string, Certificate>> instances;
  for (long n = 1; n <= 12; ++n)
    instances.emplace_back("finite Z/" + std::to_string(n),
                           cert_finite(RingSpec::zmod(n)));
  for (long n : {12L, 36L}) {
    RingSpec A = RingSpec::zmod(n);
    for (long d : {2L, 3L}) {
      Ideal I = Ideal::make(A, {A.from_int(d)});
      instances.emplace_back(
          "complement of (" + std::to_string(d) + ") in Z/" + std::to_string(n),
          quotient_lift(I, field_cert_for_quotient(A, I)));
    }
  }
  for (long n : {4L, 12L, 36L}) {
    RingSpec A = RingSpec::zmod(n);
    FiltrationData F = composition_series(A);
    std::vector<Certificate> certs;
    for (const Ideal& p : F.primes) certs.push_back(field_cert_for_quotient(A, p));
    instances.emplace_back("filtration Z/" + std::to_string(n),
                           filtration_cert(F, certs));
  }
  for (long n : {6L, 12L}) {
    RingSpec A = RingSpec::zmod(n);
    AssociatedPrimesData D = associated_primes(A);
    std::vector<Certificate> certs;
    for (const auto& [p, alpha] : D.pairs) {
      (void)alpha;
      certs.push_back(field_cert_for_quotient(A, p));
    }
    instances.emplace_back("regular (quotients) Z/" + std::to_string(n),
                           regular_via_quotients(D, certs));
    instances.emplace_back("regular (base) Z/" + std::to_string(n),
                           regular_via_base(D, cert_finite(A)));
  }
  instances.emplace_back("product Z/2 x Z/3",
                         product_cert(cert_field(RingSpec::zmod(2)),
                                      cert_field(RingSpec::zmod(3))));
  instances.emplace_back(
      "scalar restriction of the 9-element field",
      weil_restrict(cert_field(
          RingSpec::monic_ext(RingSpec::prime_field(3), {Elem(1L), Elem(0L)}))));

  for (const auto& [name, cert] : instances) {
    if (truth(cert) != target_set(cert))
      return {false, name + ": truth set differs from target"};
  }
  return {true, std::to_string(instances.size()) + " truth sets exact"};
}

Outcome criterion2(const Bundle& b) {
  const Report& r = b.classic;
  if (r.true_count != 200)
    return {false, "expected 200 certified elements, got " + std::to_string(r.true_count)};
  if (r.unknown_count != 1) return {false, "expected exactly t=0 unknown"};
  for (const auto& e : r.verdicts)
    if (e.input == "0" && e.verdict != VerdictKind::Unknown)
      return {false, "t=0 must stay unknown"};
  if (!r.falsifications.empty()) return {false, "unexpected falsification"};
  return {true, "200 true with re-checked witnesses, t=0 unknown, 0 falsifications"};
}

Outcome criterion3() {
  RingSpec Z = RingSpec::integers();
  Ideal p5 = Ideal::make(Z, {Elem(5L)});
  DoublingQuadratic dq = find_doubling_quadratic(Z, p5, 16);
  if (!(dq.checks.a_not_in_p && dq.checks.b_in_p && dq.checks.rootless))
    return {false, "doubling quadratic checks failed"};

  Certificate doubled = doubling_cert(Z, p5, cert_field(RingSpec::zmod(5)), 16);
  Certificate classic = cert_int_classic();
  VerifyConfig cfg;
  cfg.elements = int_range(-20, 20, /*skip_zero=*/true);
  EvalSession ses;
  Report rd = verify_cert(doubled, cfg, SearchBudget::defaults(), &ses);
  Report rc = verify_cert(classic, cfg, SearchBudget::defaults());
  if (rd.true_count != 40)
    return {false, "doubling certificate left " +
                       std::to_string(40 - rd.true_count) + " elements unverified"};
  for (size_t i = 0; i < rd.verdicts.size(); ++i)
    if (rd.verdicts[i].verdict != rc.verdicts[i].verdict)
      return {false, "verdict mismatch with the classical certificate at t=" +
                         rd.verdicts[i].input};
  return {true, "quadratic (a,b)=(" + Z.encode(dq.a) + "," + Z.encode(dq.b) +
                    "); 40/40 true and consistent with the classical certificate"};
}

Outcome criterion4(const Bundle& b) {
  const Report& r = b.z35;
  if (r.pass) return {false, "expected a falsification over Z/35"};
  if (r.falsifications.size() != 1 || r.falsifications[0].rfind("t=0", 0) != 0)
    return {false, "falsification should occur exactly at t=0"};
  return {true, "falsified exactly at t=0 by exhaustive scan"};
}

Outcome criterion5() {
  IntPoly P = IntPoly::parse("X^2-8");
  BigInt mod = 1;
  for (unsigned q = 1; q <= 5; ++q) {
    mod *= 7;
    std::vector<BigInt> roots;
    for (BigInt x = 0; x < mod; ++x) {
      BigInt v = P.eval(x) % mod;
      if (v < 0) v += mod;
      if (v == 0) roots.push_back(x);
    }
    for (long x0 : {1L, 6L}) {
      BigInt lift = hensel_lift(P, 7, x0, q);
      bool found = false;
      for (const BigInt& r : roots)
        if (r == lift) found = true;
      if (!found || (lift - x0) % 7 != 0)
        return {false, "lift from " + std::to_string(x0) + " disagrees with the scan at q=" +
                           std::to_string(q)};
    }
  }
  for (long x0 : {1L, 6L}) {
    BigInt full = hensel_lift(P, 7, x0, 12);
    BigInt m = 1;
    for (unsigned q = 1; q <= 12; ++q) {
      m *= 7;
      if (full % m != hensel_lift(P, 7, x0, q))
        return {false, "tower compatibility failed at q=" + std::to_string(q)};
    }
  }
  return {true, "both residual roots lift consistently; towers compatible to q=12"};
}

Outcome criterion6(const Bundle& b) {
  const Report& r = b.phi;
  if (r.phi_levels.size() != 12) return {false, "expected 12 levels"};
  for (const auto& l : r.phi_levels)
    if (!l.solvable) return {false, "level q=" + std::to_string(l.q) + " unsolvable"};
  if (r.phi_global.find("no integer solution") == std::string::npos)
    return {false, "global square test did not refute"};
  if (r.conclusion.find("PHI(Z,(7)) fails") == std::string::npos)
    return {false, "missing failure verdict"};
  return {true, "solvable at all 12 levels, globally refuted: PHI(Z,(7)) fails"};
}

Outcome criterion7(const Bundle& b) {
  const Report& r = b.closedness;
  if (r.conclusion.rfind("not closed", 0) != 0) return {false, r.conclusion};
  if (r.true_count != 6) return {false, "expected witnesses at all 6 powers"};
  for (const auto& e : r.verdicts)
    if (e.input == "0" && e.verdict == VerdictKind::True)
      return {false, "t=0 unexpectedly certified"};
  return {true, "witnesses at 7^1..7^6, none at 0: set not 7-adically closed"};
}

Outcome criterion8(const Bundle& b) {
  const Report& r = b.polyring;
  std::uint64_t nonzero = 0;
  for (const auto& e : r.verdicts) {
    if (e.input == "0") continue;
    ++nonzero;
    if (e.verdict != VerdictKind::True)
      return {false, "no witness within degree 4 for t=" + e.input};
  }
  if (nonzero != 624)
    return {false, "expected 624 nonzero polynomials, saw " + std::to_string(nonzero)};
  if (!r.falsifications.empty()) return {false, "unexpected falsification"};
  return {true, "624/624 nonzero polynomials of degree <= 3 certified"};
}

Outcome criterion9(const Bundle& b) {
  if (!b.diff6.pass) return {false, "mismatches over Z/6"};
  if (!b.diff22.pass) return {false, "mismatches over Z/2 x Z/2"};
  return {true, "700 random formulas: truth sets preserved by normalization"};
}

Outcome criterion10(const Bundle& first) {
  Bundle second = run_bundle();
  if (first.dump != second.dump)
    return {false, "serialized reports differ between identical runs"};
  return {true, "two full runs produced byte-identical JSON reports (" +
                    std::to_string(first.dump.size()) + " bytes)"};
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  int failures = 0;

  auto t0 = Clock::now();
  Bundle bundle = run_bundle();
  auto bundle_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       Clock::now() - t0)
                       .count();
  std::printf("-- report bundle built in %lld ms\n", static_cast<long long>(bundle_ms));

  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"exhaustive truth-set equality", [&] { return criterion1(); }},
      {"classical integer certificate on |t| <= 100", [&] { return criterion2(bundle); }},
      {"doubling pipeline over (5)", [&] { return criterion3(); }},
      {"hypothesis necessity on Z/35", [&] { return criterion4(bundle); }},
      {"unique lifting of simple roots", [&] { return criterion5(); }},
      {"infinitesimal Hasse failure witness", [&] { return criterion6(bundle); }},
      {"non-closedness demo at p=7", [&] { return criterion7(bundle); }},
      {"polynomial-ring certificate over F_5", [&] { return criterion8(bundle); }},
      {"normalization differential", [&] { return criterion9(bundle); }},
      {"byte-identical reports", [&] { return criterion10(bundle); }},
  };

  for (size_t i = 0; i < criteria.size(); ++i) {
    auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
            .count();
    std::printf("[%2zu] %s %s (%lld ms) — %s\n", i + 1, o.pass ? "PASS" : "FAIL",
                criteria[i].first.c_str(), static_cast<long long>(ms),
                o.detail.c_str());
    if (!o.pass) ++failures;
  }

  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
