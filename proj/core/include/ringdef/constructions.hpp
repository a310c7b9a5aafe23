#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ringdef/certificate.hpp"
#include "ringdef/decomposition.hpp"

namespace ringdef {

// Certificates for the nonzero set of finite rings and fields, and the
// classical one for the integers (t*w = (1+2x)(1+3y)).
Certificate cert_finite(const RingSpec& A);
Certificate cert_field(const RingSpec& A);
Certificate cert_int_classic();

// exists c_1..c_k: t = sum c_i g_i
Formula ideal_membership_formula(const Ideal& I);
Certificate cert_ideal_membership(const Ideal& I);

// Lifts a definability certificate over A/I to A by expressing equality
// mod I through the generators; with a nonzero-set certificate this defines
// the complement A \ I.
Certificate quotient_lift(const Ideal& I, const Certificate& inner);

// Translates a nonzero-set certificate over B = A[x]/(F), a free A-module
// of rank d, into one over A: each B-variable becomes d A-variables, each
// B-equation d coordinate equations; the free variable embeds as (t,0,..,0).
Certificate weil_restrict(const Certificate& inner);

// t != 0  <=>  exists w,x1,x2: t*w = x1*x2, x1 not in p1, x2 not in p2,
// for a domain with two primes whose intersection contains no nonzero
// prime. Hypotheses are machine-checked where possible and recorded as
// assumptions otherwise.
Certificate two_ideals(const Ideal& p1, const Ideal& p2, const Certificate& c1,
                       const Certificate& c2);

// R[X] inherits the nonzero-set certificate from R via the primes (X) and
// (X-1), both with quotient R.
Certificate polyring_cert(const Certificate& base_field_cert,
                          const std::string& varname = "X");

struct DoublingQuadratic {
  Elem a, b;
  struct Checks {
    bool a_not_in_p = false;
    bool b_in_p = false;
    bool rootless = false;
  } checks;
};

// First pair (a, b) in canonical graded order with a not in p, b in p and
// X^2 + aX + b without roots in A (hence irreducible over the fraction
// field). The exclusion hook exists for adversarial tests.
DoublingQuadratic find_doubling_quadratic(
    const RingSpec& A, const Ideal& p, std::uint64_t height_budget,
    const std::function<bool(const Elem&, const Elem&)>& exclude = {});

// Builds B = A[x]/(x^2+ax+b) with two primes above p, applies the two-ideal
// construction over B with the quotient certificate on both sides, and
// restricts scalars back to A.
Certificate doubling_cert(const RingSpec& A, const Ideal& p,
                          const Certificate& quotient_cert,
                          std::uint64_t height_budget);

// Nonzero set of A1 x A2 as a disjunction of the embedded certificates.
Certificate product_cert(const Certificate& c1, const Certificate& c2);

// Nonzero set from a composition series: x != 0 iff for some j,
// x = s*a_j + u with s outside p_j and u in I_{j+1}. One certificate per
// chain step, each over the corresponding quotient A/p_j.
Certificate filtration_cert(const FiltrationData& F,
                            const std::vector<Certificate>& step_certs);

// Regular (non-zero-divisor) elements as the intersection of the
// complements of the associated primes.
Certificate regular_via_quotients(const AssociatedPrimesData& D,
                                  const std::vector<Certificate>& quotient_certs);
Certificate regular_via_base(const AssociatedPrimesData& D,
                             const Certificate& base_cert);

// x != 0 <=> exists t-bar, w: x*w = F(t-bar); validity is conditional on
// recorded assumptions about F (no zero; values reach every ideal power).
Certificate one_poly_cert(const RingSpec& A, const Term& F,
                          const std::vector<VarId>& vars);

// Re-derives a certificate from its provenance tree; the result is
// structurally identical to the original (determinism).
Certificate replay_provenance(const Provenance& prov);

}  // namespace ringdef
