#include "ringdef/constructions.hpp"

#include <algorithm>

#include "ringdef/formula_text.hpp"

namespace ringdef {

namespace {

Term tvar(const char* v) { return Term::var(v); }
Term tconst(const RingSpec& R, long k) { return Term::constant(R.from_int(k)); }

std::string enc_list(const RingSpec& R, const std::vector<Elem>& es) {
  std::string s;
  for (size_t i = 0; i < es.size(); ++i) {
    if (i) s += ";";
    s += R.encode(es[i]);
  }
  return s;
}

std::vector<Elem> dec_list(const RingSpec& R, std::string_view s) {
  std::vector<Elem> out;
  size_t start = 0;
  while (start <= s.size()) {
    size_t semi = s.find(';', start);
    out.push_back(R.decode(s.substr(
        start, semi == std::string_view::npos ? std::string_view::npos : semi - start)));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// base certificates

Certificate cert_finite(const RingSpec& A) {
  if (!A.finite()) fail(ErrorCode::NotFinite, A.to_string() + " is not finite");
  std::vector<Formula> branches;
  for (const Elem& a : A.enumerate(0)) {
    if (A.is_zero(a)) continue;
    branches.push_back(Formula::eq(tvar(kFreeVar), Term::constant(a)));
  }
  Certificate c;
  c.ring = A;
  c.target = TargetSet::nonzero();
  c.formula = Formula::disj(std::move(branches));  // zero ring: FALSE
  c.provenance = {"finite", {{"ring", A.to_string()}}, {}};
  check_certificate(c);
  return c;
}

namespace {

bool is_field_spec(const RingSpec& A) {
  switch (A.kind()) {
    case RingKind::PrimeField:
      return true;
    case RingKind::Zmod:
      return is_prime_int(A.modulus());
    case RingKind::MonicExt: {
      const RingSpec& base = A.base();
      if (base.kind() != RingKind::PrimeField &&
          !(base.kind() == RingKind::Zmod && is_prime_int(base.modulus())))
        return false;
      RingSpec PR = RingSpec::poly(base, "X");
      std::vector<Elem> fc = A.ext_coeffs();
      fc.push_back(base.one());
      return poly_irreducible(PR, Elem(std::move(fc)));
    }
    default:
      return false;
  }
}

}  // namespace

Certificate cert_field(const RingSpec& A) {
  if (!is_field_spec(A))
    fail(ErrorCode::NotAField, A.to_string() + " is not a certified field");
  Certificate c;
  c.ring = A;
  c.target = TargetSet::nonzero();
  c.formula = Formula::exists(
      {"x"}, Formula::eq(Term::prod({tvar(kFreeVar), tvar("x")}), tconst(A, 1)));
  c.provenance = {"field", {{"ring", A.to_string()}}, {}};
  check_certificate(c);
  return c;
}

Certificate cert_int_classic() {
  RingSpec Z = RingSpec::integers();
  Term lhs = Term::prod({tvar(kFreeVar), tvar("w")});
  Term rhs = Term::prod({Term::sum({tconst(Z, 1), Term::prod({tconst(Z, 2), tvar("x")})}),
                         Term::sum({tconst(Z, 1), Term::prod({tconst(Z, 3), tvar("y")})})});
  Certificate c;
  c.ring = Z;
  c.target = TargetSet::nonzero();
  c.formula = Formula::exists({"x", "y", "w"}, Formula::eq(lhs, rhs));
  c.provenance = {"int-classic", {}, {}};
  check_certificate(c);
  return c;
}

// ---------------------------------------------------------------------------
// ideal membership

Formula ideal_membership_formula(const Ideal& I) {
  const RingSpec& A = I.ring();
  const auto& gens = I.generators();
  std::vector<VarId> cs;
  std::vector<Term> sum;
  for (size_t i = 0; i < gens.size(); ++i) {
    VarId ci = gens.size() == 1 ? "c" : "c" + std::to_string(i + 1);
    cs.push_back(ci);
    sum.push_back(Term::prod({Term::constant(gens[i]), Term::var(ci)}));
  }
  (void)A;
  return Formula::exists(std::move(cs),
                         Formula::eq(tvar(kFreeVar), Term::sum(std::move(sum))));
}

Certificate cert_ideal_membership(const Ideal& I) {
  Certificate c;
  c.ring = I.ring();
  c.target = TargetSet::member_of(I);
  c.formula = ideal_membership_formula(I);
  c.provenance = {"ideal-membership",
                  {{"ring", I.ring().to_string()},
                   {"gens", enc_list(I.ring(), I.generators())}},
                  {}};
  check_certificate(c);
  return c;
}

// ---------------------------------------------------------------------------
// quotient lift

namespace {

Term lift_constants(const Term& t, const RingHom& pi) {
  switch (t.kind()) {
    case TermKind::Const:
      return Term::constant(pi.section(t.value()));
    case TermKind::Var:
      return t;
    default: {
      std::vector<Term> cs;
      cs.reserve(t.children().size());
      for (const Term& c : t.children()) cs.push_back(lift_constants(c, pi));
      if (t.kind() == TermKind::Sum) return Term::sum(std::move(cs));
      if (t.kind() == TermKind::Prod) return Term::prod(std::move(cs));
      return Term::neg(std::move(cs[0]));
    }
  }
}

struct LiftNamer {
  std::set<VarId> used;
  int next = 1;
  bool single;
  VarId take() {
    VarId base = single ? VarId("c") : VarId("c") + std::to_string(next++);
    return fresh_name(base, used);
  }
};

size_t count_equations(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Eq: return 1;
    case FormulaKind::Neq: return 0;
    default: {
      size_t n = 0;
      for (const Formula& c : f.children()) n += count_equations(c);
      return n;
    }
  }
}

Formula lift_formula(const Formula& f, const RingHom& pi,
                     const std::vector<Elem>& gens, LiftNamer& namer) {
  switch (f.kind()) {
    case FormulaKind::Neq:
      fail(ErrorCode::NotPositiveExistential,
           "cannot lift a formula containing disequations");
    case FormulaKind::Eq: {
      Term u = lift_constants(f.lhs(), pi);
      Term v = lift_constants(f.rhs(), pi);
      std::vector<VarId> cs;
      std::vector<Term> rhs{v};
      for (const Elem& g : gens) {
        VarId ci = namer.take();
        cs.push_back(ci);
        rhs.push_back(Term::prod({Term::constant(g), Term::var(ci)}));
      }
      return Formula::exists(std::move(cs),
                             Formula::eq(std::move(u), Term::sum(std::move(rhs))));
    }
    case FormulaKind::And:
    case FormulaKind::Or: {
      std::vector<Formula> cs;
      for (const Formula& c : f.children())
        cs.push_back(lift_formula(c, pi, gens, namer));
      return f.kind() == FormulaKind::And ? Formula::conj(std::move(cs))
                                          : Formula::disj(std::move(cs));
    }
    case FormulaKind::Exists:
      return Formula::exists(f.bound_vars(),
                             lift_formula(f.children()[0], pi, gens, namer));
  }
  fail(ErrorCode::BadArgument, "bad formula");
}

}  // namespace

Certificate quotient_lift(const Ideal& I, const Certificate& inner) {
  auto [Q, pi] = quotient(I.ring(), I);
  if (!(Q == inner.ring))
    fail(ErrorCode::BadArgument,
         "inner certificate is over " + inner.ring.to_string() +
             ", quotient is " + Q.to_string());
  if (classify(inner.formula) != FragmentClass::PositiveExistential)
    fail(ErrorCode::NotPositiveExistential, "inner certificate not positive-existential");

  LiftNamer namer;
  namer.used = all_var_names(inner.formula);
  namer.used.insert(kFreeVar);
  namer.single = count_equations(inner.formula) * I.generators().size() == 1;

  Certificate out;
  out.ring = I.ring();
  out.target = TargetSet::preimage(pi, inner.target);
  out.formula = lift_formula(inner.formula, pi, I.generators(), namer);
  out.provenance = {"quotient-lift",
                    {{"ring", I.ring().to_string()},
                     {"gens", enc_list(I.ring(), I.generators())}},
                    {inner.provenance}};
  out.assumptions = inner.assumptions;
  check_certificate(out);
  return out;
}

// ---------------------------------------------------------------------------
// restriction of scalars

namespace {

// Coordinate polynomials are kept in monomial normal form (sorted variable
// multiset -> coefficient) so that products with embedded-zero padding and
// cancelling monomials disappear; the emitted equations then mention exactly
// the variables they constrain, which the search planner relies on.
struct MonoPoly {
  std::map<std::vector<VarId>, Elem> ms;
};

struct CoordCtx {
  const RingSpec& B;       // MonicExt(A, coeffs)
  const RingSpec& A;
  int d;
  std::set<VarId> used;
  std::map<VarId, std::vector<VarId>> coords_of_var;

  const std::vector<VarId>& var_coords(const VarId& v) {
    auto it = coords_of_var.find(v);
    if (it != coords_of_var.end()) return it->second;
    std::vector<VarId> names;
    for (int i = 0; i < d; ++i)
      names.push_back(fresh_name(v + "_" + std::to_string(i), used));
    return coords_of_var.emplace(v, std::move(names)).first->second;
  }

  void add_into(MonoPoly& p, const std::vector<VarId>& key, const Elem& coef) {
    if (A.is_zero(coef)) return;
    auto it = p.ms.find(key);
    if (it == p.ms.end()) {
      p.ms.emplace(key, coef);
      return;
    }
    it->second = A.add(it->second, coef);
    if (A.is_zero(it->second)) p.ms.erase(it);
  }

  MonoPoly mono_mul(const MonoPoly& x, const MonoPoly& y) {
    MonoPoly out;
    for (const auto& [kx, cx] : x.ms)
      for (const auto& [ky, cy] : y.ms) {
        std::vector<VarId> key = kx;
        key.insert(key.end(), ky.begin(), ky.end());
        std::sort(key.begin(), key.end());
        add_into(out, key, A.mul(cx, cy));
      }
    return out;
  }

  void add_scaled(MonoPoly& acc, const MonoPoly& p, const Elem& coef) {
    for (const auto& [k, c] : p.ms) add_into(acc, k, A.mul(c, coef));
  }

  Term to_term(const MonoPoly& p) {
    if (p.ms.empty()) return Term::constant(A.zero());
    std::vector<Term> sum;
    for (const auto& [key, coef] : p.ms) {
      std::vector<Term> factors;
      if (key.empty() || !A.eq(coef, A.one()))
        factors.push_back(Term::constant(coef));
      for (const VarId& v : key) factors.push_back(Term::var(v));
      sum.push_back(Term::prod(std::move(factors)));
    }
    return Term::sum(std::move(sum));
  }

  std::vector<MonoPoly> coords(const Term& t) {
    switch (t.kind()) {
      case TermKind::Const: {
        std::vector<MonoPoly> cs(d);
        for (int i = 0; i < d; ++i) add_into(cs[i], {}, t.value().parts()[i]);
        return cs;
      }
      case TermKind::Var: {
        std::vector<MonoPoly> cs(d);
        if (t.var_name() == kFreeVar) {
          add_into(cs[0], {VarId(kFreeVar)}, A.one());
          return cs;
        }
        const std::vector<VarId>& names = var_coords(t.var_name());
        for (int i = 0; i < d; ++i) add_into(cs[i], {names[i]}, A.one());
        return cs;
      }
      case TermKind::Sum: {
        std::vector<MonoPoly> acc(d);
        for (const Term& c : t.children()) {
          std::vector<MonoPoly> part = coords(c);
          for (int i = 0; i < d; ++i) add_scaled(acc[i], part[i], A.one());
        }
        return acc;
      }
      case TermKind::Prod: {
        std::vector<MonoPoly> acc = coords(t.children()[0]);
        const auto& table = B.ext_power_table();
        for (size_t k = 1; k < t.children().size(); ++k) {
          std::vector<MonoPoly> rhs = coords(t.children()[k]);
          std::vector<MonoPoly> conv(2 * d - 1);
          for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
              if (acc[i].ms.empty() || rhs[j].ms.empty()) continue;
              MonoPoly prod = mono_mul(acc[i], rhs[j]);
              for (const auto& [key, coef] : prod.ms) add_into(conv[i + j], key, coef);
            }
          std::vector<MonoPoly> out(conv.begin(), conv.begin() + d);
          for (int m = d; m <= 2 * d - 2; ++m)
            for (int r = 0; r < d; ++r)
              add_scaled(out[r], conv[m], table[m - d][r]);
          acc = std::move(out);
        }
        return acc;
      }
      case TermKind::Neg: {
        std::vector<MonoPoly> cs = coords(t.children()[0]);
        for (MonoPoly& p : cs) {
          MonoPoly neg;
          for (const auto& [k, c] : p.ms) add_into(neg, k, A.neg(c));
          p = std::move(neg);
        }
        return cs;
      }
    }
    fail(ErrorCode::BadArgument, "bad term");
  }

  Formula restrict(const Formula& f) {
    switch (f.kind()) {
      case FormulaKind::Neq:
        fail(ErrorCode::NotPositiveExistential,
             "restriction of scalars expects a positive-existential formula");
      case FormulaKind::Eq: {
        std::vector<MonoPoly> l = coords(f.lhs()), r = coords(f.rhs());
        std::vector<Formula> eqs;
        for (int i = 0; i < d; ++i) eqs.push_back(Formula::eq(to_term(l[i]), to_term(r[i])));
        return Formula::conj(std::move(eqs));
      }
      case FormulaKind::And:
      case FormulaKind::Or: {
        std::vector<Formula> cs;
        for (const Formula& c : f.children()) cs.push_back(restrict(c));
        return f.kind() == FormulaKind::And ? Formula::conj(std::move(cs))
                                            : Formula::disj(std::move(cs));
      }
      case FormulaKind::Exists: {
        std::vector<VarId> vars;
        for (const VarId& v : f.bound_vars())
          for (const VarId& cv : var_coords(v)) vars.push_back(cv);
        return Formula::exists(std::move(vars), restrict(f.children()[0]));
      }
    }
    fail(ErrorCode::BadArgument, "bad formula");
  }
};

}  // namespace

Certificate weil_restrict(const Certificate& inner) {
  const RingSpec& B = inner.ring;
  if (B.kind() != RingKind::MonicExt)
    fail(ErrorCode::BadArgument, "restriction of scalars needs a monic extension ring");
  if (inner.target.kind() != TargetSet::Kind::Nonzero)
    fail(ErrorCode::BadArgument, "restriction of scalars expects a nonzero-set certificate");
  const RingSpec& A = B.base();
  bool domain_base = A.kind() == RingKind::Int || A.kind() == RingKind::PrimeField ||
                     (A.kind() == RingKind::Zmod && is_prime_int(A.modulus())) ||
                     (A.kind() == RingKind::Poly && A.base().kind() == RingKind::PrimeField);
  if (!domain_base)
    fail(ErrorCode::BadArgument, "base ring must be an integral domain spec");

  CoordCtx ctx{B, A, B.ext_degree(), all_var_names(inner.formula), {}};
  ctx.used.insert(kFreeVar);

  Certificate out;
  out.ring = A;
  out.target = TargetSet::nonzero();
  out.formula = ctx.restrict(inner.formula);
  out.provenance = {"weil", {{"ring", B.to_string()}}, {inner.provenance}};
  out.assumptions = inner.assumptions;
  check_certificate(out);
  return out;
}

// ---------------------------------------------------------------------------
// two primes

namespace {

bool rings_domain_certified(const RingSpec& A) {
  switch (A.kind()) {
    case RingKind::Int:
    case RingKind::PrimeField:
      return true;
    case RingKind::Zmod:
      return is_prime_int(A.modulus());
    case RingKind::Poly:
      return A.base().kind() == RingKind::PrimeField;
    case RingKind::MonicExt: {
      // monic quadratic over Int without integer roots is irreducible over Q
      if (A.base().kind() != RingKind::Int || A.ext_degree() != 2) return false;
      const BigInt& b = A.ext_coeffs()[0].scalar();
      const BigInt& a = A.ext_coeffs()[1].scalar();
      if (b == 0) return false;
      BigInt ab = abs(b);
      for (BigInt r = 1; r * r <= ab; ++r) {
        if (ab % r != 0) continue;
        const BigInt cands[4] = {r, BigInt(-r), BigInt(ab / r), BigInt(-(ab / r))};
        for (const BigInt& root : cands)
          if (root * root + a * root + b == 0) return false;
      }
      return true;
    }
    default:
      return false;
  }
}

bool distinct_primes_dim_one(const RingSpec& A, const Ideal& p1, const Ideal& p2) {
  // families where a dimension-one argument applies: two distinct nonzero
  // primes cannot contain a common nonzero prime
  auto distinct = [&] {
    if (p1.strategy() == MembershipStrategy::QuotientMap &&
        p2.strategy() == MembershipStrategy::QuotientMap) {
      const RingHom& h1 = *p1.quotient_hom();
      const RingHom& h2 = *p2.quotient_hom();
      return h1.hom_kind() != h2.hom_kind() ||
             !(h1.target() == h2.target()) ||
             !(h1.target().eq(h1.target().from_int(h1.eval_point().scalar()),
                              h2.target().from_int(h2.eval_point().scalar())));
    }
    // compare by membership both ways on generators
    for (const Elem& g : p1.generators())
      if (!p2.contains(g)) return true;
    for (const Elem& g : p2.generators())
      if (!p1.contains(g)) return true;
    return false;
  };
  switch (A.kind()) {
    case RingKind::Int:
    case RingKind::Poly:
      return distinct();
    case RingKind::MonicExt:
      return rings_domain_certified(A) && distinct();
    default:
      return false;
  }
}

}  // namespace

Certificate two_ideals(const Ideal& p1, const Ideal& p2, const Certificate& c1,
                       const Certificate& c2) {
  const RingSpec& A = p1.ring();
  if (!(p2.ring() == A))
    fail(ErrorCode::BadArgument, "the two primes live in different rings");
  for (const Ideal* p : {&p1, &p2}) {
    std::optional<bool> cert = p->certified_prime();
    if (!cert || !*cert)
      fail(ErrorCode::NotPrime, "ideal " + p->describe() + " is not certified prime");
  }

  Certificate q1 = quotient_lift(p1, c1);
  Certificate q2 = quotient_lift(p2, c2);
  Formula psi1 = substitute(q1.formula, {{kFreeVar, Term::var("x1")}});
  Formula psi2 = substitute(q2.formula, {{kFreeVar, Term::var("x2")}});

  Formula eq0 = Formula::eq(Term::prod({tvar(kFreeVar), tvar("w")}),
                            Term::prod({tvar("x1"), tvar("x2")}));
  Formula body = Formula::conj({eq0, psi1, psi2});

  Certificate out;
  out.ring = A;
  out.target = TargetSet::nonzero();
  out.formula = ensure_unique_binders(Formula::exists({"w", "x1", "x2"}, body));
  out.provenance = {"two-ideals",
                    {{"ring", A.to_string()},
                     {"p1", enc_list(A, p1.generators())},
                     {"p2", enc_list(A, p2.generators())}},
                    {c1.provenance, c2.provenance}};

  bool domain = rings_domain_certified(A);
  out.assumptions.push_back(
      {"ring-is-domain",
       domain ? "the ambient ring is an integral domain (verified structurally)"
              : "the ambient ring is assumed to be an integral domain (NOT verified for " +
                    A.to_string() + ")",
       domain});
  out.assumptions.push_back(
      {"localization-noetherian",
       "the localization at the first prime is noetherian (all supported rings are)",
       true});
  bool dim1 = distinct_primes_dim_one(A, p1, p2);
  out.assumptions.push_back(
      {"no-common-nonzero-prime",
       dim1 ? "the intersection of the two primes contains no nonzero prime "
              "(dimension-one argument: two distinct maximal ideals of a "
              "one-dimensional domain)"
            : "the intersection of the two primes is assumed to contain no "
              "nonzero prime (NOT verified)",
       dim1});
  for (const auto& a : c1.assumptions) out.assumptions.push_back(a);
  for (const auto& a : c2.assumptions) out.assumptions.push_back(a);
  check_certificate(out);
  return out;
}

Certificate polyring_cert(const Certificate& base_cert, const std::string& varname) {
  const RingSpec& R = base_cert.ring;
  if (!is_field_spec(R) || !R.finite() ||
      (R.kind() != RingKind::PrimeField && R.kind() != RingKind::Zmod))
    fail(ErrorCode::NotAField,
         "polynomial-ring construction needs a prime-field coefficient ring");
  RingSpec A = RingSpec::poly(R.kind() == RingKind::PrimeField
                                  ? R
                                  : RingSpec::prime_field(R.modulus()),
                              varname);
  Certificate base = base_cert;
  if (!(A.base() == R)) {
    // retag zmod:p as gfp:p (identical canonical encodings)
    base.ring = A.base();
  }
  Elem X = Elem(std::vector<Elem>{A.base().zero(), A.base().one()});
  Elem Xm1 = Elem(std::vector<Elem>{A.base().neg(A.base().one()), A.base().one()});
  Ideal P1 = Ideal::make(A, {X});
  Ideal P2 = Ideal::make(A, {Xm1});
  Certificate out = two_ideals(P1, P2, base, base);
  out.provenance = {"polyring",
                    {{"ring", A.to_string()}},
                    {base_cert.provenance}};
  return out;
}

// ---------------------------------------------------------------------------
// doubling

DoublingQuadratic find_doubling_quadratic(
    const RingSpec& A, const Ideal& p, std::uint64_t height_budget,
    const std::function<bool(const Elem&, const Elem&)>& exclude) {
  if (A.kind() != RingKind::Int &&
      !(A.kind() == RingKind::Poly && A.base().kind() == RingKind::PrimeField))
    fail(ErrorCode::BadArgument, "doubling search supports Int and Poly over a prime field");
  auto prime = p.certified_prime();
  if (!prime || !*prime || p.is_zero_ideal())
    fail(ErrorCode::NotPrime, "doubling needs a certified nonzero prime");

  auto rootless = [&](const Elem& a, const Elem& b) {
    if (A.kind() == RingKind::Int) {
      const BigInt& av = a.scalar();
      const BigInt& bv = b.scalar();
      if (bv == 0) return false;  // 0 is a root
      BigInt ab = abs(bv);
      for (BigInt r = 1; r * r <= ab; ++r) {
        if (ab % r != 0) continue;
        const BigInt cands[4] = {r, BigInt(-r), BigInt(ab / r), BigInt(-(ab / r))};
        for (const BigInt& root : cands)
          if (root * root + av * root + bv == 0) return false;
      }
      return true;
    }
    // roots of Y^2 + aY + b in F_p[X] have degree <= max(deg a, deg b)
    std::uint64_t bound = std::max(A.height(a), A.height(b));
    for (const Elem& z : A.enumerate(bound)) {
      Elem val = A.add(A.add(A.mul(z, z), A.mul(a, z)), b);
      if (A.is_zero(val)) return false;
    }
    return true;
  };

  for (std::uint64_t g = 0; g <= height_budget; ++g) {
    const auto& cur = A.enumerate(g);
    size_t prev = g == 0 ? 0 : A.enumerate(g - 1).size();
    for (size_t ia = 0; ia < cur.size(); ++ia) {
      for (size_t ib = 0; ib < cur.size(); ++ib) {
        if (ia < prev && ib < prev) continue;  // seen at an earlier grade
        const Elem& a = cur[ia];
        const Elem& b = cur[ib];
        if (exclude && exclude(a, b)) continue;
        if (p.contains(a)) continue;
        if (!p.contains(b)) continue;
        if (!rootless(a, b)) continue;
        DoublingQuadratic dq;
        dq.a = a;
        dq.b = b;
        dq.checks = {true, true, true};
        return dq;
      }
    }
  }
  fail(ErrorCode::BudgetExhausted,
       "no doubling quadratic found up to height " + std::to_string(height_budget));
}

namespace {

// Z/p and gfp:p have identical canonical element encodings; certificates
// over one transport verbatim to the other.
Certificate retag_prime_field(const Certificate& c, const RingSpec& target) {
  if (c.ring == target) return c;
  bool ok = (c.ring.kind() == RingKind::Zmod || c.ring.kind() == RingKind::PrimeField) &&
            (target.kind() == RingKind::Zmod || target.kind() == RingKind::PrimeField) &&
            c.ring.modulus() == target.modulus() &&
            c.target.kind() == TargetSet::Kind::Nonzero;
  if (!ok)
    fail(ErrorCode::BadArgument,
         "cannot transport certificate from " + c.ring.to_string() + " to " +
             target.to_string());
  Certificate out = c;
  out.ring = target;
  return out;
}

}  // namespace

Certificate doubling_cert(const RingSpec& A, const Ideal& p,
                          const Certificate& quotient_cert,
                          std::uint64_t height_budget) {
  if (A.kind() != RingKind::Int)
    fail(ErrorCode::BadArgument, "doubling construction currently supports the integers");
  auto [Q, pi] = quotient(A, p);
  if (!(Q == quotient_cert.ring))
    fail(ErrorCode::BadArgument, "quotient certificate ring mismatch");

  DoublingQuadratic dq = find_doubling_quadratic(A, p, height_budget);
  RingSpec B = RingSpec::monic_ext(A, {dq.b, dq.a});

  const BigInt& prime = Q.modulus();
  // the two primes above p: (p, x) and (p, x + a); both eval points are
  // residual roots of x^2 + ax + b
  RingHom h1 = RingHom::ext_eval_mod_p(B, prime, 0);
  RingHom h2 = RingHom::ext_eval_mod_p(B, prime, -dq.a.scalar());
  Elem pB = B.from_int(prime);
  Elem xB = Elem(std::vector<Elem>{A.zero(), A.one()});
  Elem xpaB = Elem(std::vector<Elem>{dq.a, A.one()});
  Ideal P1 = Ideal::kernel(B, {pB, xB}, h1);
  Ideal P2 = Ideal::kernel(B, {pB, xpaB}, h2);

  Certificate inner = retag_prime_field(quotient_cert, h1.target());
  Certificate over_b = two_ideals(P1, P2, inner, inner);
  Certificate out = weil_restrict(over_b);
  out.provenance = {"doubling",
                    {{"ring", A.to_string()},
                     {"p", enc_list(A, p.generators())},
                     {"a", A.encode(dq.a)},
                     {"b", A.encode(dq.b)},
                     {"budget", std::to_string(height_budget)}},
                    {quotient_cert.provenance}};
  out.assumptions.push_back(
      {"depth-one",
       "the localization at the chosen prime has dimension one; the doubling "
       "step needs no recursion",
       true});
  // carry the hypothesis record from the two-ideal step over B
  for (const auto& a : over_b.assumptions) out.assumptions.push_back(a);
  check_certificate(out);
  return out;
}

// ---------------------------------------------------------------------------
// products

namespace {

Term embed_term(const Term& t, const RingSpec& P, int side) {
  switch (t.kind()) {
    case TermKind::Const: {
      const RingSpec& other = side == 0 ? P.right() : P.left();
      std::vector<Elem> pair(2);
      pair[side] = t.value();
      pair[1 - side] = other.zero();
      return Term::constant(Elem(std::move(pair)));
    }
    case TermKind::Var:
      return t;
    default: {
      std::vector<Term> cs;
      for (const Term& c : t.children()) cs.push_back(embed_term(c, P, side));
      if (t.kind() == TermKind::Sum) return Term::sum(std::move(cs));
      if (t.kind() == TermKind::Prod) return Term::prod(std::move(cs));
      return Term::neg(std::move(cs[0]));
    }
  }
}

// Embeds the slot-i certificate formula: constants become pairs with 0 in
// the other slot, and every equation is multiplied by the slot idempotent
// so its other-slot component degenerates to 0 = 0.
Formula embed_formula(const Formula& f, const RingSpec& P, int side, const Term& idem) {
  switch (f.kind()) {
    case FormulaKind::Neq:
      fail(ErrorCode::NotPositiveExistential, "product embedding expects no disequations");
    case FormulaKind::Eq:
      return Formula::eq(Term::prod({idem, embed_term(f.lhs(), P, side)}),
                         Term::prod({idem, embed_term(f.rhs(), P, side)}));
    case FormulaKind::And:
    case FormulaKind::Or: {
      std::vector<Formula> cs;
      for (const Formula& c : f.children())
        cs.push_back(embed_formula(c, P, side, idem));
      return f.kind() == FormulaKind::And ? Formula::conj(std::move(cs))
                                          : Formula::disj(std::move(cs));
    }
    case FormulaKind::Exists:
      return Formula::exists(f.bound_vars(),
                             embed_formula(f.children()[0], P, side, idem));
  }
  fail(ErrorCode::BadArgument, "bad formula");
}

}  // namespace

Certificate product_cert(const Certificate& c1, const Certificate& c2) {
  if (c1.target.kind() != TargetSet::Kind::Nonzero ||
      c2.target.kind() != TargetSet::Kind::Nonzero)
    fail(ErrorCode::BadArgument, "product construction expects nonzero-set certificates");
  RingSpec P = RingSpec::product(c1.ring, c2.ring);
  Term e1 = Term::constant(Elem(std::vector<Elem>{c1.ring.one(), c2.ring.zero()}));
  Term e2 = Term::constant(Elem(std::vector<Elem>{c1.ring.zero(), c2.ring.one()}));
  Formula f1 = embed_formula(c1.formula, P, 0, e1);
  Formula f2 = embed_formula(c2.formula, P, 1, e2);

  Certificate out;
  out.ring = P;
  out.target = TargetSet::nonzero();
  out.formula = ensure_unique_binders(Formula::disj({f1, f2}));
  out.provenance = {"product",
                    {{"ring", P.to_string()}},
                    {c1.provenance, c2.provenance}};
  out.assumptions = c1.assumptions;
  for (const auto& a : c2.assumptions) out.assumptions.push_back(a);
  check_certificate(out);
  return out;
}

// ---------------------------------------------------------------------------
// filtration / regular elements

Certificate filtration_cert(const FiltrationData& F,
                            const std::vector<Certificate>& step_certs) {
  if (step_certs.size() != F.primes.size())
    fail(ErrorCode::BadArgument, "need one quotient certificate per chain step");
  const RingSpec& A = F.ring;

  std::vector<Formula> branches;
  for (size_t j = 0; j < F.primes.size(); ++j) {
    Certificate lifted = quotient_lift(F.primes[j], step_certs[j]);
    Formula psi = substitute(lifted.formula, {{kFreeVar, Term::var("s")}});
    Formula mu = substitute(ideal_membership_formula(F.ideals[j + 1]),
                            {{kFreeVar, Term::var("u")}});
    Formula link = Formula::eq(
        tvar(kFreeVar),
        Term::sum({Term::prod({Term::var("s"), Term::constant(F.gens[j])}),
                   Term::var("u")}));
    branches.push_back(
        Formula::exists({"s", "u"}, Formula::conj({link, psi, mu})));
  }

  Certificate out;
  out.ring = A;
  out.target = TargetSet::nonzero();
  out.formula = ensure_unique_binders(Formula::disj(std::move(branches)));
  out.provenance = {"filtration", {{"ring", A.to_string()}}, {}};
  for (const Certificate& c : step_certs)
    out.provenance.children.push_back(c.provenance);
  for (const Certificate& c : step_certs)
    for (const auto& a : c.assumptions) out.assumptions.push_back(a);
  check_certificate(out);
  return out;
}

Certificate regular_via_quotients(const AssociatedPrimesData& D,
                                  const std::vector<Certificate>& quotient_certs) {
  if (quotient_certs.size() != D.pairs.size())
    fail(ErrorCode::BadArgument, "need one certificate per associated prime");
  std::vector<Formula> parts;
  for (size_t i = 0; i < D.pairs.size(); ++i)
    parts.push_back(quotient_lift(D.pairs[i].first, quotient_certs[i]).formula);

  Certificate out;
  out.ring = D.ring;
  out.target = TargetSet::regular();
  out.formula = ensure_unique_binders(Formula::conj(std::move(parts)));
  out.provenance = {"regular-via-quotients", {{"ring", D.ring.to_string()}}, {}};
  for (const Certificate& c : quotient_certs)
    out.provenance.children.push_back(c.provenance);
  check_certificate(out);
  return out;
}

Certificate regular_via_base(const AssociatedPrimesData& D, const Certificate& base_cert) {
  if (!(base_cert.ring == D.ring))
    fail(ErrorCode::BadArgument, "base certificate must live over the same ring");
  if (base_cert.target.kind() != TargetSet::Kind::Nonzero)
    fail(ErrorCode::BadArgument, "base certificate must define the nonzero set");
  std::vector<Formula> parts;
  for (const auto& [prime, alpha] : D.pairs) {
    (void)prime;
    parts.push_back(substitute(
        base_cert.formula,
        {{kFreeVar, Term::prod({Term::var(kFreeVar), Term::constant(alpha)})}}));
  }
  Certificate out;
  out.ring = D.ring;
  out.target = TargetSet::regular();
  out.formula = ensure_unique_binders(Formula::conj(std::move(parts)));
  out.provenance = {"regular-via-base",
                    {{"ring", D.ring.to_string()}},
                    {base_cert.provenance}};
  out.assumptions = base_cert.assumptions;
  check_certificate(out);
  return out;
}

// ---------------------------------------------------------------------------
// single-polynomial certificate

Certificate one_poly_cert(const RingSpec& A, const Term& F,
                          const std::vector<VarId>& vars) {
  std::set<VarId> fvars;
  F.collect_vars(fvars);
  std::set<VarId> declared(vars.begin(), vars.end());
  for (const VarId& v : fvars)
    if (!declared.count(v))
      fail(ErrorCode::BadArgument, "polynomial uses undeclared variable " + v);
  if (declared.count(kFreeVar))
    fail(ErrorCode::BadArgument, "polynomial variables must not shadow the free variable");

  std::set<VarId> used = declared;
  used.insert(kFreeVar);
  VarId w = fresh_name("w", used);
  std::vector<VarId> bound = vars;
  bound.push_back(w);

  Certificate out;
  out.ring = A;
  out.target = TargetSet::nonzero();
  out.formula = Formula::exists(
      bound, Formula::eq(Term::prod({tvar(kFreeVar), Term::var(w)}), F));
  std::string vlist;
  for (size_t i = 0; i < vars.size(); ++i) {
    if (i) vlist += ",";
    vlist += vars[i];
  }
  out.provenance = {"one-poly",
                    {{"ring", A.to_string()},
                     {"term", print_term(F, A)},
                     {"vars", vlist}},
                    {}};
  out.assumptions.push_back(
      {"nonvanishing", "assumed: the polynomial has no zero over the ring", false});
  out.assumptions.push_back(
      {"ideal-power-density",
       "assumed: the polynomial takes values in every power of the distinguished ideal",
       false});
  check_certificate(out);
  return out;
}

// ---------------------------------------------------------------------------
// provenance replay

namespace {

std::string param(const Provenance& p, const std::string& key) {
  for (const auto& [k, v] : p.params)
    if (k == key) return v;
  fail(ErrorCode::BadArgument, "provenance misses parameter '" + key + "'");
}

}  // namespace

Certificate replay_provenance(const Provenance& prov) {
  const std::string& r = prov.rule;
  if (r == "finite") return cert_finite(RingSpec::parse(param(prov, "ring")));
  if (r == "field") return cert_field(RingSpec::parse(param(prov, "ring")));
  if (r == "int-classic") return cert_int_classic();
  if (r == "ideal-membership") {
    RingSpec A = RingSpec::parse(param(prov, "ring"));
    return cert_ideal_membership(Ideal::make(A, dec_list(A, param(prov, "gens"))));
  }
  if (r == "quotient-lift") {
    RingSpec A = RingSpec::parse(param(prov, "ring"));
    Ideal I = Ideal::make(A, dec_list(A, param(prov, "gens")));
    return quotient_lift(I, replay_provenance(prov.children.at(0)));
  }
  if (r == "weil") return weil_restrict(replay_provenance(prov.children.at(0)));
  if (r == "two-ideals") {
    RingSpec A = RingSpec::parse(param(prov, "ring"));
    Ideal P1 = Ideal::make(A, dec_list(A, param(prov, "p1")));
    Ideal P2 = Ideal::make(A, dec_list(A, param(prov, "p2")));
    return two_ideals(P1, P2, replay_provenance(prov.children.at(0)),
                      replay_provenance(prov.children.at(1)));
  }
  if (r == "polyring") {
    RingSpec A = RingSpec::parse(param(prov, "ring"));
    return polyring_cert(replay_provenance(prov.children.at(0)), A.varname());
  }
  if (r == "doubling") {
    RingSpec A = RingSpec::parse(param(prov, "ring"));
    Ideal p = Ideal::make(A, dec_list(A, param(prov, "p")));
    return doubling_cert(A, p, replay_provenance(prov.children.at(0)),
                         std::stoull(param(prov, "budget")));
  }
  if (r == "product")
    return product_cert(replay_provenance(prov.children.at(0)),
                        replay_provenance(prov.children.at(1)));
  if (r == "filtration") {
    RingSpec A = RingSpec::parse(param(prov, "ring"));
    FiltrationData F = composition_series(A);
    std::vector<Certificate> certs;
    for (const Provenance& c : prov.children) certs.push_back(replay_provenance(c));
    return filtration_cert(F, certs);
  }
  if (r == "regular-via-quotients") {
    RingSpec A = RingSpec::parse(param(prov, "ring"));
    AssociatedPrimesData D = associated_primes(A);
    std::vector<Certificate> certs;
    for (const Provenance& c : prov.children) certs.push_back(replay_provenance(c));
    return regular_via_quotients(D, certs);
  }
  if (r == "regular-via-base") {
    RingSpec A = RingSpec::parse(param(prov, "ring"));
    return regular_via_base(associated_primes(A),
                            replay_provenance(prov.children.at(0)));
  }
  if (r == "one-poly") {
    RingSpec A = RingSpec::parse(param(prov, "ring"));
    Term F = parse_term(param(prov, "term"), A);
    std::vector<VarId> vars;
    std::string vl = param(prov, "vars");
    size_t start = 0;
    while (start <= vl.size() && !vl.empty()) {
      size_t comma = vl.find(',', start);
      vars.push_back(vl.substr(start, comma == std::string::npos ? std::string::npos
                                                                 : comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return one_poly_cert(A, F, vars);
  }
  fail(ErrorCode::BadArgument, "cannot replay provenance rule '" + r + "'");
}

}  // namespace ringdef
