#include "ringdef/verify.hpp"

#include <algorithm>
#include <random>

#include "ringdef/decomposition.hpp"
#include "ringdef/normal_form.hpp"

namespace ringdef {

namespace {

Report::Entry make_entry(const RingSpec& ring, const Elem& e, const Verdict& v,
                         bool member) {
  Report::Entry en;
  en.input = ring.encode(e);
  en.verdict = v.kind;
  en.height = v.height;
  en.target_member = member;
  for (const auto& [var, val] : v.witness)
    en.witness.emplace_back(var, ring.encode(val));
  return en;
}

}  // namespace

Report verify_cert(const Certificate& c, const VerifyConfig& cfg,
                   const SearchBudget& budget, EvalSession* session) {
  check_certificate(c);
  Report rep;
  rep.instance = "verify " + c.ring.to_string() + " target=" +
                 c.target.describe(c.ring) + " rule=" + c.provenance.rule;
  rep.budget = budget;
  rep.assumptions_echo = c.assumptions;

  EvalSession local;
  EvalSession* ses = session ? session : &local;

  std::vector<Elem> inputs;
  if (cfg.exhaustive) {
    if (!c.ring.finite())
      fail(ErrorCode::NotFinite, "exhaustive verification needs a finite ring");
    inputs = c.ring.enumerate(0);
  } else {
    inputs = cfg.elements;
  }

  const bool fin = c.ring.finite();
  for (const Elem& e : inputs) {
    if (!c.ring.is_valid(e))
      fail(ErrorCode::EncodingMismatch, "test element not in " + c.ring.to_string());
    std::map<VarId, Elem> env{{c.free_var, e}};
    SearchBudget b = fin ? SearchBudget::heights({0}, budget.node_limit) : budget;
    Verdict v = eval_formula(c.ring, c.formula, env, b, ses);
    bool member = c.target.member(c.ring, e);
    Report::Entry en = make_entry(c.ring, e, v, member);
    switch (v.kind) {
      case VerdictKind::True:
        ++rep.true_count;
        if (!member)
          rep.falsifications.push_back("t=" + en.input +
                                       ": formula holds but element is outside the target");
        break;
      case VerdictKind::FalseExhaustive:
        ++rep.false_count;
        if (member)
          rep.falsifications.push_back("t=" + en.input +
                                       ": formula refuted but element is in the target");
        break;
      case VerdictKind::Unknown:
        ++rep.unknown_count;
        break;
    }
    rep.verdicts.push_back(std::move(en));
  }
  rep.pass = rep.falsifications.empty();
  return rep;
}

// ---------------------------------------------------------------------------
// PHI experiment

std::optional<BigInt> integer_kth_root(const BigInt& c, unsigned k) {
  if (k == 0) fail(ErrorCode::BadArgument, "k must be positive");
  if (c == 0) return BigInt(0);
  BigInt a = abs(c);
  if (c < 0 && k % 2 == 0) return std::nullopt;
  // binary search for floor k-th root
  BigInt lo = 0, hi = 1;
  auto pow_k = [&](const BigInt& x) {
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) r *= x;
    return r;
  };
  while (pow_k(hi) < a) hi <<= 1;
  while (lo < hi) {
    BigInt mid = (lo + hi + 1) / 2;
    if (pow_k(mid) <= a)
      lo = mid;
    else
      hi = mid - 1;
  }
  if (pow_k(lo) != a) return std::nullopt;
  return c < 0 ? -lo : lo;
}

namespace {

// Converts integer-coefficient terms to another coefficient ring.
Term term_to_ring(const Term& t, const RingSpec& target) {
  switch (t.kind()) {
    case TermKind::Const:
      return Term::constant(target.from_int(t.value().scalar()));
    case TermKind::Var:
      return t;
    default: {
      std::vector<Term> cs;
      for (const Term& c : t.children()) cs.push_back(term_to_ring(c, target));
      if (t.kind() == TermKind::Sum) return Term::sum(std::move(cs));
      if (t.kind() == TermKind::Prod) return Term::prod(std::move(cs));
      return Term::neg(std::move(cs[0]));
    }
  }
}

// Dense univariate integer coefficients of a term in one variable.
std::vector<BigInt> term_to_dense(const Term& t, const VarId& v) {
  auto mul = [](const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> r(a.size() + b.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
  };
  switch (t.kind()) {
    case TermKind::Const:
      return {t.value().scalar()};
    case TermKind::Var:
      if (t.var_name() != v) fail(ErrorCode::BadArgument, "unexpected variable");
      return {BigInt(0), BigInt(1)};
    case TermKind::Sum: {
      std::vector<BigInt> r{BigInt(0)};
      for (const Term& c : t.children()) {
        std::vector<BigInt> s = term_to_dense(c, v);
        if (s.size() > r.size()) r.resize(s.size(), BigInt(0));
        for (size_t i = 0; i < s.size(); ++i) r[i] += s[i];
      }
      return r;
    }
    case TermKind::Prod: {
      std::vector<BigInt> r{BigInt(1)};
      for (const Term& c : t.children()) r = mul(r, term_to_dense(c, v));
      return r;
    }
    case TermKind::Neg: {
      std::vector<BigInt> r = term_to_dense(t.children()[0], v);
      for (BigInt& x : r) x = -x;
      return r;
    }
  }
  fail(ErrorCode::BadArgument, "bad term");
}

constexpr std::uint64_t kScanLimit = 2'000'000;

}  // namespace

Report phi_experiment(const PhiSystem& S, const BigInt& p, unsigned Q,
                      const SearchBudget& budget) {
  if (!is_prime_int(p)) fail(ErrorCode::NotPrime, p.str() + " is not prime");
  if (S.polys.empty() || S.vars.empty())
    fail(ErrorCode::BadArgument, "empty polynomial system");
  RingSpec Z = RingSpec::integers();

  Report rep;
  rep.budget = budget;
  rep.instance = "phi p=" + p.str() + " Q=" + std::to_string(Q);

  // Newton-lifting route: single polynomial, single unknown, simple root mod p
  std::optional<IntPoly> dense;
  std::optional<BigInt> simple_root;
  if (S.polys.size() == 1 && S.vars.size() == 1) {
    IntPoly P;
    P.coeffs = term_to_dense(S.polys[0], S.vars[0]);
    dense = P;
    IntPoly dP = P.derivative();
    for (BigInt r = 0; r < p; ++r) {
      BigInt v = P.eval(r) % p;
      if (v < 0) v += p;
      BigInt d = dP.eval(r) % p;
      if (v == 0 && d != 0) {
        simple_root = r;
        break;
      }
    }
  }

  bool chain_holds = true;
  BigInt mod = 1;
  for (unsigned q = 1; q <= Q; ++q) {
    mod *= p;
    Report::PhiLevel lvl;
    lvl.q = q;

    // total scan space p^(q*r)
    BigInt space = 1;
    bool feasible = true;
    for (size_t i = 0; i < S.vars.size(); ++i) {
      space *= mod;
      if (space > kScanLimit) {
        feasible = false;
        break;
      }
    }

    if (feasible) {
      RingSpec Zq = RingSpec::zmod(mod);
      std::vector<Term> polys;
      for (const Term& t : S.polys) polys.push_back(term_to_ring(t, Zq));
      std::vector<BigInt> idx(S.vars.size(), 0);
      bool found = false;
      std::string witness;
      while (true) {
        std::map<VarId, Elem> env;
        for (size_t i = 0; i < S.vars.size(); ++i) env[S.vars[i]] = Zq.from_int(idx[i]);
        bool all_zero = true;
        for (const Term& t : polys)
          if (!Zq.is_zero(t.eval(Zq, env))) {
            all_zero = false;
            break;
          }
        if (all_zero) {
          found = true;
          for (size_t i = 0; i < S.vars.size(); ++i) {
            if (i) witness += ",";
            witness += S.vars[i] + "=" + idx[i].str();
          }
          break;
        }
        size_t i = S.vars.size();
        bool done = false;
        while (i > 0) {
          --i;
          if (++idx[i] < mod) break;
          idx[i] = 0;
          if (i == 0) done = true;
        }
        if (done) break;
      }
      lvl.solvable = found;
      lvl.method = "scan";
      lvl.witness = witness;
      // cross-check with the lifting route where both apply
      if (simple_root && found) {
        BigInt lifted = hensel_lift(*dense, p, *simple_root, q);
        BigInt check = dense->eval(lifted) % mod;
        if (check < 0) check += mod;
        if (check != 0)
          fail(ErrorCode::BadArgument, "internal: lift disagrees with scan at q=" +
                                           std::to_string(q));
      }
    } else if (simple_root) {
      BigInt lifted = hensel_lift(*dense, p, *simple_root, q);
      lvl.solvable = true;
      lvl.method = "hensel";
      lvl.witness = S.vars[0] + "=" + lifted.str();
    } else {
      fail(ErrorCode::InfeasibleScan,
           "level q=" + std::to_string(q) +
               " exceeds the scan limit and no simple residual root is available");
    }
    if (!lvl.solvable) chain_holds = false;
    rep.phi_levels.push_back(std::move(lvl));
    if (!chain_holds) break;
  }

  // global decision over the integers
  bool global_exact = false;
  bool global_solvable = false;
  if (dense) {
    // exact oracle for the shape X^k - c
    const auto& cs = dense->coeffs;
    bool shape = cs.size() >= 2 && cs.back() == 1;
    for (size_t i = 1; i + 1 < cs.size() && shape; ++i)
      if (cs[i] != 0) shape = false;
    if (shape) {
      unsigned k = static_cast<unsigned>(cs.size()) - 1;
      BigInt c = -cs[0];
      auto root = integer_kth_root(c, k);
      global_exact = true;
      global_solvable = root.has_value();
      rep.phi_global = root ? "solution " + S.vars[0] + "=" + root->str() +
                                  " (exact k-th-root test)"
                            : "no integer solution (exact k-th-root test)";
    }
  }
  if (!global_exact) {
    // bounded search
    bool found = false;
    std::string found_at;
    for (std::uint64_t h : budget.schedule) {
      const auto& ax = Z.enumerate(h);
      std::vector<size_t> idx(S.vars.size(), 0);
      while (!found) {
        std::map<VarId, Elem> env;
        for (size_t i = 0; i < S.vars.size(); ++i) env[S.vars[i]] = ax[idx[i]];
        bool all_zero = true;
        for (const Term& t : S.polys)
          if (!Z.is_zero(t.eval(Z, env))) {
            all_zero = false;
            break;
          }
        if (all_zero) {
          found = true;
          for (size_t i = 0; i < S.vars.size(); ++i) {
            if (i) found_at += ",";
            found_at += S.vars[i] + "=" + Z.encode(ax[idx[i]]);
          }
          break;
        }
        size_t i = S.vars.size();
        bool done = false;
        while (i > 0) {
          --i;
          if (++idx[i] < ax.size()) break;
          idx[i] = 0;
          if (i == 0) done = true;
        }
        if (done) break;
      }
      if (found) break;
    }
    global_solvable = found;
    rep.phi_global = found ? "solution " + found_at + " (bounded search)"
                           : "no solution within budget (not a refutation)";
  }

  if (!chain_holds) {
    rep.conclusion = "chain-broken: some truncation level is unsolvable; no conclusion";
  } else if (global_solvable) {
    rep.conclusion = "no-violation-witnessed: system solvable over Z";
  } else if (global_exact) {
    rep.conclusion = "PHI(Z,(" + p.str() + ")) fails: solvable at every checked level" +
                     std::string(simple_root ? " (and at all levels via lifting)" : "") +
                     " but globally unsolvable";
    rep.pass = true;
  } else {
    rep.conclusion = "undecided: levels solvable, global status unknown within budget";
  }
  return rep;
}

// ---------------------------------------------------------------------------
// closedness demo

Report closedness_demo(const Certificate& c, const BigInt& p, unsigned Q,
                       const SearchBudget& budget) {
  check_certificate(c);
  if (c.ring.kind() != RingKind::Int || c.target.kind() != TargetSet::Kind::Nonzero)
    fail(ErrorCode::BadArgument,
         "closedness demo needs a nonzero-set certificate over the integers");
  if (!is_prime_int(p)) fail(ErrorCode::NotPrime, p.str() + " is not prime");

  Report rep;
  rep.budget = budget;
  rep.instance = "closedness p=" + p.str() + " Q=" + std::to_string(Q) +
                 " rule=" + c.provenance.rule;
  rep.assumptions_echo = c.assumptions;

  EvalSession ses;
  if (Q == 0) {
    rep.conclusion = "inconclusive: empty sequence";
    return rep;
  }

  bool all_true = true;
  BigInt t = 1;
  for (unsigned q = 1; q <= Q; ++q) {
    t *= p;
    Verdict v = eval_formula(c.ring, c.formula, {{c.free_var, Elem(t)}}, budget, &ses);
    bool member = true;  // p^q != 0
    rep.verdicts.push_back(make_entry(c.ring, Elem(t), v, member));
    if (v.is_true())
      ++rep.true_count;
    else {
      ++rep.unknown_count;
      all_true = false;
    }
  }
  Verdict at_zero =
      eval_formula(c.ring, c.formula, {{c.free_var, c.ring.zero()}}, budget, &ses);
  rep.verdicts.push_back(make_entry(c.ring, c.ring.zero(), at_zero, false));
  if (at_zero.is_true()) {
    ++rep.true_count;
    rep.falsifications.push_back("t=0: formula holds at zero");
  } else {
    ++rep.unknown_count;
  }

  if (all_true && !at_zero.is_true()) {
    rep.conclusion = "not closed: the defined set contains " + p.str() +
                     "^q for q=1.." + std::to_string(Q) +
                     " (a sequence converging " + p.str() +
                     "-adically to 0) but not 0 itself; the set is not " + p.str() +
                     "-adically closed";
  } else if (at_zero.is_true()) {
    rep.conclusion = "falsified: certificate holds at 0";
    rep.pass = false;
  } else {
    rep.conclusion = "inconclusive: some power was not certified within budget";
  }
  return rep;
}

// ---------------------------------------------------------------------------
// random differential test

namespace {

struct Rng {
  std::mt19937_64 g;
  explicit Rng(std::uint64_t seed) : g(seed) {}
  std::uint64_t below(std::uint64_t n) { return n ? g() % n : 0; }
};

Term gen_term(Rng& rng, const RingSpec& A, const std::vector<VarId>& scope, int depth) {
  unsigned pick = rng.below(depth <= 0 ? 2 : 6);
  switch (pick) {
    case 0: {
      const auto& elems = A.enumerate(0);
      return Term::constant(elems[rng.below(elems.size())]);
    }
    case 1:
      return Term::var(scope[rng.below(scope.size())]);
    case 2:
    case 3: {
      std::vector<Term> ts;
      size_t n = 2 + rng.below(2);
      for (size_t i = 0; i < n; ++i) ts.push_back(gen_term(rng, A, scope, depth - 1));
      return pick == 2 ? Term::sum(std::move(ts)) : Term::prod(std::move(ts));
    }
    case 4:
      return Term::neg(gen_term(rng, A, scope, depth - 1));
    default:
      return Term::var(scope[rng.below(scope.size())]);
  }
}

Formula gen_formula(Rng& rng, const RingSpec& A, std::vector<VarId> scope, int depth,
                    int bound_budget) {
  unsigned pick = rng.below(depth <= 0 ? 3 : 10);
  if (pick == 0 && rng.below(8) == 0) return Formula::false_formula();
  if (depth <= 0 || pick <= 2) {
    Term l = gen_term(rng, A, scope, 2);
    Term r = gen_term(rng, A, scope, 2);
    return rng.below(10) == 0 ? Formula::neq(std::move(l), std::move(r))
                              : Formula::eq(std::move(l), std::move(r));
  }
  if (pick <= 5) {  // and / or
    std::vector<Formula> cs;
    size_t n = 2 + rng.below(2);
    for (size_t i = 0; i < n; ++i)
      cs.push_back(gen_formula(rng, A, scope, depth - 1, bound_budget));
    return pick <= 4 ? Formula::conj(std::move(cs)) : Formula::disj(std::move(cs));
  }
  if (bound_budget > 0) {
    size_t n = 1 + rng.below(std::min(bound_budget, 2));
    std::vector<VarId> vars;
    for (size_t i = 0; i < n; ++i) {
      VarId v = "x" + std::to_string(3 - bound_budget + static_cast<int>(i) + 1);
      vars.push_back(v);
      scope.push_back(v);
    }
    Formula body =
        gen_formula(rng, A, scope, depth - 1, bound_budget - static_cast<int>(n));
    return Formula::exists(std::move(vars), std::move(body));
  }
  return Formula::eq(gen_term(rng, A, scope, 1), gen_term(rng, A, scope, 1));
}

}  // namespace

Report random_formula_equivalence(const RingSpec& A, std::uint64_t seed, unsigned count) {
  if (!A.finite()) fail(ErrorCode::NotFinite, "differential test needs a finite ring");
  Report rep;
  rep.instance = "normal-form differential " + A.to_string() + " seed=" +
                 std::to_string(seed) + " count=" + std::to_string(count);
  rep.seed = seed;

  Rng rng(seed);
  EvalSession ses;
  unsigned mismatches = 0;
  for (unsigned i = 0; i < count; ++i) {
    Formula f = gen_formula(rng, A, {kFreeVar}, 3, 3);
    Formula g = reassemble(union_normal_form(f));
    std::vector<Elem> ts1 = truth_set_exhaustive(A, f, &ses);
    std::vector<Elem> ts2 = truth_set_exhaustive(A, g, &ses);
    if (ts1 != ts2) {
      ++mismatches;
      rep.falsifications.push_back("formula #" + std::to_string(i) +
                                   ": truth set changed under normalization");
    }
  }
  rep.true_count = count - mismatches;
  rep.false_count = mismatches;
  rep.pass = mismatches == 0;
  rep.conclusion = mismatches == 0
                       ? "all " + std::to_string(count) + " truth sets preserved"
                       : std::to_string(mismatches) + " mismatches";
  return rep;
}

}  // namespace ringdef
