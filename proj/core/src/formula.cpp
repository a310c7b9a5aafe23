#include "ringdef/formula.hpp"

#include <algorithm>

namespace ringdef {

// ---------------------------------------------------------------------------
// Term

Term Term::constant(Elem e) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Const;
  n->value = std::move(e);
  return Term(std::move(n));
}

Term Term::var(VarId v) {
  if (v.empty()) fail(ErrorCode::BadArgument, "empty variable name");
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Var;
  n->var = std::move(v);
  return Term(std::move(n));
}

Term Term::sum(std::vector<Term> ts) {
  if (ts.empty()) fail(ErrorCode::BadArgument, "empty sum");
  if (ts.size() == 1) return ts[0];
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Sum;
  n->children = std::move(ts);
  return Term(std::move(n));
}

Term Term::prod(std::vector<Term> ts) {
  if (ts.empty()) fail(ErrorCode::BadArgument, "empty product");
  if (ts.size() == 1) return ts[0];
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Prod;
  n->children = std::move(ts);
  return Term(std::move(n));
}

Term Term::neg(Term t) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Neg;
  n->children.push_back(std::move(t));
  return Term(std::move(n));
}

bool Term::operator==(const Term& o) const {
  if (n_ == o.n_) return true;
  if (!n_ || !o.n_) return false;
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case TermKind::Const: return value() == o.value();
    case TermKind::Var: return var_name() == o.var_name();
    default:
      if (children().size() != o.children().size()) return false;
      for (size_t i = 0; i < children().size(); ++i)
        if (!(children()[i] == o.children()[i])) return false;
      return true;
  }
}

void Term::collect_vars(std::set<VarId>& out) const {
  switch (kind()) {
    case TermKind::Const: return;
    case TermKind::Var: out.insert(var_name()); return;
    default:
      for (const Term& c : children()) c.collect_vars(out);
  }
}

Elem Term::eval(const RingSpec& ring, const std::map<VarId, Elem>& env) const {
  switch (kind()) {
    case TermKind::Const:
      if (!ring.is_valid(value()))
        fail(ErrorCode::EncodingMismatch, "constant does not belong to " + ring.to_string());
      return value();
    case TermKind::Var: {
      auto it = env.find(var_name());
      if (it == env.end())
        fail(ErrorCode::BadArgument, "unbound variable " + var_name());
      return it->second;
    }
    case TermKind::Sum: {
      Elem acc = children()[0].eval(ring, env);
      for (size_t i = 1; i < children().size(); ++i)
        acc = ring.add(acc, children()[i].eval(ring, env));
      return acc;
    }
    case TermKind::Prod: {
      Elem acc = children()[0].eval(ring, env);
      for (size_t i = 1; i < children().size(); ++i)
        acc = ring.mul(acc, children()[i].eval(ring, env));
      return acc;
    }
    case TermKind::Neg:
      return ring.neg(children()[0].eval(ring, env));
  }
  fail(ErrorCode::BadArgument, "bad term");
}

// ---------------------------------------------------------------------------
// canonical keys (structural strings; used to order And/Or children)

namespace {

void term_key(const Term& t, std::string& out) {
  switch (t.kind()) {
    case TermKind::Const:
      out.push_back('c');
      t.value().append_bytes(out);
      break;
    case TermKind::Var:
      out.push_back('v');
      out += t.var_name();
      out.push_back(';');
      break;
    case TermKind::Sum:
    case TermKind::Prod:
      out.push_back(t.kind() == TermKind::Sum ? '+' : '*');
      out.push_back('(');
      for (const Term& c : t.children()) term_key(c, out);
      out.push_back(')');
      break;
    case TermKind::Neg:
      out.push_back('-');
      term_key(t.children()[0], out);
      break;
  }
}

std::string formula_key_of(const Formula& f);

void formula_key(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case FormulaKind::Eq:
    case FormulaKind::Neq:
      out += f.kind() == FormulaKind::Eq ? "=(" : "!(";
      term_key(f.lhs(), out);
      term_key(f.rhs(), out);
      out.push_back(')');
      break;
    case FormulaKind::And:
    case FormulaKind::Or:
      out += f.kind() == FormulaKind::And ? "&(" : "|(";
      for (const Formula& c : f.children()) out += canon_key(c);
      out.push_back(')');
      break;
    case FormulaKind::Exists:
      out += "E(";
      for (const VarId& v : f.bound_vars()) {
        out += v;
        out.push_back(',');
      }
      out.push_back(':');
      out += canon_key(f.children()[0]);
      out.push_back(')');
      break;
  }
}

std::string formula_key_of(const Formula& f) {
  std::string s;
  formula_key(f, s);
  return s;
}

void merge_free(std::vector<VarId>& acc, const std::vector<VarId>& more) {
  acc.insert(acc.end(), more.begin(), more.end());
}

std::vector<VarId> term_free(const Term& t) {
  std::set<VarId> s;
  t.collect_vars(s);
  return {s.begin(), s.end()};
}

}  // namespace

const std::string& canon_key(const Formula& f) { return f.n_->canon_key; }

// ---------------------------------------------------------------------------
// Formula

Formula Formula::make(Node n) {
  // finalize free-var cache and canonical key
  std::vector<VarId> fv;
  switch (n.kind) {
    case FormulaKind::Eq:
    case FormulaKind::Neq:
      merge_free(fv, term_free(n.lhs));
      merge_free(fv, term_free(n.rhs));
      break;
    case FormulaKind::And:
    case FormulaKind::Or:
      for (const Formula& c : n.children) merge_free(fv, c.free_vars_sorted());
      break;
    case FormulaKind::Exists: {
      for (const Formula& c : n.children) merge_free(fv, c.free_vars_sorted());
      std::set<VarId> bound(n.vars.begin(), n.vars.end());
      std::erase_if(fv, [&](const VarId& v) { return bound.count(v) > 0; });
      break;
    }
  }
  std::sort(fv.begin(), fv.end());
  fv.erase(std::unique(fv.begin(), fv.end()), fv.end());
  n.free = std::move(fv);

  auto sp = std::make_shared<Node>(std::move(n));
  Formula f(sp);
  std::string key = formula_key_of(f);
  const_cast<Node&>(*sp).canon_key = std::move(key);
  return f;
}

Formula Formula::eq(Term l, Term r) {
  Node n;
  n.kind = FormulaKind::Eq;
  n.lhs = std::move(l);
  n.rhs = std::move(r);
  return make(std::move(n));
}

Formula Formula::neq(Term l, Term r) {
  Node n;
  n.kind = FormulaKind::Neq;
  n.lhs = std::move(l);
  n.rhs = std::move(r);
  return make(std::move(n));
}

namespace {

// flatten same-kind children, order canonically, collapse duplicates
std::vector<Formula> normalize_children(FormulaKind kind, std::vector<Formula> fs) {
  std::vector<Formula> flat;
  for (Formula& f : fs) {
    if (f.null()) fail(ErrorCode::BadArgument, "null formula child");
    if (f.kind() == kind)
      flat.insert(flat.end(), f.children().begin(), f.children().end());
    else
      flat.push_back(std::move(f));
  }
  std::stable_sort(flat.begin(), flat.end(), [](const Formula& a, const Formula& b) {
    return canon_key(a) < canon_key(b);
  });
  flat.erase(std::unique(flat.begin(), flat.end(),
                         [](const Formula& a, const Formula& b) {
                           return canon_key(a) == canon_key(b);
                         }),
             flat.end());
  return flat;
}

}  // namespace

Formula Formula::conj(std::vector<Formula> fs) {
  if (fs.empty()) fail(ErrorCode::BadArgument, "And needs at least one child");
  std::vector<Formula> cs = normalize_children(FormulaKind::And, std::move(fs));
  if (cs.size() == 1) return cs[0];
  Node n;
  n.kind = FormulaKind::And;
  n.children = std::move(cs);
  return make(std::move(n));
}

Formula Formula::disj(std::vector<Formula> fs) {
  std::vector<Formula> cs = normalize_children(FormulaKind::Or, std::move(fs));
  if (cs.size() == 1) return cs[0];
  Node n;
  n.kind = FormulaKind::Or;
  n.children = std::move(cs);
  return make(std::move(n));
}

Formula Formula::exists(std::vector<VarId> vars, Formula body) {
  if (body.null()) fail(ErrorCode::BadArgument, "null exists body");
  if (vars.empty()) return body;
  for (const VarId& v : vars)
    if (v.empty()) fail(ErrorCode::BadArgument, "empty bound variable name");
  if (body.kind() == FormulaKind::Exists) {
    std::vector<VarId> all = vars;
    all.insert(all.end(), body.bound_vars().begin(), body.bound_vars().end());
    return exists(std::move(all), body.children()[0]);
  }
  Node n;
  n.kind = FormulaKind::Exists;
  n.vars = std::move(vars);
  n.children.push_back(std::move(body));
  return make(std::move(n));
}

bool Formula::operator==(const Formula& o) const {
  if (n_ == o.n_) return true;
  if (!n_ || !o.n_) return false;
  return canon_key(*this) == canon_key(o);
}

// ---------------------------------------------------------------------------
// classify / free_vars

FragmentClass classify(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Neq: return FragmentClass::Existential;
    case FormulaKind::Eq: return FragmentClass::PositiveExistential;
    default:
      for (const Formula& c : f.children())
        if (classify(c) == FragmentClass::Existential)
          return FragmentClass::Existential;
      return FragmentClass::PositiveExistential;
  }
}

std::set<VarId> free_vars(const Formula& f) {
  const auto& v = f.free_vars_sorted();
  return {v.begin(), v.end()};
}

std::set<VarId> all_var_names(const Formula& f) {
  std::set<VarId> out;
  switch (f.kind()) {
    case FormulaKind::Eq:
    case FormulaKind::Neq:
      f.lhs().collect_vars(out);
      f.rhs().collect_vars(out);
      return out;
    case FormulaKind::Exists:
      out.insert(f.bound_vars().begin(), f.bound_vars().end());
      [[fallthrough]];
    default:
      for (const Formula& c : f.children()) {
        std::set<VarId> sub = all_var_names(c);
        out.insert(sub.begin(), sub.end());
      }
      return out;
  }
}

VarId fresh_name(const VarId& base, std::set<VarId>& used) {
  VarId v = base;
  while (used.count(v)) v += "'";
  used.insert(v);
  return v;
}

// ---------------------------------------------------------------------------
// substitution

Term substitute(const Term& t, const std::map<VarId, Term>& sigma) {
  switch (t.kind()) {
    case TermKind::Const: return t;
    case TermKind::Var: {
      auto it = sigma.find(t.var_name());
      return it == sigma.end() ? t : it->second;
    }
    case TermKind::Sum:
    case TermKind::Prod:
    case TermKind::Neg: {
      std::vector<Term> cs;
      cs.reserve(t.children().size());
      for (const Term& c : t.children()) cs.push_back(substitute(c, sigma));
      if (t.kind() == TermKind::Sum) return Term::sum(std::move(cs));
      if (t.kind() == TermKind::Prod) return Term::prod(std::move(cs));
      return Term::neg(std::move(cs[0]));
    }
  }
  fail(ErrorCode::BadArgument, "bad term");
}

namespace {

Formula substitute_impl(const Formula& f, std::map<VarId, Term> sigma,
                        std::set<VarId>& used) {
  switch (f.kind()) {
    case FormulaKind::Eq:
      return Formula::eq(substitute(f.lhs(), sigma), substitute(f.rhs(), sigma));
    case FormulaKind::Neq:
      return Formula::neq(substitute(f.lhs(), sigma), substitute(f.rhs(), sigma));
    case FormulaKind::And:
    case FormulaKind::Or: {
      std::vector<Formula> cs;
      cs.reserve(f.children().size());
      for (const Formula& c : f.children())
        cs.push_back(substitute_impl(c, sigma, used));
      return f.kind() == FormulaKind::And ? Formula::conj(std::move(cs))
                                          : Formula::disj(std::move(cs));
    }
    case FormulaKind::Exists: {
      // drop bindings shadowed by the binder; rename binders that would
      // capture variables of the substituted terms
      std::set<VarId> range_vars;
      for (const VarId& v : f.bound_vars()) sigma.erase(v);
      for (const auto& [k, t] : sigma) {
        (void)k;
        t.collect_vars(range_vars);
      }
      std::vector<VarId> vars = f.bound_vars();
      std::map<VarId, Term> rename;
      for (VarId& v : vars) {
        if (range_vars.count(v)) {
          VarId nv = fresh_name(v, used);
          rename.emplace(v, Term::var(nv));
          v = nv;
        }
      }
      Formula body = f.children()[0];
      if (!rename.empty()) body = substitute_impl(body, rename, used);
      if (!sigma.empty()) body = substitute_impl(body, sigma, used);
      return Formula::exists(std::move(vars), std::move(body));
    }
  }
  fail(ErrorCode::BadArgument, "bad formula");
}

}  // namespace

Formula substitute(const Formula& f, const std::map<VarId, Term>& sigma) {
  std::set<VarId> used = all_var_names(f);
  for (const auto& [k, t] : sigma) {
    (void)k;
    t.collect_vars(used);
  }
  return substitute_impl(f, sigma, used);
}

namespace {

// `seen` holds free variables plus binders already visited (duplicate
// detection); `all` holds every name anywhere in the formula so fresh
// names cannot collide with binders deeper in the tree.
Formula unique_binders_impl(const Formula& f, std::set<VarId>& seen,
                            std::set<VarId>& all) {
  switch (f.kind()) {
    case FormulaKind::Eq:
    case FormulaKind::Neq:
      return f;
    case FormulaKind::And:
    case FormulaKind::Or: {
      std::vector<Formula> cs;
      for (const Formula& c : f.children())
        cs.push_back(unique_binders_impl(c, seen, all));
      return f.kind() == FormulaKind::And ? Formula::conj(std::move(cs))
                                          : Formula::disj(std::move(cs));
    }
    case FormulaKind::Exists: {
      std::vector<VarId> vars = f.bound_vars();
      std::map<VarId, Term> rename;
      for (VarId& v : vars) {
        if (seen.count(v)) {
          VarId nv = fresh_name(v, all);
          seen.insert(nv);
          rename.emplace(v, Term::var(nv));
          v = nv;
        } else {
          seen.insert(v);
          all.insert(v);
        }
      }
      Formula body = f.children()[0];
      if (!rename.empty()) body = substitute(body, rename);
      body = unique_binders_impl(body, seen, all);
      return Formula::exists(std::move(vars), std::move(body));
    }
  }
  fail(ErrorCode::BadArgument, "bad formula");
}

}  // namespace

Formula ensure_unique_binders(const Formula& f) {
  std::set<VarId> seen(f.free_vars_sorted().begin(), f.free_vars_sorted().end());
  std::set<VarId> all = all_var_names(f);
  for (const VarId& v : seen) all.insert(v);
  return unique_binders_impl(f, seen, all);
}

}  // namespace ringdef
