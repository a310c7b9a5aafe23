#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "ringdef/ring.hpp"

namespace ringdef {

using VarId = std::string;

enum class TermKind { Const, Var, Sum, Prod, Neg };

// Immutable term over the ring language with per-ring constant literals.
// Values are cheap handles onto shared nodes; safe to share across threads.
class Term {
 public:
  Term() = default;
  static Term constant(Elem e);
  static Term var(VarId v);
  static Term sum(std::vector<Term> ts);   // nonempty
  static Term prod(std::vector<Term> ts);  // nonempty
  static Term neg(Term t);

  TermKind kind() const { return n_->kind; }
  const Elem& value() const { return n_->value; }
  const VarId& var_name() const { return n_->var; }
  const std::vector<Term>& children() const { return n_->children; }

  bool operator==(const Term& o) const;
  bool null() const { return !n_; }
  const void* id() const { return n_.get(); }

  void collect_vars(std::set<VarId>& out) const;
  Elem eval(const RingSpec& ring, const std::map<VarId, Elem>& env) const;

 private:
  struct Node {
    TermKind kind;
    Elem value;
    VarId var;
    std::vector<Term> children;
  };
  explicit Term(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

enum class FormulaKind { Eq, Neq, And, Or, Exists };
enum class FragmentClass { PositiveExistential, Existential };

// Quantifier-free-plus-Exists formulas: Eq, Neq, And, Or (empty = FALSE),
// Exists. No universal quantifier exists in the type. And/Or children are
// kept in a canonical order with duplicates collapsed, so printing is
// deterministic; single-child And/Or collapse to the child and nested
// Exists flatten.
class Formula {
 public:
  Formula() = default;
  static Formula eq(Term l, Term r);
  static Formula neq(Term l, Term r);
  static Formula conj(std::vector<Formula> fs);  // And, needs >= 1 child
  static Formula disj(std::vector<Formula> fs);  // Or; empty = FALSE
  static Formula false_formula() { return disj({}); }
  static Formula exists(std::vector<VarId> vars, Formula body);

  FormulaKind kind() const { return n_->kind; }
  const Term& lhs() const { return n_->lhs; }
  const Term& rhs() const { return n_->rhs; }
  const std::vector<Formula>& children() const { return n_->children; }
  const std::vector<VarId>& bound_vars() const { return n_->vars; }
  bool is_false() const { return kind() == FormulaKind::Or && children().empty(); }

  bool operator==(const Formula& o) const;
  bool null() const { return !n_; }
  const void* id() const { return n_.get(); }

  // cached set of free variables (sorted)
  const std::vector<VarId>& free_vars_sorted() const { return n_->free; }

 private:
  struct Node {
    FormulaKind kind;
    Term lhs, rhs;
    std::vector<Formula> children;
    std::vector<VarId> vars;
    std::vector<VarId> free;
    std::string canon_key;  // structural key for canonical child ordering
  };
  explicit Formula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  static Formula make(Node n);
  std::shared_ptr<const Node> n_;

  friend const std::string& canon_key(const Formula& f);
};

const std::string& canon_key(const Formula& f);

FragmentClass classify(const Formula& f);
std::set<VarId> free_vars(const Formula& f);

// Capture-avoiding textual substitution of free variables. Binders that
// would capture a substituted term are renamed with prime suffixes.
Formula substitute(const Formula& f, const std::map<VarId, Term>& sigma);
Term substitute(const Term& t, const std::map<VarId, Term>& sigma);

// Collects every variable name (free or bound) occurring in the formula.
std::set<VarId> all_var_names(const Formula& f);

// Renames bound variables so that every binder in the formula is distinct
// from every other binder and from every free variable.
Formula ensure_unique_binders(const Formula& f);

// Fresh-name helper: base, base', base'', ... first not in `used`.
VarId fresh_name(const VarId& base, std::set<VarId>& used);

}  // namespace ringdef
