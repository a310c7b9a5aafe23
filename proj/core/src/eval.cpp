#include "ringdef/eval.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <optional>
#include <unordered_map>

#include "zp_fast.hpp"

namespace ringdef {

// ---------------------------------------------------------------------------
// SearchBudget

std::string SearchBudget::to_string() const {
  std::string s;
  for (size_t i = 0; i < schedule.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(schedule[i]);
  }
  return s;
}

SearchBudget SearchBudget::parse(std::string_view text) {
  SearchBudget b;
  b.schedule.clear();
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    std::string part(text.substr(start, comma == std::string_view::npos
                                             ? std::string_view::npos
                                             : comma - start));
    if (part.empty()) fail(ErrorCode::ParseError, "empty entry in height schedule");
    b.schedule.push_back(std::stoull(part));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  for (size_t i = 1; i < b.schedule.size(); ++i)
    if (b.schedule[i] <= b.schedule[i - 1])
      fail(ErrorCode::BadArgument, "height schedule must be strictly increasing");
  if (b.schedule.empty()) fail(ErrorCode::BadArgument, "empty height schedule");
  return b;
}

namespace {

enum class Tri : std::int8_t { False = 0, True = 1, Unknown = 2 };

// ---------------------------------------------------------------------------
// compiled terms: variables resolved to block slots / outer references,
// constants pooled

struct CTerm {
  TermKind kind;
  int idx = -1;  // Const: pool index; Var: slot >= 0, or outer ~outer_idx
  std::vector<CTerm> kids;
};

struct CompiledEq {
  CTerm lhs, rhs;
  bool is_eq;  // false: disequation
};

struct Conjunct {
  Formula f;
  bool atomic;
  int eq_index = -1;                // into Plan::eqs when atomic
  std::vector<int> free_slots;     // block slots among f's free vars
  std::vector<VarId> free_outer;   // other free vars (resolved via engine env)
};

struct PlanStep {
  enum class K { Enumerate, Solve, Check };
  K k;
  int slot = -1;  // Enumerate / Solve
  int conj = -1;  // Solve / Check
  bool dense_memo = false;
};

struct Plan {
  Formula self;  // pins lifetime of all conjunct nodes
  std::vector<VarId> slots;
  std::vector<Conjunct> conjs;
  std::vector<CompiledEq> eqs;
  std::vector<Elem> const_pool;
  std::vector<VarId> outer_names;
  std::vector<PlanStep> steps;
  bool has_enumerate_over_infinite = false;  // set at plan time if ring infinite & any Enumerate

  // lazily built packed constant pool (single-threaded engine)
  mutable std::vector<zp::Poly> zp_pool;
  mutable bool zp_pool_built = false;
};

// structural degree of a variable in a term (for linearity detection)
int var_degree(const Term& t, const VarId& v) {
  switch (t.kind()) {
    case TermKind::Const: return 0;
    case TermKind::Var: return t.var_name() == v ? 1 : 0;
    case TermKind::Sum: {
      int d = 0;
      for (const Term& c : t.children()) d = std::max(d, var_degree(c, v));
      return d;
    }
    case TermKind::Prod: {
      int d = 0;
      for (const Term& c : t.children()) d += var_degree(c, v);
      return d;
    }
    case TermKind::Neg: return var_degree(t.children()[0], v);
  }
  return 0;
}

bool ring_supports_solve(const RingSpec& ring) {
  if (ring.finite()) return true;
  if (ring.kind() == RingKind::Int) return true;
  if (ring.kind() == RingKind::Poly && ring.base().kind() == RingKind::PrimeField)
    return true;
  return false;
}

// degree bound of a compiled term over Poly rings, for packed eligibility
std::int64_t degree_bound(const CTerm& t, const Plan& plan,
                          const std::vector<std::int64_t>& slot_bound) {
  switch (t.kind) {
    case TermKind::Const: {
      const Elem& e = plan.const_pool[t.idx];
      return e.is_scalar() ? 0 : static_cast<std::int64_t>(e.parts().size()) - 1;
    }
    case TermKind::Var:
      return t.idx >= 0 ? slot_bound[t.idx] : 0;  // outer values are height-bounded too,
                                                  // but 0 is only used when unavailable
    case TermKind::Sum:
    case TermKind::Neg: {
      std::int64_t d = 0;
      for (const CTerm& c : t.kids)
        d = std::max(d, degree_bound(c, plan, slot_bound));
      return d;
    }
    case TermKind::Prod: {
      std::int64_t d = 0;
      for (const CTerm& c : t.kids) d += degree_bound(c, plan, slot_bound);
      return d;
    }
  }
  return 0;
}

}  // namespace

// ---------------------------------------------------------------------------
// session

struct EvalSession::Impl {
  // (ring string, h) -> elements
  std::map<std::pair<std::string, std::uint64_t>, std::shared_ptr<const std::vector<Elem>>> axes;
  std::map<std::pair<std::string, std::uint64_t>, std::shared_ptr<const std::vector<zp::Poly>>> zp_axes;
  // exists-node -> plan
  std::map<const void*, std::shared_ptr<const Plan>> plans;
  // sparse verdict memo (key embeds node pointer, h and value bytes)
  std::unordered_map<std::string, std::int8_t> tri_memo;
  // dense memo per (exists node, conjunct, h)
  std::map<std::tuple<const void*, int, std::uint64_t>, std::vector<std::int8_t>> dense;
};

EvalSession::EvalSession() : impl_(std::make_unique<Impl>()) {}
EvalSession::~EvalSession() = default;

namespace {

// ---------------------------------------------------------------------------
// plan construction

CTerm compile_term(const Term& t, const std::map<VarId, int>& slot_of,
                   std::vector<VarId>& outer_names, std::vector<Elem>& pool) {
  CTerm out;
  out.kind = t.kind();
  switch (t.kind()) {
    case TermKind::Const: {
      out.idx = static_cast<int>(pool.size());
      pool.push_back(t.value());
      return out;
    }
    case TermKind::Var: {
      auto it = slot_of.find(t.var_name());
      if (it != slot_of.end()) {
        out.idx = it->second;
      } else {
        int oi = -1;
        for (size_t i = 0; i < outer_names.size(); ++i)
          if (outer_names[i] == t.var_name()) oi = static_cast<int>(i);
        if (oi < 0) {
          oi = static_cast<int>(outer_names.size());
          outer_names.push_back(t.var_name());
        }
        out.idx = ~oi;
      }
      return out;
    }
    default:
      for (const Term& c : t.children())
        out.kids.push_back(compile_term(c, slot_of, outer_names, pool));
      return out;
  }
}

std::shared_ptr<const Plan> build_plan(const RingSpec& ring, const Formula& ex) {
  auto plan = std::make_shared<Plan>();
  plan->self = ex;
  plan->slots = ex.bound_vars();
  std::map<VarId, int> slot_of;
  for (size_t i = 0; i < plan->slots.size(); ++i)
    slot_of[plan->slots[i]] = static_cast<int>(i);

  const Formula& body = ex.children()[0];
  std::vector<Formula> conj_formulas;
  if (body.kind() == FormulaKind::And)
    conj_formulas = body.children();
  else
    conj_formulas = {body};

  for (const Formula& c : conj_formulas) {
    Conjunct cj;
    cj.f = c;
    cj.atomic = c.kind() == FormulaKind::Eq || c.kind() == FormulaKind::Neq;
    if (cj.atomic) {
      CompiledEq ce;
      ce.lhs = compile_term(c.lhs(), slot_of, plan->outer_names, plan->const_pool);
      ce.rhs = compile_term(c.rhs(), slot_of, plan->outer_names, plan->const_pool);
      ce.is_eq = c.kind() == FormulaKind::Eq;
      cj.eq_index = static_cast<int>(plan->eqs.size());
      plan->eqs.push_back(std::move(ce));
    }
    for (const VarId& v : c.free_vars_sorted()) {
      auto it = slot_of.find(v);
      if (it != slot_of.end())
        cj.free_slots.push_back(it->second);
      else
        cj.free_outer.push_back(v);
    }
    plan->conjs.push_back(std::move(cj));
  }

  // --- step selection ---
  const bool can_solve = ring_supports_solve(ring);
  std::vector<bool> bound(plan->slots.size(), false);
  std::vector<bool> handled(plan->conjs.size(), false);
  size_t remaining = plan->slots.size();

  auto unbound_of = [&](const Conjunct& c) {
    std::vector<int> u;
    for (int s : c.free_slots)
      if (!bound[s]) u.push_back(s);
    return u;
  };

  auto sweep_checks = [&] {
    bool progressed = true;
    while (progressed) {
      progressed = false;
      for (size_t ci = 0; ci < plan->conjs.size(); ++ci) {
        if (handled[ci]) continue;
        if (!unbound_of(plan->conjs[ci]).empty()) continue;
        PlanStep st;
        st.k = PlanStep::K::Check;
        st.conj = static_cast<int>(ci);
        plan->steps.push_back(st);
        handled[ci] = true;
        progressed = true;
      }
    }
  };

  while (true) {
    sweep_checks();
    if (remaining == 0) break;

    // solve: first equation conjunct with exactly one unbound, linear slot
    bool solved = false;
    if (can_solve) {
      for (size_t ci = 0; ci < plan->conjs.size() && !solved; ++ci) {
        if (handled[ci] || !plan->conjs[ci].atomic) continue;
        if (plan->conjs[ci].f.kind() != FormulaKind::Eq) continue;
        std::vector<int> u = unbound_of(plan->conjs[ci]);
        if (u.size() != 1) continue;
        const VarId& v = plan->slots[u[0]];
        if (var_degree(plan->conjs[ci].f.lhs(), v) > 1) continue;
        if (var_degree(plan->conjs[ci].f.rhs(), v) > 1) continue;
        PlanStep st;
        st.k = PlanStep::K::Solve;
        st.slot = u[0];
        st.conj = static_cast<int>(ci);
        plan->steps.push_back(st);
        handled[ci] = true;
        bound[u[0]] = true;
        --remaining;
        solved = true;
      }
    }
    if (solved) continue;

    // enumerate: maximize conjuncts closed, then occurrence count,
    // then declaration order
    int best = -1, best_close = -1, best_occ = -1;
    for (size_t s = 0; s < plan->slots.size(); ++s) {
      if (bound[s]) continue;
      int close = 0, occ = 0;
      for (size_t ci = 0; ci < plan->conjs.size(); ++ci) {
        if (handled[ci]) continue;
        std::vector<int> u = unbound_of(plan->conjs[ci]);
        bool contains = std::find(u.begin(), u.end(), static_cast<int>(s)) != u.end();
        if (!contains) continue;
        ++occ;
        if (u.size() == 1) ++close;
      }
      if (close > best_close || (close == best_close && occ > best_occ)) {
        best = static_cast<int>(s);
        best_close = close;
        best_occ = occ;
      }
    }
    if (best < 0) {
      // leftover variables unconstrained by any conjunct: enumerate them in
      // declaration order (they still need a witness value)
      for (size_t s = 0; s < plan->slots.size() && best < 0; ++s)
        if (!bound[s]) best = static_cast<int>(s);
    }
    PlanStep st;
    st.k = PlanStep::K::Enumerate;
    st.slot = best;
    plan->steps.push_back(st);
    bound[best] = true;
    --remaining;
    if (!ring.finite()) plan->has_enumerate_over_infinite = true;
  }
  sweep_checks();

  // dense memo eligibility: all free vars of the conjunct are enumerated
  // block slots (so the cached truth is independent of outer values)
  for (PlanStep& st : plan->steps) {
    if (st.k != PlanStep::K::Check) continue;
    const Conjunct& cj = plan->conjs[st.conj];
    if (cj.atomic || !cj.free_outer.empty() || cj.free_slots.empty()) continue;
    bool all_enumerated = true;
    for (int s : cj.free_slots) {
      bool is_enum = false;
      for (const PlanStep& other : plan->steps)
        if (other.k == PlanStep::K::Enumerate && other.slot == s) is_enum = true;
      if (!is_enum) all_enumerated = false;
    }
    st.dense_memo = all_enumerated && cj.free_slots.size() <= 2;
  }
  return plan;
}

// ---------------------------------------------------------------------------
// arithmetic adaptors

struct ElemOps {
  using Val = Elem;
  const RingSpec& R;

  Val zero() const { return R.zero(); }
  bool is_zero(const Val& a) const { return R.is_zero(a); }
  bool eq(const Val& a, const Val& b) const { return R.eq(a, b); }
  Val add(const Val& a, const Val& b) const { return R.add(a, b); }
  Val sub(const Val& a, const Val& b) const { return R.sub(a, b); }
  Val mul(const Val& a, const Val& b) const { return R.mul(a, b); }
  Val neg(const Val& a) const { return R.neg(a); }
  Val from_elem(const Elem& e) const { return e; }
  Elem to_elem(const Val& v) const { return v; }
  void append_bytes(const Val& v, std::string& out) const { v.append_bytes(out); }
  const Val* pool(const Plan& plan) const { return plan.const_pool.data(); }
};

struct ZpOps {
  using Val = zp::Poly;
  const RingSpec& R;
  zp::Arith A;

  Val zero() const { return A.zero(); }
  bool is_zero(const Val& a) const { return A.is_zero(a); }
  bool eq(const Val& a, const Val& b) const { return A.eq(a, b); }
  Val add(const Val& a, const Val& b) const { return A.add(a, b); }
  Val sub(const Val& a, const Val& b) const { return A.sub(a, b); }
  Val mul(const Val& a, const Val& b) const { return A.mul(a, b); }
  Val neg(const Val& a) const { return A.neg(a); }
  Val from_elem(const Elem& e) const { return A.from_elem(e); }
  Elem to_elem(const Val& v) const { return A.to_elem(R, v); }
  void append_bytes(const Val& v, std::string& out) const { A.append_bytes(v, out); }
  const Val* pool(const Plan& plan) const {
    if (!plan.zp_pool_built) {
      plan.zp_pool.clear();
      plan.zp_pool.reserve(plan.const_pool.size());
      for (const Elem& e : plan.const_pool) plan.zp_pool.push_back(A.from_elem(e));
      plan.zp_pool_built = true;
    }
    return plan.zp_pool.data();
  }
};

// ---------------------------------------------------------------------------
// engine

struct Engine {
  const RingSpec& ring;
  const SearchBudget& budget;
  EvalSession::Impl& ses;
  std::uint64_t h = 0;
  std::uint64_t nodes = 0;
  bool aborted = false;
  bool collecting = false;
  std::map<VarId, Elem> env;
  std::vector<std::pair<VarId, Elem>> trail;
  std::string ring_key;

  Engine(const RingSpec& r, const SearchBudget& b, EvalSession::Impl& s)
      : ring(r), budget(b), ses(s), ring_key(r.to_string()) {}

  bool spend_node() {
    ++nodes;
    // the collection re-walk retraces a found witness; it must not abort
    if (!collecting && nodes > budget.node_limit) {
      aborted = true;
      return false;
    }
    return true;
  }

  const std::vector<Elem>& axis() {
    auto key = std::make_pair(ring_key, h);
    auto it = ses.axes.find(key);
    if (it == ses.axes.end()) {
      auto v = std::make_shared<const std::vector<Elem>>(ring.enumerate(h));
      it = ses.axes.emplace(key, std::move(v)).first;
    }
    return *it->second;
  }

  const std::vector<zp::Poly>& zp_axis(const zp::Arith& A) {
    auto key = std::make_pair(ring_key, h);
    auto it = ses.zp_axes.find(key);
    if (it == ses.zp_axes.end()) {
      const std::vector<Elem>& raw = axis();
      std::vector<zp::Poly> v;
      v.reserve(raw.size());
      for (const Elem& e : raw) v.push_back(A.from_elem(e));
      it = ses.zp_axes.emplace(key, std::make_shared<const std::vector<zp::Poly>>(std::move(v))).first;
    }
    return *it->second;
  }

  Tri eval_node(const Formula& f);
  Tri eval_atomic(const Formula& f);
  Tri run_exists(const Formula& f);

  template <class Ops>
  friend struct BlockRun;
};

template <class Ops>
struct BlockRun {
  using Val = typename Ops::Val;

  Engine& eng;
  const Plan& plan;
  Ops ops;
  const std::vector<Val>& ax;
  const Val* consts;
  std::vector<Val> slot_vals;
  std::vector<int> slot_idx;
  std::vector<Val> outer_vals;
  bool ring_finite;

  BlockRun(Engine& e, const Plan& p, Ops o, const std::vector<Val>& axis_ref)
      : eng(e), plan(p), ops(o), ax(axis_ref) {
    consts = ops.pool(plan);
    slot_vals.assign(plan.slots.size(), ops.zero());
    slot_idx.assign(plan.slots.size(), -1);
    outer_vals.reserve(plan.outer_names.size());
    for (const VarId& v : plan.outer_names) {
      auto it = eng.env.find(v);
      if (it == eng.env.end())
        fail(ErrorCode::BadArgument, "unbound variable " + v);
      outer_vals.push_back(ops.from_elem(it->second));
    }
    ring_finite = eng.ring.finite();
  }

  Val term_eval(const CTerm& t) {
    switch (t.kind) {
      case TermKind::Const: return consts[t.idx];
      case TermKind::Var:
        return t.idx >= 0 ? slot_vals[t.idx] : outer_vals[~t.idx];
      case TermKind::Sum: {
        Val acc = term_eval(t.kids[0]);
        for (size_t i = 1; i < t.kids.size(); ++i)
          acc = ops.add(acc, term_eval(t.kids[i]));
        return acc;
      }
      case TermKind::Prod: {
        Val acc = term_eval(t.kids[0]);
        for (size_t i = 1; i < t.kids.size(); ++i)
          acc = ops.mul(acc, term_eval(t.kids[i]));
        return acc;
      }
      case TermKind::Neg:
        return ops.neg(term_eval(t.kids[0]));
    }
    fail(ErrorCode::BadArgument, "bad compiled term");
  }

  // value as a*v + b for the solve target slot; nonlinearity cannot occur
  // (plan checked structural degree)
  void lin_eval(const CTerm& t, int slot, Val& a, Val& b) {
    switch (t.kind) {
      case TermKind::Const:
        a = ops.zero();
        b = consts[t.idx];
        return;
      case TermKind::Var:
        if (t.idx == slot) {
          a = ops.from_elem(eng.ring.one());
          b = ops.zero();
        } else {
          a = ops.zero();
          b = t.idx >= 0 ? slot_vals[t.idx] : outer_vals[~t.idx];
        }
        return;
      case TermKind::Sum: {
        lin_eval(t.kids[0], slot, a, b);
        for (size_t i = 1; i < t.kids.size(); ++i) {
          Val a2, b2;
          lin_eval(t.kids[i], slot, a2, b2);
          a = ops.add(a, a2);
          b = ops.add(b, b2);
        }
        return;
      }
      case TermKind::Prod: {
        lin_eval(t.kids[0], slot, a, b);
        for (size_t i = 1; i < t.kids.size(); ++i) {
          Val a2, b2;
          lin_eval(t.kids[i], slot, a2, b2);
          // (a v + b)(a2 v + b2) with a*a2 structurally zero
          a = ops.add(ops.mul(a, b2), ops.mul(b, a2));
          b = ops.mul(b, b2);
        }
        return;
      }
      case TermKind::Neg: {
        lin_eval(t.kids[0], slot, a, b);
        a = ops.neg(a);
        b = ops.neg(b);
        return;
      }
    }
  }

  struct SolveOut {
    enum class K { None, Values, All } k;
    std::vector<Val> vals;
  };

  SolveOut solve_linear(const Val& a, const Val& rhs);

  Tri check_conjunct(const PlanStep& st) {
    const Conjunct& cj = plan.conjs[st.conj];
    if (cj.atomic) {
      const CompiledEq& e = plan.eqs[cj.eq_index];
      bool same = ops.eq(term_eval(e.lhs), term_eval(e.rhs));
      return (same == e.is_eq) ? Tri::True : Tri::False;
    }
    // nested formula: memoized
    std::vector<std::int8_t>* dense = nullptr;
    size_t dense_key = 0;
    if (st.dense_memo) {
      size_t n = ax.size();
      size_t size = 1;
      bool ok = true;
      for (int s : cj.free_slots) {
        (void)s;
        if (size > 8'000'000 / std::max<size_t>(n, 1)) { ok = false; break; }
        size *= n;
      }
      if (ok && size <= 8'000'000) {
        auto key = std::make_tuple(plan.self.id(), st.conj, eng.h);
        auto& vec = eng.ses.dense[key];
        if (vec.size() != size) vec.assign(size, -1);
        dense = &vec;
        for (int s : cj.free_slots) dense_key = dense_key * n + slot_idx[s];
        if ((*dense)[dense_key] >= 0)
          return static_cast<Tri>((*dense)[dense_key]);
      }
    }
    std::string key;
    if (!dense) {
      key.reserve(64);
      key += std::to_string(reinterpret_cast<std::uintptr_t>(cj.f.id()));
      key.push_back('@');
      key += std::to_string(eng.h);
      key.push_back(':');
      for (int s : cj.free_slots) ops.append_bytes(slot_vals[s], key);
      for (const VarId& v : cj.free_outer) {
        auto it = eng.env.find(v);
        if (it == eng.env.end())
          fail(ErrorCode::BadArgument, "unbound variable " + v);
        it->second.append_bytes(key);
      }
      auto mit = eng.ses.tri_memo.find(key);
      if (mit != eng.ses.tri_memo.end()) return static_cast<Tri>(mit->second);
    }
    // bind free slots into the engine env, evaluate, restore
    std::vector<std::pair<VarId, std::optional<Elem>>> saved;
    for (int s : cj.free_slots) {
      const VarId& name = plan.slots[s];
      auto it = eng.env.find(name);
      saved.emplace_back(name, it == eng.env.end() ? std::nullopt
                                                   : std::optional<Elem>(it->second));
      eng.env[name] = ops.to_elem(slot_vals[s]);
    }
    bool was_collecting = eng.collecting;
    eng.collecting = false;  // search only; collection happens at success
    Tri t = eng.eval_node(cj.f);
    eng.collecting = was_collecting;
    for (auto& [name, old] : saved) {
      if (old)
        eng.env[name] = *old;
      else
        eng.env.erase(name);
    }
    if (!eng.aborted) {
      if (dense)
        (*dense)[dense_key] = static_cast<std::int8_t>(t);
      else
        eng.ses.tri_memo.emplace(std::move(key), static_cast<std::int8_t>(t));
    }
    return t;
  }

  void collect_success() {
    // record block bindings in declaration order, then nested witnesses
    for (size_t s = 0; s < plan.slots.size(); ++s)
      eng.trail.emplace_back(plan.slots[s], ops.to_elem(slot_vals[s]));
    // arithmetic re-check of every atomic constraint under the witness,
    // including equations consumed by solve steps
    for (const Conjunct& cj : plan.conjs) {
      if (!cj.atomic) continue;
      const CompiledEq& e = plan.eqs[cj.eq_index];
      bool same = ops.eq(term_eval(e.lhs), term_eval(e.rhs));
      if (same != e.is_eq)
        fail(ErrorCode::BadArgument, "internal: witness failed arithmetic re-check");
    }
    for (const PlanStep& st : plan.steps) {
      if (st.k != PlanStep::K::Check) continue;
      const Conjunct& cj = plan.conjs[st.conj];
      if (cj.atomic) continue;
      std::vector<std::pair<VarId, std::optional<Elem>>> saved;
      for (int s : cj.free_slots) {
        const VarId& name = plan.slots[s];
        auto it = eng.env.find(name);
        saved.emplace_back(name, it == eng.env.end() ? std::nullopt
                                                     : std::optional<Elem>(it->second));
        eng.env[name] = ops.to_elem(slot_vals[s]);
      }
      Tri t = eng.eval_node(cj.f);  // collecting mode re-run
      if (t != Tri::True && !eng.aborted)
        fail(ErrorCode::BadArgument, "internal: witness collection diverged");
      for (auto& [name, old] : saved) {
        if (old)
          eng.env[name] = *old;
        else
          eng.env.erase(name);
      }
    }
  }

  Tri run(size_t i) {
    if (eng.aborted) return Tri::Unknown;
    if (i == plan.steps.size()) {
      if (eng.collecting) collect_success();
      return Tri::True;
    }
    const PlanStep& st = plan.steps[i];
    switch (st.k) {
      case PlanStep::K::Check: {
        Tri t = check_conjunct(st);
        if (t != Tri::True) return t;
        return run(i + 1);
      }
      case PlanStep::K::Enumerate: {
        bool unk = false;
        for (size_t idx = 0; idx < ax.size(); ++idx) {
          if (!eng.spend_node()) return Tri::Unknown;
          slot_vals[st.slot] = ax[idx];
          slot_idx[st.slot] = static_cast<int>(idx);
          Tri t = run(i + 1);
          if (eng.aborted) return Tri::Unknown;
          if (t == Tri::True) return Tri::True;
          if (t == Tri::Unknown) unk = true;
        }
        slot_idx[st.slot] = -1;
        if (!ring_finite) unk = true;
        return unk ? Tri::Unknown : Tri::False;
      }
      case PlanStep::K::Solve: {
        const Conjunct& cj = plan.conjs[st.conj];
        const CompiledEq& e = plan.eqs[cj.eq_index];
        Val la, lb, ra, rb;
        lin_eval(e.lhs, st.slot, la, lb);
        lin_eval(e.rhs, st.slot, ra, rb);
        Val a = ops.sub(la, ra);
        Val rhs = ops.sub(rb, lb);  // a * v = rhs
        SolveOut so = solve_linear(a, rhs);
        if (so.k == SolveOut::K::None) return Tri::False;
        if (so.k == SolveOut::K::All) {
          bool unk = false;
          for (size_t idx = 0; idx < ax.size(); ++idx) {
            if (!eng.spend_node()) return Tri::Unknown;
            slot_vals[st.slot] = ax[idx];
            slot_idx[st.slot] = static_cast<int>(idx);
            Tri t = run(i + 1);
            if (eng.aborted) return Tri::Unknown;
            if (t == Tri::True) return Tri::True;
            if (t == Tri::Unknown) unk = true;
          }
          slot_idx[st.slot] = -1;
          if (!ring_finite) unk = true;
          return unk ? Tri::Unknown : Tri::False;
        }
        bool unk = false;
        for (const Val& v : so.vals) {
          if (!eng.spend_node()) return Tri::Unknown;
          slot_vals[st.slot] = v;
          slot_idx[st.slot] = -1;
          Tri t = run(i + 1);
          if (eng.aborted) return Tri::Unknown;
          if (t == Tri::True) return Tri::True;
          if (t == Tri::Unknown) unk = true;
        }
        return unk ? Tri::Unknown : Tri::False;
      }
    }
    fail(ErrorCode::BadArgument, "bad plan step");
  }
};

// exact quotient num/den over F_p[X], den != 0; nullopt when not divisible
std::optional<Elem> generic_poly_div_exact(const RingSpec& R, const Elem& num,
                                           const Elem& den) {
  const RingSpec& F = R.base();
  if (num.parts().empty()) return R.zero();
  if (num.parts().size() < den.parts().size()) return std::nullopt;
  const BigInt p = F.modulus();
  // inverse of the leading coefficient by Fermat scan (p is prime, desk scale)
  const BigInt& lead = den.parts().back().scalar();
  BigInt inv = 0;
  for (BigInt k = 1; k < p; ++k)
    if ((lead * k) % p == 1) {
      inv = k;
      break;
    }
  std::vector<Elem> rem = num.parts();
  std::vector<Elem> quot(num.parts().size() - den.parts().size() + 1, F.zero());
  while (rem.size() >= den.parts().size()) {
    Elem c = F.mul(rem.back(), F.from_int(inv));
    size_t shift = rem.size() - den.parts().size();
    quot[shift] = c;
    for (size_t i = 0; i < den.parts().size(); ++i)
      rem[shift + i] = F.sub(rem[shift + i], F.mul(c, den.parts()[i]));
    while (!rem.empty() && F.is_zero(rem.back())) rem.pop_back();
    if (rem.empty()) break;
  }
  if (!rem.empty()) return std::nullopt;
  while (!quot.empty() && F.is_zero(quot.back())) quot.pop_back();
  return Elem(std::move(quot));
}

// solve a*v = rhs exactly
template <>
BlockRun<ElemOps>::SolveOut BlockRun<ElemOps>::solve_linear(const Elem& a, const Elem& rhs) {
  SolveOut out;
  const RingSpec& R = eng.ring;
  if (R.finite()) {
    if (R.is_zero(a)) {
      if (R.is_zero(rhs)) {
        out.k = SolveOut::K::All;
        return out;
      }
      out.k = SolveOut::K::None;
      return out;
    }
    out.k = SolveOut::K::Values;
    for (const Elem& e : R.enumerate(0))
      if (R.eq(R.mul(a, e), rhs)) out.vals.push_back(e);
    if (out.vals.empty()) out.k = SolveOut::K::None;
    return out;
  }
  if (R.kind() == RingKind::Int) {
    const BigInt& av = a.scalar();
    const BigInt& bv = rhs.scalar();
    if (av == 0) {
      out.k = bv == 0 ? SolveOut::K::All : SolveOut::K::None;
      return out;
    }
    if (bv % av == 0) {
      out.k = SolveOut::K::Values;
      out.vals.push_back(Elem(bv / av));
    } else {
      out.k = SolveOut::K::None;
    }
    return out;
  }
  if (R.kind() == RingKind::Poly && R.base().kind() == RingKind::PrimeField) {
    if (a.parts().empty()) {
      out.k = rhs.parts().empty() ? SolveOut::K::All : SolveOut::K::None;
      return out;
    }
    auto q = generic_poly_div_exact(R, rhs, a);
    if (!q) {
      out.k = SolveOut::K::None;
      return out;
    }
    out.k = SolveOut::K::Values;
    out.vals.push_back(std::move(*q));
    return out;
  }
  out.k = SolveOut::K::None;
  return out;
}

template <>
BlockRun<ZpOps>::SolveOut BlockRun<ZpOps>::solve_linear(const zp::Poly& a,
                                                        const zp::Poly& rhs) {
  SolveOut out;
  if (ops.is_zero(a)) {
    out.k = ops.is_zero(rhs) ? SolveOut::K::All : SolveOut::K::None;
    return out;
  }
  auto q = ops.A.div_exact(rhs, a);
  if (!q) {
    out.k = SolveOut::K::None;
    return out;
  }
  out.k = SolveOut::K::Values;
  out.vals.push_back(*q);
  return out;
}

// ---------------------------------------------------------------------------

Tri Engine::eval_atomic(const Formula& f) {
  Elem l = f.lhs().eval(ring, env);
  Elem r = f.rhs().eval(ring, env);
  bool same = ring.eq(l, r);
  if (f.kind() == FormulaKind::Eq) return same ? Tri::True : Tri::False;
  return same ? Tri::False : Tri::True;
}

Tri Engine::eval_node(const Formula& f) {
  if (aborted) return Tri::Unknown;
  switch (f.kind()) {
    case FormulaKind::Eq:
    case FormulaKind::Neq:
      return eval_atomic(f);
    case FormulaKind::And: {
      bool unk = false;
      for (const Formula& c : f.children()) {
        Tri t = eval_node(c);
        if (t == Tri::False) return Tri::False;
        if (t == Tri::Unknown) unk = true;
      }
      return unk ? Tri::Unknown : Tri::True;
    }
    case FormulaKind::Or: {
      bool unk = false;
      for (const Formula& c : f.children()) {
        Tri t = eval_node(c);
        if (t == Tri::True) return Tri::True;
        if (t == Tri::Unknown) unk = true;
      }
      return unk ? Tri::Unknown : Tri::False;
    }
    case FormulaKind::Exists:
      return run_exists(f);
  }
  fail(ErrorCode::BadArgument, "bad formula");
}

Tri Engine::run_exists(const Formula& f) {
  auto pit = ses.plans.find(f.id());
  if (pit == ses.plans.end())
    pit = ses.plans.emplace(f.id(), build_plan(ring, f)).first;
  const Plan& plan = *pit->second;

  // packed eligibility: ring shape plus degree bounds of every compiled term
  if (zp::Arith::ring_eligible(ring) && h <= zp::Poly::kMaxDeg) {
    std::vector<std::int64_t> slot_bound(plan.slots.size(), 0);
    bool ok = true;
    for (const PlanStep& st : plan.steps) {
      if (st.k == PlanStep::K::Enumerate) {
        slot_bound[st.slot] = static_cast<std::int64_t>(h);
      } else if (st.k == PlanStep::K::Solve) {
        const CompiledEq& e = plan.eqs[plan.conjs[st.conj].eq_index];
        std::int64_t dl = degree_bound(e.lhs, plan, slot_bound);
        std::int64_t dr = degree_bound(e.rhs, plan, slot_bound);
        if (dl > zp::Poly::kMaxDeg || dr > zp::Poly::kMaxDeg) { ok = false; break; }
        slot_bound[st.slot] = std::max(dl, dr);
      } else {
        const Conjunct& cj = plan.conjs[st.conj];
        if (!cj.atomic) continue;
        const CompiledEq& e = plan.eqs[cj.eq_index];
        if (degree_bound(e.lhs, plan, slot_bound) > zp::Poly::kMaxDeg ||
            degree_bound(e.rhs, plan, slot_bound) > zp::Poly::kMaxDeg) {
          ok = false;
          break;
        }
      }
    }
    // outer-variable degrees are not tracked; require none in atomic terms
    if (ok && !plan.outer_names.empty()) {
      // outer values come from enclosing bindings of the same ring, whose
      // heights are bounded by h only when they were enumerated there; be
      // conservative and re-check real degrees at runtime conversion
      for (const VarId& v : plan.outer_names) {
        auto it = env.find(v);
        if (it == env.end() ||
            RingSpec::poly_degree(it->second) > zp::Poly::kMaxDeg / 4) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      ZpOps ops{ring, zp::Arith(ring.base().modulus().convert_to<std::uint32_t>())};
      BlockRun<ZpOps> run(*this, plan, ops, zp_axis(ops.A));
      return run.run(0);
    }
  }
  ElemOps ops{ring};
  BlockRun<ElemOps> run(*this, plan, ops, axis());
  return run.run(0);
}

}  // namespace

// ---------------------------------------------------------------------------

Verdict eval_formula(const RingSpec& ring, const Formula& f,
                     const std::map<VarId, Elem>& assignment,
                     const SearchBudget& budget, EvalSession* session) {
  for (const VarId& v : f.free_vars_sorted())
    if (!assignment.count(v))
      fail(ErrorCode::BadArgument, "assignment missing free variable " + v);
  for (const auto& [v, e] : assignment)
    if (!ring.is_valid(e))
      fail(ErrorCode::EncodingMismatch,
           "assignment value for " + v + " is not in " + ring.to_string());

  EvalSession local;
  EvalSession::Impl& impl = session ? session->impl() : local.impl();

  Verdict out;
  std::uint64_t spent = 0;
  for (std::uint64_t h : budget.schedule) {
    Engine eng(ring, budget, impl);
    eng.h = h;
    eng.env = assignment;
    Tri t = eng.eval_node(f);
    spent += eng.nodes;
    if (eng.aborted) {
      out.kind = VerdictKind::Unknown;
      out.nodes = spent;
      out.height = h;
      return out;
    }
    if (t == Tri::True) {
      // the collection pass retraces the search deterministically and
      // re-evaluates every atomic constraint on the witness path
      eng.collecting = true;
      eng.trail.clear();
      Tri again = eng.eval_node(f);
      if (again != Tri::True)
        fail(ErrorCode::BadArgument, "internal: witness collection diverged");
      out.kind = VerdictKind::True;
      out.witness = std::move(eng.trail);
      out.height = h;
      out.nodes = spent + eng.nodes;
      return out;
    }
    if (t == Tri::False) {
      out.kind = VerdictKind::FalseExhaustive;
      out.height = h;
      out.nodes = spent;
      return out;
    }
    if (ring.finite()) break;  // heights are irrelevant; one pass settles it
  }
  out.kind = VerdictKind::Unknown;
  out.height = budget.schedule.empty() ? 0 : budget.schedule.back();
  out.nodes = spent;
  return out;
}

std::vector<Elem> truth_set_exhaustive(const RingSpec& ring, const Formula& f,
                                       EvalSession* session) {
  if (!ring.finite())
    fail(ErrorCode::NotFinite, "truth set requires a finite ring");
  const auto& fv = f.free_vars_sorted();
  if (fv.size() > 1)
    fail(ErrorCode::BadArgument, "truth set requires at most one free variable");

  SearchBudget b = SearchBudget::heights({0}, std::numeric_limits<std::uint64_t>::max());
  EvalSession local;
  EvalSession* ses = session ? session : &local;

  std::vector<Elem> out;
  for (const Elem& e : ring.enumerate(0)) {
    std::map<VarId, Elem> env;
    if (!fv.empty()) env[fv[0]] = e;
    Verdict v = eval_formula(ring, f, env, b, ses);
    if (v.kind == VerdictKind::Unknown)
      fail(ErrorCode::BadArgument, "internal: exhaustive evaluation returned unknown");
    if (v.is_true()) out.push_back(e);
  }
  return out;
}

}  // namespace ringdef
