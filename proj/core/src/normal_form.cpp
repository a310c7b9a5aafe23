#include "ringdef/normal_form.hpp"

#include <algorithm>

namespace ringdef {

namespace {

using Block = NormalForm::Block;

// Renames the bound variables of `b` away from `used`, extending `used`.
Block rename_block(Block b, std::set<VarId>& used) {
  std::map<VarId, Term> sigma;
  for (VarId& v : b.vars) {
    if (used.count(v)) {
      VarId nv = fresh_name(v, used);
      sigma.emplace(v, Term::var(nv));
      v = nv;
    } else {
      used.insert(v);
    }
  }
  if (!sigma.empty()) {
    for (auto& [l, r] : b.eqs) {
      l = substitute(l, sigma);
      r = substitute(r, sigma);
    }
    for (auto& [l, r] : b.neqs) {
      l = substitute(l, sigma);
      r = substitute(r, sigma);
    }
  }
  return b;
}

// Conjunction of two blocks: bound variables concatenated (renamed apart),
// constraints merged.
Block merge_blocks(const Block& a, const Block& b, const std::set<VarId>& outer) {
  std::set<VarId> used = outer;
  Block ra = rename_block(a, used);
  Block rb = rename_block(b, used);
  Block out = std::move(ra);
  out.vars.insert(out.vars.end(), rb.vars.begin(), rb.vars.end());
  out.eqs.insert(out.eqs.end(), rb.eqs.begin(), rb.eqs.end());
  out.neqs.insert(out.neqs.end(), rb.neqs.begin(), rb.neqs.end());
  return out;
}

std::vector<Block> nf_rec(const Formula& f, const std::set<VarId>& outer) {
  switch (f.kind()) {
    case FormulaKind::Eq:
      return {Block{{}, {{f.lhs(), f.rhs()}}, {}}};
    case FormulaKind::Neq:
      return {Block{{}, {}, {{f.lhs(), f.rhs()}}}};
    case FormulaKind::Or: {
      std::vector<Block> out;
      for (const Formula& c : f.children()) {
        std::vector<Block> sub = nf_rec(c, outer);
        out.insert(out.end(), sub.begin(), sub.end());
      }
      return out;
    }
    case FormulaKind::And: {
      std::vector<Block> acc = {Block{}};
      for (const Formula& c : f.children()) {
        std::vector<Block> sub = nf_rec(c, outer);
        std::vector<Block> next;
        for (const Block& a : acc)
          for (const Block& b : sub) next.push_back(merge_blocks(a, b, outer));
        acc = std::move(next);
        if (acc.empty()) break;  // conjunct was FALSE
      }
      return acc;
    }
    case FormulaKind::Exists: {
      std::vector<Block> sub = nf_rec(f.children()[0], outer);
      for (Block& b : sub) {
        std::set<VarId> used = outer;
        for (const VarId& v : b.vars) used.insert(v);
        std::vector<VarId> vars = f.bound_vars();
        std::map<VarId, Term> sigma;
        for (VarId& v : vars) {
          if (used.count(v)) {
            VarId nv = fresh_name(v, used);
            sigma.emplace(v, Term::var(nv));
            v = nv;
          } else {
            used.insert(v);
          }
        }
        if (!sigma.empty()) {
          for (auto& [l, r] : b.eqs) {
            l = substitute(l, sigma);
            r = substitute(r, sigma);
          }
          for (auto& [l, r] : b.neqs) {
            l = substitute(l, sigma);
            r = substitute(r, sigma);
          }
        }
        b.vars.insert(b.vars.begin(), vars.begin(), vars.end());
      }
      return sub;
    }
  }
  fail(ErrorCode::BadArgument, "bad formula");
}

}  // namespace

NormalForm union_normal_form(const Formula& f) {
  std::set<VarId> outer(f.free_vars_sorted().begin(), f.free_vars_sorted().end());
  NormalForm nf;
  nf.blocks = nf_rec(f, outer);
  // drop bound variables that no constraint mentions
  for (Block& b : nf.blocks) {
    std::set<VarId> mentioned;
    for (auto& [l, r] : b.eqs) {
      l.collect_vars(mentioned);
      r.collect_vars(mentioned);
    }
    for (auto& [l, r] : b.neqs) {
      l.collect_vars(mentioned);
      r.collect_vars(mentioned);
    }
    std::erase_if(b.vars, [&](const VarId& v) { return !mentioned.count(v); });
  }
  return nf;
}

Formula reassemble(const NormalForm& nf) {
  std::vector<Formula> branches;
  for (const NormalForm::Block& b : nf.blocks) {
    std::vector<Formula> parts;
    for (const auto& [l, r] : b.eqs) parts.push_back(Formula::eq(l, r));
    for (const auto& [l, r] : b.neqs) parts.push_back(Formula::neq(l, r));
    if (parts.empty())
      fail(ErrorCode::BadArgument, "normal-form block without constraints");
    Formula body = Formula::conj(std::move(parts));
    branches.push_back(b.vars.empty() ? body : Formula::exists(b.vars, body));
  }
  return Formula::disj(std::move(branches));
}

}  // namespace ringdef
