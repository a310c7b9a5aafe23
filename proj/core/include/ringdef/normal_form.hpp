#pragma once

#include <vector>

#include "ringdef/formula.hpp"

namespace ringdef {

// Finite union of existentially quantified systems: each block is
// exists(vars) [eqs hold, neqs fail]. The empty block list is FALSE.
// Positive-existential input yields empty disequation lists.
struct NormalForm {
  struct Block {
    std::vector<VarId> vars;
    std::vector<std::pair<Term, Term>> eqs;
    std::vector<std::pair<Term, Term>> neqs;
  };
  std::vector<Block> blocks;
};

// Semantically equivalent disjunction-of-blocks form; evaluation of the
// input and of reassemble(result) agree on every ring and assignment.
NormalForm union_normal_form(const Formula& f);

Formula reassemble(const NormalForm& nf);

}  // namespace ringdef
