#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringdef/certificate.hpp"
#include "ringdef/eval.hpp"
#include "ringdef/hensel.hpp"

namespace ringdef {

struct VerifyConfig {
  bool exhaustive = false;
  std::vector<Elem> elements;  // inputs when not exhaustive
};

// Polynomial system over the integers in named unknowns, studied modulo
// powers of a prime.
struct PhiSystem {
  std::vector<Term> polys;  // constants from the integers
  std::vector<VarId> vars;
};

struct Report {
  std::string instance;

  struct Entry {
    std::string input;
    VerdictKind verdict;
    std::vector<std::pair<VarId, std::string>> witness;  // encoded
    std::uint64_t height = 0;
    bool target_member = false;
  };
  std::vector<Entry> verdicts;
  std::vector<std::string> falsifications;
  std::uint64_t true_count = 0, false_count = 0, unknown_count = 0;
  std::vector<Assumption> assumptions_echo;

  struct PhiLevel {
    unsigned q;
    bool solvable;
    std::string method;  // "scan" | "hensel"
    std::string witness;
  };
  std::vector<PhiLevel> phi_levels;
  std::string phi_global;  // exact/global search outcome description
  std::string conclusion;  // overall verdict line, empty for plain runs

  SearchBudget budget;
  std::uint64_t seed = 0;
  bool pass = true;
  std::int64_t wallclock_ms = -1;  // < 0: omitted from serialized output
};

// Finite ring: exhaustive truth-set comparison against the target oracle.
// Infinite ring: per-element verdict vs. oracle; Unknown entries are
// tallied, never counted as pass or fail.
Report verify_cert(const Certificate& c, const VerifyConfig& cfg,
                   const SearchBudget& budget, EvalSession* session = nullptr);

// Solvability of S modulo p^q for q = 1..Q (exhaustive scan when the space
// is small, Newton lifting when a single polynomial has a simple residual
// root) against exact or bounded global solvability over the integers.
// Emits the "PHI(Z,(p)) fails" conclusion only on an exact global decision.
Report phi_experiment(const PhiSystem& S, const BigInt& p, unsigned Q,
                      const SearchBudget& budget);

// Evaluates a nonzero-set certificate over the integers at t = p^q for
// q = 1..Q and at t = 0; when every power succeeds and 0 stays out within
// the budget, the defined set contains a sequence converging p-adically to
// 0 without containing 0, hence is not p-adically closed.
Report closedness_demo(const Certificate& c, const BigInt& p, unsigned Q,
                       const SearchBudget& budget);

// Differential test: random formulas (depth <= 3, <= 3 bound variables),
// truth sets compared before and after union_normal_form.
Report random_formula_equivalence(const RingSpec& A, std::uint64_t seed,
                                  unsigned count);

// Exact solvability of x^k = c over the integers.
std::optional<BigInt> integer_kth_root(const BigInt& c, unsigned k);

}  // namespace ringdef
