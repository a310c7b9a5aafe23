#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ringdef/formula.hpp"

namespace ringdef {

// Ascending height schedule plus a node limit (candidate assignments tried).
struct SearchBudget {
  std::vector<std::uint64_t> schedule{2, 4, 8, 16, 32, 64};
  std::uint64_t node_limit = 50'000'000;

  static SearchBudget defaults() { return SearchBudget{}; }
  static SearchBudget heights(std::vector<std::uint64_t> s,
                              std::uint64_t nodes = 50'000'000) {
    SearchBudget b;
    b.schedule = std::move(s);
    b.node_limit = nodes;
    return b;
  }
  std::string to_string() const;
  static SearchBudget parse(std::string_view text);  // "2,4,8" height list
};

enum class VerdictKind { True, FalseExhaustive, Unknown };

// True carries the first witness in the documented search order: per block,
// variables are enumerated in graded canonical order, with variables that
// occur linearly in a closed equation resolved exactly instead of swept.
struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::vector<std::pair<VarId, Elem>> witness;  // binding order
  std::uint64_t height = 0;                     // pass on which it was decided
  std::uint64_t nodes = 0;

  bool is_true() const { return kind == VerdictKind::True; }
  bool is_false() const { return kind == VerdictKind::FalseExhaustive; }
};

// Shared caches (per-formula search plans, enumeration axes, memoized
// sub-verdicts keyed by height). Purely an accelerator: verdicts do not
// depend on cache state. Reuse one session when evaluating the same
// certificate at many inputs.
class EvalSession {
 public:
  EvalSession();
  ~EvalSession();
  struct Impl;
  Impl& impl() { return *impl_; }

 private:
  std::unique_ptr<Impl> impl_;
};

Verdict eval_formula(const RingSpec& ring, const Formula& f,
                     const std::map<VarId, Elem>& assignment,
                     const SearchBudget& budget, EvalSession* session = nullptr);

// Exact truth set of a formula with at most one free variable over a finite
// ring, by full quantifier expansion.
std::vector<Elem> truth_set_exhaustive(const RingSpec& ring, const Formula& f,
                                       EvalSession* session = nullptr);

}  // namespace ringdef
