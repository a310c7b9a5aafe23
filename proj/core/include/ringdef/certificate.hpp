#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ringdef/formula.hpp"
#include "ringdef/ideal.hpp"

namespace ringdef {

// The set a certificate's formula is claimed to define.
class TargetSet {
 public:
  enum class Kind { Nonzero, ComplementOfIdeal, MemberOfIdeal, Regular, Preimage };

  static TargetSet nonzero();
  static TargetSet complement_of(Ideal I);
  static TargetSet member_of(Ideal I);
  static TargetSet regular();
  static TargetSet preimage(RingHom hom, TargetSet inner);

  Kind kind() const { return kind_; }
  const Ideal& ideal() const { return *ideal_; }
  const RingHom& hom() const { return *hom_; }
  const TargetSet& inner() const { return *inner_; }

  // Exact membership oracle.
  bool member(const RingSpec& ring, const Elem& e) const;
  std::string describe(const RingSpec& ring) const;

 private:
  Kind kind_;
  std::shared_ptr<const Ideal> ideal_;
  std::shared_ptr<const RingHom> hom_;
  std::shared_ptr<const TargetSet> inner_;
};

struct Assumption {
  std::string tag;   // short machine tag, e.g. "ring-is-domain"
  std::string text;  // human-readable statement
  bool checked;      // machine-verified here, or merely recorded
};

struct Provenance {
  std::string rule;  // construction name, e.g. "two-ideals"
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<Provenance> children;
};

// A derived definability result: a positive-existential formula with one
// designated free variable "t", the set it defines, the construction tree
// that produced it, and any hypotheses that were recorded rather than
// machine-checked.
struct Certificate {
  RingSpec ring;
  TargetSet target = TargetSet::nonzero();
  Formula formula;
  VarId free_var = "t";
  Provenance provenance;
  std::vector<Assumption> assumptions;
};

inline constexpr const char* kFreeVar = "t";

// Validates the certificate invariants (positive-existential, free variable
// exactly {t}); throws on violation.
void check_certificate(const Certificate& c);

}  // namespace ringdef
