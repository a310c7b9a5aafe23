#include "ringdef/certificate.hpp"

namespace ringdef {

TargetSet TargetSet::nonzero() {
  TargetSet t;
  t.kind_ = Kind::Nonzero;
  return t;
}

TargetSet TargetSet::complement_of(Ideal I) {
  TargetSet t;
  t.kind_ = Kind::ComplementOfIdeal;
  t.ideal_ = std::make_shared<Ideal>(std::move(I));
  return t;
}

TargetSet TargetSet::member_of(Ideal I) {
  TargetSet t;
  t.kind_ = Kind::MemberOfIdeal;
  t.ideal_ = std::make_shared<Ideal>(std::move(I));
  return t;
}

TargetSet TargetSet::regular() {
  TargetSet t;
  t.kind_ = Kind::Regular;
  return t;
}

TargetSet TargetSet::preimage(RingHom hom, TargetSet inner) {
  TargetSet t;
  t.kind_ = Kind::Preimage;
  t.hom_ = std::make_shared<RingHom>(std::move(hom));
  t.inner_ = std::make_shared<TargetSet>(std::move(inner));
  return t;
}

bool TargetSet::member(const RingSpec& ring, const Elem& e) const {
  switch (kind_) {
    case Kind::Nonzero:
      return !ring.is_zero(e);
    case Kind::ComplementOfIdeal:
      return !ideal_->contains(e);
    case Kind::MemberOfIdeal:
      return ideal_->contains(e);
    case Kind::Regular: {
      if (ring.is_zero(e)) return false;
      if (!ring.finite()) {
        if (ring.kind() == RingKind::Int) return true;  // domain
        fail(ErrorCode::BadArgument,
             "no regularity oracle for infinite ring " + ring.to_string());
      }
      for (const Elem& b : ring.enumerate(0))
        if (!ring.is_zero(b) && ring.is_zero(ring.mul(e, b))) return false;
      return true;
    }
    case Kind::Preimage:
      return inner_->member(hom_->target(), hom_->apply(e));
  }
  return false;
}

std::string TargetSet::describe(const RingSpec& ring) const {
  switch (kind_) {
    case Kind::Nonzero: return "nonzero";
    case Kind::ComplementOfIdeal: return "complement-of" + ideal_->describe();
    case Kind::MemberOfIdeal: return "member-of" + ideal_->describe();
    case Kind::Regular: return "regular";
    case Kind::Preimage:
      return "preimage[" + hom_->target().to_string() + ":" +
             inner_->describe(hom_->target()) + "]";
  }
  (void)ring;
  return {};
}

void check_certificate(const Certificate& c) {
  if (classify(c.formula) != FragmentClass::PositiveExistential)
    fail(ErrorCode::NotPositiveExistential,
         "certificate formula is not positive-existential");
  const auto& fv = c.formula.free_vars_sorted();
  if (fv.size() > 1 || (fv.size() == 1 && fv[0] != c.free_var))
    fail(ErrorCode::BadArgument,
         "certificate formula must have free variables within {" + c.free_var + "}");
}

}  // namespace ringdef
