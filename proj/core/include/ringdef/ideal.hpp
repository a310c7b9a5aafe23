#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "ringdef/ring.hpp"

namespace ringdef {

// Effective ring homomorphism, represented as data so certificates can be
// serialized and replayed. Every kind preserves 0, 1, + and *; when a
// section is available it is the canonical representative lift.
class RingHom {
 public:
  enum class Kind {
    ReduceIntMod,     // Int -> Zmod(n)
    ReduceZmod,       // Zmod(n) -> Zmod(d), d | n
    PolyEval,         // Poly(R) -> R, f |-> f(c)
    PolyReduceMonic,  // Poly(R) -> MonicExt(R, f), reduction mod monic f
    ExtEvalModP,      // MonicExt(base) -> PrimeField(p), x |-> c then mod p
  };

  static RingHom reduce_int_mod(const BigInt& n);
  static RingHom reduce_zmod(const RingSpec& src, const BigInt& d);
  static RingHom poly_eval(const RingSpec& src, Elem c);
  static RingHom poly_reduce_monic(const RingSpec& src, const RingSpec& target);
  static RingHom ext_eval_mod_p(const RingSpec& src, const BigInt& p, const BigInt& c);

  Kind hom_kind() const { return kind_; }
  const RingSpec& source() const { return source_; }
  const RingSpec& target() const { return target_; }
  const Elem& eval_point() const { return point_; }

  Elem apply(const Elem& a) const;
  bool has_section() const { return true; }
  Elem section(const Elem& b) const;  // apply(section(b)) == b

 private:
  Kind kind_;
  RingSpec source_, target_;
  Elem point_;  // PolyEval / ExtEvalModP evaluation point
};

enum class MembershipStrategy { PrincipalGcd, PolyDivision, QuotientMap, FiniteScan };

// Finitely generated ideal with an exact membership test.
class Ideal {
 public:
  // Picks the default sound strategy for the ring.
  static Ideal make(const RingSpec& ring, std::vector<Elem> generators);
  static Ideal make(const RingSpec& ring, std::vector<Elem> generators,
                    MembershipStrategy strategy);
  // Kernel ideal of a quotient map (QuotientMap strategy).
  static Ideal kernel(const RingSpec& ring, std::vector<Elem> generators, RingHom hom);

  const RingSpec& ring() const { return ring_; }
  const std::vector<Elem>& generators() const { return gens_; }
  MembershipStrategy strategy() const { return strategy_; }
  const std::optional<RingHom>& quotient_hom() const { return hom_; }

  bool contains(const Elem& a) const;

  // Primality certification for the supported ideal families; nullopt when
  // no certification procedure applies.
  std::optional<bool> certified_prime() const;

  bool is_zero_ideal() const;
  std::string describe() const;

 private:
  RingSpec ring_;
  std::vector<Elem> gens_;
  MembershipStrategy strategy_;
  std::optional<RingHom> hom_;

  // PrincipalGcd / PolyDivision reduced single generator
  Elem reduced_gen_;
  mutable std::shared_ptr<std::unordered_set<std::string>> span_;  // FiniteScan

  const std::unordered_set<std::string>& span() const;
};

// Supported quotient constructions (canonical projection with section):
//   Int/(n) -> Zmod(n);  Zmod(n)/(d) -> Zmod(gcd(d,n));
//   Poly(R)/(monic f), deg f = 1 -> R (evaluation), deg f >= 2 -> MonicExt(R, f);
//   MonicExt/(p, x - c) -> PrimeField(p) when F(c) = 0 mod p.
std::pair<RingSpec, RingHom> quotient(const RingSpec& ring, const Ideal& ideal);

// F_p[X] helpers used by several modules (exact, Euclidean).
Elem poly_mod(const RingSpec& polyring, const Elem& a, const Elem& b);
Elem poly_gcd_monic(const RingSpec& polyring, Elem a, Elem b);
bool poly_irreducible(const RingSpec& polyring, const Elem& f);

}  // namespace ringdef
