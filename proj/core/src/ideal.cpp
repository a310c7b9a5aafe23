#include "ringdef/ideal.hpp"

#include <algorithm>
#include <deque>

namespace ringdef {

// ---------------------------------------------------------------------------
// RingHom

RingHom RingHom::reduce_int_mod(const BigInt& n) {
  RingHom h;
  h.kind_ = Kind::ReduceIntMod;
  h.source_ = RingSpec::integers();
  h.target_ = RingSpec::zmod(n);
  return h;
}

RingHom RingHom::reduce_zmod(const RingSpec& src, const BigInt& d) {
  RingHom h;
  h.kind_ = Kind::ReduceZmod;
  h.source_ = src;
  h.target_ = RingSpec::zmod(d);
  return h;
}

RingHom RingHom::poly_eval(const RingSpec& src, Elem c) {
  RingHom h;
  h.kind_ = Kind::PolyEval;
  h.source_ = src;
  h.target_ = src.base();
  h.point_ = std::move(c);
  return h;
}

RingHom RingHom::poly_reduce_monic(const RingSpec& src, const RingSpec& target) {
  RingHom h;
  h.kind_ = Kind::PolyReduceMonic;
  h.source_ = src;
  h.target_ = target;
  return h;
}

RingHom RingHom::ext_eval_mod_p(const RingSpec& src, const BigInt& p, const BigInt& c) {
  RingHom h;
  h.kind_ = Kind::ExtEvalModP;
  h.source_ = src;
  h.target_ = RingSpec::prime_field(p);
  h.point_ = Elem(c);
  return h;
}

Elem RingHom::apply(const Elem& a) const {
  switch (kind_) {
    case Kind::ReduceIntMod:
      return target_.from_int(a.scalar());
    case Kind::ReduceZmod:
      return target_.from_int(a.scalar());
    case Kind::PolyEval: {
      const RingSpec& R = target_;
      Elem acc = R.zero();
      for (size_t i = a.parts().size(); i-- > 0;)
        acc = R.add(R.mul(acc, point_), a.parts()[i]);
      return acc;
    }
    case Kind::PolyReduceMonic: {
      const RingSpec& B = target_;
      Elem f = source_.zero();
      {
        std::vector<Elem> fc = B.ext_coeffs();
        fc.push_back(B.base().one());
        f = Elem(std::move(fc));
      }
      Elem r = poly_mod(source_, a, f);
      std::vector<Elem> coords(B.ext_degree(), B.base().zero());
      for (size_t i = 0; i < r.parts().size(); ++i) coords[i] = r.parts()[i];
      return Elem(std::move(coords));
    }
    case Kind::ExtEvalModP: {
      const BigInt& c = point_.scalar();
      BigInt acc = 0, pw = 1;
      for (const Elem& coord : a.parts()) {
        acc += coord.scalar() * pw;
        pw *= c;
      }
      return target_.from_int(acc);
    }
  }
  fail(ErrorCode::BadArgument, "unhandled hom kind");
}

Elem RingHom::section(const Elem& b) const {
  switch (kind_) {
    case Kind::ReduceIntMod:
      return Elem(b.scalar());
    case Kind::ReduceZmod:
      return Elem(b.scalar());
    case Kind::PolyEval: {
      // constant polynomial lift; evaluation at any point returns it
      if (target_.is_zero(b)) return source_.zero();
      return Elem(std::vector<Elem>{b});
    }
    case Kind::PolyReduceMonic: {
      std::vector<Elem> cs = b.parts();
      while (!cs.empty() && target_.base().is_zero(cs.back())) cs.pop_back();
      return Elem(std::move(cs));
    }
    case Kind::ExtEvalModP: {
      std::vector<Elem> coords(source_.ext_degree(), source_.base().zero());
      coords[0] = source_.base().from_int(b.scalar());
      return Elem(std::move(coords));
    }
  }
  fail(ErrorCode::BadArgument, "unhandled hom kind");
}

// ---------------------------------------------------------------------------
// F_p[X] Euclidean helpers

namespace {

BigInt inv_mod(const BigInt& a, const BigInt& p) {
  BigInt t = 0, nt = 1, r = p, nr = a % p;
  if (nr < 0) nr += p;
  while (nr != 0) {
    BigInt q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) fail(ErrorCode::BadArgument, "not invertible mod " + p.str());
  if (t < 0) t += p;
  return t;
}

}  // namespace

Elem poly_mod(const RingSpec& polyring, const Elem& a, const Elem& b) {
  const RingSpec& R = polyring.base();
  if (b.parts().empty()) fail(ErrorCode::BadArgument, "polynomial division by zero");
  std::vector<Elem> r = a.parts();
  const auto& d = b.parts();
  const BigInt lead_inv = inv_mod(d.back().scalar(), R.modulus());
  while (r.size() >= d.size()) {
    Elem q = R.mul(r.back(), R.from_int(lead_inv));
    size_t shift = r.size() - d.size();
    for (size_t i = 0; i < d.size(); ++i)
      r[shift + i] = R.sub(r[shift + i], R.mul(q, d[i]));
    while (!r.empty() && R.is_zero(r.back())) r.pop_back();
  }
  return Elem(std::move(r));
}

Elem poly_gcd_monic(const RingSpec& polyring, Elem a, Elem b) {
  const RingSpec& R = polyring.base();
  while (!b.parts().empty()) {
    Elem r = poly_mod(polyring, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.parts().empty()) return a;
  // normalize monic
  const BigInt inv = inv_mod(a.parts().back().scalar(), R.modulus());
  std::vector<Elem> cs;
  cs.reserve(a.parts().size());
  for (const Elem& c : a.parts()) cs.push_back(R.mul(c, R.from_int(inv)));
  return Elem(std::move(cs));
}

bool poly_irreducible(const RingSpec& polyring, const Elem& f) {
  const RingSpec& R = polyring.base();
  int deg = RingSpec::poly_degree(f);
  if (deg <= 0) return false;
  if (deg == 1) return true;
  // root scan settles degrees 2 and 3
  for (const Elem& c : R.enumerate(0)) {
    Elem acc = R.zero();
    for (size_t i = f.parts().size(); i-- > 0;)
      acc = R.add(R.mul(acc, c), f.parts()[i]);
    if (R.is_zero(acc)) return false;
  }
  if (deg <= 3) return true;
  // trial division by monic polynomials of degree <= deg/2
  for (int d = 2; d <= deg / 2; ++d) {
    for (const Elem& g : polyring.enumerate(d)) {
      if (RingSpec::poly_degree(g) != d) continue;
      if (!R.eq(g.parts().back(), R.one())) continue;
      if (poly_mod(polyring, f, g).parts().empty()) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Ideal

namespace {

BigInt big_gcd(BigInt a, BigInt b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

MembershipStrategy default_strategy(const RingSpec& ring) {
  switch (ring.kind()) {
    case RingKind::Int:
    case RingKind::Zmod:
    case RingKind::PrimeField:
      return MembershipStrategy::PrincipalGcd;
    case RingKind::Poly:
      if (ring.base().kind() == RingKind::PrimeField)
        return MembershipStrategy::PolyDivision;
      break;
    default:
      break;
  }
  if (ring.finite()) return MembershipStrategy::FiniteScan;
  fail(ErrorCode::UnsupportedStrategy,
       "no sound membership strategy for ring " + ring.to_string());
}

}  // namespace

Ideal Ideal::make(const RingSpec& ring, std::vector<Elem> generators) {
  return make(ring, std::move(generators), default_strategy(ring));
}

Ideal Ideal::make(const RingSpec& ring, std::vector<Elem> generators,
                  MembershipStrategy strategy) {
  if (generators.empty()) fail(ErrorCode::BadArgument, "ideal needs at least one generator");
  for (const Elem& g : generators)
    if (!ring.is_valid(g)) fail(ErrorCode::EncodingMismatch, "ideal generator not in ring");
  Ideal I;
  I.ring_ = ring;
  I.gens_ = std::move(generators);
  I.strategy_ = strategy;
  switch (strategy) {
    case MembershipStrategy::PrincipalGcd: {
      if (ring.kind() != RingKind::Int && ring.kind() != RingKind::Zmod &&
          ring.kind() != RingKind::PrimeField)
        fail(ErrorCode::UnsupportedStrategy, "PrincipalGcd needs Int or Zmod");
      BigInt g = 0;
      for (const Elem& e : I.gens_) g = big_gcd(g, e.scalar());
      if (ring.kind() != RingKind::Int) g = big_gcd(g, ring.modulus());
      I.reduced_gen_ = Elem(g);
      break;
    }
    case MembershipStrategy::PolyDivision: {
      if (ring.kind() != RingKind::Poly || ring.base().kind() != RingKind::PrimeField)
        fail(ErrorCode::UnsupportedStrategy, "PolyDivision needs Poly over a prime field");
      Elem g = ring.zero();
      for (const Elem& e : I.gens_) g = poly_gcd_monic(ring, g, e);
      I.reduced_gen_ = g;
      break;
    }
    case MembershipStrategy::FiniteScan:
      if (!ring.finite())
        fail(ErrorCode::UnsupportedStrategy, "FiniteScan needs a finite ring");
      break;
    case MembershipStrategy::QuotientMap:
      fail(ErrorCode::BadArgument, "use Ideal::kernel for QuotientMap ideals");
  }
  return I;
}

Ideal Ideal::kernel(const RingSpec& ring, std::vector<Elem> generators, RingHom hom) {
  if (generators.empty()) fail(ErrorCode::BadArgument, "ideal needs at least one generator");
  Ideal I;
  I.ring_ = ring;
  I.gens_ = std::move(generators);
  I.strategy_ = MembershipStrategy::QuotientMap;
  I.hom_ = std::move(hom);
  for (const Elem& g : I.gens_)
    if (!I.hom_->target().is_zero(I.hom_->apply(g)))
      fail(ErrorCode::BadArgument, "kernel ideal generator not in the kernel");
  return I;
}

const std::unordered_set<std::string>& Ideal::span() const {
  if (span_) return *span_;
  auto set = std::make_shared<std::unordered_set<std::string>>();
  const auto& all = ring_.enumerate(0);
  std::deque<Elem> work;
  auto push = [&](const Elem& e) {
    if (set->insert(e.bytes()).second) work.push_back(e);
  };
  push(ring_.zero());
  while (!work.empty()) {
    Elem cur = std::move(work.front());
    work.pop_front();
    for (const Elem& g : gens_)
      for (const Elem& r : all)
        push(ring_.add(cur, ring_.mul(r, g)));
  }
  span_ = std::move(set);
  return *span_;
}

bool Ideal::contains(const Elem& a) const {
  if (!ring_.is_valid(a)) fail(ErrorCode::EncodingMismatch, "element not in ring");
  switch (strategy_) {
    case MembershipStrategy::PrincipalGcd: {
      const BigInt& g = reduced_gen_.scalar();
      if (g == 0) return a.scalar() == 0;
      return a.scalar() % g == 0;
    }
    case MembershipStrategy::PolyDivision: {
      if (reduced_gen_.parts().empty()) return a.parts().empty();
      return poly_mod(ring_, a, reduced_gen_).parts().empty();
    }
    case MembershipStrategy::QuotientMap:
      return hom_->target().is_zero(hom_->apply(a));
    case MembershipStrategy::FiniteScan:
      return span().count(a.bytes()) > 0;
  }
  return false;
}

bool Ideal::is_zero_ideal() const {
  for (const Elem& g : gens_)
    if (!ring_.is_zero(g)) return false;
  return true;
}

std::optional<bool> Ideal::certified_prime() const {
  switch (strategy_) {
    case MembershipStrategy::PrincipalGcd: {
      const BigInt& g = reduced_gen_.scalar();
      if (ring_.kind() == RingKind::Int) {
        if (g == 0) return true;  // zero ideal of a domain
        return is_prime_int(g);
      }
      // Zmod(n)/(g) is Zmod(g)
      if (g == 0) return std::nullopt;
      return is_prime_int(g);
    }
    case MembershipStrategy::PolyDivision: {
      if (reduced_gen_.parts().empty()) return true;  // zero ideal, F_p[X] a domain
      return poly_irreducible(ring_, reduced_gen_);
    }
    case MembershipStrategy::QuotientMap:
      // kernel of a map onto a field is maximal
      if (hom_->target().kind() == RingKind::PrimeField) return true;
      return std::nullopt;
    case MembershipStrategy::FiniteScan:
      return std::nullopt;
  }
  return std::nullopt;
}

std::string Ideal::describe() const {
  std::string s = "(";
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ",";
    s += ring_.encode(gens_[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// quotient

std::pair<RingSpec, RingHom> quotient(const RingSpec& ring, const Ideal& ideal) {
  if (ideal.ring() != ring)
    fail(ErrorCode::BadArgument, "ideal does not live in the given ring");
  switch (ring.kind()) {
    case RingKind::Int: {
      Ideal norm = ideal.strategy() == MembershipStrategy::PrincipalGcd
                       ? ideal
                       : Ideal::make(ring, ideal.generators());
      BigInt g = 0;
      for (const Elem& e : norm.generators()) g = big_gcd(g, e.scalar());
      if (g == 0) fail(ErrorCode::UnsupportedQuotient, "Int/(0) is not a supported quotient");
      return {RingSpec::zmod(g), RingHom::reduce_int_mod(g)};
    }
    case RingKind::Zmod:
    case RingKind::PrimeField: {
      BigInt g = 0;
      for (const Elem& e : ideal.generators()) g = big_gcd(g, e.scalar());
      g = big_gcd(g, ring.modulus());
      if (g == 0) g = ring.modulus();
      return {RingSpec::zmod(g), RingHom::reduce_zmod(ring, g)};
    }
    case RingKind::Poly: {
      if (ring.base().kind() != RingKind::PrimeField)
        fail(ErrorCode::UnsupportedQuotient, "poly quotient needs a prime-field base");
      Elem f = ring.zero();
      for (const Elem& e : ideal.generators()) f = poly_gcd_monic(ring, f, e);
      int deg = RingSpec::poly_degree(f);
      if (deg < 1)
        fail(ErrorCode::UnsupportedQuotient, "poly quotient needs a nonconstant modulus");
      if (deg == 1) {
        // (X - c): evaluation at c
        Elem c = ring.base().neg(f.parts()[0]);
        return {ring.base(), RingHom::poly_eval(ring, c)};
      }
      std::vector<Elem> coeffs(f.parts().begin(), f.parts().end() - 1);
      RingSpec ext = RingSpec::monic_ext(ring.base(), std::move(coeffs));
      return {ext, RingHom::poly_reduce_monic(ring, ext)};
    }
    case RingKind::MonicExt: {
      if (ideal.strategy() == MembershipStrategy::QuotientMap &&
          ideal.quotient_hom()->hom_kind() == RingHom::Kind::ExtEvalModP) {
        const RingHom& h = *ideal.quotient_hom();
        return {h.target(), h};
      }
      // explicit generators (p, x - c): p a prime scalar constant, x - c linear
      if (ring.base().kind() == RingKind::Int && ideal.generators().size() == 2) {
        const Elem& g0 = ideal.generators()[0];
        const Elem& g1 = ideal.generators()[1];
        auto as_const = [&](const Elem& e) -> std::optional<BigInt> {
          for (size_t i = 1; i < e.parts().size(); ++i)
            if (!ring.base().is_zero(e.parts()[i])) return std::nullopt;
          return e.parts()[0].scalar();
        };
        auto as_linear = [&](const Elem& e) -> std::optional<BigInt> {
          if (ring.ext_degree() < 2) return std::nullopt;
          if (e.parts()[1].scalar() != 1) return std::nullopt;
          for (size_t i = 2; i < e.parts().size(); ++i)
            if (!ring.base().is_zero(e.parts()[i])) return std::nullopt;
          return -e.parts()[0].scalar();  // x - c with c = -coeff0
        };
        std::optional<BigInt> p = as_const(g0), c = as_linear(g1);
        if (!p) { p = as_const(g1); c = as_linear(g0); }
        if (p && c && is_prime_int(*p)) {
          // well-defined iff the defining polynomial vanishes at c mod p
          BigInt acc = 0, pw = 1;
          for (const Elem& fc : ring.ext_coeffs()) {
            acc += fc.scalar() * pw;
            pw *= *c;
          }
          acc += pw;  // monic leading term
          if (acc % *p == 0)
            return {RingSpec::prime_field(*p), RingHom::ext_eval_mod_p(ring, *p, *c)};
        }
      }
      fail(ErrorCode::UnsupportedQuotient,
           "unsupported quotient of " + ring.to_string() + " by " + ideal.describe());
    }
    default:
      fail(ErrorCode::UnsupportedQuotient,
           "unsupported quotient of " + ring.to_string());
  }
}

}  // namespace ringdef
