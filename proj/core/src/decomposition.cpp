#include "ringdef/decomposition.hpp"

#include <algorithm>

namespace ringdef {

std::vector<BigInt> prime_factors_with_multiplicity(BigInt n) {
  std::vector<BigInt> out;
  for (BigInt d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      out.push_back(d);
      n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

FiltrationData composition_series(const RingSpec& A) {
  if (A.kind() != RingKind::Zmod && A.kind() != RingKind::PrimeField)
    fail(ErrorCode::BadArgument, "composition series implemented for Z/n");
  const BigInt n = A.modulus();
  FiltrationData F;
  F.ring = A;

  std::vector<BigInt> ps = prime_factors_with_multiplicity(n);
  // ideals (d_0=1) > (d_1) > ... with d_{j+1} = d_j * p_j; (d_k) = (0) in Z/n
  BigInt d = 1;
  for (size_t j = 0; j <= ps.size(); ++j) {
    Elem gen = A.from_int(d);
    F.ideals.push_back(Ideal::make(A, {gen}));
    if (j < ps.size()) {
      F.gens.push_back(gen);
      F.primes.push_back(Ideal::make(A, {A.from_int(ps[j])}));
      d *= ps[j];
    }
  }

  // exhaustive checks: the chain is strictly descending, ends at (0), and
  // every element of I_j is t*a_j + (element of I_{j+1})
  if (!F.ideals.back().is_zero_ideal() && n > 1)
    fail(ErrorCode::BadArgument, "composition series did not terminate at (0)");
  const auto& all = A.enumerate(0);
  for (size_t j = 0; j + 1 < F.ideals.size(); ++j) {
    for (const Elem& e : all) {
      if (!F.ideals[j].contains(e)) continue;
      bool ok = false;
      for (const Elem& t : all) {
        Elem r = A.sub(e, A.mul(t, F.gens[j]));
        if (F.ideals[j + 1].contains(r)) { ok = true; break; }
      }
      if (!ok)
        fail(ErrorCode::BadArgument,
             "composition series invariant failed at step " + std::to_string(j));
    }
  }
  return F;
}

AssociatedPrimesData associated_primes(const RingSpec& A) {
  if (A.kind() != RingKind::Zmod && A.kind() != RingKind::PrimeField)
    fail(ErrorCode::BadArgument, "associated primes implemented for Z/n");
  const BigInt n = A.modulus();
  if (n < 2) fail(ErrorCode::BadArgument, "associated primes need n >= 2");

  AssociatedPrimesData D;
  D.ring = A;
  std::vector<BigInt> ps = prime_factors_with_multiplicity(n);
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());

  const auto& all = A.enumerate(0);
  for (const BigInt& p : ps) {
    Elem alpha = A.from_int(n / p);
    Ideal P = Ideal::make(A, {A.from_int(p)});
    // exhaustive: ann(alpha) == (p)
    for (const Elem& t : all) {
      bool kills = A.is_zero(A.mul(t, alpha));
      if (kills != P.contains(t))
        fail(ErrorCode::BadArgument,
             "annihilator of " + A.encode(alpha) + " is not (" + p.str() + ")");
    }
    D.pairs.emplace_back(std::move(P), std::move(alpha));
  }
  return D;
}

}  // namespace ringdef
