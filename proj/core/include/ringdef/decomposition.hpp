#pragma once

#include <vector>

#include "ringdef/ideal.hpp"

namespace ringdef {

// Descending chain A = I_0 > I_1 > ... > I_n = (0) together with primes
// p_0..p_{n-1} and generators a_j of the cyclic quotients I_j/I_{j+1}
// (each isomorphic to A/p_j).
struct FiltrationData {
  RingSpec ring;
  std::vector<Ideal> ideals;   // length n+1, ideals[0] = (1), ideals[n] = (0)
  std::vector<Ideal> primes;   // length n
  std::vector<Elem> gens;      // length n, gens[j] in ideals[j]
};

// Associated primes of Z/n: pairs (p_i, a_i) with p_i = ann(a_i).
struct AssociatedPrimesData {
  RingSpec ring;
  std::vector<std::pair<Ideal, Elem>> pairs;
};

// Maximal chain of ideals of Z/n with prime successive quotients; generators
// are the divisors 1, d_1, d_1 d_2, ... for the ascending prime factor list.
// Verified exhaustively at construction.
FiltrationData composition_series(const RingSpec& zmod_spec);

// ((p), n/p) for each prime p | n, annihilators verified exhaustively.
AssociatedPrimesData associated_primes(const RingSpec& zmod_spec);

std::vector<BigInt> prime_factors_with_multiplicity(BigInt n);  // ascending

}  // namespace ringdef
