#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringdef/elem.hpp"

namespace ringdef {

enum class RingKind { Int, Zmod, PrimeField, Poly, MonicExt, Product };

// A computable commutative ring with canonical element encodings, exact
// arithmetic and height-graded enumeration.
//
// Heights: Int |e|; Zmod/PrimeField 0; Poly max(degree, coeff heights);
// MonicExt/Product max of component heights. For every spec and bound h
// the set of elements of height <= h is finite, and enumerate(h) lists it
// in a fixed order where enumerate(h') is a prefix of enumerate(h) for
// h' <= h.
class RingSpec {
 public:
  RingSpec() = default;

  static RingSpec integers();
  static RingSpec zmod(const BigInt& n);            // n >= 1; n = 1 is the zero ring
  static RingSpec prime_field(const BigInt& p);     // p prime (checked)
  static RingSpec poly(const RingSpec& base, std::string varname);
  static RingSpec monic_ext(const RingSpec& base, std::vector<Elem> coeffs);
  static RingSpec product(const RingSpec& l, const RingSpec& r);

  bool null() const { return !n_; }
  RingKind kind() const;
  const BigInt& modulus() const;          // Zmod / PrimeField
  const RingSpec& base() const;           // Poly / MonicExt
  const std::string& varname() const;     // Poly
  const std::vector<Elem>& ext_coeffs() const;  // MonicExt: c_0..c_{d-1}
  int ext_degree() const;
  // coordinates of x^d .. x^{2d-2} in the basis 1..x^{d-1} (MonicExt)
  const std::vector<std::vector<Elem>>& ext_power_table() const;
  const RingSpec& left() const;           // Product
  const RingSpec& right() const;

  bool operator==(const RingSpec& o) const;
  bool operator!=(const RingSpec& o) const { return !(*this == o); }

  bool finite() const;
  BigInt cardinality() const;  // finite rings only

  Elem zero() const;
  Elem one() const;
  Elem from_int(const BigInt& k) const;  // canonical image of an integer
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  bool eq(const Elem& a, const Elem& b) const;
  bool is_zero(const Elem& a) const;
  bool is_valid(const Elem& a) const;

  std::uint64_t height(const Elem& a) const;

  // All elements of height <= h, canonical order, cached per (spec, h).
  const std::vector<Elem>& enumerate(std::uint64_t h) const;

  // Ring-specific element encodings (decimal / comma coefficients /
  // bracketed coordinate lists).
  std::string encode(const Elem& a) const;
  Elem decode(std::string_view text) const;

  // Ring-spec mini-language: int, zmod:12, gfp:5, poly:gfp:5:X,
  // monicext:int:[5,1], prod(<spec>,<spec>).
  std::string to_string() const;
  static RingSpec parse(std::string_view text);

  // Poly helpers (base field arithmetic on coefficient vectors).
  static int poly_degree(const Elem& a);  // -1 for the zero polynomial

  const void* id() const { return n_.get(); }

 private:
  struct Node;
  explicit RingSpec(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;

  Elem normalize_poly(std::vector<Elem> coeffs) const;
  Elem ext_reduce(std::vector<Elem> conv) const;
};

// Trial-division primality for the moduli used here (desk scale).
bool is_prime_int(const BigInt& n);

}  // namespace ringdef
