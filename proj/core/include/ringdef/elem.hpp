#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ringdef/error.hpp"

namespace ringdef {

using BigInt = boost::multiprecision::cpp_int;

// A ring element in canonical encoding. The meaning of the payload depends
// on the ambient RingSpec:
//   scalar       — Int / Zmod / PrimeField value
//   parts        — Poly coefficient list (low degree first, no trailing
//                  zeros, empty = zero polynomial), MonicExt coordinate
//                  vector of length d, or Product pair (length 2)
class Elem {
 public:
  Elem() : v_(BigInt(0)) {}
  explicit Elem(BigInt v) : v_(std::move(v)) {}
  explicit Elem(long v) : v_(BigInt(v)) {}
  explicit Elem(std::vector<Elem> parts) : v_(std::move(parts)) {}

  bool is_scalar() const { return std::holds_alternative<BigInt>(v_); }
  const BigInt& scalar() const {
    if (!is_scalar()) fail(ErrorCode::EncodingMismatch, "expected scalar element");
    return std::get<BigInt>(v_);
  }
  const std::vector<Elem>& parts() const {
    if (is_scalar()) fail(ErrorCode::EncodingMismatch, "expected composite element");
    return std::get<std::vector<Elem>>(v_);
  }

  bool operator==(const Elem& o) const { return v_ == o.v_; }
  bool operator!=(const Elem& o) const { return !(*this == o); }

  // Compact deterministic byte form, used for hashing and cache keys.
  void append_bytes(std::string& out) const {
    if (is_scalar()) {
      out.push_back('s');
      out += scalar().str();
      out.push_back(';');
    } else {
      out.push_back('v');
      out += std::to_string(parts().size());
      out.push_back('[');
      for (const Elem& p : parts()) p.append_bytes(out);
      out.push_back(']');
    }
  }
  std::string bytes() const {
    std::string s;
    append_bytes(s);
    return s;
  }

 private:
  std::variant<BigInt, std::vector<Elem>> v_;
};

}  // namespace ringdef
