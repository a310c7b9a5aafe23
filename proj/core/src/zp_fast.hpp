#pragma once

// Packed arithmetic for F_p[X] with small p and bounded degree. The search
// engine switches to this representation when a block's terms provably stay
// within the degree cap; everything else runs on generic Elem values.

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "ringdef/ring.hpp"

namespace ringdef::zp {

struct Poly {
  static constexpr int kMaxDeg = 63;
  int16_t deg = -1;  // -1: zero polynomial
  std::array<std::uint16_t, kMaxDeg + 1> c{};

  bool operator==(const Poly& o) const {
    if (deg != o.deg) return false;
    for (int i = 0; i <= deg; ++i)
      if (c[i] != o.c[i]) return false;
    return true;
  }
};

inline std::uint32_t inv_mod_u32(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

class Arith {
 public:
  explicit Arith(std::uint32_t p) : p_(p) {}

  static bool ring_eligible(const RingSpec& ring) {
    return ring.kind() == RingKind::Poly &&
           ring.base().kind() == RingKind::PrimeField && ring.base().modulus() <= 251;
  }

  Poly zero() const { return Poly{}; }
  bool is_zero(const Poly& a) const { return a.deg < 0; }
  bool eq(const Poly& a, const Poly& b) const { return a == b; }

  Poly add(const Poly& a, const Poly& b) const {
    Poly r;
    int d = std::max(a.deg, b.deg);
    for (int i = 0; i <= d; ++i) {
      std::uint32_t s = (i <= a.deg ? a.c[i] : 0u) + (i <= b.deg ? b.c[i] : 0u);
      if (s >= p_) s -= p_;
      r.c[i] = static_cast<std::uint16_t>(s);
    }
    while (d >= 0 && r.c[d] == 0) --d;
    r.deg = static_cast<std::int16_t>(d);
    return r;
  }

  Poly neg(const Poly& a) const {
    Poly r;
    r.deg = a.deg;
    for (int i = 0; i <= a.deg; ++i)
      r.c[i] = a.c[i] ? static_cast<std::uint16_t>(p_ - a.c[i]) : 0;
    return r;
  }

  Poly sub(const Poly& a, const Poly& b) const { return add(a, neg(b)); }

  Poly mul(const Poly& a, const Poly& b) const {
    Poly r;
    if (a.deg < 0 || b.deg < 0) return r;
    int d = a.deg + b.deg;
    if (d > Poly::kMaxDeg) fail(ErrorCode::BadArgument, "packed degree overflow");
    for (int k = 0; k <= d; ++k) {
      std::uint32_t acc = 0;
      int lo = std::max(0, k - b.deg), hi = std::min(k, static_cast<int>(a.deg));
      for (int i = lo; i <= hi; ++i)
        acc += static_cast<std::uint32_t>(a.c[i]) * b.c[k - i];
      r.c[k] = static_cast<std::uint16_t>(acc % p_);
    }
    while (d >= 0 && r.c[d] == 0) --d;
    r.deg = static_cast<std::int16_t>(d);
    return r;
  }

  // exact quotient num/den, nullopt when den does not divide num; den != 0
  std::optional<Poly> div_exact(const Poly& num, const Poly& den) const {
    if (num.deg < 0) return Poly{};
    if (num.deg < den.deg) return std::nullopt;
    Poly rem = num, q;
    q.deg = static_cast<std::int16_t>(num.deg - den.deg);
    std::uint32_t lead_inv = inv_mod_u32(den.c[den.deg], p_);
    for (int k = num.deg - den.deg; k >= 0; --k) {
      std::uint32_t coef =
          rem.deg >= den.deg + k
              ? static_cast<std::uint32_t>(rem.c[den.deg + k]) * lead_inv % p_
              : 0;
      q.c[k] = static_cast<std::uint16_t>(coef);
      if (coef) {
        for (int i = 0; i <= den.deg; ++i) {
          std::uint32_t cur = rem.c[i + k];
          std::uint32_t s = (coef * den.c[i]) % p_;
          cur = (cur + p_ - s) % p_;
          rem.c[i + k] = static_cast<std::uint16_t>(cur);
        }
      }
      int d = rem.deg;
      while (d >= 0 && rem.c[d] == 0) --d;
      rem.deg = static_cast<std::int16_t>(d);
    }
    if (rem.deg >= 0) return std::nullopt;
    int d = q.deg;
    while (d >= 0 && q.c[d] == 0) --d;
    q.deg = static_cast<std::int16_t>(d);
    return q;
  }

  Poly from_elem(const Elem& e) const {
    Poly r;
    const auto& cs = e.parts();
    if (static_cast<int>(cs.size()) - 1 > Poly::kMaxDeg)
      fail(ErrorCode::BadArgument, "polynomial too large for packed form");
    r.deg = static_cast<std::int16_t>(cs.size()) - 1;
    for (size_t i = 0; i < cs.size(); ++i)
      r.c[i] = static_cast<std::uint16_t>(cs[i].scalar().convert_to<std::uint32_t>());
    return r;
  }

  Elem to_elem(const RingSpec& ring, const Poly& a) const {
    std::vector<Elem> cs;
    cs.reserve(a.deg + 1);
    for (int i = 0; i <= a.deg; ++i)
      cs.push_back(ring.base().from_int(a.c[i]));
    return Elem(std::move(cs));
  }

  void append_bytes(const Poly& a, std::string& out) const {
    out.push_back(static_cast<char>('0' + (a.deg & 0x3f)));
    for (int i = 0; i <= a.deg; ++i) {
      out.push_back(static_cast<char>(a.c[i] & 0xff));
      out.push_back(static_cast<char>((a.c[i] >> 8) & 0xff));
    }
  }

  std::uint32_t p() const { return p_; }

 private:
  std::uint32_t p_;
};

}  // namespace ringdef::zp
