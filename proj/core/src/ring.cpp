#include "ringdef/ring.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace ringdef {

struct RingSpec::Node {
  RingKind kind;
  BigInt modulus;            // Zmod / PrimeField
  RingSpec base;             // Poly / MonicExt
  std::string varname;       // Poly
  std::vector<Elem> coeffs;  // MonicExt c_0..c_{d-1}
  RingSpec lhs, rhs;         // Product

  // x^d .. x^{2d-2} expressed in the basis 1..x^{d-1} (MonicExt only)
  std::vector<std::vector<Elem>> power_table;

  mutable std::map<std::uint64_t, std::vector<Elem>> enum_cache;
};

RingKind RingSpec::kind() const { return n_->kind; }
const BigInt& RingSpec::modulus() const { return n_->modulus; }
const RingSpec& RingSpec::base() const { return n_->base; }
const std::string& RingSpec::varname() const { return n_->varname; }
const std::vector<Elem>& RingSpec::ext_coeffs() const { return n_->coeffs; }
int RingSpec::ext_degree() const { return static_cast<int>(n_->coeffs.size()); }
const RingSpec& RingSpec::left() const { return n_->lhs; }
const RingSpec& RingSpec::right() const { return n_->rhs; }
const std::vector<std::vector<Elem>>& RingSpec::ext_power_table() const {
  return n_->power_table;
}

bool is_prime_int(const BigInt& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (BigInt d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

RingSpec RingSpec::integers() {
  auto n = std::make_shared<Node>();
  n->kind = RingKind::Int;
  return RingSpec(std::move(n));
}

RingSpec RingSpec::zmod(const BigInt& m) {
  if (m < 1) fail(ErrorCode::BadArgument, "zmod modulus must be >= 1");
  auto n = std::make_shared<Node>();
  n->kind = RingKind::Zmod;
  n->modulus = m;
  return RingSpec(std::move(n));
}

RingSpec RingSpec::prime_field(const BigInt& p) {
  if (!is_prime_int(p)) fail(ErrorCode::NotPrime, "gfp modulus " + p.str() + " is not prime");
  auto n = std::make_shared<Node>();
  n->kind = RingKind::PrimeField;
  n->modulus = p;
  return RingSpec(std::move(n));
}

RingSpec RingSpec::poly(const RingSpec& base, std::string varname) {
  if (base.kind() != RingKind::Zmod && base.kind() != RingKind::PrimeField)
    fail(ErrorCode::BadArgument, "poly base must be a finite Zmod/PrimeField spec");
  if (varname.empty()) fail(ErrorCode::BadArgument, "poly variable name empty");
  auto n = std::make_shared<Node>();
  n->kind = RingKind::Poly;
  n->base = base;
  n->varname = std::move(varname);
  return RingSpec(std::move(n));
}

RingSpec RingSpec::monic_ext(const RingSpec& base, std::vector<Elem> coeffs) {
  if (coeffs.empty()) fail(ErrorCode::BadArgument, "monicext needs a nonempty coefficient list");
  for (const Elem& c : coeffs)
    if (!base.is_valid(c)) fail(ErrorCode::EncodingMismatch, "monicext coefficient not in base ring");
  auto n = std::make_shared<Node>();
  n->kind = RingKind::MonicExt;
  n->base = base;
  n->coeffs = std::move(coeffs);

  // Power table: coords of x^k for k = d .. 2d-2.
  const int d = static_cast<int>(n->coeffs.size());
  std::vector<Elem> xd(d);  // x^d = -(c_0 + c_1 x + ... + c_{d-1} x^{d-1})
  for (int i = 0; i < d; ++i) xd[i] = base.neg(n->coeffs[i]);
  n->power_table.push_back(xd);
  for (int k = d + 1; k <= 2 * d - 2; ++k) {
    const std::vector<Elem>& prev = n->power_table.back();
    std::vector<Elem> cur(d, base.zero());
    // multiply prev by x: shift, reduce the overflow coefficient
    for (int i = 0; i + 1 < d; ++i) cur[i + 1] = prev[i];
    const Elem& top = prev[d - 1];
    for (int i = 0; i < d; ++i)
      cur[i] = base.add(cur[i], base.mul(top, xd[i]));
    n->power_table.push_back(std::move(cur));
  }
  return RingSpec(std::move(n));
}

RingSpec RingSpec::product(const RingSpec& l, const RingSpec& r) {
  auto n = std::make_shared<Node>();
  n->kind = RingKind::Product;
  n->lhs = l;
  n->rhs = r;
  return RingSpec(std::move(n));
}

bool RingSpec::operator==(const RingSpec& o) const {
  if (n_ == o.n_) return true;
  if (!n_ || !o.n_) return false;
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case RingKind::Int: return true;
    case RingKind::Zmod:
    case RingKind::PrimeField: return modulus() == o.modulus();
    case RingKind::Poly: return varname() == o.varname() && base() == o.base();
    case RingKind::MonicExt:
      return base() == o.base() && ext_coeffs() == o.ext_coeffs();
    case RingKind::Product: return left() == o.left() && right() == o.right();
  }
  return false;
}

bool RingSpec::finite() const {
  switch (kind()) {
    case RingKind::Int: return false;
    case RingKind::Zmod:
    case RingKind::PrimeField: return true;
    case RingKind::Poly: return false;
    case RingKind::MonicExt: return base().finite();
    case RingKind::Product: return left().finite() && right().finite();
  }
  return false;
}

BigInt RingSpec::cardinality() const {
  switch (kind()) {
    case RingKind::Zmod:
    case RingKind::PrimeField: return modulus();
    case RingKind::MonicExt: {
      BigInt c = 1;
      for (int i = 0; i < ext_degree(); ++i) c *= base().cardinality();
      return c;
    }
    case RingKind::Product: return left().cardinality() * right().cardinality();
    default: fail(ErrorCode::NotFinite, "cardinality of an infinite ring");
  }
}

Elem RingSpec::zero() const {
  switch (kind()) {
    case RingKind::Int:
    case RingKind::Zmod:
    case RingKind::PrimeField: return Elem(BigInt(0));
    case RingKind::Poly: return Elem(std::vector<Elem>{});
    case RingKind::MonicExt:
      return Elem(std::vector<Elem>(ext_degree(), base().zero()));
    case RingKind::Product:
      return Elem(std::vector<Elem>{left().zero(), right().zero()});
  }
  return Elem();
}

Elem RingSpec::one() const { return from_int(1); }

Elem RingSpec::from_int(const BigInt& k) const {
  switch (kind()) {
    case RingKind::Int: return Elem(k);
    case RingKind::Zmod:
    case RingKind::PrimeField: {
      BigInt r = k % modulus();
      if (r < 0) r += modulus();
      return Elem(r);
    }
    case RingKind::Poly: {
      Elem c = base().from_int(k);
      if (base().is_zero(c)) return zero();
      return Elem(std::vector<Elem>{c});
    }
    case RingKind::MonicExt: {
      std::vector<Elem> v(ext_degree(), base().zero());
      v[0] = base().from_int(k);
      return Elem(std::move(v));
    }
    case RingKind::Product:
      return Elem(std::vector<Elem>{left().from_int(k), right().from_int(k)});
  }
  return Elem();
}

bool RingSpec::is_valid(const Elem& a) const {
  switch (kind()) {
    case RingKind::Int: return a.is_scalar();
    case RingKind::Zmod:
    case RingKind::PrimeField:
      return a.is_scalar() && a.scalar() >= 0 && a.scalar() < modulus();
    case RingKind::Poly: {
      if (a.is_scalar()) return false;
      const auto& cs = a.parts();
      for (const Elem& c : cs)
        if (!base().is_valid(c)) return false;
      return cs.empty() || !base().is_zero(cs.back());
    }
    case RingKind::MonicExt: {
      if (a.is_scalar() || static_cast<int>(a.parts().size()) != ext_degree()) return false;
      for (const Elem& c : a.parts())
        if (!base().is_valid(c)) return false;
      return true;
    }
    case RingKind::Product:
      return !a.is_scalar() && a.parts().size() == 2 &&
             left().is_valid(a.parts()[0]) && right().is_valid(a.parts()[1]);
  }
  return false;
}

Elem RingSpec::normalize_poly(std::vector<Elem> coeffs) const {
  while (!coeffs.empty() && base().is_zero(coeffs.back())) coeffs.pop_back();
  return Elem(std::move(coeffs));
}

Elem RingSpec::add(const Elem& a, const Elem& b) const {
  switch (kind()) {
    case RingKind::Int: return Elem(a.scalar() + b.scalar());
    case RingKind::Zmod:
    case RingKind::PrimeField: {
      BigInt r = a.scalar() + b.scalar();
      if (r >= modulus()) r -= modulus();
      return Elem(r);
    }
    case RingKind::Poly: {
      const auto& x = a.parts();
      const auto& y = b.parts();
      std::vector<Elem> out(std::max(x.size(), y.size()), base().zero());
      for (size_t i = 0; i < x.size(); ++i) out[i] = x[i];
      for (size_t i = 0; i < y.size(); ++i) out[i] = base().add(out[i], y[i]);
      return normalize_poly(std::move(out));
    }
    case RingKind::MonicExt: {
      std::vector<Elem> out(ext_degree());
      for (int i = 0; i < ext_degree(); ++i)
        out[i] = base().add(a.parts()[i], b.parts()[i]);
      return Elem(std::move(out));
    }
    case RingKind::Product:
      return Elem(std::vector<Elem>{left().add(a.parts()[0], b.parts()[0]),
                                    right().add(a.parts()[1], b.parts()[1])});
  }
  return Elem();
}

Elem RingSpec::neg(const Elem& a) const {
  switch (kind()) {
    case RingKind::Int: return Elem(-a.scalar());
    case RingKind::Zmod:
    case RingKind::PrimeField: {
      if (a.scalar() == 0) return a;
      return Elem(modulus() - a.scalar());
    }
    case RingKind::Poly: {
      std::vector<Elem> out;
      out.reserve(a.parts().size());
      for (const Elem& c : a.parts()) out.push_back(base().neg(c));
      return Elem(std::move(out));
    }
    case RingKind::MonicExt: {
      std::vector<Elem> out;
      out.reserve(ext_degree());
      for (const Elem& c : a.parts()) out.push_back(base().neg(c));
      return Elem(std::move(out));
    }
    case RingKind::Product:
      return Elem(std::vector<Elem>{left().neg(a.parts()[0]), right().neg(a.parts()[1])});
  }
  return Elem();
}

Elem RingSpec::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

Elem RingSpec::ext_reduce(std::vector<Elem> conv) const {
  const int d = ext_degree();
  std::vector<Elem> out(conv.begin(), conv.begin() + d);
  for (int k = d; k < static_cast<int>(conv.size()); ++k) {
    const Elem& c = conv[k];
    if (base().is_zero(c)) continue;
    const std::vector<Elem>& pw = n_->power_table[k - d];
    for (int i = 0; i < d; ++i)
      out[i] = base().add(out[i], base().mul(c, pw[i]));
  }
  return Elem(std::move(out));
}

Elem RingSpec::mul(const Elem& a, const Elem& b) const {
  switch (kind()) {
    case RingKind::Int: return Elem(a.scalar() * b.scalar());
    case RingKind::Zmod:
    case RingKind::PrimeField: return Elem((a.scalar() * b.scalar()) % modulus());
    case RingKind::Poly: {
      const auto& x = a.parts();
      const auto& y = b.parts();
      if (x.empty() || y.empty()) return zero();
      std::vector<Elem> out(x.size() + y.size() - 1, base().zero());
      for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < y.size(); ++j)
          out[i + j] = base().add(out[i + j], base().mul(x[i], y[j]));
      return normalize_poly(std::move(out));
    }
    case RingKind::MonicExt: {
      const int d = ext_degree();
      if (d == 1) {
        // x = -c_0, already reduced
        std::vector<Elem> conv{base().mul(a.parts()[0], b.parts()[0])};
        return Elem(std::move(conv));
      }
      std::vector<Elem> conv(2 * d - 1, base().zero());
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          conv[i + j] = base().add(conv[i + j], base().mul(a.parts()[i], b.parts()[j]));
      return ext_reduce(std::move(conv));
    }
    case RingKind::Product:
      return Elem(std::vector<Elem>{left().mul(a.parts()[0], b.parts()[0]),
                                    right().mul(a.parts()[1], b.parts()[1])});
  }
  return Elem();
}

bool RingSpec::eq(const Elem& a, const Elem& b) const { return a == b; }
bool RingSpec::is_zero(const Elem& a) const { return eq(a, zero()); }

int RingSpec::poly_degree(const Elem& a) {
  return static_cast<int>(a.parts().size()) - 1;
}

std::uint64_t RingSpec::height(const Elem& a) const {
  switch (kind()) {
    case RingKind::Int: {
      BigInt v = abs(a.scalar());
      if (v > std::numeric_limits<std::uint64_t>::max())
        return std::numeric_limits<std::uint64_t>::max();
      return v.convert_to<std::uint64_t>();
    }
    case RingKind::Zmod:
    case RingKind::PrimeField: return 0;
    case RingKind::Poly: {
      std::uint64_t h = a.parts().empty()
          ? 0
          : static_cast<std::uint64_t>(a.parts().size() - 1);
      for (const Elem& c : a.parts()) h = std::max(h, base().height(c));
      return h;
    }
    case RingKind::MonicExt: {
      std::uint64_t h = 0;
      for (const Elem& c : a.parts()) h = std::max(h, base().height(c));
      return h;
    }
    case RingKind::Product:
      return std::max(left().height(a.parts()[0]), right().height(a.parts()[1]));
  }
  return 0;
}

namespace {

// Graded odometer over component axes: emits all tuples whose components
// come from per-grade prefixes, grade by grade, skipping tuples already
// seen at the previous grade. First component varies slowest.
void graded_tuples(const std::vector<const std::vector<Elem>*>& per_grade_axes_prev,
                   const std::vector<const std::vector<Elem>*>& per_grade_axes,
                   const std::function<void(std::vector<Elem>)>& emit) {
  const size_t k = per_grade_axes.size();
  std::vector<size_t> idx(k, 0);
  std::vector<size_t> lim(k), prev(k);
  for (size_t i = 0; i < k; ++i) {
    lim[i] = per_grade_axes[i]->size();
    prev[i] = per_grade_axes_prev.empty() ? 0 : per_grade_axes_prev[i]->size();
    if (lim[i] == 0) return;
  }
  while (true) {
    bool fresh = per_grade_axes_prev.empty();
    for (size_t i = 0; i < k && !fresh; ++i)
      if (idx[i] >= prev[i]) fresh = true;
    if (fresh) {
      std::vector<Elem> t;
      t.reserve(k);
      for (size_t i = 0; i < k; ++i) t.push_back((*per_grade_axes[i])[idx[i]]);
      emit(std::move(t));
    }
    size_t i = k;
    while (i > 0) {
      --i;
      if (++idx[i] < lim[i]) break;
      idx[i] = 0;
      if (i == 0) return;
    }
  }
}

constexpr std::uint64_t kEnumGuard = 60'000'000;

}  // namespace

const std::vector<Elem>& RingSpec::enumerate(std::uint64_t h) const {
  auto it = n_->enum_cache.find(h);
  if (it != n_->enum_cache.end()) return it->second;

  std::vector<Elem> out;
  switch (kind()) {
    case RingKind::Int: {
      out.push_back(Elem(BigInt(0)));
      for (std::uint64_t k = 1; k <= h; ++k) {
        out.push_back(Elem(BigInt(k)));
        out.push_back(Elem(-BigInt(k)));
      }
      break;
    }
    case RingKind::Zmod:
    case RingKind::PrimeField: {
      if (modulus() > kEnumGuard)
        fail(ErrorCode::InfeasibleScan, "ring too large to enumerate: zmod:" + modulus().str());
      for (BigInt v = 0; v < modulus(); ++v) out.push_back(Elem(v));
      break;
    }
    case RingKind::Poly: {
      // grade 0: the constants; grade g >= 1: degree-g polynomials ordered
      // lexicographically by coefficients read high-to-low degree
      const auto& consts = base().enumerate(0);
      for (const Elem& c : consts) {
        if (base().is_zero(c))
          out.push_back(Elem(std::vector<Elem>{}));
        else
          out.push_back(Elem(std::vector<Elem>{c}));
      }
      for (std::uint64_t g = 1; g <= h; ++g) {
        std::vector<size_t> idx(g + 1, 0);
        // position 0 is the leading coefficient c_g (nonzero, so skip 0),
        // positions 1..g are c_{g-1}..c_0
        idx[0] = 1;
        const size_t nb = consts.size();
        if (nb <= 1) continue;
        while (true) {
          std::vector<Elem> cs(g + 1);
          for (std::uint64_t j = 0; j <= g; ++j) cs[j] = consts[idx[g - j]];
          out.push_back(Elem(std::move(cs)));
          size_t i = g + 1;
          bool done = false;
          while (i > 0) {
            --i;
            if (++idx[i] < nb) break;
            idx[i] = (i == 0) ? 1 : 0;
            if (i == 0) { done = true; break; }
          }
          if (done) break;
        }
      }
      break;
    }
    case RingKind::MonicExt:
    case RingKind::Product: {
      std::vector<RingSpec> comps;
      if (kind() == RingKind::MonicExt)
        comps.assign(ext_degree(), base());
      else
        comps = {left(), right()};
      std::uint64_t top = finite() ? 0 : h;
      for (std::uint64_t g = 0; g <= top; ++g) {
        std::vector<const std::vector<Elem>*> axes, prev_axes;
        for (const RingSpec& c : comps) axes.push_back(&c.enumerate(g));
        if (g > 0)
          for (const RingSpec& c : comps) prev_axes.push_back(&c.enumerate(g - 1));
        graded_tuples(prev_axes, axes,
                      [&](std::vector<Elem> t) { out.push_back(Elem(std::move(t))); });
      }
      break;
    }
  }
  auto [pos, ok] = n_->enum_cache.emplace(h, std::move(out));
  (void)ok;
  return pos->second;
}

// ---------------------------------------------------------------------------
// encodings

std::string RingSpec::encode(const Elem& a) const {
  switch (kind()) {
    case RingKind::Int:
    case RingKind::Zmod:
    case RingKind::PrimeField: return a.scalar().str();
    case RingKind::Poly: {
      if (a.parts().empty()) return base().encode(base().zero());
      std::string s;
      for (size_t i = 0; i < a.parts().size(); ++i) {
        if (i) s += ',';
        s += base().encode(a.parts()[i]);
      }
      return s;
    }
    case RingKind::MonicExt: {
      std::string s = "[";
      for (int i = 0; i < ext_degree(); ++i) {
        if (i) s += ',';
        s += base().encode(a.parts()[i]);
      }
      return s + "]";
    }
    case RingKind::Product:
      return "[" + left().encode(a.parts()[0]) + "," + right().encode(a.parts()[1]) + "]";
  }
  return {};
}

namespace {

BigInt parse_bigint(std::string_view s) {
  if (s.empty()) fail(ErrorCode::EncodingMismatch, "empty integer encoding");
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) fail(ErrorCode::EncodingMismatch, "bad integer encoding '" + std::string(s) + "'");
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      fail(ErrorCode::EncodingMismatch, "bad integer encoding '" + std::string(s) + "'");
  return BigInt(std::string(s));
}

// splits "a,b,c" at top level (no nesting inside [...])
std::vector<std::string_view> split_top(std::string_view s) {
  std::vector<std::string_view> out;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '[') ++depth;
    else if (s[i] == ']') --depth;
    else if (s[i] == ',' && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

}  // namespace

Elem RingSpec::decode(std::string_view text) const {
  switch (kind()) {
    case RingKind::Int: return Elem(parse_bigint(text));
    case RingKind::Zmod:
    case RingKind::PrimeField: {
      Elem e = from_int(parse_bigint(text));
      return e;
    }
    case RingKind::Poly: {
      std::vector<Elem> cs;
      for (std::string_view part : split_top(text)) cs.push_back(base().decode(part));
      return normalize_poly(std::move(cs));
    }
    case RingKind::MonicExt:
    case RingKind::Product: {
      if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        fail(ErrorCode::EncodingMismatch, "expected bracketed coordinates, got '" + std::string(text) + "'");
      auto parts = split_top(text.substr(1, text.size() - 2));
      if (kind() == RingKind::MonicExt) {
        if (static_cast<int>(parts.size()) != ext_degree())
          fail(ErrorCode::EncodingMismatch, "wrong coordinate count for " + to_string());
        std::vector<Elem> cs;
        for (std::string_view p : parts) cs.push_back(base().decode(p));
        return Elem(std::move(cs));
      }
      if (parts.size() != 2)
        fail(ErrorCode::EncodingMismatch, "product element needs two coordinates");
      return Elem(std::vector<Elem>{left().decode(parts[0]), right().decode(parts[1])});
    }
  }
  fail(ErrorCode::EncodingMismatch, "undecodable element");
}

// ---------------------------------------------------------------------------
// ring-spec mini-language

std::string RingSpec::to_string() const {
  switch (kind()) {
    case RingKind::Int: return "int";
    case RingKind::Zmod: return "zmod:" + modulus().str();
    case RingKind::PrimeField: return "gfp:" + modulus().str();
    case RingKind::Poly: return "poly:" + base().to_string() + ":" + varname();
    case RingKind::MonicExt: {
      std::string s = "monicext:" + base().to_string() + ":[";
      for (int i = 0; i < ext_degree(); ++i) {
        if (i) s += ',';
        s += base().encode(ext_coeffs()[i]);
      }
      return s + "]";
    }
    case RingKind::Product:
      return "prod(" + left().to_string() + "," + right().to_string() + ")";
  }
  return {};
}

namespace {

struct SpecParser {
  std::string_view s;
  size_t pos = 0;

  [[noreturn]] void err(const std::string& msg) {
    fail(ErrorCode::ParseError,
         "ring spec error at offset " + std::to_string(pos) + ": " + msg);
  }
  bool eat(char c) {
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }
  bool eat_word(std::string_view w) {
    if (s.substr(pos, w.size()) == w) { pos += w.size(); return true; }
    return false;
  }
  std::string_view until_any(std::string_view stops) {
    size_t start = pos;
    while (pos < s.size() && stops.find(s[pos]) == std::string_view::npos) ++pos;
    return s.substr(start, pos - start);
  }
  std::string_view bracketed() {
    if (!eat('[')) err("expected '['");
    size_t start = pos;
    int depth = 1;
    while (pos < s.size() && depth > 0) {
      if (s[pos] == '[') ++depth;
      if (s[pos] == ']') --depth;
      ++pos;
    }
    if (depth != 0) err("unbalanced brackets");
    return s.substr(start, pos - 1 - start);
  }

  RingSpec spec() {
    if (eat_word("int")) return RingSpec::integers();
    if (eat_word("zmod:")) return RingSpec::zmod(parse_bigint(until_any(",):")));
    if (eat_word("gfp:")) return RingSpec::prime_field(parse_bigint(until_any(",):")));
    if (eat_word("poly:")) {
      RingSpec b = spec();
      if (!eat(':')) err("expected ':<varname>' after poly base");
      std::string_view v = until_any(",)");
      if (v.empty()) err("empty poly variable name");
      return RingSpec::poly(b, std::string(v));
    }
    if (eat_word("monicext:")) {
      RingSpec b = spec();
      if (!eat(':')) err("expected ':[coeffs]' after monicext base");
      std::string_view body = bracketed();
      std::vector<Elem> cs;
      for (std::string_view part : split_top(body)) cs.push_back(b.decode(part));
      return RingSpec::monic_ext(b, std::move(cs));
    }
    if (eat_word("prod(")) {
      RingSpec l = spec();
      if (!eat(',')) err("expected ',' in prod(..)");
      RingSpec r = spec();
      if (!eat(')')) err("expected ')' closing prod");
      return RingSpec::product(l, r);
    }
    err("unknown ring spec");
  }
};

}  // namespace

RingSpec RingSpec::parse(std::string_view text) {
  SpecParser p{text};
  RingSpec r = p.spec();
  if (p.pos != text.size())
    fail(ErrorCode::ParseError, "trailing input in ring spec at offset " + std::to_string(p.pos));
  return r;
}

}  // namespace ringdef
