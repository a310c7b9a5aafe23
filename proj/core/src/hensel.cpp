#include "ringdef/hensel.hpp"

#include <cctype>

#include "ringdef/error.hpp"
#include "ringdef/ring.hpp"

namespace ringdef {

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

IntPoly IntPoly::derivative() const {
  IntPoly d;
  for (size_t i = 1; i < coeffs.size(); ++i) d.coeffs.push_back(coeffs[i] * BigInt(i));
  if (d.coeffs.empty()) d.coeffs.push_back(0);
  return d;
}

namespace {

BigInt mod_pos(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

BigInt inv_mod_prime_power(const BigInt& a, const BigInt& m, const BigInt& p) {
  // a invertible mod m = p^k iff p does not divide a; extended Euclid
  BigInt t = 0, nt = 1, r = m, nr = mod_pos(a, m);
  while (nr != 0) {
    BigInt q = r / nr;
    BigInt tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) fail(ErrorCode::BadArgument, "element not invertible mod " + p.str() + "^k");
  return mod_pos(t, m);
}

}  // namespace

BigInt hensel_lift(const IntPoly& P, const BigInt& p, const BigInt& x0, unsigned q) {
  if (!is_prime_int(p)) fail(ErrorCode::NotPrime, "hensel modulus " + p.str() + " is not prime");
  if (q == 0) fail(ErrorCode::BadArgument, "target exponent must be >= 1");
  BigInt x = mod_pos(x0, p);
  if (mod_pos(P.eval(x), p) != 0)
    fail(ErrorCode::NotASimpleRoot, "P(x0) != 0 mod " + p.str());
  IntPoly dP = P.derivative();
  if (mod_pos(dP.eval(x), p) == 0)
    fail(ErrorCode::NotASimpleRoot, "P'(x0) = 0 mod " + p.str() + ": root is not simple");

  unsigned e = 1;
  BigInt m = p;
  while (e < q) {
    unsigned ne = std::min(2 * e, q);
    BigInt nm = m;
    for (unsigned i = e; i < ne; ++i) nm *= p;
    // Newton step mod p^ne
    BigInt fx = mod_pos(P.eval(x), nm);
    BigInt dfx = dP.eval(x);
    BigInt corr = (fx * inv_mod_prime_power(dfx, nm, p)) % nm;
    x = mod_pos(x - corr, nm);
    e = ne;
    m = nm;
  }
  return x;
}

// ---------------------------------------------------------------------------
// tiny univariate parser: sums of k*X^e / X^e / constants

IntPoly IntPoly::parse(std::string_view text) {
  std::vector<BigInt> cs;
  auto bump = [&](size_t e, const BigInt& v) {
    if (cs.size() <= e) cs.resize(e + 1, 0);
    cs[e] += v;
  };
  size_t i = 0;
  auto err = [&](const std::string& m) {
    fail(ErrorCode::ParseError, "polynomial syntax at offset " + std::to_string(i) + ": " + m);
  };
  auto skip_ws = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
  skip_ws();
  bool first = true;
  while (i < text.size()) {
    int sign = 1;
    skip_ws();
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      err("expected '+' or '-'");
    }
    first = false;
    BigInt coeff = 1;
    bool have_coeff = false;
    size_t start = i;
    while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
    if (i > start) {
      coeff = BigInt(std::string(text.substr(start, i - start)));
      have_coeff = true;
    }
    skip_ws();
    if (i < text.size() && (text[i] == '*')) { ++i; skip_ws(); }
    size_t expo = 0;
    if (i < text.size() && (text[i] == 'X' || text[i] == 'x')) {
      ++i;
      expo = 1;
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws();
        size_t es = i;
        while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
        if (i == es) err("expected exponent digits");
        expo = std::stoul(std::string(text.substr(es, i - es)));
      }
    } else if (!have_coeff) {
      err("expected coefficient or X");
    }
    bump(expo, sign * coeff);
    skip_ws();
  }
  if (cs.empty()) fail(ErrorCode::ParseError, "empty polynomial");
  while (cs.size() > 1 && cs.back() == 0) cs.pop_back();
  IntPoly P;
  P.coeffs = std::move(cs);
  return P;
}

std::string IntPoly::to_string() const {
  std::string s;
  for (size_t e = coeffs.size(); e-- > 0;) {
    const BigInt& c = coeffs[e];
    if (c == 0 && coeffs.size() > 1) continue;
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    BigInt a = abs(c);
    if (e == 0 || a != 1) s += a.str();
    if (e >= 1) {
      s += "X";
      if (e >= 2) s += "^" + std::to_string(e);
    }
  }
  if (s.empty()) s = "0";
  return s;
}

}  // namespace ringdef
