#include "a5def/gf.hpp"

#include <stdexcept>
#include <vector>

namespace a5def {

namespace {

int poly_degree(uint32_t p) {
  int d = -1;
  while (p) {
    ++d;
    p >>= 1;
  }
  return d;
}

uint32_t poly_rem(uint32_t a, uint32_t b) {
  int db = poly_degree(b);
  while (a != 0 && poly_degree(a) >= db) a ^= b << (poly_degree(a) - db);
  return a;
}

bool poly_irreducible(uint32_t p) {
  int d = poly_degree(p);
  for (uint32_t q = 2; poly_degree(q) <= d / 2; ++q)
    if (poly_rem(p, q) == 0) return false;
  return true;
}

uint32_t mulmod(uint32_t a, uint32_t b, uint32_t mod, int deg) {
  uint32_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a >> deg) a ^= mod;
  }
  return r;
}

uint32_t powmod(uint32_t a, uint32_t k, uint32_t mod, int deg) {
  uint32_t r = 1;
  while (k) {
    if (k & 1) r = mulmod(r, a, mod, deg);
    a = mulmod(a, a, mod, deg);
    k >>= 1;
  }
  return r;
}

std::vector<uint32_t> prime_factors(uint32_t n) {
  std::vector<uint32_t> out;
  for (uint32_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

// x generates the multiplicative group of F2[x]/(p)
bool x_primitive(uint32_t p, int deg) {
  uint32_t ord = (1u << deg) - 1;
  if (powmod(2, ord, p, deg) != 1) return false;
  for (uint32_t q : prime_factors(ord))
    if (powmod(2, ord / q, p, deg) == 1) return false;
  return true;
}

uint32_t smallest_primitive_poly(int e) {
  for (uint32_t p = (1u << e) + 1;; p += 2)
    if (poly_irreducible(p) && x_primitive(p, e)) return p;
}

}  // namespace

Field::Field(int e) : e_(e) {
  if (e == 1) {
    poly_ = 0x3;
    return;
  }
  poly_ = static_cast<uint16_t>(smallest_primitive_poly(e));
  unsigned m = order() - 1;
  uint32_t x = 1;
  for (unsigned i = 0; i < m; ++i) {
    alog_[i] = static_cast<uint8_t>(x);
    log_[x] = static_cast<uint8_t>(i);
    x = mulmod(x, 2, poly_, e_);
  }
}

const Field& Field::get(int degree) {
  switch (degree) {
    case 1: {
      static const Field f(1);
      return f;
    }
    case 2: {
      static const Field f(2);
      return f;
    }
    case 4: {
      static const Field f(4);
      return f;
    }
    case 8: {
      static const Field f(8);
      return f;
    }
    default:
      throw std::invalid_argument("unsupported field degree (expected 1, 2, 4 or 8)");
  }
}

uint8_t Field::inv(uint8_t a) const {
  if (a == 0) throw std::invalid_argument("division by zero in GF(2^e)");
  if (e_ == 1) return 1;
  unsigned m = order() - 1;
  return alog_[(m - log_[a]) % m];
}

uint8_t Field::pow(uint8_t a, unsigned long long k) const {
  if (a == 0) return k == 0 ? 1 : 0;
  if (e_ == 1) return 1;
  unsigned m = order() - 1;
  return alog_[(unsigned(log_[a]) * unsigned(k % m)) % m];
}

uint8_t Field::sqrt(uint8_t a) const { return pow(a, 1ull << (e_ - 1)); }

std::string Field::to_hex(uint8_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  if (v >= 16) s.push_back(digits[v >> 4]);
  s.push_back(digits[v & 0xf]);
  return s;
}

uint8_t Field::from_hex(const std::string& s) const {
  if (s.empty() || s.size() > 2) throw std::invalid_argument("bad field element '" + s + "'");
  unsigned v = 0;
  for (char c : s) {
    v <<= 4;
    if (c >= '0' && c <= '9')
      v |= unsigned(c - '0');
    else if (c >= 'a' && c <= 'f')
      v |= unsigned(c - 'a' + 10);
    else
      throw std::invalid_argument("bad field element '" + s + "'");
  }
  if (v >= order())
    throw std::invalid_argument("field element '" + s + "' out of range for GF(2^" +
                                std::to_string(e_) + ")");
  return static_cast<uint8_t>(v);
}

}  // namespace a5def
