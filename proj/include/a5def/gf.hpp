#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace a5def {

// Arithmetic in GF(2^e) for e in {1, 2, 4, 8}. Elements are bit patterns of
// width e in the polynomial basis modulo a fixed irreducible polynomial: the
// lexicographically smallest primitive polynomial of each degree, found by
// search at startup and listed in the README. Addition is XOR; multiplication
// is table-driven for e > 1.
class Field {
 public:
  static const Field& get(int degree);  // shared immutable instances

  int degree() const { return e_; }
  unsigned order() const { return 1u << e_; }  // number of field elements
  uint16_t modulus() const { return poly_; }

  uint8_t add(uint8_t a, uint8_t b) const { return a ^ b; }
  uint8_t mul(uint8_t a, uint8_t b) const {
    if (e_ == 1) return a & b;
    if (a == 0 || b == 0) return 0;
    unsigned s = unsigned(log_[a]) + unsigned(log_[b]);
    unsigned m = order() - 1;
    return alog_[s >= m ? s - m : s];
  }
  uint8_t inv(uint8_t a) const;
  uint8_t pow(uint8_t a, unsigned long long k) const;
  uint8_t frobenius(uint8_t a) const { return mul(a, a); }
  uint8_t sqrt(uint8_t a) const;  // inverse of the Frobenius map

  static std::string to_hex(uint8_t v);
  uint8_t from_hex(const std::string& s) const;  // validates range

 private:
  explicit Field(int e);

  int e_;
  uint16_t poly_ = 0;
  std::array<uint8_t, 256> log_{};
  std::array<uint8_t, 256> alog_{};
};

}  // namespace a5def
