#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "a5def/gf.hpp"

namespace a5def {

// Coordinate vector over GF(2^e), one byte per coordinate.
using Vec = std::vector<uint8_t>;

bool is_zero(const Vec& v);
void add_scaled(Vec& acc, const Vec& v, uint8_t c, const Field& f);  // acc += c*v
Vec unit_vec(size_t n, size_t i, uint8_t c = 1);

// Dense matrix over GF(2^e). For e = 1 the rows are bit-packed machine
// words; otherwise one byte per entry. rank/kernel_basis/solve run Gaussian
// elimination on whichever representation is active.
class Matrix {
 public:
  Matrix(size_t rows, size_t cols, const Field& f);
  static Matrix identity(size_t n, const Field& f);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const Field& field() const { return *field_; }

  uint8_t get(size_t r, size_t c) const;
  void set(size_t r, size_t c, uint8_t v);

  Matrix transposed() const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Vec apply(const Vec& x) const;  // m * x

  size_t rank() const;
  std::vector<Vec> kernel_basis() const;
  std::optional<Vec> solve(const Vec& rhs) const;  // some x with m*x = rhs
  std::optional<Matrix> inverse() const;

  bool operator==(const Matrix& o) const;

 private:
  const Field* field_;
  size_t rows_, cols_;
  size_t wpr_ = 0;                // words per row when bit-packed
  std::vector<uint64_t> bits_;    // e == 1
  std::vector<uint8_t> bytes_;    // e > 1

  bool packed() const { return field_->degree() == 1; }
};

}  // namespace a5def
