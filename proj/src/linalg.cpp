#include "a5def/linalg.hpp"

#include <bit>
#include <cstring>
#include <stdexcept>

namespace a5def {

bool is_zero(const Vec& v) {
  for (uint8_t x : v)
    if (x) return false;
  return true;
}

void add_scaled(Vec& acc, const Vec& v, uint8_t c, const Field& f) {
  if (c == 0) return;
  if (acc.size() != v.size()) throw std::invalid_argument("add_scaled: length mismatch");
  if (c == 1) {
    for (size_t i = 0; i < v.size(); ++i) acc[i] ^= v[i];
  } else {
    for (size_t i = 0; i < v.size(); ++i) acc[i] ^= f.mul(c, v[i]);
  }
}

Vec unit_vec(size_t n, size_t i, uint8_t c) {
  Vec v(n, 0);
  v[i] = c;
  return v;
}

Matrix::Matrix(size_t rows, size_t cols, const Field& f)
    : field_(&f), rows_(rows), cols_(cols) {
  if (packed()) {
    wpr_ = (cols + 63) / 64;
    bits_.assign(rows * wpr_, 0);
  } else {
    bytes_.assign(rows * cols, 0);
  }
}

Matrix Matrix::identity(size_t n, const Field& f) {
  Matrix m(n, n, f);
  for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

uint8_t Matrix::get(size_t r, size_t c) const {
  if (packed()) return (bits_[r * wpr_ + c / 64] >> (c % 64)) & 1u;
  return bytes_[r * cols_ + c];
}

void Matrix::set(size_t r, size_t c, uint8_t v) {
  if (packed()) {
    uint64_t& w = bits_[r * wpr_ + c / 64];
    uint64_t bit = uint64_t(1) << (c % 64);
    if (v & 1)
      w |= bit;
    else
      w &= ~bit;
  } else {
    bytes_[r * cols_ + c] = v;
  }
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_, *field_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) {
      uint8_t v = get(r, c);
      if (v) t.set(c, r, v);
    }
  return t;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_)
    throw std::invalid_argument("matrix add: shape mismatch");
  Matrix s(rows_, cols_, *field_);
  if (packed()) {
    for (size_t i = 0; i < bits_.size(); ++i) s.bits_[i] = bits_[i] ^ o.bits_[i];
  } else {
    for (size_t i = 0; i < bytes_.size(); ++i) s.bytes_[i] = bytes_[i] ^ o.bytes_[i];
  }
  return s;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_ || field_ != o.field_)
    throw std::invalid_argument("matrix multiply: shape mismatch");
  Matrix p(rows_, o.cols_, *field_);
  if (packed()) {
    for (size_t r = 0; r < rows_; ++r)
      for (size_t k = 0; k < cols_; ++k)
        if (get(r, k))
          for (size_t w = 0; w < o.wpr_; ++w) p.bits_[r * p.wpr_ + w] ^= o.bits_[k * o.wpr_ + w];
  } else {
    for (size_t r = 0; r < rows_; ++r)
      for (size_t k = 0; k < cols_; ++k) {
        uint8_t a = bytes_[r * cols_ + k];
        if (!a) continue;
        for (size_t c = 0; c < o.cols_; ++c)
          p.bytes_[r * o.cols_ + c] ^= field_->mul(a, o.bytes_[k * o.cols_ + c]);
      }
  }
  return p;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("apply: length mismatch");
  Vec y(rows_, 0);
  if (packed()) {
    std::vector<uint64_t> xp(wpr_, 0);
    for (size_t c = 0; c < cols_; ++c)
      if (x[c] & 1) xp[c / 64] |= uint64_t(1) << (c % 64);
    for (size_t r = 0; r < rows_; ++r) {
      uint64_t acc = 0;
      for (size_t w = 0; w < wpr_; ++w) acc ^= bits_[r * wpr_ + w] & xp[w];
      y[r] = uint8_t(std::popcount(acc) & 1);
    }
  } else {
    for (size_t r = 0; r < rows_; ++r) {
      uint8_t acc = 0;
      for (size_t c = 0; c < cols_; ++c) acc ^= field_->mul(bytes_[r * cols_ + c], x[c]);
      y[r] = acc;
    }
  }
  return y;
}

namespace {

// Reduced row echelon form in place; returns pivot columns in order.
std::vector<size_t> rref_packed(std::vector<uint64_t>& w, size_t rows, size_t cols, size_t wpr) {
  std::vector<size_t> pivots;
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t wi = c / 64;
    uint64_t bit = uint64_t(1) << (c % 64);
    size_t sel = rows;
    for (size_t r = rank; r < rows; ++r)
      if (w[r * wpr + wi] & bit) {
        sel = r;
        break;
      }
    if (sel == rows) continue;
    if (sel != rank)
      for (size_t k = 0; k < wpr; ++k) std::swap(w[sel * wpr + k], w[rank * wpr + k]);
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      if (w[r * wpr + wi] & bit)
        for (size_t k = 0; k < wpr; ++k) w[r * wpr + k] ^= w[rank * wpr + k];
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

std::vector<size_t> rref_bytes(std::vector<uint8_t>& w, size_t rows, size_t cols, const Field& f) {
  std::vector<size_t> pivots;
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t sel = rows;
    for (size_t r = rank; r < rows; ++r)
      if (w[r * cols + c]) {
        sel = r;
        break;
      }
    if (sel == rows) continue;
    if (sel != rank)
      for (size_t k = 0; k < cols; ++k) std::swap(w[sel * cols + k], w[rank * cols + k]);
    uint8_t piv = w[rank * cols + c];
    if (piv != 1) {
      uint8_t pi = f.inv(piv);
      for (size_t k = 0; k < cols; ++k) w[rank * cols + k] = f.mul(pi, w[rank * cols + k]);
    }
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      uint8_t a = w[r * cols + c];
      if (!a) continue;
      for (size_t k = 0; k < cols; ++k) w[r * cols + k] ^= f.mul(a, w[rank * cols + k]);
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

}  // namespace

size_t Matrix::rank() const {
  if (packed()) {
    auto w = bits_;
    return rref_packed(w, rows_, cols_, wpr_).size();
  }
  auto w = bytes_;
  return rref_bytes(w, rows_, cols_, *field_).size();
}

std::vector<Vec> Matrix::kernel_basis() const {
  std::vector<size_t> pivots;
  // keep the reduced workspace to read the dependency coefficients
  std::vector<uint64_t> wp;
  std::vector<uint8_t> wb;
  if (packed()) {
    wp = bits_;
    pivots = rref_packed(wp, rows_, cols_, wpr_);
  } else {
    wb = bytes_;
    pivots = rref_bytes(wb, rows_, cols_, *field_);
  }
  std::vector<bool> is_pivot(cols_, false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (size_t c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    Vec x(cols_, 0);
    x[c] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) {
      uint8_t v = packed() ? uint8_t((wp[r * wpr_ + c / 64] >> (c % 64)) & 1u) : wb[r * cols_ + c];
      x[pivots[r]] = v;  // char 2: x_p = coeff * x_free
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<Vec> Matrix::solve(const Vec& rhs) const {
  if (rhs.size() != rows_) throw std::invalid_argument("solve: rhs length mismatch");
  size_t acols = cols_ + 1;
  Matrix aug(rows_, acols, *field_);
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = 0; c < cols_; ++c) {
      uint8_t v = get(r, c);
      if (v) aug.set(r, c, v);
    }
    if (rhs[r]) aug.set(r, cols_, rhs[r]);
  }
  std::vector<size_t> pivots;
  if (aug.packed()) {
    pivots = rref_packed(aug.bits_, rows_, acols, aug.wpr_);
  } else {
    pivots = rref_bytes(aug.bytes_, rows_, acols, *field_);
  }
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // inconsistent
  Vec x(cols_, 0);
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.get(r, cols_);
  return x;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse: matrix not square");
  size_t n = rows_;
  Matrix aug(n, 2 * n, *field_);
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < n; ++c) {
      uint8_t v = get(r, c);
      if (v) aug.set(r, c, v);
    }
    aug.set(r, n + r, 1);
  }
  std::vector<size_t> pivots;
  if (aug.packed()) {
    pivots = rref_packed(aug.bits_, n, 2 * n, aug.wpr_);
  } else {
    pivots = rref_bytes(aug.bytes_, n, 2 * n, *field_);
  }
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n, *field_);
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) {
      uint8_t v = aug.get(r, n + c);
      if (v) inv.set(r, c, v);
    }
  return inv;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_->degree() != o.field_->degree()) return false;
  if (packed()) return bits_ == o.bits_;
  return bytes_ == o.bytes_;
}

}  // namespace a5def
