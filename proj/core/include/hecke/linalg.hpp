#pragma once

#include <hecke/rational.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace hecke {

// Dense matrix over Q, row-major. Everything is exact.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols, Rat(0)) {}
  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int r, int c) { return data_[size_t(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return data_[size_t(r) * cols_ + c]; }
  const std::vector<Rat>& flat() const { return data_; }
  std::vector<Rat> take_flat() && { return std::move(data_); }
  static RatMatrix from_flat(int rows, int cols, std::vector<Rat> data);

  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix operator*(const Rat& c) const;
  bool operator==(const RatMatrix& o) const = default;

  RatMatrix transpose() const;
  std::vector<Rat> apply(const std::vector<Rat>& v) const;  // A v
  bool is_zero() const;
  bool is_upper_triangular() const;

  // Row reduction in place to reduced row-echelon form; returns pivot columns.
  std::vector<int> rref();
  int rank() const;
  Rat det() const;  // square only
  std::optional<RatMatrix> inverse() const;
  // Basis of {x : A x = 0}, deterministic order (ascending free column).
  std::vector<std::vector<Rat>> kernel_basis() const;

  // Rows of the matrix restricted to the given row/column index subsets.
  RatMatrix submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;

 private:
  int rows_;
  int cols_;
  std::vector<Rat> data_;
};

// Incrementally maintained row space over Q in echelon form (pivots
// normalized to 1). An optional shadow of the basis modulo a fixed 61-bit
// prime provides a fast one-sided independence screen: when the screen says
// "independent" the vector is independent over Q (pivot entries are 1 and no
// stored denominator is divisible by the prime, which is checked); when it
// says "dependent" nothing is concluded. The screen never affects exactness,
// only the amount of exact arithmetic performed.
class RowSpace {
 public:
  explicit RowSpace(size_t cols, bool with_shadow = true);

  size_t dim() const { return rows_.size(); }
  size_t cols() const { return cols_; }
  const std::vector<std::vector<Rat>>& basis() const { return rows_; }
  bool shadow_active() const { return shadow_ok_; }

  // Exact reduction; appends when independent. Returns true if dim grew.
  bool insert(std::vector<Rat> v);
  // True only when v is certainly independent of the current basis over Q.
  bool screen_independent(const std::vector<Rat>& v) const;
  // Same one-sided screen for a vector given directly mod the prime (the
  // caller guarantees it is the image of the exact candidate).
  bool screen_independent_mod(std::vector<std::uint64_t> v) const;
  // Exact membership test (v reduces to zero).
  bool contains(std::vector<Rat> v) const;
  // Exact in-place reduction against the basis; returns false iff result is 0.
  bool reduce(std::vector<Rat>& v) const;

 private:
  size_t cols_;
  std::vector<std::vector<Rat>> rows_;
  std::vector<int> pivots_;
  bool shadow_ok_;
  std::vector<std::vector<std::uint64_t>> shadow_rows_;
};

namespace modp {
// 2^61 - 1, prime.
inline constexpr std::uint64_t kPrime = 2305843009213693951ULL;
std::uint64_t mul(std::uint64_t a, std::uint64_t b);
std::uint64_t add(std::uint64_t a, std::uint64_t b);
std::uint64_t sub(std::uint64_t a, std::uint64_t b);
std::uint64_t inv(std::uint64_t a);
// Image of a rational; nullopt when the denominator vanishes mod p.
std::optional<std::uint64_t> image(const Rat& r);
}  // namespace modp

}  // namespace hecke
