#include <hecke/linalg.hpp>

#include <stdexcept>

namespace hecke {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_flat(int rows, int cols, std::vector<Rat> data) {
  if (data.size() != size_t(rows) * cols) throw std::invalid_argument("flat size mismatch");
  RatMatrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.data_ = std::move(data);
  return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in product");
  RatMatrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Rat& b = o.at(k, j);
        if (b == 0) continue;
        out.at(i, j) += a * b;
      }
    }
  }
  return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
  RatMatrix out(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
  return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
  RatMatrix out(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
  return out;
}

RatMatrix RatMatrix::operator*(const Rat& c) const {
  RatMatrix out(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * c;
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

std::vector<Rat> RatMatrix::apply(const std::vector<Rat>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("vector size mismatch");
  std::vector<Rat> out(rows_, Rat(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) out[i] += at(i, j) * v[j];
  return out;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

bool RatMatrix::is_upper_triangular() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < i && j < cols_; ++j)
      if (at(i, j) != 0) return false;
  return true;
}

std::vector<int> RatMatrix::rref() {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int sel = -1;
    for (int r = row; r < rows_; ++r)
      if (at(r, col) != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < cols_; ++j) std::swap(at(sel, j), at(row, j));
    const Rat piv = at(row, col);
    for (int j = col; j < cols_; ++j) at(row, j) /= piv;
    for (int r = 0; r < rows_; ++r) {
      if (r == row) continue;
      const Rat f = at(r, col);
      if (f == 0) continue;
      for (int j = col; j < cols_; ++j) at(r, j) -= f * at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int RatMatrix::rank() const {
  RatMatrix copy = *this;
  return static_cast<int>(copy.rref().size());
}

Rat RatMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det needs a square matrix");
  RatMatrix m = *this;
  Rat d(1);
  for (int col = 0; col < cols_; ++col) {
    int sel = -1;
    for (int r = col; r < rows_; ++r)
      if (m.at(r, col) != 0) {
        sel = r;
        break;
      }
    if (sel < 0) return Rat(0);
    if (sel != col) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(col, j));
      d = -d;
    }
    const Rat piv = m.at(col, col);
    d *= piv;
    for (int r = col + 1; r < rows_; ++r) {
      const Rat f = m.at(r, col) / piv;
      if (f == 0) continue;
      for (int j = col; j < cols_; ++j) m.at(r, j) -= f * m.at(col, j);
    }
  }
  return d;
}

std::optional<RatMatrix> RatMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse needs a square matrix");
  RatMatrix aug(rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = 1;
  }
  auto pivots = aug.rref();
  if (static_cast<int>(pivots.size()) != rows_ || pivots.back() >= cols_) return std::nullopt;
  for (int r = 0; r < rows_; ++r)
    if (pivots[r] != r) return std::nullopt;
  RatMatrix inv(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
  return inv;
}

std::vector<std::vector<Rat>> RatMatrix::kernel_basis() const {
  RatMatrix m = *this;
  const auto pivots = m.rref();
  std::vector<char> is_pivot(cols_, 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> x(cols_, Rat(0));
    x[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m.at(static_cast<int>(r), free);
    basis.push_back(std::move(x));
  }
  return basis;
}

RatMatrix RatMatrix::submatrix(const std::vector<int>& row_idx,
                               const std::vector<int>& col_idx) const {
  RatMatrix out(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
  for (size_t i = 0; i < row_idx.size(); ++i)
    for (size_t j = 0; j < col_idx.size(); ++j) out.at(int(i), int(j)) = at(row_idx[i], col_idx[j]);
  return out;
}

namespace modp {

std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;  // < 2^62, no overflow
  if (s >= kPrime) s -= kPrime;
  return s;
}

std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t inv(std::uint64_t a) {
  // Fermat: a^(p-2).
  std::uint64_t base = a % kPrime, out = 1, e = kPrime - 2;
  while (e) {
    if (e & 1) out = mul(out, base);
    base = mul(base, base);
    e >>= 1;
  }
  return out;
}

std::optional<std::uint64_t> image(const Rat& r) {
  const std::uint64_t num = mpz_fdiv_ui(r.get_num().get_mpz_t(), kPrime);
  const std::uint64_t den = mpz_fdiv_ui(r.get_den().get_mpz_t(), kPrime);
  if (den == 0) return std::nullopt;
  return mul(num, inv(den));
}

}  // namespace modp

RowSpace::RowSpace(size_t cols, bool with_shadow) : cols_(cols), shadow_ok_(with_shadow) {}

bool RowSpace::reduce(std::vector<Rat>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector size mismatch");
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Rat& c = v[pivots_[i]];
    if (c == 0) continue;
    const Rat f = c;  // pivot of rows_[i] is 1
    const auto& row = rows_[i];
    for (size_t j = pivots_[i]; j < cols_; ++j)
      if (row[j] != 0) v[j] -= f * row[j];
  }
  for (const auto& x : v)
    if (x != 0) return true;
  return false;
}

bool RowSpace::insert(std::vector<Rat> v) {
  if (!reduce(v)) return false;
  size_t piv = 0;
  while (v[piv] == 0) ++piv;
  const Rat lead = v[piv];
  for (size_t j = piv; j < cols_; ++j)
    if (v[j] != 0) v[j] /= lead;
  if (shadow_ok_) {
    std::vector<std::uint64_t> srow(cols_, 0);
    for (size_t j = piv; j < cols_; ++j) {
      if (v[j] == 0) continue;
      auto im = modp::image(v[j]);
      if (!im) {
        shadow_ok_ = false;
        shadow_rows_.clear();
        break;
      }
      srow[j] = *im;
    }
    if (shadow_ok_) shadow_rows_.push_back(std::move(srow));
  }
  // Keep rows ordered by pivot column so reduction sweeps left to right.
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < static_cast<int>(piv)) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, static_cast<int>(piv));
  if (shadow_ok_ && shadow_rows_.size() == rows_.size()) {
    auto srow = std::move(shadow_rows_.back());
    shadow_rows_.pop_back();
    shadow_rows_.insert(shadow_rows_.begin() + pos, std::move(srow));
  }
  return true;
}

bool RowSpace::screen_independent(const std::vector<Rat>& v) const {
  if (!shadow_ok_) return false;
  if (v.size() != cols_) throw std::invalid_argument("vector size mismatch");
  std::vector<std::uint64_t> w(cols_, 0);
  for (size_t j = 0; j < cols_; ++j) {
    if (v[j] == 0) continue;
    auto im = modp::image(v[j]);
    if (!im) return false;  // cannot certify, caller falls back
    w[j] = *im;
  }
  return screen_independent_mod(std::move(w));
}

bool RowSpace::screen_independent_mod(std::vector<std::uint64_t> w) const {
  if (!shadow_ok_) return false;
  if (w.size() != cols_) throw std::invalid_argument("vector size mismatch");
  for (size_t i = 0; i < rows_.size(); ++i) {
    const std::uint64_t c = w[pivots_[i]];
    if (c == 0) continue;
    const auto& row = shadow_rows_[i];
    for (size_t j = pivots_[i]; j < cols_; ++j)
      if (row[j]) w[j] = modp::sub(w[j], modp::mul(c, row[j]));
  }
  for (std::uint64_t x : w)
    if (x) return true;
  return false;
}

bool RowSpace::contains(std::vector<Rat> v) const { return !reduce(v); }

}  // namespace hecke
