#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hecke/linalg.hpp>

#include <random>
#include <vector>

using namespace hecke;

namespace {

RatMatrix random_matrix(int r, int c, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 3);
  RatMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) {
      Rat v(num(rng), den(rng));
      v.canonicalize();
      m.at(i, j) = v;
    }
  return m;
}

}  // namespace

TEST_CASE("echelon form, rank, kernel") {
  RatMatrix a(3, 3);
  a.at(0, 0) = Rat(1);
  a.at(0, 1) = Rat(2);
  a.at(0, 2) = Rat(3);
  a.at(1, 0) = Rat(2);
  a.at(1, 1) = Rat(4);
  a.at(1, 2) = Rat(6);
  a.at(2, 0) = Rat(1);
  a.at(2, 1) = Rat(0);
  a.at(2, 2) = Rat(1);
  CHECK(a.rank() == 2);
  const auto kernel = a.kernel_basis();
  REQUIRE(kernel.size() == 1);
  // Kernel vectors really solve the system.
  for (int i = 0; i < 3; ++i) {
    Rat dot(0);
    for (int j = 0; j < 3; ++j) dot += a.at(i, j) * kernel[0][j];
    CHECK(dot == Rat(0));
  }
}

TEST_CASE("inverse and determinant") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto m = random_matrix(4, 4, rng);
    const auto inv = m.inverse();
    if (m.det() == 0) {
      CHECK(!inv.has_value());
      CHECK(m.rank() < 4);
    } else {
      REQUIRE(inv.has_value());
      CHECK(*inv * m == RatMatrix::identity(4));
      CHECK(m * *inv == RatMatrix::identity(4));
    }
  }
  RatMatrix u(2, 2);
  u.at(0, 0) = Rat(1, 2);
  u.at(0, 1) = Rat(3);
  u.at(1, 1) = Rat(4);
  CHECK(u.det() == Rat(2));
  CHECK(u.is_upper_triangular());
  CHECK(!u.transpose().is_upper_triangular());
}

TEST_CASE("rank is invariant under row operations and transpose") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    auto m = random_matrix(4, 6, rng);
    const int r = m.rank();
    CHECK(m.transpose().rank() == r);
    auto rr = m;
    const auto pivots = rr.rref();
    CHECK(static_cast<int>(pivots.size()) == r);
    CHECK(rr.rank() == r);
    CHECK(static_cast<int>(m.kernel_basis().size()) == 6 - r);
  }
}

TEST_CASE("incremental row space agrees with batch rank") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 8; ++trial) {
    const int cols = 7;
    RowSpace screened(cols, true);
    RowSpace plain(cols, false);
    std::vector<std::vector<Rat>> rows;
    for (int i = 0; i < 12; ++i) {
      std::vector<Rat> v(cols);
      std::uniform_int_distribution<int> num(-5, 5);
      std::uniform_int_distribution<int> den(1, 4);
      for (auto& x : v) {
        x = Rat(num(rng), den(rng));
        x.canonicalize();
      }
      rows.push_back(v);
      const bool a = screened.insert(v);
      const bool b = plain.insert(v);
      // The mod-p shadow is a screen only; acceptance must match exactly.
      CHECK(a == b);
    }
    RatMatrix m(static_cast<int>(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i)
      for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
    CHECK(static_cast<int>(screened.dim()) == m.rank());
    CHECK(screened.dim() == plain.dim());
  }
}

TEST_CASE("submatrix and apply") {
  RatMatrix m(2, 3);
  m.at(0, 0) = Rat(1);
  m.at(0, 1) = Rat(2);
  m.at(0, 2) = Rat(3);
  m.at(1, 0) = Rat(4);
  m.at(1, 1) = Rat(5);
  m.at(1, 2) = Rat(6);
  const auto sub = m.submatrix({1}, {0, 2});
  CHECK(sub.rows() == 1);
  CHECK(sub.cols() == 2);
  CHECK(sub.at(0, 0) == Rat(4));
  CHECK(sub.at(0, 1) == Rat(6));
  const auto image = m.apply({Rat(1), Rat(1), Rat(1)});
  CHECK(image == std::vector<Rat>{Rat(6), Rat(15)});
}
