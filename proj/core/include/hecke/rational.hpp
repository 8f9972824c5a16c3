#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

// Exact rational scalar. All arithmetic in the library is exact; there is no
// floating point anywhere.
using Rat = mpq_class;

// Parses "p", "-p/q" etc. Rejects q == 0 and garbage.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  for (char c : s) {
    if (!(c == '-' || c == '/' || (c >= '0' && c <= '9')))
      throw std::invalid_argument("bad rational literal: " + s);
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

// Canonical form "p/q" with q > 0, or just "p" when q == 1.
inline std::string format_rat(const Rat& r) { return r.get_str(); }

inline std::vector<Rat> rat_vector(std::initializer_list<long> xs) {
  std::vector<Rat> v;
  v.reserve(xs.size());
  for (long x : xs) v.emplace_back(x);
  return v;
}

// True iff r is the square of a rational; if so *root is the nonnegative root.
inline bool rat_square_root(const Rat& r, Rat* root) {
  if (r < 0) return false;
  mpz_class num = r.get_num(), den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  if (root) *root = Rat(rn) / Rat(rd);
  return true;
}

}  // namespace hecke
