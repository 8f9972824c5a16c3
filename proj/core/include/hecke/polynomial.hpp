#pragma once

#include <hecke/rational.hpp>
#include <hecke/weyl.hpp>

#include <map>
#include <random>
#include <string>
#include <vector>

namespace hecke {

// Element of the polynomial ring Q[x_1..x_n]. Terms are kept in a map ordered
// by exponent-lex; zero coefficients are never stored. The variable letter is
// a display concern only ("e" for the symmetric-algebra copy inside the
// algebra, "z" for the coordinate ring the Dunkl operators act on).
class Polynomial {
 public:
  using Exponents = std::vector<unsigned>;

  explicit Polynomial(int n = 0) : n_(n) {}
  static Polynomial constant(int n, const Rat& c);
  static Polynomial variable(int n, int l);  // x_l
  static Polynomial monomial(int n, Exponents exp, const Rat& c);
  // Linear form sum coeffs[l-1] * x_l.
  static Polynomial linear_form(int n, const std::vector<Rat>& coeffs);
  static Polynomial from_root(int n, const Root& alpha);

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;
  int degree_in(int l) const;
  const std::map<Exponents, Rat>& terms() const { return terms_; }
  Rat coefficient(const Exponents& exp) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rat& c) const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  bool operator==(const Polynomial& o) const = default;

  Polynomial pow(unsigned e) const;

  // Substitution x_i -> sign * x_{pi(i)} for a signed permutation.
  Polynomial apply(const SignedPermutation& w) const;
  Polynomial derivative(int l) const;
  Rat evaluate(const std::vector<Rat>& point) const;
  bool is_symmetric() const;

  // Exact quotient by a linear form with zero constant term; throws when the
  // division leaves a remainder.
  Polynomial divide_by_linear(const Polynomial& linear) const;

  static Polynomial elementary_symmetric(int n, int r);
  static Polynomial power_sum(int n, int r);

  // Uniform random polynomial with all monomials of total degree <= maxdeg,
  // coefficients in [-bound, bound] over denominators {1, 2, 3}.
  static Polynomial random(int n, int maxdeg, std::mt19937_64& rng, long bound = 6);

  std::string to_string(const std::string& var = "z") const;
  static Polynomial parse(int n, const std::string& text, const std::string& var = "z");

  void add_term(const Exponents& exp, const Rat& c);

 private:
  int n_;
  std::map<Exponents, Rat> terms_;
};

inline Polynomial operator*(const Rat& c, const Polynomial& p) { return p * c; }

}  // namespace hecke
