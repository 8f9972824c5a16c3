#pragma once

#include <hecke/polynomial.hpp>
#include <hecke/rational.hpp>
#include <hecke/weyl.hpp>

#include <map>
#include <random>
#include <string>
#include <vector>

namespace hecke {

// Rank and deformation parameter of the algebra. The parameter k scales the
// two-sided multiplicity attached to the roots eps_a - eps_b and must be
// nonzero: at k = 0 the algebra degenerates to the plain smash product and
// the simplicity criteria lose their meaning.
struct AlgebraContext {
  int n;
  Rat k;

  AlgebraContext(int n_, Rat k_) : n(n_), k(std::move(k_)) {
    if (n < 1) throw std::invalid_argument("rank must be positive");
    if (k == 0) throw std::invalid_argument("deformation parameter k must be nonzero");
  }
};

// Element in PBW normal form: a finite sum  c * eps^j * t_w  with exponent
// multi-index j and group element w. Zero coefficients are never stored; the
// term order is exponent-lex, then the canonical group order, which makes
// every textual rendering and iteration deterministic.
class AlgebraElement {
 public:
  struct Key {
    std::vector<unsigned> exp;
    SignedPermutation w;
    auto operator<=>(const Key&) const = default;
  };
  using TermMap = std::map<Key, Rat>;

  explicit AlgebraElement(int n = 0) : n_(n) {}
  static AlgebraElement zero(int n) { return AlgebraElement(n); }
  static AlgebraElement one(int n);
  static AlgebraElement from_polynomial(const Polynomial& p);
  static AlgebraElement from_group(const SignedPermutation& w);
  static AlgebraElement variable(int n, int l);  // eps_l
  static AlgebraElement term(int n, std::vector<unsigned> exp, const SignedPermutation& w,
                             const Rat& c);

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  int poly_degree() const;
  // Sum of the polynomial coefficients sitting in front of t_w.
  Polynomial coefficient_poly(const SignedPermutation& w) const;

  AlgebraElement operator-() const;
  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator*(const Rat& c) const;
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  bool operator==(const AlgebraElement& o) const = default;

  void add_term(const std::vector<unsigned>& exp, const SignedPermutation& w, const Rat& c);

  std::string to_string() const;
  static AlgebraElement parse(int n, const std::string& text);

 private:
  int n_;
  TermMap terms_;
};

inline AlgebraElement operator*(const Rat& c, const AlgebraElement& a) { return a * c; }

// k (1 + t_a t_b), the multiplicity element attached to eps_a - eps_b.
// Symmetric in (a, b); rejects a == b.
AlgebraElement ktilde(const AlgebraContext& ctx, int a, int b);

// Normal form of t_w * p for a polynomial p: the group element is pushed
// through one variable at a time, each step trading t_v eps_l for the
// straightened terms plus multiplicity corrections along the inversion set
// of the permutation part.
AlgebraElement move_group_past_poly(const AlgebraContext& ctx, const SignedPermutation& w,
                                    const Polynomial& p);

// Product in normal form.
AlgebraElement multiply(const AlgebraContext& ctx, const AlgebraElement& a,
                        const AlgebraElement& b);

AlgebraElement commutator(const AlgebraContext& ctx, const AlgebraElement& a,
                          const AlgebraElement& b);

// Algebra involution fixing the polynomial part and the permutation part,
// scaling pure sign elements by their determinant. Its fixed subalgebra is
// the type-D subalgebra.
AlgebraElement delta(const AlgebraElement& a);

// Anti-automorphism: eps -> -eps, t_w -> det(w) t_{w^{-1}}.
AlgebraElement iota(const AlgebraContext& ctx, const AlgebraElement& a);

// True iff a is fixed by delta (even number of sign flips in every term).
bool in_type_d_subalgebra(const AlgebraElement& a);

// Divided difference  k (p - s_j(p)) / (eps_j - eps_{j+1}), exact.
Polynomial divided_difference(const AlgebraContext& ctx, int j, const Polynomial& p);

// The element Delta~_j(p) = t_{s_j} p - s_j(p) t_{s_j}. The straightening
// relation gives the closed form -divided_difference(p) * (1 + t_j t_{j+1});
// tests verify the two routes against each other.
AlgebraElement tilde_delta(const AlgebraContext& ctx, int j, const Polynomial& p);

// Sum of all products of j distinct sign flips (the j-th sign-orbit sum).
AlgebraElement theta(int n, int j);

// Commutes with eps_l, all transposition generators and all sign flips.
bool is_central_b(const AlgebraContext& ctx, const AlgebraElement& a);
// Same over the type-D subalgebra (pairs of sign flips); rejects elements
// outside it.
bool is_central_d(const AlgebraContext& ctx, const AlgebraElement& a);

// Deterministic random element for property tests.
AlgebraElement random_element(const AlgebraContext& ctx, int maxdeg, int nterms,
                              std::mt19937_64& rng);

}  // namespace hecke
