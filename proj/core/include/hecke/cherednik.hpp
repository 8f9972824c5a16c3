#pragma once

#include <hecke/linalg.hpp>
#include <hecke/polynomial.hpp>
#include <hecke/weyl.hpp>

#include <functional>
#include <string>
#include <vector>

namespace hecke {

// Multiplicities for the rational degeneration: k on the long roots
// eps_p +- eps_q, k_c on the short roots eps_p. k must be nonzero, k_c is
// unconstrained (the type-D specialization sets it to zero).
struct DunklParams {
  int n;
  Rat k;
  Rat k_c;

  DunklParams(int n_, Rat k_, Rat kc_) : n(n_), k(std::move(k_)), k_c(std::move(kc_)) {
    if (n < 1) throw std::invalid_argument("rank must be positive");
    if (k == 0) throw std::invalid_argument("long-root multiplicity k must be nonzero");
  }
};

// Group action on the coordinate ring; alias of Polynomial::apply kept as the
// operator t_w of the polynomial representation.
inline Polynomial reflect(const SignedPermutation& w, const Polynomial& p) { return p.apply(w); }

// Dunkl operator T_y for y = e_y:
//   T_y p = d/dy p + sum over positive roots alpha of
//           kbar_alpha <alpha, e_y> (p - s_alpha p) / alpha,
// the division being exact.
Polynomial dunkl(const DunklParams& params, int y, const Polynomial& p);

// Same sum restricted to the long roots only (the type-D operator). Equals
// dunkl with k_c = 0 term for term.
Polynomial dunkl_long_roots_only(int n, const Rat& k, int y, const Polynomial& p);

// Trigonometric-degeneration generator D_j = z_j T_{e_j} + lower corrections:
//   D_j p = z_j T_{e_j} p + sum_{i<j} k (1 + t_i t_j)(s_{i,j} p).
Polynomial kakei(const DunklParams& params, int j, const Polynomial& p);

// All exponent vectors of total degree <= maxdeg, exponent-lex order.
std::vector<std::vector<unsigned>> monomials_up_to(int n, int maxdeg);

// Matrix of a linear operator on the monomial basis above. Throws if the
// operator leaves the spanned degree range.
RatMatrix operator_matrix(int n, int maxdeg,
                          const std::function<Polynomial(const Polynomial&)>& op);

// Commutation [T_y, x] = <y,x> + sum k_alpha <y,alpha><alpha-vee,x> s_alpha,
// checked as operators on all monomials of degree <= bound. On failure *err
// names the first offending (y, x, monomial).
bool verify_cherednik_relation1(const DunklParams& params, int degree_bound, std::string* err);

// Equivariance t_w x t_{w^{-1}} = w(x) and t_w T_y t_{w^{-1}} = T_{w(y)} for
// all group generators.
bool verify_cherednik_equivariance(const DunklParams& params, int degree_bound, std::string* err);

// Pairwise commutativity of the Dunkl operators.
bool verify_dunkl_commutativity(const DunklParams& params, int degree_bound, std::string* err);

// The defining relations of the algebra in the D_j realization: pairwise
// commutativity, commutation with every sign flip, and the straightening
// relation t_{s_i} D_j = D_{s_i(j)} t_{s_i} - <alpha_i-vee, eps_j> k(1+t_i t_{i+1}).
bool phi_check(const DunklParams& params, int degree_bound, std::string* err);

}  // namespace hecke
