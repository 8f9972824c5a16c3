#pragma once

#include <hecke/rational.hpp>

#include <compare>
#include <string>
#include <tuple>
#include <vector>

namespace hecke {

// Element of the hyperoctahedral group: a permutation pi of {1..n} together
// with one sign per index. Convention (fixed throughout):
//
//   w(eps_i) = signs[pi(i)] * eps_{pi(i)},  (w o u)(eps_i) = w(u(eps_i)).
//
// signs is indexed by the TARGET index. All indices are 1-based externally.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  static SignedPermutation identity(int n);
  // pi given in one-line notation (perm[i-1] = pi(i)), signs[j-1] in {+1,-1}.
  static SignedPermutation from_parts(std::vector<int> perm, std::vector<int> signs);
  // Transposition s_{p,q}: eps_p <-> eps_q.
  static SignedPermutation transposition(int n, int p, int q);
  // t_p: eps_p -> -eps_p.
  static SignedPermutation sign_flip(int n, int p);
  // t_x for x encoded as the set of flipped indices.
  static SignedPermutation from_flip_set(int n, const std::vector<int>& flipped);
  // Longest element of the symmetric group part: i -> n+1-i, all signs +.
  static SignedPermutation longest_sym(int n);
  // Product of the disjoint transpositions (j, m+j), j = 1..m; needs n = 2m.
  static SignedPermutation half_swap(int n);

  int n() const { return static_cast<int>(perm_.size()); }
  int image_index(int i) const { return perm_[i - 1]; }
  int image_sign(int i) const { return signs_[perm_[i - 1] - 1]; }
  int sign_at_target(int j) const { return signs_[j - 1]; }
  const std::vector<int>& perm_one_line() const { return perm_; }
  const std::vector<int>& signs_by_target() const { return signs_; }

  SignedPermutation compose(const SignedPermutation& u) const;  // this o u
  SignedPermutation inverse() const;
  std::vector<Rat> act(const std::vector<Rat>& v) const;

  bool is_identity() const;
  bool in_sym() const;    // all signs +1
  bool in_torus() const;  // pi = id
  bool in_even_torus() const;
  bool in_type_d() const;  // even number of -1 signs
  int det() const;         // (-1)^{#flips} * sgn(pi)
  int sym_length() const;  // inversion count of pi
  int flip_count() const;

  // Signed one-line form: entry i is signs[pi(i)] * pi(i).
  std::vector<int> signed_one_line() const;
  std::string to_string() const;  // "[2,-1,3]"
  static SignedPermutation parse(const std::string& s);

  // Total order: (sym_length, pi one-line lex, sign pattern with + before -).
  std::strong_ordering operator<=>(const SignedPermutation& o) const;
  bool operator==(const SignedPermutation& o) const = default;

 private:
  std::vector<int> perm_;
  std::vector<int> signs_;
};

// Linear character of the sign subgroup {+-1}^n, stored by its values on the
// generators t_1..t_n.
class SignCharacter {
 public:
  SignCharacter() = default;
  explicit SignCharacter(std::vector<int> values);
  static SignCharacter parse(const std::string& s);  // "++-"

  int n() const { return static_cast<int>(values_.size()); }
  int value(int i) const { return values_[i - 1]; }
  const std::vector<int>& values() const { return values_; }
  // Value on t_x, x in the sign subgroup (pi must be id).
  int eval(const SignedPermutation& x) const;
  SignCharacter negated() const;  // sgn tensor mu
  int plus_count() const;
  std::string to_string() const;

  bool operator==(const SignCharacter& o) const = default;
  auto operator<=>(const SignCharacter& o) const = default;

 private:
  std::vector<int> values_;
};

// Roots of the rank-n hyperoctahedral system, 1-based indices.
// Diff: eps_p - eps_q (p != q), Short: eps_p, Sum: eps_p + eps_q (p < q).
enum class RootKind { Diff, Short, Sum };

struct Root {
  RootKind kind = RootKind::Diff;
  int p = 0;
  int q = 0;

  static Root diff(int p, int q) { return {RootKind::Diff, p, q}; }
  static Root short_root(int p) { return {RootKind::Short, p, 0}; }
  static Root sum(int p, int q);

  bool is_long() const { return kind != RootKind::Short; }
  // Coefficient of eps_l in the root.
  Rat coeff(int l) const;
  // <alpha-vee, eps_l> with alpha-vee = 2 alpha / |alpha|^2.
  Rat coroot_pairing(int l) const;
  // Value of a linear functional given by coordinates on the root.
  Rat value(const std::vector<Rat>& gamma) const;
  SignedPermutation reflection(int n) const;
  std::string to_string() const;

  bool operator==(const Root& o) const = default;
};

// R(w^{-1}) = {alpha in R_A^+ : w^{-1}(alpha) < 0} for w with trivial signs.
// Size equals sym_length(w). Deterministic (p, q)-lex order.
std::vector<Root> inversion_set(const SignedPermutation& w);

// Image of a Diff root under a plain permutation, canonicalized to p < q.
Root apply_perm_to_diff(const SignedPermutation& w, const Root& alpha);

std::vector<Root> positive_roots_sym(int n);              // eps_p - eps_q, p < q
std::vector<Root> positive_roots_b(int n);                // + eps_p and eps_p + eps_q
std::vector<Root> positive_roots_d(int n);                // without the short roots
std::vector<Root> positive_roots_block(int n, int i);     // p < q <= i or i < p < q
std::vector<Root> simple_roots_sym(int n);                // alpha_j = eps_j - eps_{j+1}

// ^w mu, i.e. (^w mu)(t_j) = mu(t_{w^{-1} * j}).
SignCharacter char_action(const SignedPermutation& w, const SignCharacter& mu);

// ^w gamma for a polynomial character given by coordinates:
// (^w gamma)(eps_l) = gamma(w^{-1}(eps_l)).
std::vector<Rat> char_action_poly(const SignedPermutation& w, const std::vector<Rat>& gamma);

// (i, sigma): i = #(+1 values of mu); sigma maps the ascending +1 positions
// to 1..i and the ascending -1 positions to i+1..n.
std::pair<int, SignedPermutation> sigma_and_i(const SignCharacter& mu);

// All permutations (trivial signs), sorted by (length, one-line lex).
std::vector<SignedPermutation> all_sym(int n);
// All 2^n sign-subgroup elements, mask order.
std::vector<SignedPermutation> all_torus(int n);
// The full group of signed permutations, sorted by the canonical order.
std::vector<SignedPermutation> all_signed(int n);

// Stabilizer {w in sym : ^w mu = mu}.
std::vector<SignedPermutation> sym_stabilizer(const SignCharacter& mu);
// Stabilizer of the even-subgroup restriction: {w : ^w mu in {mu, -mu}}.
std::vector<SignedPermutation> sym_stabilizer_even(const SignCharacter& mu);
// Transpositions s_{j_l, j_{l+1}} between consecutive equal-sign positions;
// they generate sym_stabilizer(mu).
std::vector<SignedPermutation> stabilizer_generators(const SignCharacter& mu);

// Minimal-length (then lex-least) representatives of sym / stabilizer(mu),
// starting with the identity. The ^w mu are pairwise distinct and exhaust the
// orbit; there are binomial(n, plus_count) of them.
std::vector<SignedPermutation> coset_reps(const SignCharacter& mu);

}  // namespace hecke
