#pragma once

#include <hecke/algebra.hpp>
#include <hecke/linalg.hpp>
#include <hecke/weyl.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hecke {

// Character of the commutative part: gamma lists the values on eps_1..eps_n,
// mu is a sign character of the sign subgroup. For the type-D modules mu is a
// chosen lift of the even-subgroup character it induces.
struct FullCharacter {
  std::vector<Rat> gamma;
  SignCharacter mu;

  int n() const { return static_cast<int>(gamma.size()); }
  bool operator==(const FullCharacter& o) const = default;
};

FullCharacter char_action_full(const SignedPermutation& w, const FullCharacter& chi);
// Character of the dual module: gamma and mu reversed by the longest
// permutation and negated.
FullCharacter dual_character(const FullCharacter& chi);

enum class ModuleKind { TypeB, TypeD, GradedBlock, Derived };

// A module given by explicit exact matrices for a named generator list.
// For the principal series the basis is the permutation group sorted by
// (length, one-line lex); every polynomial generator acts triangularly in it.
struct MatrixModule {
  ModuleKind kind = ModuleKind::Derived;
  int n = 0;       // rank of the underlying algebra
  Rat k;           // deformation parameter (equal parameter c for graded blocks)
  int block_i = 0; // block split position for GradedBlock
  FullCharacter chi;
  std::vector<SignedPermutation> basis;
  std::vector<std::string> gen_names;
  std::vector<RatMatrix> gens;

  int dim() const { return static_cast<int>(basis.size()); }
  int index_of(const SignedPermutation& w) const;
  const RatMatrix& gen(const std::string& name) const;
};

// Principal series of the full algebra: dimension n!, action given by the
// triangular straightening formulas. Defining relations are recomputed on
// the matrices at construction time and failures throw.
MatrixModule build_principal_series_b(const AlgebraContext& ctx, const FullCharacter& chi);

// Principal series of the type-D subalgebra built from a lift mu of the
// even-subgroup character; generator set replaces the single sign flips by
// consecutive pairs.
MatrixModule build_principal_series_d(const AlgebraContext& ctx, const FullCharacter& chi);

// Principal series of the two-block graded algebra sitting on the block
// permutation group S_i x S_{n-i}, with equal parameter c on all its roots:
//   t_s zeta = s(zeta) t_s - c <alpha-vee, zeta>  for simple alpha.
MatrixModule build_graded_block_module(int n, int i, const Rat& c,
                                       const std::vector<Rat>& nu);

// Matrix of t_w on a module (any group element of the appropriate group).
RatMatrix group_matrix(const MatrixModule& m, const SignedPermutation& w);
// Matrix of a normal-form element under the module action.
RatMatrix evaluate(const MatrixModule& m, const AlgebraElement& a);

// Simultaneous spectrum of the commutative generators. Rows are sorted by
// (gamma values, diagonal signs); eigen_basis spans the honest eigenspace and
// generalized_dim counts the generalized one. The union of generalized spaces
// always exhausts the module.
struct WeightRow {
  std::vector<Rat> gamma;
  std::vector<Rat> diag;  // values on the diagonal group generators
  std::vector<std::vector<Rat>> eigen_basis;
  int generalized_dim = 0;
};
struct WeightTable {
  std::vector<std::string> diag_gen_names;
  std::vector<WeightRow> rows;
};
WeightTable weight_table(const MatrixModule& m);

// Basis (echelon) of the smallest invariant subspace containing v.
std::vector<std::vector<Rat>> submodule_generated(const MatrixModule& m,
                                                  const std::vector<Rat>& v);

// Burnside span test: the module is irreducible over any field extension iff
// the words in the generator matrices span the full matrix space. Phases:
// a screened closure whose accepted rows are exactly independent (full span
// certifies irreducibility), an eigenvector search for an exact proper
// invariant subspace (certifies reducibility), and a fully exact closure that
// decides whenever the shortcuts were inconclusive. Verdicts are exact.
struct BurnsideOptions {
  bool modp_screen = true;
  bool eigenvector_shortcut = true;
};
struct BurnsideReport {
  bool irreducible = false;
  size_t span_dim = 0;  // word-span dimension established by the deciding phase
  int certificate = 0;  // 1 = full span, 2 = invariant subspace, 3 = exact closure
  std::vector<std::vector<Rat>> submodule;  // witness when certificate == 2
};
BurnsideReport burnside_irreducible(const MatrixModule& m, const BurnsideOptions& opts = {});

// Module on the dual space: generator g acts by the transpose of the
// anti-involution image of g.
MatrixModule dual_module(const AlgebraContext& ctx, const MatrixModule& m);

// Twist by the sign-flip involution (negates the sign-flip generators).
MatrixModule twist_by_delta(const MatrixModule& m);
// Twist by conjugation with t_w.
MatrixModule twist_by_conjugation(const AlgebraContext& ctx, const MatrixModule& m,
                                  const SignedPermutation& w);

// Solution space of A g1 = g2 A over all generators, plus an invertible
// element when one exists. The search is exact and complete for solution
// spaces of dimension <= 2 (determinant of a pencil is decided by d+1 exact
// evaluations); higher dimensions fall back to seeded random combinations and
// set exhaustive = false when nothing invertible was found.
struct IntertwinerResult {
  int solution_dim = 0;
  std::vector<RatMatrix> basis;
  std::optional<RatMatrix> invertible;
  bool exhaustive = true;
};
IntertwinerResult intertwiner(const MatrixModule& m1, const MatrixModule& m2);

// Decomposition of a principal series into the isotypic blocks of the
// commutative group action: block j collects the basis labels w_j w with w in
// the stabilizer (full group: sign character; type D: its even restriction).
struct IsotypicBlocks {
  std::vector<SignedPermutation> reps;
  std::vector<std::vector<int>> indices;
};
IsotypicBlocks isotypic_decomposition(const MatrixModule& m, const SignCharacter& mu);

// Restriction of selected generators to a coordinate subspace; throws when
// the subspace is not stable under one of them.
MatrixModule restrict_module(const MatrixModule& m, const std::vector<int>& indices,
                             const std::vector<std::string>& gen_subset);

// Direct sum with block-diagonal generators (matching generator lists).
MatrixModule direct_sum(const MatrixModule& a, const MatrixModule& b);

// Proper invariant-subspace construction inside the first even-stabilizer
// block for even rank n = 2m and the canonical split character: an
// intertwiner f between the first block and its half-swap conjugate twist is
// normalized to f^2 = id when the Schur scalar is a rational square, and
// V = {x + t_{half swap} f(x)} is then checked to be a proper nonzero
// invariant subspace. When the scalar is not a square the subspace lives in a
// quadratic extension; lambda is still reported and no basis is produced.
struct HalfSwapReport {
  bool preconditions_hold = false;  // both block modules simple and isomorphic
  bool block_simple = false;
  bool swapped_block_simple = false;
  bool blocks_isomorphic = false;
  int solution_dim = 0;
  bool has_intertwiner = false;
  Rat schur_lambda;
  bool rational_branch = false;
  std::vector<std::vector<Rat>> submodule;  // coordinates in the ambient module
  bool stable = false;
  bool proper_nonzero = false;
};
HalfSwapReport assertion_half_swap_submodule(const AlgebraContext& ctx,
                                             const std::vector<Rat>& gamma);

}  // namespace hecke
