#pragma once

#include <hecke/psmodule.hpp>
#include <hecke/rational.hpp>
#include <hecke/weyl.hpp>

#include <optional>
#include <vector>

namespace hecke {

// The even-restriction stabilizer grows exactly when n = 2m and the sign
// character has m plus signs; that is the case with the extra orbit test.
struct StabilizerCaseResult {
  bool case_b = false;
  int m = 0;
};
StabilizerCaseResult stabilizer_case(const SignCharacter& mu);

// Closed-form irreducibility verdict with a full witness trail: the sorting
// permutation sigma, the sorted character, the resonant block roots (value
// equal to +-2k), and for the even split case the half-swapped character with
// an explicit block permutation witness when it lies in the block orbit.
struct CriterionReport {
  bool simple = false;
  int i = 0;
  SignedPermutation sigma;
  std::vector<Rat> sorted_gamma;
  std::vector<Root> p_set;
  std::vector<Rat> p_values;
  bool case_b = false;
  int m = 0;
  std::vector<Rat> tau_gamma;
  bool orbit_hit = false;
  std::optional<SignedPermutation> orbit_witness;
};

// Full-algebra principal series M(gamma, mu) is simple iff no same-sign pair
// of coordinates differs by exactly +-2k, reported through the sorted-block
// root set.
CriterionReport criterion_b(const Rat& k, const std::vector<Rat>& gamma,
                            const SignCharacter& mu);

// Type-D principal series built from the lift mu: the block-root test, plus
// the half-swap orbit test in the even split case.
CriterionReport criterion_d(const Rat& k, const std::vector<Rat>& gamma,
                            const SignCharacter& mu);

// Direct reformulation of the type-B test without sorting; used to cross
// check criterion_b.
bool has_resonant_same_sign_pair(const Rat& k, const std::vector<Rat>& gamma,
                                 const SignCharacter& mu);

}  // namespace hecke
