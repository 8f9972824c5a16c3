#include <hecke/criteria.hpp>

#include <algorithm>
#include <stdexcept>

namespace hecke {

namespace {

void fill_p_set(CriterionReport& rep, const Rat& k, int n) {
  for (const Root& alpha : positive_roots_block(n, rep.i)) {
    const Rat v = alpha.value(rep.sorted_gamma);
    if (v == k * 2 || v == k * -2) {
      rep.p_set.push_back(alpha);
      rep.p_values.push_back(v);
    }
  }
}

void check_args(const Rat& k, const std::vector<Rat>& gamma, const SignCharacter& mu) {
  if (k == 0) throw std::invalid_argument("deformation parameter k must be nonzero");
  if (static_cast<int>(gamma.size()) != mu.n())
    throw std::invalid_argument("character length mismatch");
  if (mu.n() < 1) throw std::invalid_argument("rank must be positive");
}

}  // namespace

StabilizerCaseResult stabilizer_case(const SignCharacter& mu) {
  const int n = mu.n();
  const int i = mu.plus_count();
  if (n % 2 == 0 && i == n / 2) return {true, n / 2};
  return {false, 0};
}

CriterionReport criterion_b(const Rat& k, const std::vector<Rat>& gamma,
                            const SignCharacter& mu) {
  check_args(k, gamma, mu);
  CriterionReport rep;
  const auto [i, sigma] = sigma_and_i(mu);
  rep.i = i;
  rep.sigma = sigma;
  rep.sorted_gamma = char_action_poly(sigma, gamma);
  fill_p_set(rep, k, mu.n());
  rep.simple = rep.p_set.empty();
  return rep;
}

CriterionReport criterion_d(const Rat& k, const std::vector<Rat>& gamma,
                            const SignCharacter& mu) {
  check_args(k, gamma, mu);
  CriterionReport rep = criterion_b(k, gamma, mu);
  const auto cs = stabilizer_case(mu);
  rep.case_b = cs.case_b;
  rep.m = cs.m;
  if (!cs.case_b) return rep;

  const int m = cs.m;
  const int n = mu.n();
  rep.tau_gamma.assign(n, Rat(0));
  for (int j = 1; j <= m; ++j) {
    rep.tau_gamma[j - 1] = rep.sorted_gamma[m + j - 1];
    rep.tau_gamma[m + j - 1] = rep.sorted_gamma[j - 1];
  }

  // The block group permutes within each half, so the half-swapped character
  // lies in its orbit iff the two halves carry equal multisets.
  std::vector<Rat> first(rep.sorted_gamma.begin(), rep.sorted_gamma.begin() + m);
  std::vector<Rat> second(rep.sorted_gamma.begin() + m, rep.sorted_gamma.end());
  std::sort(first.begin(), first.end());
  std::sort(second.begin(), second.end());
  rep.orbit_hit = first == second;

  if (rep.orbit_hit) {
    // Build w with (^w sorted)(eps_p) = tau(eps_p) by matching values inside
    // each half: pick an unused source q in the half with sorted_q = tau_p.
    std::vector<int> winv(n, 0);
    std::vector<char> used(n, 0);
    for (int p = 1; p <= n; ++p) {
      const int lo = p <= m ? 1 : m + 1;
      const int hi = p <= m ? m : n;
      for (int q = lo; q <= hi; ++q) {
        if (used[q - 1] || rep.sorted_gamma[q - 1] != rep.tau_gamma[p - 1]) continue;
        winv[p - 1] = q;
        used[q - 1] = 1;
        break;
      }
    }
    const auto w = SignedPermutation::from_parts(winv, std::vector<int>(n, 1)).inverse();
    rep.orbit_witness = w;
  }

  rep.simple = rep.p_set.empty() && !rep.orbit_hit;
  return rep;
}

bool has_resonant_same_sign_pair(const Rat& k, const std::vector<Rat>& gamma,
                                 const SignCharacter& mu) {
  check_args(k, gamma, mu);
  for (int a = 1; a <= mu.n(); ++a)
    for (int b = a + 1; b <= mu.n(); ++b) {
      if (mu.value(a) != mu.value(b)) continue;
      const Rat diff = gamma[a - 1] - gamma[b - 1];
      if (diff == k * 2 || diff == k * -2) return true;
    }
  return false;
}

}  // namespace hecke
