#include <hecke/cherednik.hpp>

#include <sstream>
#include <stdexcept>

namespace hecke {

namespace {

Polynomial dunkl_over(const std::vector<Root>& roots, const Rat& k_long, const Rat& k_short,
                      int n, int y, const Polynomial& p) {
  if (y < 1 || y > n) throw std::invalid_argument("direction index out of range");
  Polynomial out = p.derivative(y);
  for (const Root& alpha : roots) {
    const Rat pairing = alpha.coeff(y);  // <alpha, e_y>
    if (pairing == 0) continue;
    const Rat mult = alpha.is_long() ? k_long : k_short;
    if (mult == 0) continue;
    const Polynomial diff = p - p.apply(alpha.reflection(n));
    if (diff.is_zero()) continue;
    const Polynomial quot = diff.divide_by_linear(Polynomial::from_root(n, alpha));
    out += quot * (mult * pairing);
  }
  return out;
}

}  // namespace

Polynomial dunkl(const DunklParams& params, int y, const Polynomial& p) {
  if (p.n() != params.n) throw std::invalid_argument("rank mismatch");
  return dunkl_over(positive_roots_b(params.n), params.k, params.k_c, params.n, y, p);
}

Polynomial dunkl_long_roots_only(int n, const Rat& k, int y, const Polynomial& p) {
  if (p.n() != n) throw std::invalid_argument("rank mismatch");
  return dunkl_over(positive_roots_d(n), k, Rat(0), n, y, p);
}

Polynomial kakei(const DunklParams& params, int j, const Polynomial& p) {
  if (j < 1 || j > params.n) throw std::invalid_argument("index out of range");
  Polynomial out = Polynomial::variable(params.n, j) * dunkl(params, j, p);
  for (int i = 1; i < j; ++i) {
    const Polynomial q = p.apply(SignedPermutation::transposition(params.n, i, j));
    const Polynomial flipped = q.apply(SignedPermutation::from_flip_set(params.n, {i, j}));
    out += (q + flipped) * params.k;
  }
  return out;
}

std::vector<std::vector<unsigned>> monomials_up_to(int n, int maxdeg) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> e(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int rem) {
    if (pos == n) {
      out.push_back(e);
      return;
    }
    for (int d = 0; d <= rem; ++d) {
      e[pos] = static_cast<unsigned>(d);
      rec(pos + 1, rem - d);
    }
    e[pos] = 0;
  };
  rec(0, maxdeg);
  return out;
}

RatMatrix operator_matrix(int n, int maxdeg,
                          const std::function<Polynomial(const Polynomial&)>& op) {
  const auto basis = monomials_up_to(n, maxdeg);
  std::map<std::vector<unsigned>, int> index;
  for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
  RatMatrix m(static_cast<int>(basis.size()), static_cast<int>(basis.size()));
  for (size_t col = 0; col < basis.size(); ++col) {
    const Polynomial image = op(Polynomial::monomial(n, basis[col], Rat(1)));
    for (const auto& [exp, c] : image.terms()) {
      auto it = index.find(exp);
      if (it == index.end()) throw std::domain_error("operator leaves the truncated degree range");
      m.at(it->second, static_cast<int>(col)) = c;
    }
  }
  return m;
}

namespace {

std::string describe(const char* what, int a, int b, const std::vector<unsigned>& exp) {
  std::ostringstream os;
  os << what << " fails at (" << a << "," << b << ") on monomial ";
  os << Polynomial::monomial(static_cast<int>(exp.size()), exp, Rat(1)).to_string();
  return os.str();
}

}  // namespace

bool verify_cherednik_relation1(const DunklParams& params, int degree_bound, std::string* err) {
  const int n = params.n;
  const auto roots = positive_roots_b(n);
  for (int y = 1; y <= n; ++y) {
    for (int x = 1; x <= n; ++x) {
      const Polynomial zx = Polynomial::variable(n, x);
      for (const auto& exp : monomials_up_to(n, degree_bound)) {
        const Polynomial p = Polynomial::monomial(n, exp, Rat(1));
        const Polynomial lhs = dunkl(params, y, zx * p) - zx * dunkl(params, y, p);
        Polynomial rhs = (x == y) ? p : Polynomial(n);
        for (const Root& alpha : roots) {
          const Rat c =
              (alpha.is_long() ? params.k : params.k_c) * alpha.coeff(y) * alpha.coroot_pairing(x);
          if (c == 0) continue;
          rhs += p.apply(alpha.reflection(n)) * c;
        }
        if (lhs != rhs) {
          if (err) *err = describe("commutation relation", y, x, exp);
          return false;
        }
      }
    }
  }
  return true;
}

bool verify_cherednik_equivariance(const DunklParams& params, int degree_bound, std::string* err) {
  const int n = params.n;
  std::vector<SignedPermutation> gens;
  for (int j = 1; j < n; ++j) gens.push_back(SignedPermutation::transposition(n, j, j + 1));
  for (int i = 1; i <= n; ++i) gens.push_back(SignedPermutation::sign_flip(n, i));
  for (const auto& w : gens) {
    const auto winv = w.inverse();
    for (int l = 1; l <= n; ++l) {
      const Polynomial wx = Polynomial::variable(n, l).apply(w);
      for (const auto& exp : monomials_up_to(n, degree_bound)) {
        const Polynomial p = Polynomial::monomial(n, exp, Rat(1));
        // t_w x t_{w^{-1}} = w(x)
        const Polynomial lhs = (Polynomial::variable(n, l) * p.apply(winv)).apply(w);
        if (lhs != wx * p) {
          if (err) *err = describe("group-variable equivariance", l, 0, exp);
          return false;
        }
        // t_w T_y t_{w^{-1}} = T_{w(y)}: w(e_l) = sign * e_{pi(l)}
        const Polynomial lhs2 = dunkl(params, l, p.apply(winv)).apply(w);
        Polynomial rhs2 = dunkl(params, w.image_index(l), p) * Rat(w.image_sign(l));
        if (lhs2 != rhs2) {
          if (err) *err = describe("group-Dunkl equivariance", l, 0, exp);
          return false;
        }
      }
    }
  }
  return true;
}

bool verify_dunkl_commutativity(const DunklParams& params, int degree_bound, std::string* err) {
  const int n = params.n;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      for (const auto& exp : monomials_up_to(n, degree_bound)) {
        const Polynomial p = Polynomial::monomial(n, exp, Rat(1));
        if (dunkl(params, a, dunkl(params, b, p)) != dunkl(params, b, dunkl(params, a, p))) {
          if (err) *err = describe("Dunkl commutativity", a, b, exp);
          return false;
        }
      }
    }
  }
  return true;
}

bool phi_check(const DunklParams& params, int degree_bound, std::string* err) {
  const int n = params.n;
  const auto monos = monomials_up_to(n, degree_bound);
  auto D = [&](int j, const Polynomial& p) { return kakei(params, j, p); };
  // Pairwise commutativity of the D_j.
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (const auto& exp : monos) {
        const Polynomial p = Polynomial::monomial(n, exp, Rat(1));
        if (D(a, D(b, p)) != D(b, D(a, p))) {
          if (err) *err = describe("D commutativity", a, b, exp);
          return false;
        }
      }
  // Commutation with every sign flip.
  for (int i = 1; i <= n; ++i) {
    const auto ti = SignedPermutation::sign_flip(n, i);
    for (int j = 1; j <= n; ++j)
      for (const auto& exp : monos) {
        const Polynomial p = Polynomial::monomial(n, exp, Rat(1));
        if (D(j, p.apply(ti)) != D(j, p).apply(ti)) {
          if (err) *err = describe("D sign-flip commutation", i, j, exp);
          return false;
        }
      }
  }
  // Straightening: t_{s_i} D_j = D_{s_i(j)} t_{s_i} - <alpha_i-vee, eps_j> k (1 + t_i t_{i+1}).
  for (int i = 1; i < n; ++i) {
    const auto s = SignedPermutation::transposition(n, i, i + 1);
    const auto pair = SignedPermutation::from_flip_set(n, {i, i + 1});
    const Root alpha = Root::diff(i, i + 1);
    for (int j = 1; j <= n; ++j) {
      const int sj = s.image_index(j);
      const Rat c = alpha.coroot_pairing(j);
      for (const auto& exp : monos) {
        const Polynomial p = Polynomial::monomial(n, exp, Rat(1));
        const Polynomial lhs = D(j, p).apply(s);
        Polynomial rhs = D(sj, p.apply(s));
        if (c != 0) rhs -= (p + p.apply(pair)) * (c * params.k);
        if (lhs != rhs) {
          if (err) *err = describe("D straightening", i, j, exp);
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace hecke
