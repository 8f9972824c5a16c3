#include <hecke/algebra.hpp>

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace hecke {

AlgebraElement AlgebraElement::one(int n) {
  return from_group(SignedPermutation::identity(n));
}

AlgebraElement AlgebraElement::from_polynomial(const Polynomial& p) {
  AlgebraElement a(p.n());
  const auto id = SignedPermutation::identity(p.n());
  for (const auto& [exp, c] : p.terms()) a.add_term(exp, id, c);
  return a;
}

AlgebraElement AlgebraElement::from_group(const SignedPermutation& w) {
  AlgebraElement a(w.n());
  a.add_term(std::vector<unsigned>(w.n(), 0), w, Rat(1));
  return a;
}

AlgebraElement AlgebraElement::variable(int n, int l) {
  return from_polynomial(Polynomial::variable(n, l));
}

AlgebraElement AlgebraElement::term(int n, std::vector<unsigned> exp, const SignedPermutation& w,
                                    const Rat& c) {
  AlgebraElement a(n);
  a.add_term(exp, w, c);
  return a;
}

int AlgebraElement::poly_degree() const {
  int d = 0;
  for (const auto& [key, c] : terms_) {
    int t = 0;
    for (unsigned e : key.exp) t += static_cast<int>(e);
    d = std::max(d, t);
  }
  return d;
}

Polynomial AlgebraElement::coefficient_poly(const SignedPermutation& w) const {
  Polynomial p(n_);
  for (const auto& [key, c] : terms_)
    if (key.w == w) p.add_term(key.exp, c);
  return p;
}

void AlgebraElement::add_term(const std::vector<unsigned>& exp, const SignedPermutation& w,
                              const Rat& c) {
  if (c == 0) return;
  if (static_cast<int>(exp.size()) != n_ || w.n() != n_)
    throw std::invalid_argument("term rank mismatch");
  Key key{exp, w};
  auto [it, fresh] = terms_.emplace(std::move(key), c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out(n_);
  for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
  return out;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  AlgebraElement out = *this;
  out += o;
  return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  AlgebraElement out = *this;
  out -= o;
  return out;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (n_ != o.n_) throw std::invalid_argument("rank mismatch");
  for (const auto& [key, c] : o.terms_) add_term(key.exp, key.w, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  if (n_ != o.n_) throw std::invalid_argument("rank mismatch");
  for (const auto& [key, c] : o.terms_) add_term(key.exp, key.w, -c);
  return *this;
}

AlgebraElement AlgebraElement::operator*(const Rat& c) const {
  AlgebraElement out(n_);
  if (c == 0) return out;
  for (const auto& [key, t] : terms_) out.terms_.emplace(key, t * c);
  return out;
}

AlgebraElement ktilde(const AlgebraContext& ctx, int a, int b) {
  if (a == b) throw std::invalid_argument("multiplicity element needs two distinct indices");
  if (a < 1 || a > ctx.n || b < 1 || b > ctx.n) throw std::invalid_argument("index out of range");
  AlgebraElement out = AlgebraElement::one(ctx.n);
  out += AlgebraElement::from_group(SignedPermutation::from_flip_set(ctx.n, {a, b}));
  return out * ctx.k;
}

namespace {

// Normal form of t_w * eps^exp, recursing on the total degree. At each step
// the first remaining variable is pushed through: with w = t_x o u,
//   t_w eps_l = eps_{u(l)} t_w
//             + sum_{alpha = eps_a - eps_b in R(u^{-1})} <alpha-vee, eps_{u(l)}>
//               k (t_x + t_{x + {a,b}}) t_{s_alpha u}.
AlgebraElement push_monomial(const AlgebraContext& ctx, const SignedPermutation& w,
                             const std::vector<unsigned>& exp) {
  const int n = ctx.n;
  int l = 0;
  for (int i = 1; i <= n; ++i)
    if (exp[i - 1] > 0) {
      l = i;
      break;
    }
  if (l == 0) return AlgebraElement::from_group(w);

  std::vector<unsigned> rest = exp;
  rest[l - 1] -= 1;

  const auto u = SignedPermutation::from_parts(w.perm_one_line(), std::vector<int>(n, 1));
  const auto x = SignedPermutation::from_parts(
      [&] {
        std::vector<int> id(n);
        for (int i = 0; i < n; ++i) id[i] = i + 1;
        return id;
      }(),
      w.signs_by_target());
  const int m = u.image_index(l);

  AlgebraElement out(n);
  {
    AlgebraElement tail = push_monomial(ctx, w, rest);
    for (const auto& [key, c] : tail.terms()) {
      auto e = key.exp;
      e[m - 1] += 1;
      out.add_term(e, key.w, c);
    }
  }
  for (const Root& alpha : inversion_set(u)) {
    const Rat pairing = alpha.coroot_pairing(m);
    if (pairing == 0) continue;
    const auto s_alpha_u = alpha.reflection(n).compose(u);
    const auto g1 = x.compose(s_alpha_u);
    const auto g2 =
        SignedPermutation::from_flip_set(n, {alpha.p, alpha.q}).compose(x).compose(s_alpha_u);
    const Rat coeff = pairing * ctx.k;
    for (const auto& g : {g1, g2}) {
      AlgebraElement tail = push_monomial(ctx, g, rest);
      for (const auto& [key, c] : tail.terms()) out.add_term(key.exp, key.w, coeff * c);
    }
  }
  return out;
}

}  // namespace

AlgebraElement move_group_past_poly(const AlgebraContext& ctx, const SignedPermutation& w,
                                    const Polynomial& p) {
  if (p.n() != ctx.n || w.n() != ctx.n) throw std::invalid_argument("rank mismatch");
  AlgebraElement out(ctx.n);
  for (const auto& [exp, c] : p.terms()) {
    AlgebraElement part = push_monomial(ctx, w, exp);
    out += part * c;
  }
  return out;
}

AlgebraElement multiply(const AlgebraContext& ctx, const AlgebraElement& a,
                        const AlgebraElement& b) {
  if (a.n() != ctx.n || b.n() != ctx.n) throw std::invalid_argument("rank mismatch");
  AlgebraElement out(ctx.n);
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      const AlgebraElement mid = push_monomial(ctx, ka.w, kb.exp);
      const Rat c = ca * cb;
      for (const auto& [km, cm] : mid.terms()) {
        std::vector<unsigned> e(ctx.n);
        for (int i = 0; i < ctx.n; ++i) e[i] = ka.exp[i] + km.exp[i];
        out.add_term(e, km.w.compose(kb.w), c * cm);
      }
    }
  }
  return out;
}

AlgebraElement commutator(const AlgebraContext& ctx, const AlgebraElement& a,
                          const AlgebraElement& b) {
  return multiply(ctx, a, b) - multiply(ctx, b, a);
}

AlgebraElement delta(const AlgebraElement& a) {
  AlgebraElement out(a.n());
  for (const auto& [key, c] : a.terms())
    out.add_term(key.exp, key.w, key.w.flip_count() % 2 ? -c : c);
  return out;
}

AlgebraElement iota(const AlgebraContext& ctx, const AlgebraElement& a) {
  AlgebraElement out(ctx.n);
  for (const auto& [key, c] : a.terms()) {
    unsigned total = 0;
    for (unsigned e : key.exp) total += e;
    Rat coeff = c * Rat(key.w.det());
    if (total % 2 == 1) coeff = -coeff;
    const AlgebraElement moved = push_monomial(ctx, key.w.inverse(), key.exp);
    out += moved * coeff;
  }
  return out;
}

bool in_type_d_subalgebra(const AlgebraElement& a) {
  for (const auto& [key, c] : a.terms())
    if (key.w.flip_count() % 2 != 0) return false;
  return true;
}

Polynomial divided_difference(const AlgebraContext& ctx, int j, const Polynomial& p) {
  if (j < 1 || j >= ctx.n) throw std::invalid_argument("simple root index out of range");
  const auto s = SignedPermutation::transposition(ctx.n, j, j + 1);
  const Polynomial alpha = Polynomial::from_root(ctx.n, Root::diff(j, j + 1));
  return ((p - p.apply(s)) * ctx.k).divide_by_linear(alpha);
}

AlgebraElement tilde_delta(const AlgebraContext& ctx, int j, const Polynomial& p) {
  const Polynomial dd = divided_difference(ctx, j, p) * Rat(-1);
  AlgebraElement out = AlgebraElement::from_polynomial(dd);
  const auto pair = SignedPermutation::from_flip_set(ctx.n, {j, j + 1});
  for (const auto& [exp, c] : dd.terms()) out.add_term(exp, pair, c);
  return out;
}

AlgebraElement theta(int n, int j) {
  if (j < 0 || j > n) throw std::invalid_argument("orbit sum index out of range");
  AlgebraElement out(n);
  std::vector<int> idx;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(idx.size()) == j) {
      out += AlgebraElement::from_group(SignedPermutation::from_flip_set(n, idx));
      return;
    }
    for (int v = start; v <= n; ++v) {
      idx.push_back(v);
      rec(v + 1);
      idx.pop_back();
    }
  };
  rec(1);
  return out;
}

namespace {

bool commutes_with_all(const AlgebraContext& ctx, const AlgebraElement& a,
                       const std::vector<AlgebraElement>& gens) {
  for (const auto& g : gens)
    if (!commutator(ctx, a, g).is_zero()) return false;
  return true;
}

}  // namespace

bool is_central_b(const AlgebraContext& ctx, const AlgebraElement& a) {
  std::vector<AlgebraElement> gens;
  for (int l = 1; l <= ctx.n; ++l) gens.push_back(AlgebraElement::variable(ctx.n, l));
  for (int j = 1; j < ctx.n; ++j)
    gens.push_back(AlgebraElement::from_group(SignedPermutation::transposition(ctx.n, j, j + 1)));
  for (int i = 1; i <= ctx.n; ++i)
    gens.push_back(AlgebraElement::from_group(SignedPermutation::sign_flip(ctx.n, i)));
  return commutes_with_all(ctx, a, gens);
}

bool is_central_d(const AlgebraContext& ctx, const AlgebraElement& a) {
  if (!in_type_d_subalgebra(a))
    throw std::invalid_argument("element lies outside the type-D subalgebra");
  std::vector<AlgebraElement> gens;
  for (int l = 1; l <= ctx.n; ++l) gens.push_back(AlgebraElement::variable(ctx.n, l));
  for (int j = 1; j < ctx.n; ++j)
    gens.push_back(AlgebraElement::from_group(SignedPermutation::transposition(ctx.n, j, j + 1)));
  for (int i = 1; i < ctx.n; ++i)
    gens.push_back(AlgebraElement::from_group(SignedPermutation::from_flip_set(ctx.n, {i, i + 1})));
  return commutes_with_all(ctx, a, gens);
}

AlgebraElement random_element(const AlgebraContext& ctx, int maxdeg, int nterms,
                              std::mt19937_64& rng) {
  const auto group = all_signed(ctx.n);
  std::uniform_int_distribution<size_t> pick_g(0, group.size() - 1);
  std::uniform_int_distribution<int> pick_d(0, maxdeg);
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 3);
  AlgebraElement out(ctx.n);
  for (int t = 0; t < nterms; ++t) {
    std::vector<unsigned> exp(ctx.n, 0);
    int budget = pick_d(rng);
    for (int i = 0; i < ctx.n && budget > 0; ++i) {
      std::uniform_int_distribution<int> d(0, budget);
      const int e = d(rng);
      exp[i] = static_cast<unsigned>(e);
      budget -= e;
    }
    Rat c(num(rng), den(rng));
    c.canonicalize();
    out.add_term(exp, group[pick_g(rng)], c);
  }
  return out;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << '-';
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    os << format_rat(a);
    for (int i = 0; i < n_; ++i) {
      if (!key.exp[i]) continue;
      os << "*e" << (i + 1);
      if (key.exp[i] > 1) os << '^' << key.exp[i];
    }
    os << '*' << key.w.to_string();
  }
  return os.str();
}

AlgebraElement AlgebraElement::parse(int n, const std::string& text) {
  AlgebraElement out(n);
  // Split into signed terms; '-' inside a group bracket is not a separator.
  std::vector<std::pair<int, std::string>> parts;
  std::string cur;
  int sign = 1, depth = 0;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (depth == 0 && (ch == '+' || ch == '-') && ch != '[') {
      if (!cur.empty()) {
        parts.emplace_back(sign, cur);
        cur.clear();
        sign = 1;
      }
      if (ch == '-') sign = -sign;
      continue;
    }
    cur += ch;
  }
  if (depth != 0) throw std::invalid_argument("unbalanced group bracket");
  if (!cur.empty()) parts.emplace_back(sign, cur);
  if (parts.empty() && text.find('0') == std::string::npos)
    throw std::invalid_argument("empty element text");
  for (const auto& [sg, term] : parts) {
    Rat coeff(sg);
    std::vector<unsigned> exp(n, 0);
    SignedPermutation w = SignedPermutation::identity(n);
    bool saw_group = false;
    // Factors split on '*' outside brackets.
    std::vector<std::string> factors;
    std::string f;
    int d = 0;
    for (char ch : term) {
      if (ch == '[') ++d;
      if (ch == ']') --d;
      if (ch == '*' && d == 0) {
        factors.push_back(f);
        f.clear();
        continue;
      }
      f += ch;
    }
    if (!f.empty()) factors.push_back(f);
    for (const auto& factor : factors) {
      if (factor.empty()) throw std::invalid_argument("empty factor in term: " + term);
      if (factor.front() == '[') {
        if (saw_group) throw std::invalid_argument("two group factors in one term");
        w = SignedPermutation::parse(factor);
        if (w.n() != n) throw std::invalid_argument("group element rank mismatch");
        saw_group = true;
      } else if (factor.front() == 'e' && factor.size() > 1 &&
                 std::isdigit(static_cast<unsigned char>(factor[1]))) {
        size_t caret = factor.find('^');
        int idx = std::stoi(factor.substr(1, caret - 1));
        if (idx < 1 || idx > n) throw std::invalid_argument("variable index out of range");
        unsigned p = 1;
        if (caret != std::string::npos) p = static_cast<unsigned>(std::stoul(factor.substr(caret + 1)));
        exp[idx - 1] += p;
      } else {
        coeff *= parse_rat(factor);
      }
    }
    out.add_term(exp, w, coeff);
  }
  return out;
}

}  // namespace hecke
