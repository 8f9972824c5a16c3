#include <hecke/weyl.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hecke {

namespace {

void check_index(int n, int i, const char* what) {
  if (i < 1 || i > n) throw std::invalid_argument(std::string(what) + " out of range");
}

}  // namespace

SignedPermutation SignedPermutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  std::vector<int> p(n), s(n, 1);
  std::iota(p.begin(), p.end(), 1);
  return from_parts(std::move(p), std::move(s));
}

SignedPermutation SignedPermutation::from_parts(std::vector<int> perm, std::vector<int> signs) {
  const int n = static_cast<int>(perm.size());
  if (n < 1 || signs.size() != perm.size())
    throw std::invalid_argument("perm/signs size mismatch");
  std::vector<char> seen(n, 0);
  for (int v : perm) {
    if (v < 1 || v > n || seen[v - 1]) throw std::invalid_argument("not a permutation");
    seen[v - 1] = 1;
  }
  for (int s : signs)
    if (s != 1 && s != -1) throw std::invalid_argument("signs must be +-1");
  SignedPermutation w;
  w.perm_ = std::move(perm);
  w.signs_ = std::move(signs);
  return w;
}

SignedPermutation SignedPermutation::transposition(int n, int p, int q) {
  check_index(n, p, "p");
  check_index(n, q, "q");
  if (p == q) throw std::invalid_argument("transposition needs p != q");
  SignedPermutation w = identity(n);
  std::swap(w.perm_[p - 1], w.perm_[q - 1]);
  return w;
}

SignedPermutation SignedPermutation::sign_flip(int n, int p) {
  check_index(n, p, "p");
  SignedPermutation w = identity(n);
  w.signs_[p - 1] = -1;
  return w;
}

SignedPermutation SignedPermutation::from_flip_set(int n, const std::vector<int>& flipped) {
  SignedPermutation w = identity(n);
  for (int i : flipped) {
    check_index(n, i, "flip index");
    w.signs_[i - 1] = -1;
  }
  return w;
}

SignedPermutation SignedPermutation::longest_sym(int n) {
  SignedPermutation w = identity(n);
  for (int i = 1; i <= n; ++i) w.perm_[i - 1] = n + 1 - i;
  return w;
}

SignedPermutation SignedPermutation::half_swap(int n) {
  if (n % 2 != 0) throw std::invalid_argument("half_swap needs even rank");
  const int m = n / 2;
  SignedPermutation w = identity(n);
  for (int j = 1; j <= m; ++j) {
    w.perm_[j - 1] = m + j;
    w.perm_[m + j - 1] = j;
  }
  return w;
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& u) const {
  if (n() != u.n()) throw std::invalid_argument("rank mismatch");
  SignedPermutation v;
  v.perm_.resize(n());
  v.signs_.resize(n());
  for (int i = 1; i <= n(); ++i) {
    const int j = u.perm_[i - 1];
    const int m = perm_[j - 1];
    v.perm_[i - 1] = m;
    v.signs_[m - 1] = u.signs_[j - 1] * signs_[m - 1];
  }
  return v;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation v;
  v.perm_.resize(n());
  v.signs_.resize(n());
  for (int t = 1; t <= n(); ++t) {
    const int j = perm_[t - 1];
    v.perm_[j - 1] = t;
    v.signs_[t - 1] = signs_[j - 1];
  }
  return v;
}

std::vector<Rat> SignedPermutation::act(const std::vector<Rat>& v) const {
  if (static_cast<int>(v.size()) != n()) throw std::invalid_argument("vector size mismatch");
  std::vector<Rat> out(v.size(), Rat(0));
  for (int i = 1; i <= n(); ++i) {
    const int j = perm_[i - 1];
    out[j - 1] = Rat(signs_[j - 1]) * v[i - 1];
  }
  return out;
}

bool SignedPermutation::is_identity() const {
  for (int i = 1; i <= n(); ++i)
    if (perm_[i - 1] != i || signs_[i - 1] != 1) return false;
  return true;
}

bool SignedPermutation::in_sym() const {
  return std::all_of(signs_.begin(), signs_.end(), [](int s) { return s == 1; });
}

bool SignedPermutation::in_torus() const {
  for (int i = 1; i <= n(); ++i)
    if (perm_[i - 1] != i) return false;
  return true;
}

int SignedPermutation::flip_count() const {
  return static_cast<int>(std::count(signs_.begin(), signs_.end(), -1));
}

bool SignedPermutation::in_even_torus() const { return in_torus() && flip_count() % 2 == 0; }

bool SignedPermutation::in_type_d() const { return flip_count() % 2 == 0; }

int SignedPermutation::det() const {
  int d = (flip_count() % 2 == 0) ? 1 : -1;
  return (sym_length() % 2 == 0) ? d : -d;
}

int SignedPermutation::sym_length() const {
  int inv = 0;
  for (int i = 0; i < n(); ++i)
    for (int j = i + 1; j < n(); ++j)
      if (perm_[i] > perm_[j]) ++inv;
  return inv;
}

std::vector<int> SignedPermutation::signed_one_line() const {
  std::vector<int> out(n());
  for (int i = 1; i <= n(); ++i) out[i - 1] = image_sign(i) * image_index(i);
  return out;
}

std::string SignedPermutation::to_string() const {
  std::ostringstream os;
  os << '[';
  const auto line = signed_one_line();
  for (size_t i = 0; i < line.size(); ++i) {
    if (i) os << ',';
    os << line[i];
  }
  os << ']';
  return os.str();
}

SignedPermutation SignedPermutation::parse(const std::string& s) {
  std::string body = s;
  if (body.size() >= 2 && body.front() == '[' && body.back() == ']')
    body = body.substr(1, body.size() - 2);
  std::vector<int> entries;
  std::istringstream is(body);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
    if (pos != tok.size() || v == 0) throw std::invalid_argument("bad one-line entry: " + tok);
    entries.push_back(v);
  }
  if (entries.empty()) throw std::invalid_argument("empty one-line form");
  const int n = static_cast<int>(entries.size());
  std::vector<int> perm(n), signs(n, 1);
  for (int i = 1; i <= n; ++i) {
    const int v = entries[i - 1];
    const int j = std::abs(v);
    if (j < 1 || j > n) throw std::invalid_argument("one-line entry out of range");
    perm[i - 1] = j;
    signs[j - 1] = v > 0 ? 1 : -1;
  }
  return from_parts(std::move(perm), std::move(signs));
}

std::strong_ordering SignedPermutation::operator<=>(const SignedPermutation& o) const {
  if (auto c = n() <=> o.n(); c != 0) return c;
  if (auto c = sym_length() <=> o.sym_length(); c != 0) return c;
  if (auto c = perm_ <=> o.perm_; c != 0) return c;
  // + sorts before -.
  for (int i = 0; i < n(); ++i)
    if (auto c = (signs_[i] < 0) <=> (o.signs_[i] < 0); c != 0) return c;
  return std::strong_ordering::equal;
}

SignCharacter::SignCharacter(std::vector<int> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("empty sign character");
  for (int v : values_)
    if (v != 1 && v != -1) throw std::invalid_argument("sign character values must be +-1");
}

SignCharacter SignCharacter::parse(const std::string& s) {
  std::vector<int> vals;
  for (char c : s) {
    if (c == '+')
      vals.push_back(1);
    else if (c == '-')
      vals.push_back(-1);
    else
      throw std::invalid_argument("sign character must match [+-]+");
  }
  return SignCharacter(std::move(vals));
}

int SignCharacter::eval(const SignedPermutation& x) const {
  if (!x.in_torus()) throw std::invalid_argument("eval needs a sign-subgroup element");
  if (x.n() != n()) throw std::invalid_argument("rank mismatch");
  int v = 1;
  for (int i = 1; i <= n(); ++i)
    if (x.sign_at_target(i) == -1) v *= values_[i - 1];
  return v;
}

SignCharacter SignCharacter::negated() const {
  std::vector<int> vals = values_;
  for (int& v : vals) v = -v;
  return SignCharacter(std::move(vals));
}

int SignCharacter::plus_count() const {
  return static_cast<int>(std::count(values_.begin(), values_.end(), 1));
}

std::string SignCharacter::to_string() const {
  std::string s;
  for (int v : values_) s += (v == 1 ? '+' : '-');
  return s;
}

Root Root::sum(int p, int q) {
  if (p == q) throw std::invalid_argument("sum root needs p != q");
  if (p > q) std::swap(p, q);
  return {RootKind::Sum, p, q};
}

Rat Root::coeff(int l) const {
  switch (kind) {
    case RootKind::Diff:
      return Rat((l == p) - (l == q));
    case RootKind::Short:
      return Rat(l == p);
    case RootKind::Sum:
      return Rat((l == p) + (l == q));
  }
  return Rat(0);
}

Rat Root::coroot_pairing(int l) const {
  // |alpha|^2 = 2 for Diff and Sum, 1 for Short.
  if (kind == RootKind::Short) return Rat(2 * (l == p));
  return coeff(l);
}

Rat Root::value(const std::vector<Rat>& gamma) const {
  Rat v(0);
  switch (kind) {
    case RootKind::Diff:
      v = gamma[p - 1] - gamma[q - 1];
      break;
    case RootKind::Short:
      v = gamma[p - 1];
      break;
    case RootKind::Sum:
      v = gamma[p - 1] + gamma[q - 1];
      break;
  }
  return v;
}

SignedPermutation Root::reflection(int n) const {
  switch (kind) {
    case RootKind::Diff:
      return SignedPermutation::transposition(n, p, q);
    case RootKind::Short:
      return SignedPermutation::sign_flip(n, p);
    case RootKind::Sum: {
      // eps_p -> -eps_q, eps_q -> -eps_p.
      auto w = SignedPermutation::transposition(n, p, q);
      std::vector<int> perm = w.perm_one_line(), signs = w.signs_by_target();
      signs[p - 1] = -1;
      signs[q - 1] = -1;
      return SignedPermutation::from_parts(std::move(perm), std::move(signs));
    }
  }
  throw std::logic_error("unreachable");
}

std::string Root::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case RootKind::Diff:
      os << "e" << p << "-e" << q;
      break;
    case RootKind::Short:
      os << "e" << p;
      break;
    case RootKind::Sum:
      os << "e" << p << "+e" << q;
      break;
  }
  return os.str();
}

std::vector<Root> inversion_set(const SignedPermutation& w) {
  if (!w.in_sym()) throw std::invalid_argument("inversion_set needs trivial signs");
  const auto winv = w.inverse();
  std::vector<Root> out;
  for (int p = 1; p <= w.n(); ++p)
    for (int q = p + 1; q <= w.n(); ++q)
      if (winv.image_index(p) > winv.image_index(q)) out.push_back(Root::diff(p, q));
  return out;
}

Root apply_perm_to_diff(const SignedPermutation& w, const Root& alpha) {
  if (!w.in_sym()) throw std::invalid_argument("apply_perm_to_diff needs trivial signs");
  if (alpha.kind != RootKind::Diff) throw std::invalid_argument("diff root expected");
  int a = w.image_index(alpha.p), b = w.image_index(alpha.q);
  if (a > b) std::swap(a, b);
  return Root::diff(a, b);
}

std::vector<Root> positive_roots_sym(int n) {
  std::vector<Root> out;
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q) out.push_back(Root::diff(p, q));
  return out;
}

std::vector<Root> positive_roots_b(int n) {
  std::vector<Root> out = positive_roots_sym(n);
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q) out.push_back(Root::sum(p, q));
  for (int p = 1; p <= n; ++p) out.push_back(Root::short_root(p));
  return out;
}

std::vector<Root> positive_roots_d(int n) {
  std::vector<Root> out = positive_roots_sym(n);
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q) out.push_back(Root::sum(p, q));
  return out;
}

std::vector<Root> positive_roots_block(int n, int i) {
  std::vector<Root> out;
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q)
      if (q <= i || p > i) out.push_back(Root::diff(p, q));
  return out;
}

std::vector<Root> simple_roots_sym(int n) {
  std::vector<Root> out;
  for (int j = 1; j < n; ++j) out.push_back(Root::diff(j, j + 1));
  return out;
}

SignCharacter char_action(const SignedPermutation& w, const SignCharacter& mu) {
  if (w.n() != mu.n()) throw std::invalid_argument("rank mismatch");
  const auto winv = w.inverse();
  std::vector<int> vals(mu.n());
  for (int j = 1; j <= mu.n(); ++j) vals[j - 1] = mu.value(winv.image_index(j));
  return SignCharacter(std::move(vals));
}

std::vector<Rat> char_action_poly(const SignedPermutation& w, const std::vector<Rat>& gamma) {
  if (static_cast<int>(gamma.size()) != w.n()) throw std::invalid_argument("rank mismatch");
  const auto winv = w.inverse();
  std::vector<Rat> out(gamma.size());
  // (^w gamma)(eps_l) = gamma(w^{-1}(eps_l)) = sign * gamma_{pi^{-1}(l)}.
  for (int l = 1; l <= w.n(); ++l)
    out[l - 1] = Rat(winv.image_sign(l)) * gamma[winv.image_index(l) - 1];
  return out;
}

std::pair<int, SignedPermutation> sigma_and_i(const SignCharacter& mu) {
  const int n = mu.n();
  std::vector<int> plus, minus;
  for (int j = 1; j <= n; ++j) (mu.value(j) == 1 ? plus : minus).push_back(j);
  const int i = static_cast<int>(plus.size());
  std::vector<int> perm(n), signs(n, 1);
  for (int p = 0; p < i; ++p) perm[plus[p] - 1] = p + 1;
  for (int p = 0; p < n - i; ++p) perm[minus[p] - 1] = i + p + 1;
  return {i, SignedPermutation::from_parts(std::move(perm), std::move(signs))};
}

std::vector<SignedPermutation> all_sym(int n) {
  std::vector<int> line(n);
  std::iota(line.begin(), line.end(), 1);
  std::vector<SignedPermutation> out;
  do {
    out.push_back(SignedPermutation::from_parts(line, std::vector<int>(n, 1)));
  } while (std::next_permutation(line.begin(), line.end()));
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return (a <=> b) < 0; });
  return out;
}

std::vector<SignedPermutation> all_torus(int n) {
  std::vector<SignedPermutation> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> flips;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) flips.push_back(i + 1);
    out.push_back(SignedPermutation::from_flip_set(n, flips));
  }
  return out;
}

std::vector<SignedPermutation> all_signed(int n) {
  std::vector<SignedPermutation> out;
  for (const auto& u : all_sym(n)) {
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> signs(n, 1);
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) signs[i] = -1;
      out.push_back(SignedPermutation::from_parts(u.perm_one_line(), signs));
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return (a <=> b) < 0; });
  return out;
}

std::vector<SignedPermutation> sym_stabilizer(const SignCharacter& mu) {
  std::vector<SignedPermutation> out;
  for (const auto& w : all_sym(mu.n()))
    if (char_action(w, mu) == mu) out.push_back(w);
  return out;
}

std::vector<SignedPermutation> sym_stabilizer_even(const SignCharacter& mu) {
  const auto neg = mu.negated();
  std::vector<SignedPermutation> out;
  for (const auto& w : all_sym(mu.n())) {
    const auto wm = char_action(w, mu);
    if (wm == mu || wm == neg) out.push_back(w);
  }
  return out;
}

std::vector<SignedPermutation> stabilizer_generators(const SignCharacter& mu) {
  const int n = mu.n();
  std::vector<int> plus, minus;
  for (int j = 1; j <= n; ++j) (mu.value(j) == 1 ? plus : minus).push_back(j);
  std::vector<SignedPermutation> gens;
  for (size_t l = 0; l + 1 < plus.size(); ++l)
    gens.push_back(SignedPermutation::transposition(n, plus[l], plus[l + 1]));
  for (size_t l = 0; l + 1 < minus.size(); ++l)
    gens.push_back(SignedPermutation::transposition(n, minus[l], minus[l + 1]));
  return gens;
}

std::vector<SignedPermutation> coset_reps(const SignCharacter& mu) {
  std::vector<SignedPermutation> reps;
  std::set<SignCharacter> seen;
  for (const auto& w : all_sym(mu.n())) {
    auto wm = char_action(w, mu);
    if (seen.insert(wm).second) reps.push_back(w);
  }
  return reps;
}

}  // namespace hecke
