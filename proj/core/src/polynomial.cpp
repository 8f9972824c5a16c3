#include <hecke/polynomial.hpp>

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace hecke {

namespace {

void check_rank(int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
}

}  // namespace

Polynomial Polynomial::constant(int n, const Rat& c) {
  check_rank(n);
  Polynomial p(n);
  p.add_term(Exponents(n, 0), c);
  return p;
}

Polynomial Polynomial::variable(int n, int l) {
  check_rank(n);
  if (l < 1 || l > n) throw std::invalid_argument("variable index out of range");
  Polynomial p(n);
  Exponents e(n, 0);
  e[l - 1] = 1;
  p.add_term(e, Rat(1));
  return p;
}

Polynomial Polynomial::monomial(int n, Exponents exp, const Rat& c) {
  check_rank(n);
  if (static_cast<int>(exp.size()) != n) throw std::invalid_argument("exponent size mismatch");
  Polynomial p(n);
  p.add_term(exp, c);
  return p;
}

Polynomial Polynomial::linear_form(int n, const std::vector<Rat>& coeffs) {
  check_rank(n);
  if (static_cast<int>(coeffs.size()) != n) throw std::invalid_argument("coeff size mismatch");
  Polynomial p(n);
  for (int l = 1; l <= n; ++l) {
    Exponents e(n, 0);
    e[l - 1] = 1;
    p.add_term(e, coeffs[l - 1]);
  }
  return p;
}

Polynomial Polynomial::from_root(int n, const Root& alpha) {
  std::vector<Rat> coeffs(n);
  for (int l = 1; l <= n; ++l) coeffs[l - 1] = alpha.coeff(l);
  return linear_form(n, coeffs);
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& [exp, c] : terms_) {
    int t = 0;
    for (unsigned e : exp) t += static_cast<int>(e);
    d = std::max(d, t);
  }
  return d;
}

int Polynomial::degree_in(int l) const {
  int d = 0;
  for (const auto& [exp, c] : terms_) d = std::max(d, static_cast<int>(exp[l - 1]));
  return d;
}

Rat Polynomial::coefficient(const Exponents& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Polynomial::add_term(const Exponents& exp, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(exp, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out(n_);
  for (const auto& [exp, c] : terms_) out.terms_.emplace(exp, -c);
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial out = *this;
  out += o;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial out = *this;
  out -= o;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (n_ != o.n_) throw std::invalid_argument("rank mismatch");
  for (const auto& [exp, c] : o.terms_) add_term(exp, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (n_ != o.n_) throw std::invalid_argument("rank mismatch");
  for (const auto& [exp, c] : o.terms_) add_term(exp, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (n_ != o.n_) throw std::invalid_argument("rank mismatch");
  Polynomial out(n_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(n_);
      for (int i = 0; i < n_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::operator*(const Rat& c) const {
  Polynomial out(n_);
  if (c == 0) return out;
  for (const auto& [exp, t] : terms_) out.terms_.emplace(exp, t * c);
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial out = constant(n_, Rat(1));
  for (unsigned i = 0; i < e; ++i) out = out * *this;
  return out;
}

Polynomial Polynomial::apply(const SignedPermutation& w) const {
  if (w.n() != n_) throw std::invalid_argument("rank mismatch");
  Polynomial out(n_);
  for (const auto& [exp, c] : terms_) {
    Exponents e(n_, 0);
    Rat coeff = c;
    for (int i = 1; i <= n_; ++i) {
      const unsigned d = exp[i - 1];
      if (!d) continue;
      e[w.image_index(i) - 1] = d;
      if (w.image_sign(i) == -1 && d % 2 == 1) coeff = -coeff;
    }
    out.add_term(e, coeff);
  }
  return out;
}

Polynomial Polynomial::derivative(int l) const {
  Polynomial out(n_);
  for (const auto& [exp, c] : terms_) {
    const unsigned d = exp[l - 1];
    if (!d) continue;
    Exponents e = exp;
    e[l - 1] = d - 1;
    out.add_term(e, c * Rat(d));
  }
  return out;
}

Rat Polynomial::evaluate(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != n_) throw std::invalid_argument("point size mismatch");
  Rat v(0);
  for (const auto& [exp, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < n_; ++i)
      for (unsigned e = 0; e < exp[i]; ++e) t *= point[i];
    v += t;
  }
  return v;
}

bool Polynomial::is_symmetric() const {
  for (int j = 1; j < n_; ++j)
    if (apply(SignedPermutation::transposition(n_, j, j + 1)) != *this) return false;
  return true;
}

Polynomial Polynomial::divide_by_linear(const Polynomial& linear) const {
  if (linear.n_ != n_) throw std::invalid_argument("rank mismatch");
  if (linear.total_degree() != 1 || linear.coefficient(Exponents(n_, 0)) != 0)
    throw std::invalid_argument("divisor must be a linear form without constant term");
  int l = 0;
  Rat cl;
  for (int i = 1; i <= n_; ++i) {
    Exponents e(n_, 0);
    e[i - 1] = 1;
    cl = linear.coefficient(e);
    if (cl != 0) {
      l = i;
      break;
    }
  }
  Polynomial rem = *this, quot(n_);
  while (true) {
    // Pick a term of maximal degree in x_l; synthetic division along x_l.
    auto best = rem.terms_.end();
    unsigned bestdeg = 0;
    for (auto it = rem.terms_.begin(); it != rem.terms_.end(); ++it) {
      if (it->first[l - 1] > bestdeg || (it->first[l - 1] > 0 && best == rem.terms_.end())) {
        bestdeg = it->first[l - 1];
        best = it;
      }
    }
    if (best == rem.terms_.end()) break;
    Exponents e = best->first;
    e[l - 1] -= 1;
    Polynomial h = monomial(n_, e, best->second / cl);
    quot += h;
    rem -= h * linear;
  }
  if (!rem.is_zero()) throw std::domain_error("division by linear form leaves a remainder");
  return quot;
}

Polynomial Polynomial::elementary_symmetric(int n, int r) {
  check_rank(n);
  if (r < 0 || r > n) throw std::invalid_argument("bad elementary symmetric index");
  Polynomial out(n);
  std::vector<int> idx(r);
  // Iterate r-subsets of {1..n}.
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == r) {
      Exponents e(n, 0);
      for (int i : idx) e[i - 1] = 1;
      out.add_term(e, Rat(1));
      return;
    }
    for (int v = start; v <= n; ++v) {
      idx[depth] = v;
      rec(v + 1, depth + 1);
    }
  };
  rec(1, 0);
  return out;
}

Polynomial Polynomial::power_sum(int n, int r) {
  check_rank(n);
  Polynomial out(n);
  for (int l = 1; l <= n; ++l) {
    Exponents e(n, 0);
    e[l - 1] = static_cast<unsigned>(r);
    out.add_term(e, Rat(1));
  }
  return out;
}

Polynomial Polynomial::random(int n, int maxdeg, std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, 3);
  Polynomial out(n);
  Exponents e(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int rem) {
    if (pos == n) {
      Rat c(num(rng), den(rng));
      c.canonicalize();
      out.add_term(e, c);
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

std::string Polynomial::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending exponent-lex reads naturally (leading term first).
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [exp, c] = *it;
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
    bool constant_term = std::all_of(exp.begin(), exp.end(), [](unsigned e) { return e == 0; });
    bool wrote = false;
    if (a != 1 || constant_term) {
      os << format_rat(a);
      wrote = true;
    }
    for (int i = 0; i < n_; ++i) {
      if (!exp[i]) continue;
      if (wrote) os << '*';
      os << var << (i + 1);
      if (exp[i] > 1) os << '^' << exp[i];
      wrote = true;
    }
  }
  return os.str();
}

Polynomial Polynomial::parse(int n, const std::string& text, const std::string& var) {
  check_rank(n);
  Polynomial out(n);
  // Split into signed terms at top level; the grammar has no parentheses.
  std::vector<std::pair<int, std::string>> parts;
  std::string cur;
  int sign = 1;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '+' || ch == '-') {
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
  if (!cur.empty()) parts.emplace_back(sign, cur);
  for (auto& [sg, term] : parts) {
    Rat coeff(sg);
    Exponents e(n, 0);
    std::istringstream is(term);
    std::string factor;
    while (std::getline(is, factor, '*')) {
      if (factor.empty()) throw std::invalid_argument("empty factor in term: " + term);
      if (factor.compare(0, var.size(), var) == 0 &&
          factor.size() > var.size() &&
          std::isdigit(static_cast<unsigned char>(factor[var.size()]))) {
        size_t caret = factor.find('^');
        int idx = std::stoi(factor.substr(var.size(), caret - var.size()));
        if (idx < 1 || idx > n) throw std::invalid_argument("variable index out of range");
        unsigned p = 1;
        if (caret != std::string::npos) {
          long e0 = std::stol(factor.substr(caret + 1));
          if (e0 < 0) throw std::invalid_argument("negative exponent");
          p = static_cast<unsigned>(e0);
        }
        e[idx - 1] += p;
      } else {
        coeff *= parse_rat(factor);
      }
    }
    out.add_term(e, coeff);
  }
  return out;
}

}  // namespace hecke
