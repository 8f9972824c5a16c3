#include <hecke/psmodule.hpp>

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace hecke {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("module invariant failed: ") + what);
}

std::string gen_label(char kind, int idx) { return kind + std::to_string(idx); }

AlgebraElement gen_element(int n, const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("bad generator name: " + name);
  const int idx = std::stoi(name.substr(1));
  switch (name[0]) {
    case 'e':
      return AlgebraElement::variable(n, idx);
    case 's':
      return AlgebraElement::from_group(SignedPermutation::transposition(n, idx, idx + 1));
    case 't':
      return AlgebraElement::from_group(SignedPermutation::sign_flip(n, idx));
    case 'u':
      return AlgebraElement::from_group(SignedPermutation::from_flip_set(n, {idx, idx + 1}));
    default:
      throw std::invalid_argument("bad generator name: " + name);
  }
}

// Action of eps_l on the principal series: diagonal part is the twisted
// character value, and each inversion of the permutation part contributes the
// straightening correction -<alpha-vee, eps_l> k (1 + (^w mu)(t_a t_b)) one
// step down in the length order.
RatMatrix eps_matrix_signed(const MatrixModule& m, int l) {
  const int d = m.dim();
  RatMatrix E(d, d);
  for (int col = 0; col < d; ++col) {
    const SignedPermutation& w = m.basis[col];
    E.at(col, col) = char_action_poly(w, m.chi.gamma)[l - 1];
    const SignCharacter wmu = char_action(w, m.chi.mu);
    for (const Root& alpha : inversion_set(w)) {
      const Rat pairing = alpha.coroot_pairing(l);
      if (pairing == 0) continue;
      const Rat mult = m.k * (1 + Rat(wmu.value(alpha.p) * wmu.value(alpha.q)));
      if (mult == 0) continue;
      const int row = m.index_of(alpha.reflection(m.n).compose(w));
      E.at(row, col) -= pairing * mult;
    }
  }
  return E;
}

// Same shape for the two-block graded series: the correction is a fixed
// scalar c per inversion (all inversions of a block permutation are block
// roots).
RatMatrix eps_matrix_graded(const MatrixModule& m, int l) {
  const int d = m.dim();
  RatMatrix E(d, d);
  for (int col = 0; col < d; ++col) {
    const SignedPermutation& w = m.basis[col];
    E.at(col, col) = char_action_poly(w, m.chi.gamma)[l - 1];
    for (const Root& alpha : inversion_set(w)) {
      const Rat pairing = alpha.coroot_pairing(l);
      if (pairing == 0) continue;
      const int row = m.index_of(alpha.reflection(m.n).compose(w));
      E.at(row, col) -= pairing * m.k;
    }
  }
  return E;
}

enum class Family { B, D, Graded };

Family family_of(ModuleKind kind) {
  switch (kind) {
    case ModuleKind::TypeB:
      return Family::B;
    case ModuleKind::TypeD:
      return Family::D;
    case ModuleKind::GradedBlock:
      return Family::Graded;
    default:
      throw std::logic_error("derived module has no canonical relation family");
  }
}

// t_a t_b as a product of the consecutive-pair generators.
RatMatrix pair_flip_matrix(const MatrixModule& m, int a, int b) {
  if (a > b) std::swap(a, b);
  RatMatrix out = m.gen(gen_label('u', a));
  for (int c = a + 1; c < b; ++c) out = out * m.gen(gen_label('u', c));
  return out;
}

// Checks the defining presentation on the generator matrices; this is a
// complete verification of the module structure, not a spot check.
void verify_module_relations(const MatrixModule& m, Family fam, bool check_triangular) {
  const int n = m.n;
  const int d = m.dim();
  const RatMatrix id = RatMatrix::identity(d);

  std::vector<const RatMatrix*> E(n + 1, nullptr);
  for (int l = 1; l <= n; ++l) {
    E[l] = &m.gen(gen_label('e', l));
    if (check_triangular) require(E[l]->is_upper_triangular(), "triangular polynomial action");
  }
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      require(*E[a] * *E[b] == *E[b] * *E[a], "commuting polynomial generators");

  const auto sgen = [&](int j) -> const RatMatrix& { return m.gen(gen_label('s', j)); };
  const auto simple_pairing = [](int j, int l) { return Rat((l == j) - (l == j + 1)); };

  if (fam == Family::B || fam == Family::D) {
    for (int j = 1; j < n; ++j) {
      require(sgen(j) * sgen(j) == id, "transposition involution");
      if (j + 1 < n)
        require(sgen(j) * sgen(j + 1) * sgen(j) == sgen(j + 1) * sgen(j) * sgen(j + 1),
                "braid relation");
      for (int l = j + 2; l < n; ++l)
        require(sgen(j) * sgen(l) == sgen(l) * sgen(j), "distant transpositions commute");
    }
  }

  if (fam == Family::B) {
    const auto tgen = [&](int i) -> const RatMatrix& { return m.gen(gen_label('t', i)); };
    for (int i = 1; i <= n; ++i) {
      require(tgen(i) * tgen(i) == id, "sign flip involution");
      for (int j = i + 1; j <= n; ++j)
        require(tgen(i) * tgen(j) == tgen(j) * tgen(i), "sign flips commute");
      for (int l = 1; l <= n; ++l)
        require(tgen(i) * *E[l] == *E[l] * tgen(i), "sign flips centralize the polynomials");
    }
    for (int j = 1; j < n; ++j) {
      for (int i = 1; i <= n; ++i) {
        const int im = i == j ? j + 1 : (i == j + 1 ? j : i);
        require(sgen(j) * tgen(i) == tgen(im) * sgen(j), "transposition permutes sign flips");
      }
      const RatMatrix mult = (id + tgen(j) * tgen(j + 1)) * m.k;
      for (int l = 1; l <= n; ++l) {
        const int lm = l == j ? j + 1 : (l == j + 1 ? j : l);
        require(sgen(j) * *E[l] == *E[lm] * sgen(j) - mult * simple_pairing(j, l),
                "straightening relation");
      }
    }
  } else if (fam == Family::D) {
    const auto ugen = [&](int i) -> const RatMatrix& { return m.gen(gen_label('u', i)); };
    for (int i = 1; i < n; ++i) {
      require(ugen(i) * ugen(i) == id, "pair flip involution");
      for (int j = i + 1; j < n; ++j)
        require(ugen(i) * ugen(j) == ugen(j) * ugen(i), "pair flips commute");
      for (int l = 1; l <= n; ++l)
        require(ugen(i) * *E[l] == *E[l] * ugen(i), "pair flips centralize the polynomials");
    }
    for (int j = 1; j < n; ++j) {
      for (int i = 1; i < n; ++i) {
        const int a = i == j ? j + 1 : (i == j + 1 ? j : i);
        const int b = i + 1 == j ? j + 1 : (i + 1 == j + 1 ? j : i + 1);
        require(sgen(j) * ugen(i) * sgen(j) == pair_flip_matrix(m, a, b),
                "transposition permutes pair flips");
      }
      const RatMatrix mult = (id + ugen(j)) * m.k;
      for (int l = 1; l <= n; ++l) {
        const int lm = l == j ? j + 1 : (l == j + 1 ? j : l);
        require(sgen(j) * *E[l] == *E[lm] * sgen(j) - mult * simple_pairing(j, l),
                "straightening relation");
      }
    }
  } else {
    std::vector<int> simple;
    for (int j = 1; j < n; ++j)
      if (j != m.block_i) simple.push_back(j);
    for (int j : simple) {
      require(sgen(j) * sgen(j) == id, "transposition involution");
      for (int l : simple) {
        if (l == j + 1)
          require(sgen(j) * sgen(l) * sgen(j) == sgen(l) * sgen(j) * sgen(l), "braid relation");
        else if (l > j + 1)
          require(sgen(j) * sgen(l) == sgen(l) * sgen(j), "distant transpositions commute");
      }
      for (int l = 1; l <= n; ++l) {
        const int lm = l == j ? j + 1 : (l == j + 1 ? j : l);
        require(sgen(j) * *E[l] == *E[lm] * sgen(j) - id * (m.k * simple_pairing(j, l)),
                "straightening relation");
      }
    }
  }
}

std::optional<std::vector<std::uint64_t>> modp_image_vec(const std::vector<Rat>& v) {
  std::vector<std::uint64_t> out(v.size(), 0);
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    const auto im = modp::image(v[i]);
    if (!im) return std::nullopt;
    out[i] = *im;
  }
  return out;
}

std::vector<std::uint64_t> modp_mul_flat(const std::vector<std::uint64_t>& x,
                                         const std::vector<std::uint64_t>& g, int d) {
  std::vector<std::uint64_t> out(size_t(d) * d, 0);
  for (int i = 0; i < d; ++i)
    for (int t = 0; t < d; ++t) {
      const std::uint64_t xv = x[size_t(i) * d + t];
      if (!xv) continue;
      for (int j = 0; j < d; ++j) {
        const std::uint64_t gv = g[size_t(t) * d + j];
        if (gv) out[size_t(i) * d + j] = modp::add(out[size_t(i) * d + j], modp::mul(xv, gv));
      }
    }
  return out;
}

RatMatrix mat_pow(RatMatrix a, unsigned e) {
  RatMatrix out = RatMatrix::identity(a.rows());
  while (e) {
    if (e & 1u) out = out * a;
    a = a * a;
    e >>= 1u;
  }
  return out;
}

RatMatrix restrict_checked(const RatMatrix& g, const std::vector<int>& indices,
                           const std::vector<char>& in_set, const std::string& what) {
  for (int c : indices)
    for (int r = 0; r < g.rows(); ++r)
      if (!in_set[r] && g.at(r, c) != 0)
        throw std::invalid_argument("subspace not stable under " + what);
  return g.submatrix(indices, indices);
}

}  // namespace

FullCharacter char_action_full(const SignedPermutation& w, const FullCharacter& chi) {
  return {char_action_poly(w, chi.gamma), char_action(w, chi.mu)};
}

FullCharacter dual_character(const FullCharacter& chi) {
  const auto w0 = SignedPermutation::longest_sym(chi.n());
  auto g = char_action_poly(w0, chi.gamma);
  for (auto& x : g) x = -x;
  return {std::move(g), char_action(w0, chi.mu).negated()};
}

int MatrixModule::index_of(const SignedPermutation& w) const {
  for (size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == w) return static_cast<int>(i);
  throw std::out_of_range("group element not in the module basis");
}

const RatMatrix& MatrixModule::gen(const std::string& name) const {
  for (size_t i = 0; i < gen_names.size(); ++i)
    if (gen_names[i] == name) return gens[i];
  throw std::out_of_range("no generator named " + name);
}

RatMatrix group_matrix(const MatrixModule& m, const SignedPermutation& w) {
  if (w.n() != m.n) throw std::invalid_argument("rank mismatch");
  if (m.kind == ModuleKind::Derived)
    throw std::logic_error("group matrices need a principal-series module");
  if (m.kind == ModuleKind::TypeD && !w.in_type_d())
    throw std::invalid_argument("group element outside the even subgroup");
  if (m.kind == ModuleKind::GradedBlock) {
    if (!w.in_sym()) throw std::invalid_argument("group element outside the block subgroup");
    for (int j = 1; j <= m.block_i; ++j)
      if (w.image_index(j) > m.block_i)
        throw std::invalid_argument("group element outside the block subgroup");
  }
  const int d = m.dim();
  RatMatrix G(d, d);
  for (int col = 0; col < d; ++col) {
    const SignedPermutation w2 = w.compose(m.basis[col]);
    const SignedPermutation u =
        SignedPermutation::from_parts(w2.perm_one_line(), std::vector<int>(m.n, 1));
    const SignCharacter cu = char_action(u, m.chi.mu);
    Rat coeff(1);
    for (int j = 1; j <= m.n; ++j)
      if (w2.sign_at_target(j) < 0) coeff *= cu.value(j);
    G.at(m.index_of(u), col) = coeff;
  }
  return G;
}

RatMatrix evaluate(const MatrixModule& m, const AlgebraElement& a) {
  if (a.n() != m.n) throw std::invalid_argument("rank mismatch");
  const int d = m.dim();
  RatMatrix out(d, d);
  for (const auto& [key, c] : a.terms()) {
    RatMatrix M = group_matrix(m, key.w);
    for (int l = 1; l <= m.n; ++l) {
      const RatMatrix& El = m.gen(gen_label('e', l));
      for (unsigned e = 0; e < key.exp[l - 1]; ++e) M = El * M;
    }
    out = out + M * c;
  }
  return out;
}

MatrixModule build_principal_series_b(const AlgebraContext& ctx, const FullCharacter& chi) {
  if (chi.n() != ctx.n || chi.mu.n() != ctx.n)
    throw std::invalid_argument("character rank mismatch");
  MatrixModule m;
  m.kind = ModuleKind::TypeB;
  m.n = ctx.n;
  m.k = ctx.k;
  m.chi = chi;
  m.basis = all_sym(ctx.n);
  for (int l = 1; l <= ctx.n; ++l) {
    m.gen_names.push_back(gen_label('e', l));
    m.gens.push_back(eps_matrix_signed(m, l));
  }
  for (int j = 1; j < ctx.n; ++j) {
    m.gen_names.push_back(gen_label('s', j));
    m.gens.push_back(group_matrix(m, SignedPermutation::transposition(ctx.n, j, j + 1)));
  }
  for (int i = 1; i <= ctx.n; ++i) {
    m.gen_names.push_back(gen_label('t', i));
    m.gens.push_back(group_matrix(m, SignedPermutation::sign_flip(ctx.n, i)));
  }
  verify_module_relations(m, Family::B, true);
  return m;
}

MatrixModule build_principal_series_d(const AlgebraContext& ctx, const FullCharacter& chi) {
  if (chi.n() != ctx.n || chi.mu.n() != ctx.n)
    throw std::invalid_argument("character rank mismatch");
  MatrixModule m;
  m.kind = ModuleKind::TypeD;
  m.n = ctx.n;
  m.k = ctx.k;
  m.chi = chi;
  m.basis = all_sym(ctx.n);
  for (int l = 1; l <= ctx.n; ++l) {
    m.gen_names.push_back(gen_label('e', l));
    m.gens.push_back(eps_matrix_signed(m, l));
  }
  for (int j = 1; j < ctx.n; ++j) {
    m.gen_names.push_back(gen_label('s', j));
    m.gens.push_back(group_matrix(m, SignedPermutation::transposition(ctx.n, j, j + 1)));
  }
  for (int i = 1; i < ctx.n; ++i) {
    m.gen_names.push_back(gen_label('u', i));
    m.gens.push_back(group_matrix(m, SignedPermutation::from_flip_set(ctx.n, {i, i + 1})));
  }
  verify_module_relations(m, Family::D, true);
  return m;
}

MatrixModule build_graded_block_module(int n, int i, const Rat& c,
                                       const std::vector<Rat>& nu) {
  if (n < 1 || i < 0 || i > n) throw std::invalid_argument("bad block split");
  if (static_cast<int>(nu.size()) != n) throw std::invalid_argument("character rank mismatch");
  if (c == 0) throw std::invalid_argument("parameter must be nonzero");
  MatrixModule m;
  m.kind = ModuleKind::GradedBlock;
  m.n = n;
  m.k = c;
  m.block_i = i;
  std::vector<int> pattern(n);
  for (int j = 1; j <= n; ++j) pattern[j - 1] = j <= i ? 1 : -1;
  m.chi = {nu, SignCharacter(pattern)};
  for (const auto& w : all_sym(n)) {
    bool block = true;
    for (int j = 1; j <= i && block; ++j)
      if (w.image_index(j) > i) block = false;
    if (block) m.basis.push_back(w);
  }
  for (int l = 1; l <= n; ++l) {
    m.gen_names.push_back(gen_label('e', l));
    m.gens.push_back(eps_matrix_graded(m, l));
  }
  for (int j = 1; j < n; ++j) {
    if (j == i) continue;
    m.gen_names.push_back(gen_label('s', j));
    m.gens.push_back(group_matrix(m, SignedPermutation::transposition(n, j, j + 1)));
  }
  verify_module_relations(m, Family::Graded, true);
  return m;
}

WeightTable weight_table(const MatrixModule& m) {
  const int d = m.dim();
  std::vector<const RatMatrix*> egens;
  for (int l = 1; l <= m.n; ++l) {
    egens.push_back(&m.gen(gen_label('e', l)));
    if (!egens.back()->is_upper_triangular())
      throw std::invalid_argument("weight table needs a triangular polynomial action");
  }
  WeightTable table;
  std::vector<const RatMatrix*> dgens;
  for (size_t g = 0; g < m.gen_names.size(); ++g) {
    if (m.gen_names[g][0] != 't' && m.gen_names[g][0] != 'u') continue;
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c)
        if (r != c && m.gens[g].at(r, c) != 0)
          throw std::invalid_argument("weight table needs diagonal group generators");
    table.diag_gen_names.push_back(m.gen_names[g]);
    dgens.push_back(&m.gens[g]);
  }

  std::set<std::pair<std::vector<Rat>, std::vector<Rat>>> cands;
  for (int b = 0; b < d; ++b) {
    std::vector<Rat> gv, dv;
    for (const auto* e : egens) gv.push_back(e->at(b, b));
    for (const auto* t : dgens) dv.push_back(t->at(b, b));
    cands.insert({std::move(gv), std::move(dv)});
  }

  int total = 0;
  for (const auto& [gv, dv] : cands) {
    const size_t ngen = egens.size() + dgens.size();
    RatMatrix eig(static_cast<int>(ngen) * d, d);
    RatMatrix gen(static_cast<int>(ngen) * d, d);
    size_t block = 0;
    const auto put = [&](const RatMatrix& a, const Rat& lambda) {
      RatMatrix shifted = a - RatMatrix::identity(d) * lambda;
      RatMatrix powered = mat_pow(shifted, static_cast<unsigned>(d));
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
          eig.at(static_cast<int>(block) * d + r, c) = shifted.at(r, c);
          gen.at(static_cast<int>(block) * d + r, c) = powered.at(r, c);
        }
      ++block;
    };
    for (size_t l = 0; l < egens.size(); ++l) put(*egens[l], gv[l]);
    for (size_t t = 0; t < dgens.size(); ++t) put(*dgens[t], dv[t]);

    WeightRow row;
    row.gamma = gv;
    row.diag = dv;
    row.eigen_basis = eig.kernel_basis();
    row.generalized_dim = d - gen.rank();
    require(!row.eigen_basis.empty(), "weight candidate has an eigenvector");
    require(static_cast<int>(row.eigen_basis.size()) <= row.generalized_dim,
            "eigenspace inside generalized space");
    total += row.generalized_dim;
    table.rows.push_back(std::move(row));
  }
  require(total == d, "generalized weight spaces exhaust the module");
  // std::set iteration is already sorted by (gamma, diag).
  return table;
}

std::vector<std::vector<Rat>> submodule_generated(const MatrixModule& m,
                                                  const std::vector<Rat>& v) {
  if (static_cast<int>(v.size()) != m.dim()) throw std::invalid_argument("vector size mismatch");
  RowSpace space(v.size(), false);
  std::deque<std::vector<Rat>> queue;
  {
    auto r = v;
    if (!space.reduce(r)) return {};
    space.insert(r);
    queue.push_back(std::move(r));
  }
  while (!queue.empty()) {
    const auto x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : m.gens) {
      auto y = g.apply(x);
      if (!space.reduce(y)) continue;
      space.insert(y);
      queue.push_back(std::move(y));
    }
  }
  return space.basis();
}

BurnsideReport burnside_irreducible(const MatrixModule& m, const BurnsideOptions& opts) {
  const int d = m.dim();
  const size_t D = size_t(d) * d;

  struct Item {
    std::vector<Rat> row;
    std::optional<std::vector<std::uint64_t>> shadow;
  };

  std::vector<std::vector<std::uint64_t>> gshadow;
  bool gens_have_shadow = true;
  for (const auto& g : m.gens) {
    auto im = modp_image_vec(g.flat());
    if (!im) {
      gens_have_shadow = false;
      gshadow.clear();
      break;
    }
    gshadow.push_back(std::move(*im));
  }

  const auto run_closure = [&](RowSpace& space, std::deque<Item>& queue, bool use_screen) {
    while (!queue.empty() && space.dim() < D) {
      const Item item = std::move(queue.front());
      queue.pop_front();
      const RatMatrix x = RatMatrix::from_flat(d, d, item.row);
      for (size_t gi = 0; gi < m.gens.size(); ++gi) {
        const bool screening = use_screen && space.shadow_active();
        if (screening && gens_have_shadow && item.shadow) {
          auto yshadow = modp_mul_flat(*item.shadow, gshadow[gi], d);
          if (!space.screen_independent_mod(std::move(yshadow))) continue;
          auto y = (x * m.gens[gi]).take_flat();
          require(space.reduce(y), "screen certified an independent row");
          auto im = modp_image_vec(y);
          space.insert(y);
          queue.push_back({std::move(y), std::move(im)});
        } else if (screening) {
          auto y = (x * m.gens[gi]).take_flat();
          if (!space.screen_independent(y)) continue;
          require(space.reduce(y), "screen certified an independent row");
          auto im = modp_image_vec(y);
          space.insert(y);
          queue.push_back({std::move(y), std::move(im)});
        } else {
          auto y = (x * m.gens[gi]).take_flat();
          if (!space.reduce(y)) continue;
          space.insert(y);
          queue.push_back({std::move(y), std::nullopt});
        }
        if (space.dim() == D) return;
      }
    }
  };

  RowSpace space(D, opts.modp_screen);
  std::deque<Item> queue;
  const auto seed = [&](const RatMatrix& g) {
    auto y = g.flat();
    if (!space.reduce(y)) return;
    auto im = modp_image_vec(y);
    space.insert(y);
    queue.push_back({std::move(y), std::move(im)});
  };
  seed(RatMatrix::identity(d));
  for (const auto& g : m.gens) seed(g);
  run_closure(space, queue, opts.modp_screen);
  if (space.dim() == D) return {true, D, 1, {}};

  if (opts.eigenvector_shortcut) {
    bool have_table = true;
    WeightTable table;
    try {
      table = weight_table(m);
    } catch (const std::invalid_argument&) {
      have_table = false;
    }
    if (have_table) {
      const std::vector<Rat> scales = {Rat(1), Rat(-1), Rat(2), Rat(-2), Rat(1) / 2, Rat(-1) / 2};
      for (const auto& row : table.rows) {
        std::vector<std::vector<Rat>> cands = row.eigen_basis;
        for (size_t a = 0; a < row.eigen_basis.size(); ++a)
          for (size_t b = a + 1; b < row.eigen_basis.size(); ++b)
            for (const Rat& t : scales) {
              auto v = row.eigen_basis[a];
              for (size_t j = 0; j < v.size(); ++j) v[j] += t * row.eigen_basis[b][j];
              cands.push_back(std::move(v));
            }
        for (const auto& v : cands) {
          auto sub = submodule_generated(m, v);
          if (!sub.empty() && static_cast<int>(sub.size()) < d)
            return {false, space.dim(), 2, std::move(sub)};
        }
      }
    }
  }

  // Exact closure seeded with everything accepted so far; decides both ways.
  RowSpace full(D, false);
  std::deque<Item> queue2;
  for (const auto& row : space.basis()) {
    auto y = row;
    if (!full.reduce(y)) continue;
    full.insert(y);
    queue2.push_back({std::move(y), std::nullopt});
  }
  run_closure(full, queue2, false);
  return {full.dim() == D, full.dim(), 3, {}};
}

MatrixModule dual_module(const AlgebraContext& ctx, const MatrixModule& m) {
  if (m.kind != ModuleKind::TypeB && m.kind != ModuleKind::TypeD)
    throw std::invalid_argument("dual needs a principal-series module");
  MatrixModule out;
  out.kind = ModuleKind::Derived;
  out.n = m.n;
  out.k = m.k;
  out.chi = dual_character(m.chi);
  out.basis = m.basis;
  out.gen_names = m.gen_names;
  for (const auto& name : m.gen_names)
    out.gens.push_back(evaluate(m, iota(ctx, gen_element(m.n, name))).transpose());
  verify_module_relations(out, family_of(m.kind), false);
  return out;
}

MatrixModule twist_by_delta(const MatrixModule& m) {
  if (m.kind != ModuleKind::TypeB)
    throw std::invalid_argument("sign-flip twist needs the full principal series");
  MatrixModule out = m;
  out.kind = ModuleKind::Derived;
  out.chi.mu = m.chi.mu.negated();
  for (size_t g = 0; g < out.gen_names.size(); ++g)
    if (out.gen_names[g][0] == 't') out.gens[g] = out.gens[g] * Rat(-1);
  verify_module_relations(out, Family::B, false);
  return out;
}

MatrixModule twist_by_conjugation(const AlgebraContext& ctx, const MatrixModule& m,
                                  const SignedPermutation& w) {
  if (m.kind != ModuleKind::TypeB)
    throw std::invalid_argument("conjugation twist needs the full principal series");
  if (w.n() != m.n) throw std::invalid_argument("rank mismatch");
  MatrixModule out;
  out.kind = ModuleKind::Derived;
  out.n = m.n;
  out.k = m.k;
  out.chi = char_action_full(w, m.chi);
  out.basis = m.basis;
  out.gen_names = m.gen_names;
  const auto tw = AlgebraElement::from_group(w);
  const auto twi = AlgebraElement::from_group(w.inverse());
  for (const auto& name : m.gen_names) {
    const auto conj = multiply(ctx, tw, multiply(ctx, gen_element(m.n, name), twi));
    out.gens.push_back(evaluate(m, conj));
  }
  verify_module_relations(out, Family::B, false);
  return out;
}

IntertwinerResult intertwiner(const MatrixModule& m1, const MatrixModule& m2) {
  if (m1.dim() != m2.dim() || m1.n != m2.n || m1.gen_names != m2.gen_names)
    throw std::invalid_argument("modules are not comparable");
  const int d = m1.dim();
  const size_t D = size_t(d) * d;
  RatMatrix sys(static_cast<int>(m1.gens.size() * D), static_cast<int>(D));
  for (size_t g = 0; g < m1.gens.size(); ++g) {
    const RatMatrix& g1 = m1.gens[g];
    const RatMatrix& g2 = m2.gens[g];
    const int base = static_cast<int>(g * D);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const int row = base + i * d + j;
        for (int t = 0; t < d; ++t) {
          if (g1.at(t, j) != 0) sys.at(row, i * d + t) += g1.at(t, j);
          if (g2.at(i, t) != 0) sys.at(row, t * d + j) -= g2.at(i, t);
        }
      }
  }
  IntertwinerResult out;
  for (auto& flat : sys.kernel_basis())
    out.basis.push_back(RatMatrix::from_flat(d, d, std::move(flat)));
  out.solution_dim = static_cast<int>(out.basis.size());
  if (out.solution_dim == 0) return out;
  if (out.solution_dim == 1) {
    if (out.basis[0].det() != 0) out.invertible = out.basis[0];
    return out;
  }
  if (out.solution_dim == 2) {
    // det(B0 + t B1) has degree <= d; d+1 zero evaluations force the whole
    // homogeneous pencil determinant to vanish, so the scan is complete.
    for (int t = 0; t <= d; ++t) {
      RatMatrix cand = out.basis[0] + out.basis[1] * Rat(t);
      if (cand.det() != 0) {
        out.invertible = std::move(cand);
        return out;
      }
    }
    return out;
  }
  for (const auto& b : out.basis)
    if (b.det() != 0) {
      out.invertible = b;
      return out;
    }
  std::mt19937_64 rng(9176);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    RatMatrix cand(d, d);
    for (const auto& b : out.basis) cand = cand + b * Rat(coeff(rng));
    if (cand.det() != 0) {
      out.invertible = std::move(cand);
      return out;
    }
  }
  out.exhaustive = false;
  return out;
}

IsotypicBlocks isotypic_decomposition(const MatrixModule& m, const SignCharacter& mu) {
  if (m.kind != ModuleKind::TypeB && m.kind != ModuleKind::TypeD)
    throw std::invalid_argument("isotypic blocks need a principal-series module");
  if (mu.n() != m.n) throw std::invalid_argument("character rank mismatch");
  if (mu.plus_count() != m.chi.mu.plus_count())
    throw std::invalid_argument("character not in the orbit of the module character");
  const auto stab =
      m.kind == ModuleKind::TypeB ? sym_stabilizer(m.chi.mu) : sym_stabilizer_even(m.chi.mu);
  IsotypicBlocks blocks;
  std::vector<char> assigned(m.dim(), 0);
  for (int idx = 0; idx < m.dim(); ++idx) {
    if (assigned[idx]) continue;
    const SignedPermutation& rep = m.basis[idx];
    std::vector<int> members;
    for (const auto& u : stab) {
      const int pos = m.index_of(rep.compose(u));
      members.push_back(pos);
      assigned[pos] = 1;
    }
    std::sort(members.begin(), members.end());
    blocks.reps.push_back(rep);
    blocks.indices.push_back(std::move(members));
  }
  return blocks;
}

MatrixModule restrict_module(const MatrixModule& m, const std::vector<int>& indices,
                             const std::vector<std::string>& gen_subset) {
  if (indices.empty()) throw std::invalid_argument("empty index set");
  std::vector<char> in_set(m.dim(), 0);
  int prev = -1;
  for (int i : indices) {
    if (i <= prev || i >= m.dim()) throw std::invalid_argument("bad index set");
    prev = i;
    in_set[i] = 1;
  }
  MatrixModule out;
  out.kind = ModuleKind::Derived;
  out.n = m.n;
  out.k = m.k;
  out.block_i = m.block_i;
  out.chi = m.chi;
  for (int i : indices) out.basis.push_back(m.basis[i]);
  for (const auto& name : gen_subset) {
    out.gen_names.push_back(name);
    out.gens.push_back(restrict_checked(m.gen(name), indices, in_set, "generator " + name));
  }
  return out;
}

MatrixModule direct_sum(const MatrixModule& a, const MatrixModule& b) {
  if (a.n != b.n || a.gen_names != b.gen_names)
    throw std::invalid_argument("modules are not comparable");
  MatrixModule out;
  out.kind = ModuleKind::Derived;
  out.n = a.n;
  out.k = a.k;
  out.chi = a.chi;
  out.basis = a.basis;
  out.basis.insert(out.basis.end(), b.basis.begin(), b.basis.end());
  out.gen_names = a.gen_names;
  const int da = a.dim(), db = b.dim();
  for (size_t g = 0; g < a.gens.size(); ++g) {
    RatMatrix sum(da + db, da + db);
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < da; ++j) sum.at(i, j) = a.gens[g].at(i, j);
    for (int i = 0; i < db; ++i)
      for (int j = 0; j < db; ++j) sum.at(da + i, da + j) = b.gens[g].at(i, j);
    out.gens.push_back(std::move(sum));
  }
  return out;
}

HalfSwapReport assertion_half_swap_submodule(const AlgebraContext& ctx,
                                             const std::vector<Rat>& gamma) {
  const int n = ctx.n;
  if (n % 2 != 0) throw std::invalid_argument("needs even rank");
  if (static_cast<int>(gamma.size()) != n) throw std::invalid_argument("character rank mismatch");
  const int half = n / 2;

  std::vector<int> pattern(n);
  for (int j = 1; j <= n; ++j) pattern[j - 1] = j <= half ? 1 : -1;
  const SignCharacter mu(pattern);
  const SignedPermutation hs = SignedPermutation::half_swap(n);
  const std::vector<Rat> tau_gamma = char_action_poly(hs, gamma);

  HalfSwapReport report;
  report.schur_lambda = 0;

  const MatrixModule block = build_graded_block_module(n, half, ctx.k * 2, gamma);
  const MatrixModule swapped = build_graded_block_module(n, half, ctx.k * 2, tau_gamma);
  report.block_simple = burnside_irreducible(block).irreducible;
  report.swapped_block_simple = burnside_irreducible(swapped).irreducible;
  report.blocks_isomorphic = intertwiner(block, swapped).invertible.has_value();
  report.preconditions_hold =
      report.block_simple && report.swapped_block_simple && report.blocks_isomorphic;

  const MatrixModule m = build_principal_series_b(ctx, {gamma, mu});
  const auto blocks = isotypic_decomposition(m, mu);
  const std::vector<int>& e1 = blocks.indices[0];
  std::vector<char> in_e1(m.dim(), 0);
  for (int i : e1) in_e1[i] = 1;

  std::vector<std::string> block_gens;
  for (int l = 1; l <= n; ++l) block_gens.push_back(gen_label('e', l));
  for (int j = 1; j < n; ++j)
    if (j != half) block_gens.push_back(gen_label('s', j));

  const MatrixModule e1_mod = restrict_module(m, e1, block_gens);
  MatrixModule e1_conj = e1_mod;
  e1_conj.gens.clear();
  const auto tw = AlgebraElement::from_group(hs);
  for (const auto& name : block_gens) {
    const auto conj = multiply(ctx, tw, multiply(ctx, gen_element(n, name), tw));
    e1_conj.gens.push_back(
        restrict_checked(evaluate(m, conj), e1, in_e1, "conjugated generator " + name));
  }

  const auto fit = intertwiner(e1_mod, e1_conj);
  report.solution_dim = fit.solution_dim;
  report.has_intertwiner = fit.invertible.has_value();
  if (!report.has_intertwiner) return report;

  RatMatrix f = *fit.invertible;
  const int e = e1_mod.dim();
  const RatMatrix f2 = f * f;
  const Rat lambda = f2.at(0, 0);
  if (f2 != RatMatrix::identity(e) * lambda) return report;
  report.schur_lambda = lambda;

  Rat root;
  if (!rat_square_root(lambda, &root)) return report;
  report.rational_branch = true;
  f = f * (Rat(1) / root);
  require(f * f == RatMatrix::identity(e), "normalized square root of the twist");

  const RatMatrix w0 = group_matrix(m, hs);
  const int d = m.dim();
  RowSpace span(d, false);
  std::vector<std::vector<Rat>> vectors;
  for (int b = 0; b < e; ++b) {
    std::vector<Rat> fx(d, Rat(0));
    for (int r = 0; r < e; ++r) fx[e1[r]] = f.at(r, b);
    auto v = w0.apply(fx);
    v[e1[b]] += 1;
    span.insert(v);
    vectors.push_back(std::move(v));
  }
  report.submodule = span.basis();

  std::vector<RatMatrix> action;
  for (int l = 1; l <= n; ++l) action.push_back(m.gen(gen_label('e', l)));
  for (int j = 1; j < n; ++j)
    if (j != half) action.push_back(m.gen(gen_label('s', j)));
  for (int i = 1; i < n; ++i)
    action.push_back(m.gen(gen_label('t', i)) * m.gen(gen_label('t', i + 1)));
  action.push_back(w0);

  report.stable = true;
  for (const auto& g : action)
    for (const auto& v : vectors)
      if (!span.contains(g.apply(v))) {
        report.stable = false;
        break;
      }

  const size_t f1_size = sym_stabilizer_even(mu).size();
  report.proper_nonzero = span.dim() > 0 && span.dim() < f1_size;
  return report;
}

}  // namespace hecke
