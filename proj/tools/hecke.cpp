#include <hecke/algebra.hpp>
#include <hecke/cherednik.hpp>
#include <hecke/criteria.hpp>
#include <hecke/json_io.hpp>
#include <hecke/psmodule.hpp>
#include <hecke/verify.hpp>
#include <hecke/weyl.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct QueryArgs {
  std::string type = "B";
  int n = 2;
  std::string k = "1";
  std::string k_c = "1/2";
  std::string gamma;
  std::string mu;
  bool oracle = false;
  std::string format = "text";
  unsigned long long seed = 1;
  int degree = 3;
  int samples = 4;
  double max_seconds = 0.0;
  std::string only;
  std::string elem_a;
  std::string elem_b;
  std::string poly = "z1";
  int direction = 1;
};

std::vector<hecke::Rat> parse_gamma(const std::string& text, int n) {
  std::vector<hecke::Rat> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(hecke::parse_rat(part));
  if (static_cast<int>(out.size()) != n)
    throw std::invalid_argument("gamma needs exactly " + std::to_string(n) + " entries");
  return out;
}

std::string rat_tuple(const std::vector<hecke::Rat>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += hecke::format_rat(v[i]);
  }
  return s + ")";
}

void render_matrix_text(std::ostream& os, const hecke::RatMatrix& m) {
  for (int r = 0; r < m.rows(); ++r) {
    os << " ";
    for (int c = 0; c < m.cols(); ++c) os << " " << hecke::format_rat(m.at(r, c));
    os << "\n";
  }
}

void render_module_text(std::ostream& os, const hecke::MatrixModule& m, bool include_weights,
                        const hecke::IsotypicBlocks* blocks,
                        const hecke::BurnsideReport* oracle) {
  using namespace hecke;
  const char* kind = m.kind == ModuleKind::TypeB       ? "B"
                     : m.kind == ModuleKind::TypeD     ? "D"
                     : m.kind == ModuleKind::GradedBlock ? "graded"
                                                         : "derived";
  os << "module: kind=" << kind << " n=" << m.n << " k=" << format_rat(m.k)
     << " gamma=" << rat_tuple(m.chi.gamma) << " mu=" << m.chi.mu.to_string()
     << " dim=" << m.dim() << "\n";
  os << "basis:";
  for (const auto& w : m.basis) os << " " << w.to_string();
  os << "\n";
  for (size_t g = 0; g < m.gens.size(); ++g) {
    os << "generator " << m.gen_names[g] << ":\n";
    render_matrix_text(os, m.gens[g]);
  }
  if (include_weights) {
    const auto wt = weight_table(m);
    os << "weights (diagonal generators:";
    for (const auto& nm : wt.diag_gen_names) os << " " << nm;
    os << "):\n";
    for (const auto& row : wt.rows)
      os << "  gamma=" << rat_tuple(row.gamma) << " diag=" << rat_tuple(row.diag)
         << " eigen=" << row.eigen_basis.size() << " generalized=" << row.generalized_dim
         << "\n";
  }
  if (blocks) {
    os << "isotypic blocks:\n";
    for (size_t b = 0; b < blocks->reps.size(); ++b) {
      os << "  rep " << blocks->reps[b].to_string() << ":";
      for (int q : blocks->indices[b]) os << " " << q;
      os << "\n";
    }
  }
  if (oracle)
    os << "oracle: " << (oracle->irreducible ? "irreducible" : "reducible")
       << " (certificate " << oracle->certificate << ", span dim " << oracle->span_dim
       << ")\n";
}

void render_criterion_text(std::ostream& os, char type, int n, const hecke::Rat& k,
                           const std::vector<hecke::Rat>& gamma, const hecke::SignCharacter& mu,
                           const hecke::CriterionReport& r,
                           const hecke::BurnsideReport* oracle) {
  using namespace hecke;
  os << "query: type=" << type << " n=" << n << " k=" << format_rat(k)
     << " gamma=" << rat_tuple(gamma) << " mu=" << mu.to_string() << "\n";
  os << "verdict: " << (r.simple ? "simple" : "not simple") << "\n";
  os << "split: i=" << r.i << " sigma=" << r.sigma.to_string()
     << " sorted gamma=" << rat_tuple(r.sorted_gamma) << "\n";
  if (r.p_set.empty()) {
    os << "resonant roots: none\n";
  } else {
    os << "resonant roots:";
    for (size_t t = 0; t < r.p_set.size(); ++t)
      os << " " << r.p_set[t].to_string() << "->" << format_rat(r.p_values[t]);
    os << "\n";
  }
  if (r.case_b) {
    os << "split case: m=" << r.m << " tau gamma=" << rat_tuple(r.tau_gamma)
       << " orbit hit=" << (r.orbit_hit ? "yes" : "no");
    if (r.orbit_witness) os << " witness=" << r.orbit_witness->to_string();
    os << "\n";
  }
  if (oracle)
    os << "oracle: " << (oracle->irreducible ? "simple" : "not simple") << " (certificate "
       << oracle->certificate << ", span dim " << oracle->span_dim << ") -- "
       << (oracle->irreducible == r.simple ? "AGREE" : "DISAGREE") << "\n";
}

int cmd_irreducible(const QueryArgs& q) {
  using namespace hecke;
  const Rat k = parse_rat(q.k);
  const auto gamma = parse_gamma(q.gamma, q.n);
  const auto mu = SignCharacter::parse(q.mu);
  if (mu.n() != q.n) throw std::invalid_argument("mu length does not match n");
  const bool type_d = q.type == "D";
  const auto report = type_d ? criterion_d(k, gamma, mu) : criterion_b(k, gamma, mu);
  std::optional<MatrixModule> m;
  std::optional<BurnsideReport> oracle;
  if (q.oracle) {
    const AlgebraContext ctx(q.n, k);
    m = type_d ? build_principal_series_d(ctx, {gamma, mu})
               : build_principal_series_b(ctx, {gamma, mu});
    oracle = burnside_irreducible(*m);
  }
  if (q.format == "json")
    std::cout << json_criterion_report(type_d ? 'D' : 'B', q.n, k, gamma, mu, report,
                                       oracle ? &*oracle : nullptr);
  else
    render_criterion_text(std::cout, type_d ? 'D' : 'B', q.n, k, gamma, mu, report,
                          oracle ? &*oracle : nullptr);
  if (oracle && oracle->irreducible != report.simple) {
    std::cerr << "oracle disagreement, dumping the module\n";
    if (q.format == "json")
      std::cout << json_module_dump(*m, true);
    else
      render_module_text(std::cout, *m, true, nullptr, &*oracle);
    return 3;
  }
  return report.simple ? 0 : 1;
}

int cmd_verify(const QueryArgs& q) {
  using namespace hecke;
  VerifyOptions opts;
  opts.n = q.n;
  opts.k = parse_rat(q.k);
  if (opts.k == 0) throw std::invalid_argument("k must be nonzero");
  opts.k_c = parse_rat(q.k_c);
  opts.degree = q.degree;
  opts.seed = q.seed;
  opts.samples = q.samples;
  std::vector<std::string> names =
      q.only.empty() ? verification_names() : std::vector<std::string>{q.only};
  std::vector<VerifyResult> results;
  double total = 0.0;
  bool limited = false;
  for (const auto& name : names) {
    auto r = run_single_verification(name, opts);
    total += r.seconds;
    std::cerr << name << ": " << r.seconds << "s\n";
    results.push_back(std::move(r));
    if (q.max_seconds > 0 && total > q.max_seconds && results.size() < names.size()) {
      limited = true;
      break;
    }
  }
  bool all = true;
  for (const auto& r : results) all = all && r.pass;
  if (q.format == "json") {
    std::cout << json_verify_report(opts, results);
  } else {
    int passed = 0;
    for (const auto& r : results) {
      std::cout << (r.pass ? "pass" : "FAIL") << " " << r.name;
      if (!r.detail.empty()) std::cout << ": " << r.detail;
      std::cout << "\n";
      if (r.pass) ++passed;
    }
    std::cout << passed << "/" << results.size() << " checks passed\n";
  }
  if (limited) {
    std::cerr << "resource limit exceeded after " << results.size() << " checks\n";
    return 4;
  }
  return all ? 0 : 1;
}

int cmd_module(const QueryArgs& q) {
  using namespace hecke;
  const Rat k = parse_rat(q.k);
  const auto gamma = parse_gamma(q.gamma, q.n);
  const auto mu = SignCharacter::parse(q.mu);
  if (mu.n() != q.n) throw std::invalid_argument("mu length does not match n");
  const bool type_d = q.type == "D";
  const AlgebraContext ctx(q.n, k);
  const auto m = type_d ? build_principal_series_d(ctx, {gamma, mu})
                        : build_principal_series_b(ctx, {gamma, mu});
  const auto blocks = isotypic_decomposition(m, mu);
  std::optional<BurnsideReport> oracle;
  if (q.oracle) oracle = burnside_irreducible(m);
  if (q.format == "json")
    std::cout << json_module_dump(m, true, &blocks, oracle ? &*oracle : nullptr);
  else
    render_module_text(std::cout, m, true, &blocks, oracle ? &*oracle : nullptr);
  return 0;
}

int cmd_multiply(const QueryArgs& q) {
  using namespace hecke;
  const AlgebraContext ctx(q.n, parse_rat(q.k));
  const auto a = AlgebraElement::parse(q.n, q.elem_a);
  const auto b = AlgebraElement::parse(q.n, q.elem_b);
  const auto product = multiply(ctx, a, b);
  if (q.format == "json") {
    nlohmann::ordered_json doc;
    doc["schema"] = "product";
    doc["a"] = a.to_string();
    doc["b"] = b.to_string();
    doc["product"] = product.to_string();
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << product.to_string() << "\n";
  }
  return 0;
}

int cmd_dunkl(const QueryArgs& q) {
  using namespace hecke;
  const DunklParams params(q.n, parse_rat(q.k), parse_rat(q.k_c));
  const auto p = Polynomial::parse(q.n, q.poly);
  if (q.direction < 1 || q.direction > q.n)
    throw std::invalid_argument("direction out of range");
  const auto image = dunkl(params, q.direction, p);
  if (q.format == "json") {
    nlohmann::ordered_json doc;
    doc["schema"] = "dunkl_image";
    doc["poly"] = p.to_string();
    doc["direction"] = q.direction;
    doc["image"] = image.to_string();
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << image.to_string() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact irreducibility and verification tools for graded Hecke principal series"};
  app.require_subcommand(1);
  QueryArgs q;

  auto add_common = [&](CLI::App* cmd, bool needs_char) {
    cmd->add_option("-n,--rank", q.n, "rank")->check(CLI::PositiveNumber);
    cmd->add_option("--k", q.k, "deformation parameter (rational, nonzero)");
    cmd->add_option("--format", q.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    if (needs_char) {
      cmd->add_option("--type", q.type, "algebra type")->check(CLI::IsMember({"B", "D"}));
      cmd->add_option("--gamma", q.gamma, "character values, comma separated rationals")
          ->required();
      cmd->add_option("--mu", q.mu, "sign character, e.g. ++-")->required();
      cmd->add_flag("--oracle", q.oracle, "cross check with the matrix-span oracle");
    }
  };

  auto* irr = app.add_subcommand("irreducible",
                                 "closed-form irreducibility verdict for a principal series");
  add_common(irr, true);

  auto* ver = app.add_subcommand("verify", "run the structural verification battery");
  add_common(ver, false);
  ver->add_option("--k_c", q.k_c, "short-root weight for the operator realization");
  ver->add_option("--degree", q.degree, "polynomial degree bound")->check(CLI::PositiveNumber);
  ver->add_option("--seed", q.seed, "sampling seed");
  ver->add_option("--samples", q.samples, "samples per randomized check")
      ->check(CLI::PositiveNumber);
  ver->add_option("--max-seconds", q.max_seconds, "wall-clock budget, 0 = unlimited");
  ver->add_option("--only", q.only, "run a single named check");

  auto* mod = app.add_subcommand("module", "dump a principal series as explicit matrices");
  add_common(mod, true);

  auto* mul = app.add_subcommand("multiply", "normal-form product of two elements");
  add_common(mul, false);
  mul->add_option("--a", q.elem_a, "left factor")->required();
  mul->add_option("--b", q.elem_b, "right factor")->required();

  auto* dnk = app.add_subcommand("dunkl", "apply a Dunkl operator to a polynomial");
  add_common(dnk, false);
  dnk->add_option("--k_c", q.k_c, "short-root weight");
  dnk->add_option("-y,--direction", q.direction, "operator direction index");
  dnk->add_option("--poly", q.poly, "polynomial in z1..zn");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*irr) return cmd_irreducible(q);
    if (*ver) return cmd_verify(q);
    if (*mod) return cmd_module(q);
    if (*mul) return cmd_multiply(q);
    if (*dnk) return cmd_dunkl(q);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
