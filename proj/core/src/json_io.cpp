#include <hecke/json_io.hpp>

#include <json.hpp>

#include <stdexcept>

namespace hecke {
namespace {

using Json = nlohmann::ordered_json;

Json rat_list(const std::vector<Rat>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(format_rat(x));
  return out;
}

Json matrix_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(format_rat(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string kind_name(ModuleKind kind) {
  switch (kind) {
    case ModuleKind::TypeB: return "B";
    case ModuleKind::TypeD: return "D";
    case ModuleKind::GradedBlock: return "graded";
    case ModuleKind::Derived: return "derived";
  }
  throw std::logic_error("unknown module kind");
}

}  // namespace

std::string json_criterion_report(char type, int n, const Rat& k,
                                  const std::vector<Rat>& gamma, const SignCharacter& mu,
                                  const CriterionReport& report,
                                  const BurnsideReport* oracle) {
  Json doc;
  doc["schema"] = "criterion_report";
  doc["type"] = std::string(1, type);
  doc["n"] = n;
  doc["k"] = format_rat(k);
  doc["gamma"] = rat_list(gamma);
  doc["mu"] = mu.to_string();
  doc["simple"] = report.simple;
  Json rep;
  rep["i"] = report.i;
  rep["sigma"] = report.sigma.to_string();
  rep["sorted_gamma"] = rat_list(report.sorted_gamma);
  Json pset = Json::array();
  for (size_t t = 0; t < report.p_set.size(); ++t) {
    Json entry;
    entry["root"] = report.p_set[t].to_string();
    entry["value"] = format_rat(report.p_values[t]);
    pset.push_back(std::move(entry));
  }
  rep["p_set"] = std::move(pset);
  rep["case_b"] = report.case_b;
  if (report.case_b) {
    rep["m"] = report.m;
    rep["tau_gamma"] = rat_list(report.tau_gamma);
    rep["orbit_hit"] = report.orbit_hit;
    if (report.orbit_witness) rep["orbit_witness"] = report.orbit_witness->to_string();
  }
  doc["report"] = std::move(rep);
  if (oracle) {
    Json orc;
    orc["irreducible"] = oracle->irreducible;
    orc["certificate"] = oracle->certificate;
    orc["span_dim"] = oracle->span_dim;
    orc["agrees"] = oracle->irreducible == report.simple;
    doc["oracle"] = std::move(orc);
  }
  return doc.dump(2) + "\n";
}

std::string json_module_dump(const MatrixModule& m, bool include_weights,
                             const IsotypicBlocks* blocks, const BurnsideReport* oracle) {
  Json doc;
  doc["schema"] = "module_dump";
  doc["kind"] = kind_name(m.kind);
  doc["n"] = m.n;
  doc["k"] = format_rat(m.k);
  if (m.kind == ModuleKind::GradedBlock) doc["block_i"] = m.block_i;
  doc["gamma"] = rat_list(m.chi.gamma);
  doc["mu"] = m.chi.mu.to_string();
  doc["dim"] = m.dim();
  Json basis = Json::array();
  for (const auto& w : m.basis) basis.push_back(w.to_string());
  doc["basis"] = std::move(basis);
  Json gens = Json::array();
  for (size_t g = 0; g < m.gens.size(); ++g) {
    Json entry;
    entry["name"] = m.gen_names[g];
    entry["matrix"] = matrix_json(m.gens[g]);
    gens.push_back(std::move(entry));
  }
  doc["generators"] = std::move(gens);
  if (include_weights) {
    const auto wt = weight_table(m);
    Json rows = Json::array();
    for (const auto& row : wt.rows) {
      Json entry;
      entry["gamma"] = rat_list(row.gamma);
      entry["diag"] = rat_list(row.diag);
      entry["eigen_dim"] = row.eigen_basis.size();
      entry["generalized_dim"] = row.generalized_dim;
      rows.push_back(std::move(entry));
    }
    Json wtj;
    wtj["diag_gen_names"] = wt.diag_gen_names;
    wtj["rows"] = std::move(rows);
    doc["weights"] = std::move(wtj);
  }
  if (blocks) {
    Json list = Json::array();
    for (size_t b = 0; b < blocks->reps.size(); ++b) {
      Json entry;
      entry["rep"] = blocks->reps[b].to_string();
      entry["indices"] = blocks->indices[b];
      list.push_back(std::move(entry));
    }
    doc["isotypic_blocks"] = std::move(list);
  }
  if (oracle) {
    Json orc;
    orc["irreducible"] = oracle->irreducible;
    orc["certificate"] = oracle->certificate;
    orc["span_dim"] = oracle->span_dim;
    doc["oracle"] = std::move(orc);
  }
  return doc.dump(2) + "\n";
}

std::string json_verify_report(const VerifyOptions& opts,
                               const std::vector<VerifyResult>& results) {
  Json doc;
  doc["schema"] = "verify_report";
  Json options;
  options["n"] = opts.n;
  options["k"] = format_rat(opts.k);
  options["k_c"] = format_rat(opts.k_c);
  options["degree"] = opts.degree;
  options["seed"] = opts.seed;
  options["samples"] = opts.samples;
  doc["options"] = std::move(options);
  bool all = true;
  for (const auto& r : results) all = all && r.pass;
  doc["pass"] = all;
  Json list = Json::array();
  for (const auto& r : results) {
    Json entry;
    entry["name"] = r.name;
    entry["pass"] = r.pass;
    entry["detail"] = r.detail;
    list.push_back(std::move(entry));
  }
  doc["results"] = std::move(list);
  return doc.dump(2) + "\n";
}

}  // namespace hecke
