#pragma once

#include <hecke/criteria.hpp>
#include <hecke/psmodule.hpp>
#include <hecke/verify.hpp>

#include <string>
#include <vector>

namespace hecke {

// JSON documents rendered with a fixed key order and two-space indentation so
// that equal inputs give byte-identical output. Rationals appear as "p/q"
// (or "p" for integers), sign characters as "+-" strings, group elements in
// their signed one-line form.

// Verdict document for one irreducibility query; oracle is optional.
std::string json_criterion_report(char type, int n, const Rat& k,
                                  const std::vector<Rat>& gamma, const SignCharacter& mu,
                                  const CriterionReport& report,
                                  const BurnsideReport* oracle);

// Full matrix dump of a module; weight table included on request (the module
// must then have triangular polynomial generators and diagonal group
// generators). Isotypic blocks and an oracle verdict are appended when given.
std::string json_module_dump(const MatrixModule& m, bool include_weights,
                              const IsotypicBlocks* blocks = nullptr,
                              const BurnsideReport* oracle = nullptr);

// Battery report. Timings are deliberately omitted to keep output stable.
std::string json_verify_report(const VerifyOptions& opts,
                               const std::vector<VerifyResult>& results);

}  // namespace hecke
