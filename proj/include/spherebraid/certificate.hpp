// Proof steps, axioms and verification certificates.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace spherebraid {

using Json = nlohmann::ordered_json;

enum class AxiomId { A1, A2, A3, A4, A5 };

struct AxiomInfo {
  AxiomId id;
  std::string_view name;
  std::string_view statement;
  std::string_view source;
};

const AxiomInfo& axiom_info(AxiomId id);
std::string_view to_string(AxiomId id);
std::optional<AxiomId> parse_axiom(std::string_view text);

enum class Method {
  exact_Bn,
  relator,
  mod_center,
  square_rule,
  invariant,
  axiom,
  arithmetic,
  coset_enumeration,
};

std::string_view to_string(Method method);
std::optional<Method> parse_method(std::string_view text);

struct ProofStep {
  std::string id;
  std::string statement;
  Method method = Method::axiom;
  std::vector<std::string> depends_on;
  std::vector<AxiomId> axioms;
  /// Recorded inputs/outputs. A "check" member, when present, is what
  /// replay() re-executes.
  Json data = Json::object();
  bool ok = true;

  /// Steps resting on the torsion classification are consistency checks,
  /// not computations.
  bool axiom_backed() const;
  Json to_json() const;
};

enum class Verdict { verified, refuted, refuted_realization, not_applicable, inconclusive };

std::string_view to_string(Verdict verdict);

struct VerificationCertificate {
  std::string claim;
  int n = 0;
  Verdict verdict = Verdict::inconclusive;
  Json flags = Json::object();
  std::vector<ProofStep> steps;

  /// Appends a step; assigns `prefix` + counter when the id is empty.
  /// Throws std::logic_error if a dependency is not an earlier step.
  const std::string& add(ProofStep step, std::string_view prefix = "s");
  const ProofStep* find(std::string_view id) const;
  bool all_ok() const;
  /// Sorted union of the axioms cited by the steps.
  std::vector<AxiomId> axiom_ledger() const;
  Json to_json() const;
  /// Human-readable rendering; carries the same verdict and ledger.
  std::string to_text() const;
};

}  // namespace spherebraid
