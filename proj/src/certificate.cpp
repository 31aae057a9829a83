#include "spherebraid/certificate.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace spherebraid {

namespace {

constexpr AxiomInfo kAxioms[] = {
    {AxiomId::A1, "A1",
     "for n >= 3 the kernel of the action of B_n(S^2) on the fundamental group of the n-punctured "
     "sphere, taken modulo inner automorphisms, is exactly {1, Delta^2}",
     "classical: B_n(S^2) -> MCG(S^2, n points) has kernel <Delta^2>, and the mapping class group "
     "acts faithfully on the outer automorphism group (Dehn-Nielsen-Baer)"},
    {AxiomId::A2, "A2", "for n >= 3, Delta^2 is the unique element of B_n(S^2) of order 2",
     "classical (Gillette-Van Buskirk)"},
    {AxiomId::A3, "A3", "for n >= 3, Delta^2 generates the centre of B_n(S^2) and has order exactly 2",
     "classical (Fadell-Van Buskirk; Gillette-Van Buskirk)"},
    {AxiomId::A4, "A4", "the Artin action of B_n on the free group of rank n is faithful",
     "classical (Artin)"},
    {AxiomId::A5, "A5",
     "for n >= 3 every torsion element of B_n(S^2) is a conjugate of a power of alpha0, alpha1 or "
     "alpha2, which have orders 2n, 2(n-1) and 2(n-2) and are n-th, (n-1)-th and (n-2)-th roots "
     "of Delta^2",
     "Murasugi's classification of torsion in surface braid groups"},
};

constexpr std::pair<Method, std::string_view> kMethods[] = {
    {Method::exact_Bn, "exact-Bn"},     {Method::relator, "relator"},
    {Method::mod_center, "mod-center"}, {Method::square_rule, "square-rule"},
    {Method::invariant, "invariant"},   {Method::axiom, "axiom"},
    {Method::arithmetic, "arithmetic"}, {Method::coset_enumeration, "coset-enumeration"},
};

}  // namespace

const AxiomInfo& axiom_info(AxiomId id) { return kAxioms[static_cast<int>(id)]; }

std::string_view to_string(AxiomId id) { return axiom_info(id).name; }

std::optional<AxiomId> parse_axiom(std::string_view text) {
  for (const auto& info : kAxioms) {
    if (info.name == text) return info.id;
  }
  return std::nullopt;
}

std::string_view to_string(Method method) {
  for (auto [value, text] : kMethods) {
    if (value == method) return text;
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view text) {
  for (auto [value, name] : kMethods) {
    if (name == text) return value;
  }
  return std::nullopt;
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::verified: return "VERIFIED";
    case Verdict::refuted: return "REFUTED";
    case Verdict::refuted_realization: return "REFUTED-realization";
    case Verdict::not_applicable: return "NOT_APPLICABLE";
    case Verdict::inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

bool ProofStep::axiom_backed() const {
  return std::find(axioms.begin(), axioms.end(), AxiomId::A5) != axioms.end();
}

Json ProofStep::to_json() const {
  Json axiom_names = Json::array();
  for (AxiomId a : axioms) axiom_names.push_back(std::string(to_string(a)));
  return Json{{"id", id},
              {"statement", statement},
              {"method", std::string(to_string(method))},
              {"depends_on", depends_on},
              {"axioms", axiom_names},
              {"basis", axiom_backed() ? "axiom-backed consistency" : "exact"},
              {"ok", ok},
              {"data", data}};
}

const std::string& VerificationCertificate::add(ProofStep step, std::string_view prefix) {
  if (step.id.empty()) step.id = std::string(prefix) + std::to_string(steps.size() + 1);
  if (find(step.id) != nullptr) throw std::logic_error("duplicate step id " + step.id);
  for (const auto& dep : step.depends_on) {
    if (find(dep) == nullptr) throw std::logic_error("step " + step.id + " depends on unknown step " + dep);
  }
  steps.push_back(std::move(step));
  return steps.back().id;
}

const ProofStep* VerificationCertificate::find(std::string_view id) const {
  for (const auto& step : steps) {
    if (step.id == id) return &step;
  }
  return nullptr;
}

bool VerificationCertificate::all_ok() const {
  return std::all_of(steps.begin(), steps.end(), [](const ProofStep& s) { return s.ok; });
}

std::vector<AxiomId> VerificationCertificate::axiom_ledger() const {
  std::set<AxiomId> ledger;
  for (const auto& step : steps) ledger.insert(step.axioms.begin(), step.axioms.end());
  return {ledger.begin(), ledger.end()};
}

Json VerificationCertificate::to_json() const {
  Json step_list = Json::array();
  for (const auto& step : steps) step_list.push_back(step.to_json());
  Json axioms = Json::array();
  for (AxiomId a : axiom_ledger()) {
    const auto& info = axiom_info(a);
    axioms.push_back({{"id", info.name}, {"statement", info.statement}, {"source", info.source}});
  }
  return Json{{"claim", claim},
              {"n", n},
              {"verdict", std::string(to_string(verdict))},
              {"flags", flags},
              {"steps", step_list},
              {"axioms", axioms}};
}

std::string VerificationCertificate::to_text() const {
  std::ostringstream out;
  out << "claim " << claim << " n=" << n << ": " << to_string(verdict) << '\n';
  for (const auto& [key, value] : flags.items()) out << "  flag " << key << " = " << value.dump() << '\n';
  for (const auto& step : steps) {
    out << "  [" << step.id << "] " << (step.ok ? "ok  " : "FAIL") << ' ' << to_string(step.method);
    if (!step.axioms.empty()) {
      out << " {";
      for (std::size_t i = 0; i < step.axioms.size(); ++i) out << (i ? "," : "") << to_string(step.axioms[i]);
      out << '}';
    }
    if (step.axiom_backed()) out << " (axiom-backed consistency)";
    if (!step.depends_on.empty()) {
      out << " <-";
      for (const auto& dep : step.depends_on) out << ' ' << dep;
    }
    out << "\n      " << step.statement << '\n';
  }
  out << "  axiom ledger:";
  const auto ledger = axiom_ledger();
  if (ledger.empty()) out << " (none)";
  for (AxiomId a : ledger) out << ' ' << to_string(a);
  out << '\n';
  return out.str();
}

}  // namespace spherebraid
