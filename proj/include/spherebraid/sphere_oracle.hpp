// Decision procedures for the sphere braid group B_n(S^2).
//
// B_n(S^2) acts on pi_1 of the n-punctured sphere, the free group on
// x_1..x_{n-1} (x_n = (x_1...x_{n-1})^-1 eliminated). The action is only
// defined up to inner automorphisms, so sphere_endo() returns a canonical
// representative of the outer class; two words have equal representatives
// iff they agree modulo the central subgroup {1, Delta^2} (axiom A1).
#pragma once

#include <optional>
#include <string>

#include "spherebraid/braid_word.hpp"
#include "spherebraid/budget.hpp"
#include "spherebraid/certificate.hpp"
#include "spherebraid/free_group.hpp"

namespace spherebraid {

enum class CenterDecision { not_in_center_set, in_center_set };

std::string_view to_string(CenterDecision decision);

/// Action of sigma_i^{+-1} on the rank-(n-1) free group, n >= 3.
EndoOnBasis sphere_generator_endo(int letter, int n);

/// Canonical representative of the class of `e` modulo inner automorphisms:
/// the image of x_1 is the least cyclically reduced rotation in its
/// conjugacy class, and the image of x_2 is the shortest (then least)
/// conjugate by the centralizer of that image. Requires rank >= 2.
EndoOnBasis normalize_outer(const EndoOnBasis& e, const Budget& budget = {});

/// Disk action followed by x_n := (x_1...x_{n-1})^-1, then normalize_outer.
/// Throws RangeError for n < 3.
EndoOnBasis sphere_endo(const BraidWord& w, const Budget& budget = {});

/// The literal route: artin_disk_endo, substitute x_n, drop the x_n image.
/// Not normalized. Used as an independent check of sphere_endo.
EndoOnBasis sphere_endo_by_substitution(const BraidWord& w, const Budget& budget = {});

/// in_center_set means w is 1 or Delta^2 in B_n(S^2); never which one.
CenterDecision acts_trivially(const BraidWord& w, const Budget& budget = {});

/// w = v or w = Delta^2 v in B_n(S^2).
bool eq_mod_center(const BraidWord& w, const BraidWord& v, const Budget& budget = {});

/// w equals the surface relator or the identity in B_n (exact, Garside
/// engine, confirmed by the Artin engine). On success the step concludes
/// w = 1 in B_n(S^2) and cites no axioms.
std::optional<ProofStep> relator_trivializes(const BraidWord& w, const Budget& budget = {});

/// Succeeds iff permutation(v) is nontrivial and v^2 acts trivially. The
/// step concludes v^2 = Delta^2 and v has order 4, citing A1, A2, A3.
std::optional<ProofStep> square_rule(const BraidWord& v, const Budget& budget = {});

/// The exact-B_n step "lhs = rhs" with both engines recorded. Throws
/// std::logic_error if the engines disagree.
ProofStep exact_Bn_step(const BraidWord& lhs, const BraidWord& rhs, std::string statement,
                        const Budget& budget = {});

enum class TorsionOutcome { certified, refuted, inconclusive };

struct TorsionResult {
  TorsionOutcome outcome = TorsionOutcome::inconclusive;
  /// Id of the final step concluding the order (or refutation).
  std::string conclusion;
  std::string witness;
};

/// Certifies that w has order exactly `claimed` in B_n(S^2), appending
/// its steps to `cert` with ids `prefix`1, `prefix`2, ...
/// Preference: exact B_n identities, relator, square rule, invariants;
/// anything only closable by the torsion classification cites A5.
TorsionResult torsion_order(const BraidWord& w, int claimed, VerificationCertificate& cert,
                            std::string_view prefix, const Budget& budget = {});

/// Standalone certificate with claim "torsion-order".
VerificationCertificate torsion_order(const BraidWord& w, int claimed, const Budget& budget = {});

}  // namespace spherebraid
