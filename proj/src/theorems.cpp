#include "spherebraid/theorems.hpp"

#include <algorithm>
#include <stdexcept>

#include "spherebraid/braid_word.hpp"
#include "spherebraid/free_group.hpp"
#include "spherebraid/garside.hpp"
#include "spherebraid/presentations.hpp"
#include "spherebraid/sphere_oracle.hpp"

namespace spherebraid {

namespace {

BraidWord element(NamedElement name, int n) { return named_element(name, n); }

Json word_check(std::string_view kind, const BraidWord& w) {
  return Json{{"kind", kind}, {"n", w.strand_count()}, {"word", format_word(w)}};
}

ProofStep with_id(ProofStep step, std::string id, std::vector<std::string> deps = {}) {
  step.id = std::move(id);
  step.depends_on = std::move(deps);
  return step;
}

CayleyTable enumerate(PresentationName name, int n, const Budget& budget) {
  auto result = todd_coxeter(presentation_library(name, n), budget.max_cosets);
  if (auto* overflow = std::get_if<Overflow>(&result)) {
    throw ResourceExhausted("coset enumeration of " + std::string(to_string(name)) + " exceeded " +
                            std::to_string(budget.max_cosets) + " cosets (" +
                            std::to_string(overflow->live_cosets) + " live)");
  }
  return std::get<CayleyTable>(std::move(result));
}

bool is_power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

// Permutation of `w` differs from that of every power base^k, 0 <= k < count.
bool permutation_avoids_powers(const BraidWord& w, const BraidWord& base, int count) {
  const Permutation target = permutation(w);
  Permutation power = Permutation::identity(w.strand_count());
  const Permutation step = permutation(base);
  for (int k = 0; k < count; ++k) {
    if (power == target) return false;
    power = power.then(step);
  }
  return true;
}

void finish(VerificationCertificate& cert) {
  cert.verdict = cert.all_ok() ? Verdict::verified : Verdict::refuted;
}

}  // namespace

std::vector<long> odd_obstruction_residues(int n) {
  const long modulus = 2L * (n - 1);
  const long value = static_cast<long>(n) * (n - 1) / 2;
  return {Residue::of(value, modulus).value, Residue::of(-value, modulus).value};
}

VerificationCertificate verify_odd_obstruction(int n, const Budget& budget) {
  if (n < 3 || n % 2 == 0) throw RangeError("the odd-n obstruction needs odd n >= 3");
  (void)budget;
  VerificationCertificate cert;
  cert.claim = "odd-obstruction";
  cert.n = n;
  const int half = (n - 1) / 2;

  ProofStep o1;
  o1.statement =
      "suppose x, y generate a quaternion subgroup H, so x^2 = y^2 and x y x^-1 = y^-1 and x, y have order 4. "
      "For odd n, 4 divides 2(n-1) but neither 2n nor 2(n-2), so every element of order 4 is a conjugate of "
      "alpha1^{+-(n-1)/2}. Conjugating H and replacing x by x^-1 if necessary, x = alpha1^{e(n-1)/2} and "
      "y = w alpha1^{-e(n-1)/2} w^-1 for some w and e in {1,-1}";
  o1.method = Method::axiom;
  o1.axioms = {AxiomId::A5};
  o1.data = Json{{"check", {{"kind", "order4_classes"}, {"n", n}}},
                 {"orders", {2 * n, 2 * (n - 1), 2 * (n - 2)}}};
  cert.add(with_id(std::move(o1), "o1"));

  const auto residues = odd_obstruction_residues(n);
  const BraidWord alpha_power = element(NamedElement::alpha1, n).pow(half);
  ProofStep o2;
  o2.statement = "xi(alpha1^{+-(n-1)/2}) = +-n(n-1)/2 = " + std::to_string(residues[0]) + ", " +
                 std::to_string(residues[1]) + " mod " + std::to_string(2 * (n - 1)) + "; both nonzero";
  o2.method = Method::arithmetic;
  o2.ok = residues[0] != 0 && residues[1] != 0 &&
          xi(alpha_power).value == residues[0] && xi(alpha_power.inverse()).value == residues[1];
  o2.data = Json{{"check", {{"kind", "odd_residues"}, {"n", n}, {"expect", residues}}},
                 {"word", format_word(alpha_power)},
                 {"modulus", 2 * (n - 1)}};
  cert.add(with_id(std::move(o2), "o2"));

  // a sample conjugator; the identity holds for every w
  const BraidWord sample(n, {1, -2, 1, 2, -1});
  const BraidWord commutator = alpha_power * sample * alpha_power.inverse() * sample.inverse();
  ProofStep o3;
  o3.statement = "x y = [alpha1^{e(n-1)/2}, w] is a commutator, so its exponent sum is 0 and xi(x y) = 0";
  o3.method = Method::arithmetic;
  o3.ok = exponent_sum(commutator) == 0;
  o3.data = Json{{"check",
                  {{"kind", "commutator_exponent_sum"}, {"n", n}, {"u", format_word(alpha_power)},
                   {"w", format_word(sample)}}}};
  cert.add(with_id(std::move(o3), "o3", {"o1"}));

  ProofStep o4;
  o4.statement =
      "x y has order 4 in H, so it is a conjugate of alpha1^{+-(n-1)/2}; xi is constant on conjugacy classes, "
      "so xi(x y) is nonzero by o2, contradicting o3. Hence B_n(S^2) has no quaternion subgroup";
  o4.method = Method::arithmetic;
  o4.axioms = {AxiomId::A5};
  o4.data = Json{{"check", {{"kind", "q8_product_order"}, {"expect", 4}}}};
  cert.add(with_id(std::move(o4), "o4", {"o1", "o2", "o3"}));

  finish(cert);
  cert.flags["q8_subgroup"] = false;
  cert.flags["xi_residues"] = residues;
  return cert;
}

VerificationCertificate verify_q8(int n, const Budget& budget) {
  if (n < 3) throw RangeError("verify_q8 needs n >= 3");
  if (n % 2 == 1) {
    VerificationCertificate cert = verify_odd_obstruction(n, budget);
    cert.claim = "q8";
    cert.verdict = cert.verdict == Verdict::verified ? Verdict::refuted_realization : Verdict::refuted;
    return cert;
  }

  VerificationCertificate cert;
  cert.claim = "q8";
  cert.n = n;
  const BraidWord x = element(NamedElement::half_twist, n);
  const BraidWord y = element(NamedElement::bipolar_twist, n);
  const BraidWord full_twist = element(NamedElement::full_twist, n);

  cert.add(with_id(exact_Bn_step(x * x, full_twist, "x^2 = Delta^2 in B_n", budget), "s1"));
  cert.add(with_id(exact_Bn_step(conjugate(x, y), mirror(y), "x y x^-1 = mirror(y) in B_n", budget), "s2.1"));
  cert.add(with_id(exact_Bn_step(mirror(y), y.inverse(), "mirror(y) = y^-1 in B_n", budget), "s2.2"));
  ProofStep s2;
  s2.statement = "x y x^-1 = y^-1 in B_n, hence in B_n(S^2)";
  s2.method = Method::exact_Bn;
  s2.data = Json{{"check",
                  {{"kind", "eq_Bn"}, {"n", n}, {"lhs", format_word(conjugate(x, y))},
                   {"rhs", format_word(y.inverse())}}}};
  cert.add(with_id(std::move(s2), "s2", {"s2.1", "s2.2"}));

  if (auto s3 = square_rule(y, budget)) {
    s3->statement = "y^2 = Delta^2 in B_n(S^2) (square rule: y^2 acts trivially, y has nontrivial permutation)";
    cert.add(with_id(std::move(*s3), "s3"));
  } else {
    ProofStep failed;
    failed.statement = "square rule did not apply to y";
    failed.method = Method::square_rule;
    failed.ok = false;
    failed.data = Json{{"check", word_check("square_rule", y)}};
    cert.add(with_id(std::move(failed), "s3"));
  }

  ProofStep s4;
  s4.statement = "x^2 = Delta^2 != 1 and x^4 = Delta^4 = 1, so <x> has exactly 4 elements";
  s4.method = Method::axiom;
  s4.axioms = {AxiomId::A3};
  cert.add(with_id(std::move(s4), "s4", {"s1"}));

  ProofStep s5;
  s5.statement = "the permutation of y differs from those of 1, x, x^2, x^3, so y is not in <x>";
  s5.method = Method::invariant;
  s5.ok = permutation_avoids_powers(y, x, 4);
  s5.data = Json{{"check",
                  {{"kind", "permutation_avoids_powers"}, {"n", n}, {"word", format_word(y)},
                   {"base", format_word(x)}, {"count", 4}}},
                 {"permutation_y", permutation(y).images()},
                 {"permutation_x", permutation(x).images()}};
  cert.add(with_id(std::move(s5), "s5"));

  const CayleyTable q8 = enumerate(PresentationName::q8, 0, budget);
  ProofStep s6;
  s6.statement =
      "a -> y, b -> x satisfies a^4, a^2 b^-2, b^-1 a b a (s1-s3), so H = <x, y> is a quotient of "
      "<a,b | a^4, a^2 b^-2, b^-1 a b a>, which has order 8 and type Q8. H has at least 5 elements (s4, s5) "
      "and every proper quotient has at most 4, so H is quaternion of order 8";
  s6.method = Method::coset_enumeration;
  s6.ok = q8.order() == 8 && iso_type_order8(q8) == Order8Type::Q8;
  s6.data = Json{{"check",
                  {{"kind", "coset_order"}, {"presentation", "q8"}, {"n", 0}, {"order", 8}, {"iso_type", "Q8"}}},
                 {"order_spectrum", order_spectrum(q8)}};
  cert.add(with_id(std::move(s6), "s6", {"s2", "s3", "s4", "s5"}));

  const Residue xi_x = xi(x);
  const Residue xi_y = xi(y);
  const bool in_commutator = xi_x.is_zero() && xi_y.is_zero();
  ProofStep s7;
  s7.method = Method::invariant;
  s7.data = Json{{"check",
                  {{"kind", "xi_values"},
                   {"n", n},
                   {"words", {format_word(x), format_word(y)}},
                   {"expect", {xi_x.value, xi_y.value}}}},
                 {"modulus", xi_x.modulus}};
  if (n % 4 == 0) {
    s7.statement = "xi(x) = 0 and xi(y) = 0, so H lies in the commutator subgroup";
    s7.ok = in_commutator;
    cert.add(with_id(std::move(s7), "s7", {"s6"}));
  } else {
    s7.statement = "xi(x) = " + xi_x.to_string() + " != 0 and xi(y) = " + xi_y.to_string() +
                   "; this witness is not in the commutator subgroup";
    cert.add(with_id(std::move(s7), "xi-note"));
  }

  finish(cert);
  cert.flags["in_commutator"] = in_commutator;
  cert.flags["q8_subgroup"] = cert.verdict == Verdict::verified;
  return cert;
}

VerificationCertificate verify_dicyclic(int n, const Budget& budget) {
  if (n < 3) throw RangeError("verify_dicyclic needs n >= 3");
  VerificationCertificate cert;
  cert.claim = "dicyclic";
  cert.n = n;
  const BraidWord a = element(NamedElement::alpha0, n);
  const BraidWord x = element(NamedElement::half_twist, n);
  const BraidWord full_twist = element(NamedElement::full_twist, n);

  cert.add(with_id(exact_Bn_step(a.pow(n), full_twist, "a^n = Delta^2 in B_n", budget), "d1"));
  cert.add(with_id(exact_Bn_step(x * x, full_twist, "x^2 = Delta^2 in B_n", budget), "d2"));
  cert.add(with_id(exact_Bn_step(conjugate(x, a), mirror(a), "x a x^-1 = mirror(a) in B_n", budget), "d3.1"));

  const BraidWord product = a * mirror(a);
  const BraidWord relator = element(NamedElement::surface_relator, n);
  ProofStep d3_2;
  d3_2.statement = "a mirror(a) is letter for letter the surface relator, so mirror(a) = a^-1 in B_n(S^2)";
  d3_2.method = Method::relator;
  d3_2.ok = product == relator;
  d3_2.data = Json{{"check",
                    {{"kind", "letter_identical"}, {"n", n}, {"lhs", format_word(product)},
                     {"rhs", format_word(relator)}}}};
  cert.add(with_id(std::move(d3_2), "d3.2"));

  ProofStep d3;
  d3.statement = "x a x^-1 = a^-1 in B_n(S^2)";
  d3.method = Method::relator;
  cert.add(with_id(std::move(d3), "d3", {"d3.1", "d3.2"}));

  const auto torsion = torsion_order(a, 2 * n, cert, "d4.", budget);
  ProofStep d4;
  d4.statement = "a has order exactly " + std::to_string(2 * n) + " in B_n(S^2)";
  d4.method = Method::arithmetic;
  d4.ok = torsion.outcome == TorsionOutcome::certified;
  if (!torsion.conclusion.empty()) d4.depends_on = {torsion.conclusion};
  cert.add(with_id(d4, "d4", d4.depends_on));

  ProofStep d5;
  d5.statement = "the permutation of x (the full reversal) is not a power of the n-cycle of a, so x is not in <a>";
  d5.method = Method::invariant;
  d5.ok = permutation_avoids_powers(x, a, n);
  d5.data = Json{{"check",
                  {{"kind", "permutation_avoids_powers"}, {"n", n}, {"word", format_word(x)},
                   {"base", format_word(a)}, {"count", n}}}};
  cert.add(with_id(std::move(d5), "d5"));

  const CayleyTable dic = enumerate(PresentationName::dicyclic, n, budget);
  ProofStep d6;
  d6.statement = "a -> a, b -> x satisfies the dicyclic relators (d1-d4), so H = <a, x> is a quotient of a group "
                 "of order " + std::to_string(4 * n) + "; H has more than " + std::to_string(2 * n) +
                 " elements (d4, d5) and proper quotients have at most " + std::to_string(2 * n) +
                 ", so |H| = " + std::to_string(4 * n);
  d6.method = Method::coset_enumeration;
  d6.ok = dic.order() == 4 * n;
  d6.data = Json{{"check",
                  {{"kind", "coset_order"}, {"presentation", "dicyclic"}, {"n", n}, {"order", 4 * n}}},
                 {"involutions", involution_count(dic)}};
  cert.add(with_id(std::move(d6), "d6", {"d1", "d2", "d3", "d4", "d5"}));

  const bool generalized = is_power_of_two(n);
  if (generalized) {
    ProofStep d7;
    d7.statement = "n is a power of 2: H is the generalised quaternion group of order " + std::to_string(4 * n);
    d7.method = Method::coset_enumeration;
    d7.ok = involution_count(dic) == 1;
    d7.data = Json{{"check",
                    {{"kind", "coset_order"}, {"presentation", "dicyclic"}, {"n", n}, {"order", 4 * n},
                     {"involutions", 1}}}};
    cert.add(with_id(std::move(d7), "d7", {"d6"}));
  }
  if (n == 3) {
    const CayleyTable sphere = enumerate(PresentationName::sphere_braid, 3, budget);
    ProofStep cross;
    cross.statement = "cross-check: |B_3(S^2)| = 12 = |H|";
    cross.method = Method::coset_enumeration;
    cross.ok = sphere.order() == 12;
    cross.data = Json{{"check", {{"kind", "coset_order"}, {"presentation", "sphere_braid"}, {"n", 3}, {"order", 12}}}};
    cert.add(with_id(std::move(cross), "d-cross", {"d6"}));
  }

  finish(cert);
  cert.flags["order"] = 4 * n;
  cert.flags["generalized_quaternion"] = generalized && cert.verdict == Verdict::verified;
  return cert;
}

VerificationCertificate verify_torsion_table(int n, const Budget& budget) {
  if (n < 3) throw RangeError("verify_torsion_table needs n >= 3");
  VerificationCertificate cert;
  cert.claim = "torsion";
  cert.n = n;
  const std::pair<NamedElement, int> table[] = {
      {NamedElement::alpha0, 2 * n}, {NamedElement::alpha1, 2 * (n - 1)}, {NamedElement::alpha2, 2 * (n - 2)}};
  Json orders = Json::object();
  Json axiom_backed = Json::array();
  bool all_certified = true;
  for (auto [name, order] : table) {
    const std::string label(to_string(name));
    const auto result = torsion_order(element(name, n), order, cert, label + ".", budget);
    ProofStep summary;
    summary.statement = label + " has order exactly " + std::to_string(order) + " in B_n(S^2)";
    summary.method = Method::arithmetic;
    summary.ok = result.outcome == TorsionOutcome::certified;
    if (!result.conclusion.empty()) summary.depends_on = {result.conclusion};
    cert.add(with_id(summary, label, summary.depends_on));
    all_certified = all_certified && summary.ok;
    orders[label] = summary.ok ? Json(order) : Json(nullptr);
  }
  for (const auto& step : cert.steps) {
    if (step.axiom_backed()) axiom_backed.push_back(step.id);
  }
  finish(cert);
  if (!all_certified) cert.verdict = Verdict::inconclusive;
  cert.flags["orders"] = orders;
  cert.flags["axiom_backed_steps"] = axiom_backed;
  return cert;
}

VerificationCertificate verify_background(int n, const Budget& budget) {
  if (n < 2) throw RangeError("verify_background needs n >= 2");
  VerificationCertificate cert;
  cert.claim = "background";
  cert.n = n;

  if (n == 2) {
    const CayleyTable t = enumerate(PresentationName::sphere_braid, 2, budget);
    ProofStep b1;
    b1.statement = "B_2(S^2) has order 2 (cyclic)";
    b1.method = Method::coset_enumeration;
    b1.ok = t.order() == 2;
    b1.data = Json{{"check", {{"kind", "coset_order"}, {"presentation", "sphere_braid"}, {"n", 2}, {"order", 2}}}};
    cert.add(with_id(std::move(b1), "b1"));
  }
  if (n == 3) {
    const CayleyTable t = enumerate(PresentationName::sphere_braid, 3, budget);
    const auto derived = derived_subgroup(t);
    const int derived_order = static_cast<int>(derived.size());
    const auto spectrum = order_spectrum(t);
    const bool has_order4 = std::find(spectrum.begin(), spectrum.end(), 4) != spectrum.end();
    const bool derived_cyclic = is_cyclic_subset(t, derived);
    ProofStep b2;
    b2.statement =
        "B_3(S^2) has order 12 with exactly one involution; its derived subgroup is cyclic of order 3 and its "
        "abelianisation has order 4 = 2(n-1); Sylow subgroups are cyclic (an element of order 4 exists, and 3 is "
        "prime), so the group is ZS-metacyclic";
    b2.method = Method::coset_enumeration;
    b2.ok = t.order() == 12 && involution_count(t) == 1 && derived_order == 3 && derived_cyclic &&
            t.order() / derived_order == 4 && has_order4;
    b2.data = Json{{"check",
                    {{"kind", "coset_order"}, {"presentation", "sphere_braid"}, {"n", 3}, {"order", 12},
                     {"involutions", 1}, {"derived_order", 3}, {"abelianization_order", 4}}},
                   {"order_spectrum", spectrum}};
    cert.add(with_id(std::move(b2), "b2"));
  }
  if (n >= 3) {
    const auto presentation = presentation_library(PresentationName::sphere_braid, n);
    bool all_trivial = true;
    for (const auto& relator : presentation.relators) {
      all_trivial = all_trivial &&
                    acts_trivially(BraidWord(n, relator), budget) == CenterDecision::in_center_set;
    }
    ProofStep b3;
    b3.statement = "every defining relation of B_n(S^2) acts trivially on the punctured sphere group";
    b3.method = Method::mod_center;
    b3.ok = all_trivial;
    b3.data = Json{{"check", {{"kind", "relators_act_trivially"}, {"n", n}}},
                   {"relator_count", presentation.relators.size()}};
    cert.add(with_id(std::move(b3), "b3"));
  }
  const BraidWord x = element(NamedElement::half_twist, n);
  std::vector<std::string> parts;
  for (int i = 1; i <= n - 1; ++i) {
    const BraidWord s(n, {i});
    const BraidWord target(n, {n - i});
    const std::string id = "b4." + std::to_string(i);
    cert.add(with_id(exact_Bn_step(conjugate(x, s), target,
                                   "x s" + std::to_string(i) + " x^-1 = s" + std::to_string(n - i) + " in B_n",
                                   budget),
                     id));
    parts.push_back(id);
  }
  ProofStep b4;
  b4.statement = "conjugation by the half twist sends s_i to s_{n-i} for every i";
  b4.method = Method::exact_Bn;
  cert.add(with_id(std::move(b4), "b4", parts));

  finish(cert);
  return cert;
}

std::string_view to_string(Claim claim) {
  switch (claim) {
    case Claim::q8: return "q8";
    case Claim::dicyclic: return "dicyclic";
    case Claim::odd_obstruction: return "odd-obstruction";
    case Claim::torsion: return "torsion";
    case Claim::background: return "background";
  }
  return "unknown";
}

Claim parse_claim(std::string_view text) {
  for (Claim c : {Claim::q8, Claim::dicyclic, Claim::odd_obstruction, Claim::torsion, Claim::background}) {
    if (to_string(c) == text) return c;
  }
  throw RangeError("unknown claim '" + std::string(text) + "'");
}

VerificationCertificate verify(Claim claim, int n, const Budget& budget) {
  try {
    switch (claim) {
      case Claim::q8: return verify_q8(n, budget);
      case Claim::dicyclic: return verify_dicyclic(n, budget);
      case Claim::odd_obstruction: return verify_odd_obstruction(n, budget);
      case Claim::torsion: return verify_torsion_table(n, budget);
      case Claim::background: return verify_background(n, budget);
    }
  } catch (const ResourceExhausted& e) {
    VerificationCertificate cert;
    cert.claim = std::string(to_string(claim));
    cert.n = n;
    cert.verdict = Verdict::inconclusive;
    cert.flags["resource"] = e.what();
    return cert;
  }
  throw RangeError("unknown claim");
}

namespace {

BraidWord word_at(const Json& check, const char* key) {
  return parse_word(check.at(key).get<std::string>(), check.at("n").get<int>());
}

bool replay_check(const Json& check, const Budget& budget) {
  const std::string kind = check.at("kind").get<std::string>();
  if (kind == "eq_Bn") {
    const BraidWord lhs = word_at(check, "lhs");
    const BraidWord rhs = word_at(check, "rhs");
    return equal_Bn(lhs, rhs) && eq_Bn(lhs, rhs, budget);
  }
  if (kind == "letter_identical") return word_at(check, "lhs") == word_at(check, "rhs");
  if (kind == "relator") return relator_trivializes(word_at(check, "word"), budget).has_value();
  if (kind == "square_rule") return square_rule(word_at(check, "word"), budget).has_value();
  if (kind == "acts_trivially") {
    return to_string(acts_trivially(word_at(check, "word"), budget)) == check.at("expect").get<std::string>();
  }
  if (kind == "permutation_nontrivial") return !permutation(word_at(check, "word")).is_identity();
  if (kind == "xi_nonzero") return !xi(word_at(check, "word")).is_zero();
  if (kind == "permutation_avoids_powers") {
    return permutation_avoids_powers(word_at(check, "word"), word_at(check, "base"), check.at("count").get<int>());
  }
  if (kind == "xi_values") {
    const int n = check.at("n").get<int>();
    const auto& words = check.at("words");
    const auto& expect = check.at("expect");
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (xi(parse_word(words[i].get<std::string>(), n)).value != expect[i].get<long>()) return false;
    }
    return true;
  }
  if (kind == "coset_order") {
    const auto name = parse_presentation_name(check.at("presentation").get<std::string>());
    if (!name) return false;
    const auto presentation = presentation_library(*name, check.at("n").get<int>());
    auto result = todd_coxeter(presentation, budget.max_cosets);
    const auto* t = std::get_if<CayleyTable>(&result);
    if (t == nullptr || t->order() != check.at("order").get<int>() || !satisfies_relators(*t, presentation)) {
      return false;
    }
    if (check.contains("iso_type") && to_string(iso_type_order8(*t)) != check.at("iso_type").get<std::string>()) {
      return false;
    }
    if (check.contains("involutions") && involution_count(*t) != check.at("involutions").get<int>()) return false;
    if (check.contains("derived_order")) {
      const auto derived = derived_subgroup(*t);
      const int order = static_cast<int>(derived.size());
      if (order != check.at("derived_order").get<int>() || !is_cyclic_subset(*t, derived)) return false;
      if (t->order() / order != check.at("abelianization_order").get<int>()) return false;
    }
    return true;
  }
  if (kind == "odd_residues") {
    const auto expect = check.at("expect").get<std::vector<long>>();
    const int n = check.at("n").get<int>();
    const BraidWord power = named_element(NamedElement::alpha1, n).pow((n - 1) / 2);
    return expect == odd_obstruction_residues(n) && expect[0] != 0 && expect[1] != 0 &&
           xi(power).value == expect[0] && xi(power.inverse()).value == expect[1];
  }
  if (kind == "order4_classes") {
    const int n = check.at("n").get<int>();
    return (2 * (n - 1)) % 4 == 0 && (2 * n) % 4 != 0 && (2 * (n - 2)) % 4 != 0;
  }
  if (kind == "commutator_exponent_sum") {
    const BraidWord u = word_at(check, "u");
    const BraidWord w = word_at(check, "w");
    return exponent_sum(u * w * u.inverse() * w.inverse()) == 0;
  }
  if (kind == "q8_product_order") {
    auto result = todd_coxeter(presentation_library(PresentationName::q8), budget.max_cosets);
    const auto* t = std::get_if<CayleyTable>(&result);
    if (t == nullptr) return false;
    const auto& gens = t->generator_images();
    return t->element_order(t->multiply(gens[1], gens[0])) == check.at("expect").get<int>() &&
           t->element_order(gens[0]) == 4 && t->element_order(gens[1]) == 4;
  }
  if (kind == "relators_act_trivially") {
    const int n = check.at("n").get<int>();
    const auto presentation = presentation_library(PresentationName::sphere_braid, n);
    return std::all_of(presentation.relators.begin(), presentation.relators.end(), [&](const auto& r) {
      return acts_trivially(BraidWord(n, r), budget) == CenterDecision::in_center_set;
    });
  }
  return false;
}

}  // namespace

std::vector<std::string> replay(const Json& certificate, const Budget& budget) {
  std::vector<std::string> failures;
  for (const auto& step : certificate.at("steps")) {
    const std::string id = step.at("id").get<std::string>();
    if (!step.at("ok").get<bool>()) {
      failures.push_back(id);
      continue;
    }
    const auto& data = step.at("data");
    if (!data.contains("check")) continue;
    bool passed = false;
    try {
      passed = replay_check(data.at("check"), budget);
    } catch (const std::exception&) {
      passed = false;
    }
    if (!passed) failures.push_back(id);
  }
  return failures;
}

std::vector<std::string> replay(const VerificationCertificate& cert, const Budget& budget) {
  return replay(cert.to_json(), budget);
}

}  // namespace spherebraid
