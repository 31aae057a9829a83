#include "spherebraid/sphere_oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "spherebraid/garside.hpp"

namespace spherebraid {

namespace {

void require_sphere_rank(int n) {
  if (n < 3) throw RangeError("sphere action needs n >= 3");
}

std::vector<int> invert(const std::vector<int>& letters) {
  std::vector<int> out(letters.rbegin(), letters.rend());
  for (int& k : out) k = -k;
  return out;
}

// Reduced form of g^-1 u g.
std::vector<int> conjugate_down(const std::vector<int>& u, const std::vector<int>& g, int rank) {
  std::vector<int> raw = invert(g);
  raw.insert(raw.end(), u.begin(), u.end());
  raw.insert(raw.end(), g.begin(), g.end());
  return FreeWord::reduce(raw, rank).letters();
}

std::vector<int> rotate_left(const std::vector<int>& u, std::size_t t) {
  std::vector<int> out(u.begin() + static_cast<std::ptrdiff_t>(t), u.end());
  out.insert(out.end(), u.begin(), u.begin() + static_cast<std::ptrdiff_t>(t));
  return out;
}

bool shorter_or_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Json check(std::string_view kind, const BraidWord& w) {
  return Json{{"kind", kind}, {"n", w.strand_count()}, {"word", format_word(w)}};
}

std::string power_label(std::string_view base, int exponent) {
  return std::string(base) + "^" + std::to_string(exponent);
}

std::vector<int> prime_divisors(int value) {
  std::vector<int> primes;
  for (int p = 2; p * p <= value; ++p) {
    if (value % p == 0) {
      primes.push_back(p);
      while (value % p == 0) value /= p;
    }
  }
  if (value > 1) primes.push_back(value);
  return primes;
}

// The alpha_i this word is letter-identical to, if the claimed order is
// the one the torsion classification attaches to it.
std::optional<NamedElement> classified_torsion(const BraidWord& w, int claimed) {
  const int n = w.strand_count();
  const std::pair<NamedElement, int> table[] = {
      {NamedElement::alpha0, 2 * n}, {NamedElement::alpha1, 2 * (n - 1)}, {NamedElement::alpha2, 2 * (n - 2)}};
  for (auto [name, order] : table) {
    if (claimed == order && named_element(name, n) == w) return name;
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(CenterDecision decision) {
  return decision == CenterDecision::in_center_set ? "InCenterSet" : "NotInCenterSet";
}

EndoOnBasis sphere_generator_endo(int letter, int n) {
  require_sphere_rank(n);
  const int rank = n - 1;
  const int i = std::abs(letter);
  if (letter == 0 || i > n - 1) throw RangeError("braid letter out of range for the sphere action");
  if (i <= n - 2) {
    // same formulas as the disk action; x_n is untouched
    std::vector<FreeWord> images = EndoOnBasis::identity(rank).images();
    const auto disk = artin_generator_endo(letter, n);
    images[i - 1] = FreeWord::reduce(disk.image(i).letters(), rank);
    images[i] = FreeWord::reduce(disk.image(i + 1).letters(), rank);
    return EndoOnBasis(std::move(images));
  }
  // x_n = x_{n-1}^-1 ... x_1^-1
  std::vector<int> x_n;
  for (int j = rank; j >= 1; --j) x_n.push_back(-j);
  std::vector<FreeWord> images = EndoOnBasis::identity(rank).images();
  if (letter > 0) {
    std::vector<int> raw{rank};
    raw.insert(raw.end(), x_n.begin(), x_n.end());
    raw.push_back(-rank);
    images[rank - 1] = FreeWord::reduce(raw, rank);
  } else {
    images[rank - 1] = FreeWord::reduce(x_n, rank);
  }
  return EndoOnBasis(std::move(images));
}

EndoOnBasis normalize_outer(const EndoOnBasis& e, const Budget& budget) {
  const int rank = e.rank();
  if (rank < 2) throw RangeError("normalize_outer needs rank >= 2");
  const auto& first = e.image(1).letters();
  if (first.empty()) throw RangeError("normalize_outer: image of x_1 is trivial");

  // first = c core c^-1 with core cyclically reduced
  std::size_t lo = 0;
  std::size_t hi = first.size() - 1;
  while (lo < hi && first[lo] == -first[hi]) {
    ++lo;
    --hi;
  }
  std::vector<int> conjugator(first.begin(), first.begin() + static_cast<std::ptrdiff_t>(lo));
  const std::vector<int> core(first.begin() + static_cast<std::ptrdiff_t>(lo),
                              first.begin() + static_cast<std::ptrdiff_t>(hi) + 1);

  // least rotation; rotating by t is conjugation by the length-t prefix
  std::size_t best_shift = 0;
  std::vector<int> best = core;
  for (std::size_t t = 1; t < core.size(); ++t) {
    auto candidate = rotate_left(core, t);
    if (candidate < best) {
      best = std::move(candidate);
      best_shift = t;
    }
  }
  conjugator.insert(conjugator.end(), core.begin(), core.begin() + static_cast<std::ptrdiff_t>(best_shift));

  // primitive root of the chosen core generates its centralizer
  std::size_t period = best.size();
  for (std::size_t d = 1; d < best.size(); ++d) {
    if (best.size() % d == 0 && rotate_left(best, d) == best) {
      period = d;
      break;
    }
  }
  const std::vector<int> root(best.begin(), best.begin() + static_cast<std::ptrdiff_t>(period));

  const std::vector<int> second = conjugate_down(e.image(2).letters(), conjugator, rank);
  const long reach = static_cast<long>((3 * second.size()) / (2 * root.size())) + 2;
  std::vector<int> best_second;
  long best_k = 0;
  bool have = false;
  for (long k = -reach; k <= reach; ++k) {
    std::vector<int> power;
    const auto piece = k >= 0 ? root : invert(root);
    for (long t = 0; t < std::abs(k); ++t) power.insert(power.end(), piece.begin(), piece.end());
    auto candidate = conjugate_down(second, power, rank);
    if (!have || shorter_or_less(candidate, best_second)) {
      best_second = std::move(candidate);
      best_k = k;
      have = true;
    }
  }
  const auto piece = best_k >= 0 ? root : invert(root);
  for (long t = 0; t < std::abs(best_k); ++t) conjugator.insert(conjugator.end(), piece.begin(), piece.end());
  conjugator = FreeWord::reduce(conjugator, rank).letters();

  std::vector<FreeWord> images;
  images.reserve(rank);
  std::size_t total = 0;
  for (const auto& image : e.images()) {
    images.push_back(FreeWord::reduce(conjugate_down(image.letters(), conjugator, rank), rank));
    total += images.back().size();
    if (total > budget.max_endo_letters) {
      throw ResourceExhausted("normalized sphere action exceeds " + std::to_string(budget.max_endo_letters) +
                              " letters");
    }
  }
  return EndoOnBasis(std::move(images));
}

EndoOnBasis sphere_endo(const BraidWord& w, const Budget& budget) {
  const int n = w.strand_count();
  require_sphere_rank(n);
  EndoOnBasis result = EndoOnBasis::identity(n - 1);
  for (int k : w.letters()) result = compose_endo(result, sphere_generator_endo(k, n), budget);
  return normalize_outer(result, budget);
}

EndoOnBasis sphere_endo_by_substitution(const BraidWord& w, const Budget& budget) {
  const int n = w.strand_count();
  require_sphere_rank(n);
  const int rank = n - 1;
  const EndoOnBasis disk = artin_disk_endo(w, budget);
  std::vector<FreeWord> images;
  images.reserve(rank);
  for (int g = 1; g <= rank; ++g) {
    std::vector<int> raw;
    for (int k : disk.image(g).letters()) {
      if (k == n) {
        for (int j = rank; j >= 1; --j) raw.push_back(-j);
      } else if (k == -n) {
        for (int j = 1; j <= rank; ++j) raw.push_back(j);
      } else {
        raw.push_back(k);
      }
    }
    images.push_back(FreeWord::reduce(raw, rank));
  }
  return EndoOnBasis(std::move(images));
}

CenterDecision acts_trivially(const BraidWord& w, const Budget& budget) {
  return sphere_endo(w, budget).is_identity() ? CenterDecision::in_center_set
                                              : CenterDecision::not_in_center_set;
}

bool eq_mod_center(const BraidWord& w, const BraidWord& v, const Budget& budget) {
  if (w.strand_count() != v.strand_count()) throw RangeError("strand-count mismatch");
  require_sphere_rank(w.strand_count());
  // canonical outer representatives agree iff w v^-1 acts trivially
  return sphere_endo(w, budget) == sphere_endo(v, budget);
}

ProofStep exact_Bn_step(const BraidWord& lhs, const BraidWord& rhs, std::string statement,
                        const Budget& budget) {
  const bool garside = equal_Bn(lhs, rhs);
  const bool artin = eq_Bn(lhs, rhs, budget);
  if (garside != artin) {
    throw std::logic_error("B_n engines disagree on " + format_word(lhs) + " vs " + format_word(rhs));
  }
  ProofStep step;
  step.statement = std::move(statement);
  step.method = Method::exact_Bn;
  step.ok = garside;
  step.data = Json{{"check",
                    {{"kind", "eq_Bn"}, {"n", lhs.strand_count()}, {"lhs", format_word(lhs)},
                     {"rhs", format_word(rhs)}}},
                   {"engines", {{"garside", garside}, {"artin", artin}}},
                   {"normal_form", normal_form(lhs).to_string()}};
  return step;
}

std::optional<ProofStep> relator_trivializes(const BraidWord& w, const Budget& budget) {
  const int n = w.strand_count();
  const BraidWord relator = named_element(NamedElement::surface_relator, n);
  const BraidWord empty(n, {});
  bool matches_relator = equal_Bn(w, relator);
  const bool matches_identity = !matches_relator && equal_Bn(w, empty);
  if (!matches_relator && !matches_identity) return std::nullopt;
  const BraidWord& target = matches_relator ? relator : empty;
  if (!eq_Bn(w, target, budget)) throw std::logic_error("B_n engines disagree on relator comparison");
  ProofStep step;
  step.statement = matches_relator ? "word equals the surface relator in B_n, hence is trivial in B_n(S^2)"
                                   : "word is trivial already in B_n";
  step.method = Method::relator;
  step.data = Json{{"check", check("relator", w)}, {"matched", matches_relator ? "surface_relator" : "identity"}};
  return step;
}

std::optional<ProofStep> square_rule(const BraidWord& v, const Budget& budget) {
  require_sphere_rank(v.strand_count());
  const Permutation perm = permutation(v);
  if (perm.is_identity()) return std::nullopt;
  if (acts_trivially(v * v, budget) != CenterDecision::in_center_set) return std::nullopt;
  ProofStep step;
  step.statement =
      "v^2 acts trivially, so v^2 is in {1, Delta^2}; v has nontrivial permutation so v is not Delta^2 "
      "and not 1, and v^2 = 1 would make v a second involution; hence v^2 = Delta^2 and v has order 4";
  step.method = Method::square_rule;
  step.axioms = {AxiomId::A1, AxiomId::A2, AxiomId::A3};
  step.data = Json{{"check", check("square_rule", v)}, {"permutation", perm.images()}};
  return step;
}

TorsionResult torsion_order(const BraidWord& w, int claimed, VerificationCertificate& cert,
                            std::string_view prefix, const Budget& budget) {
  const int n = w.strand_count();
  require_sphere_rank(n);
  if (claimed < 1) throw RangeError("claimed order must be at least 1");

  int counter = 0;
  auto add = [&](ProofStep step) -> std::string {
    step.id = std::string(prefix) + std::to_string(++counter);
    return cert.add(std::move(step));
  };
  TorsionResult result;
  const std::string base = "w";
  const BraidWord full_twist = named_element(NamedElement::full_twist, n);
  const BraidWord identity(n, {});
  const auto classified = classified_torsion(w, claimed);

  ProofStep subject;
  subject.statement = "w = " + format_word(w) + (classified ? " (" + std::string(to_string(*classified)) + ")" : "") +
                      ", claimed order " + std::to_string(claimed);
  subject.method = Method::arithmetic;
  subject.data = Json{{"word", format_word(w)}, {"n", n}, {"claimed", claimed}};
  const std::string subject_id = add(std::move(subject));

  auto refute = [&](ProofStep step, std::string witness, std::string after = "") {
    step.depends_on = {after.empty() ? subject_id : after};
    result.outcome = TorsionOutcome::refuted;
    result.witness = std::move(witness);
    result.conclusion = add(std::move(step));
    return result;
  };
  auto inconclusive = [&](std::string why) {
    result.outcome = TorsionOutcome::inconclusive;
    result.witness = std::move(why);
    return result;
  };

  // w^claimed must be 1: cheap invariants first
  const BraidWord top = w.pow(claimed);
  if (!permutation(top).is_identity()) {
    ProofStep s{.statement = power_label(base, claimed) + " has nontrivial permutation, so it is not 1",
                .method = Method::invariant, .data = Json{{"check", check("permutation_nontrivial", top)}}};
    return refute(std::move(s), "nontrivial permutation of " + power_label(base, claimed));
  }
  if (n >= 2 && !xi(top).is_zero()) {
    ProofStep s{.statement = power_label(base, claimed) + " has xi = " + xi(top).to_string() + ", so it is not 1",
                .method = Method::invariant, .data = Json{{"check", check("xi_nonzero", top)}}};
    return refute(std::move(s), "xi(" + power_label(base, claimed) + ") != 0");
  }
  if (acts_trivially(top, budget) == CenterDecision::not_in_center_set) {
    ProofStep s{.statement = power_label(base, claimed) + " acts nontrivially on the punctured sphere group",
                .method = Method::invariant,
                .data = Json{{"check", {{"kind", "acts_trivially"}, {"n", n}, {"word", format_word(top)},
                                        {"expect", "NotInCenterSet"}}}}};
    return refute(std::move(s), "nontrivial sphere action of " + power_label(base, claimed));
  }

  if (equal_Bn(top, full_twist)) {
    auto exact = exact_Bn_step(top, full_twist, power_label(base, claimed) + " = Delta^2 in B_n", budget);
    exact.depends_on = {subject_id};
    const std::string exact_id = add(std::move(exact));
    ProofStep s{.statement = power_label(base, claimed) + " = Delta^2, which is not 1",
                .method = Method::axiom,
                .axioms = {AxiomId::A3}};
    return refute(std::move(s), power_label(base, claimed) + " = Delta^2", exact_id);
  }

  // Establishes w^e = Delta^2 in B_n(S^2); returns the step id or "".
  auto establish_delta_square = [&](int exponent) -> std::string {
    const BraidWord power = w.pow(exponent);
    const std::string label = power_label(base, exponent);
    if (equal_Bn(power, full_twist)) {
      auto step = exact_Bn_step(power, full_twist, label + " = Delta^2 in B_n", budget);
      step.depends_on = {subject_id};
      return add(std::move(step));
    }
    if (auto step = relator_trivializes(power * full_twist.inverse(), budget)) {
      step->statement = label + " Delta^-2 equals the surface relator in B_n, so " + label + " = Delta^2 in B_n(S^2)";
      step->depends_on = {subject_id};
      return add(std::move(*step));
    }
    if (exponent % 2 == 0) {
      if (auto step = square_rule(w.pow(exponent / 2), budget)) {
        step->statement = "square rule on " + power_label(base, exponent / 2) + ": " + label + " = Delta^2";
        step->depends_on = {subject_id};
        return add(std::move(*step));
      }
    }
    if (acts_trivially(power, budget) != CenterDecision::in_center_set) return "";
    const Residue xi_power = xi(power);
    if (!xi_power.is_zero() || classified) {
      ProofStep center{.statement = label + " acts trivially, so " + label + " is in {1, Delta^2}",
                       .method = Method::mod_center,
                       .depends_on = {subject_id},
                       .axioms = {AxiomId::A1},
                       .data = Json{{"check", {{"kind", "acts_trivially"}, {"n", n}, {"word", format_word(power)},
                                               {"expect", "InCenterSet"}}}}};
      const std::string center_id = add(std::move(center));
      if (!xi_power.is_zero()) {
        ProofStep separate{.statement = label + " has xi = " + xi_power.to_string() + ", so it is not 1",
                           .method = Method::invariant,
                           .depends_on = {subject_id},
                           .data = Json{{"check", check("xi_nonzero", power)}}};
        const std::string separate_id = add(std::move(separate));
        ProofStep resolve{.statement = label + " is in {1, Delta^2} and is not 1, so " + label + " = Delta^2",
                          .method = Method::arithmetic,
                          .depends_on = {center_id, separate_id}};
        return add(std::move(resolve));
      }
      ProofStep resolve{.statement = label + " = Delta^2: " + std::string(to_string(*classified)) +
                                     " is a root of Delta^2 of this degree by the torsion classification",
                        .method = Method::axiom,
                        .depends_on = {center_id},
                        .axioms = {AxiomId::A5}};
      return add(std::move(resolve));
    }
    return "";
  };

  std::vector<std::string> bounds;
  std::string half_id;
  const int half = claimed / 2;
  if (claimed % 2 == 0) {
    half_id = establish_delta_square(half);
    if (half_id.empty()) return inconclusive("could not establish w^" + std::to_string(half) + " = Delta^2");
    ProofStep upper{.statement = power_label(base, claimed) + " = Delta^4 = 1",
                    .method = Method::axiom,
                    .depends_on = {half_id},
                    .axioms = {AxiomId::A3}};
    bounds.push_back(add(std::move(upper)));
  } else if (equal_Bn(top, identity)) {
    auto step = exact_Bn_step(top, identity, power_label(base, claimed) + " = 1 in B_n", budget);
    step.depends_on = {subject_id};
    bounds.push_back(add(std::move(step)));
  } else if (auto step = relator_trivializes(top, budget)) {
    step->depends_on = {subject_id};
    bounds.push_back(add(std::move(*step)));
  } else {
    return inconclusive("could not show w^" + std::to_string(claimed) + " = 1");
  }

  // w^(claimed/p) != 1 for every prime p
  for (int p : prime_divisors(claimed)) {
    const int d = claimed / p;
    const std::string label = power_label(base, d);
    const BraidWord power = w.pow(d);
    if (p == 2) {
      ProofStep s{.statement = label + " = Delta^2, which is not 1",
                  .method = Method::axiom,
                  .depends_on = {half_id},
                  .axioms = {AxiomId::A3}};
      bounds.push_back(add(std::move(s)));
      continue;
    }
    if (!permutation(power).is_identity()) {
      ProofStep s{.statement = label + " has nontrivial permutation, so it is not 1",
                  .method = Method::invariant,
                  .depends_on = {subject_id},
                  .data = Json{{"check", check("permutation_nontrivial", power)},
                               {"permutation", permutation(power).images()}}};
      bounds.push_back(add(std::move(s)));
      continue;
    }
    if (!xi(power).is_zero()) {
      ProofStep s{.statement = label + " has xi = " + xi(power).to_string() + ", so it is not 1",
                  .method = Method::invariant,
                  .depends_on = {subject_id},
                  .data = Json{{"check", check("xi_nonzero", power)}}};
      bounds.push_back(add(std::move(s)));
      continue;
    }
    if (acts_trivially(power, budget) == CenterDecision::not_in_center_set) {
      ProofStep s{.statement = label + " acts nontrivially on the punctured sphere group, so it is not 1",
                  .method = Method::invariant,
                  .depends_on = {subject_id},
                  .data = Json{{"check", {{"kind", "acts_trivially"}, {"n", n}, {"word", format_word(power)},
                                          {"expect", "NotInCenterSet"}}}}};
      bounds.push_back(add(std::move(s)));
      continue;
    }
    if (equal_Bn(power, identity)) {
      auto s = exact_Bn_step(power, identity, label + " = 1 in B_n", budget);
      return refute(std::move(s), label + " = 1");
    }
    if (auto s = relator_trivializes(power, budget)) {
      return refute(std::move(*s), label + " = 1 in B_n(S^2)");
    }
    if (d % 2 == 0) {
      if (auto s = square_rule(w.pow(d / 2), budget)) {
        s->statement = "square rule on " + power_label(base, d / 2) + ": " + label + " = Delta^2, which is not 1";
        s->depends_on = {subject_id};
        bounds.push_back(add(std::move(*s)));
        continue;
      }
    }
    if (classified) {
      ProofStep s{.statement = label + " != 1 by the order the torsion classification gives " +
                               std::string(to_string(*classified)),
                  .method = Method::axiom,
                  .depends_on = {subject_id},
                  .axioms = {AxiomId::A5}};
      bounds.push_back(add(std::move(s)));
      continue;
    }
    return inconclusive("could not separate " + label + " from 1");
  }

  ProofStep conclusion{.statement = "w^" + std::to_string(claimed) + " = 1 and w^(" + std::to_string(claimed) +
                                    "/p) != 1 for every prime p, so w has order exactly " +
                                    std::to_string(claimed) + " in B_n(S^2)",
                       .method = Method::arithmetic,
                       .depends_on = bounds,
                       .data = Json{{"claimed", claimed}, {"primes", prime_divisors(claimed)}}};
  result.outcome = TorsionOutcome::certified;
  result.conclusion = add(std::move(conclusion));
  return result;
}

VerificationCertificate torsion_order(const BraidWord& w, int claimed, const Budget& budget) {
  VerificationCertificate cert;
  cert.claim = "torsion-order";
  cert.n = w.strand_count();
  const auto result = torsion_order(w, claimed, cert, "t", budget);
  switch (result.outcome) {
    case TorsionOutcome::certified: cert.verdict = Verdict::verified; break;
    case TorsionOutcome::refuted: cert.verdict = Verdict::refuted; break;
    case TorsionOutcome::inconclusive: cert.verdict = Verdict::inconclusive; break;
  }
  cert.flags["claimed_order"] = claimed;
  if (!result.witness.empty()) cert.flags["witness"] = result.witness;
  return cert;
}

}  // namespace spherebraid
