#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "spherebraid/presentations.hpp"
#include "spherebraid/sphere_oracle.hpp"

using namespace spherebraid;

namespace {

BraidWord named(NamedElement e, int n) { return named_element(e, n); }

// Literal sphere action from the substitution oracle: disk images of x_1..x_{n-1}
// with x_n replaced by (x_1 ... x_{n-1})^-1.
std::vector<oracle::Letters> sphere_images(int n, const oracle::Letters& braid) {
  const auto disk = oracle::disk_images(n, braid);
  oracle::Letters xn;
  for (int j = n - 1; j >= 1; --j) xn.push_back(-j);
  std::vector<oracle::Letters> out;
  for (int j = 0; j < n - 1; ++j) {
    oracle::Letters w;
    for (int l : disk[j]) {
      if (l == n) {
        w.insert(w.end(), xn.begin(), xn.end());
      } else if (l == -n) {
        const auto inv = oracle::free_inverse(xn);
        w.insert(w.end(), inv.begin(), inv.end());
      } else {
        w.push_back(l);
      }
    }
    out.push_back(oracle::free_reduce(w));
  }
  return out;
}

}  // namespace

TEST_CASE("sphere_endo examples") {
  CHECK(sphere_endo(BraidWord(4, {})).is_identity());
  CHECK(sphere_endo(BraidWord(4, {})).rank() == 3);
  CHECK(sphere_endo(named(NamedElement::surface_relator, 3)).is_identity());
  CHECK(sphere_endo(named(NamedElement::full_twist, 4)).is_identity());
  CHECK_THROWS_AS(sphere_endo(BraidWord(2, {1})), RangeError);
}

TEST_CASE("substitution route agrees with the oracle and differs only by an inner automorphism") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + trial % 5;
    const auto letters = oracle::random_letters(n, 10, rng);
    const BraidWord w(n, letters);
    const auto literal = sphere_endo_by_substitution(w);
    const auto expected = sphere_images(n, letters);
    for (int j = 1; j <= n - 1; ++j) CHECK(literal.image(j).letters() == expected[j - 1]);
    CHECK(normalize_outer(literal) == sphere_endo(w));
  }
  // the relator acts by a genuinely inner automorphism before normalization
  const auto relator = sphere_endo_by_substitution(named(NamedElement::surface_relator, 4));
  CHECK_FALSE(relator.is_identity());
  CHECK(normalize_outer(relator).is_identity());
}

TEST_CASE("normalize_outer is constant on inner classes") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 4;
    const auto e = sphere_endo_by_substitution(BraidWord(n, oracle::random_letters(n, 8, rng)));
    const FreeWord c = FreeWord::reduce(oracle::random_letters(n, 6, rng), n - 1);
    std::vector<FreeWord> images;
    for (const auto& g : e.images()) images.push_back(c * g * c.inverse());
    CHECK(normalize_outer(EndoOnBasis(images)) == normalize_outer(e));
  }
}

TEST_CASE("acts_trivially") {
  CHECK(acts_trivially(named(NamedElement::full_twist, 5)) == CenterDecision::in_center_set);
  CHECK(acts_trivially(BraidWord(4, {1})) == CenterDecision::not_in_center_set);
  CHECK(acts_trivially(BraidWord(4, {1, 1, -3, -3})) == CenterDecision::in_center_set);
  for (int n = 3; n <= 8; ++n) {
    CHECK(acts_trivially(named(NamedElement::full_twist, n)) == CenterDecision::in_center_set);
  }
  CHECK(to_string(CenterDecision::in_center_set) == "InCenterSet");
}

TEST_CASE("eq_mod_center") {
  const auto x = named(NamedElement::half_twist, 4);
  const auto a = named(NamedElement::alpha0, 4);
  CHECK(eq_mod_center(a, a));
  CHECK(eq_mod_center(conjugate(x, a), a.inverse()));
  CHECK_FALSE(eq_mod_center(BraidWord(4, {1}), BraidWord(4, {2})));
}

TEST_CASE("relator_trivializes") {
  for (int n = 2; n <= 10; ++n) {
    CAPTURE(n);
    const auto r = relator_trivializes(named(NamedElement::surface_relator, n));
    REQUIRE(r.has_value());
    CHECK(r->axioms.empty());
    CHECK(r->method == Method::relator);
    const auto a = named(NamedElement::alpha0, n);
    CHECK(relator_trivializes(a * mirror(a)).has_value());
    // at n = 2 the full twist is the relator itself
    if (n >= 3) CHECK_FALSE(relator_trivializes(named(NamedElement::full_twist, n)).has_value());
  }
}

TEST_CASE("square_rule") {
  const auto y = square_rule(named(NamedElement::bipolar_twist, 4));
  REQUIRE(y.has_value());
  CHECK(y->axioms == std::vector<AxiomId>{AxiomId::A1, AxiomId::A2, AxiomId::A3});
  CHECK(square_rule(named(NamedElement::half_twist, 6)).has_value());
  CHECK_FALSE(square_rule(named(NamedElement::full_twist, 4)).has_value());
}

TEST_CASE("exact_Bn_step") {
  const auto x = named(NamedElement::half_twist, 5);
  const auto step = exact_Bn_step(x * x, named(NamedElement::full_twist, 5), "x^2 = Delta^2");
  CHECK(step.ok);
  CHECK(step.axioms.empty());
  CHECK(step.data.at("engines").at("garside") == true);
  CHECK(step.data.at("engines").at("artin") == true);
  CHECK_FALSE(exact_Bn_step(BraidWord(3, {1}), BraidWord(3, {2}), "no").ok);
}

TEST_CASE("torsion_order examples") {
  SUBCASE("alpha0 at n = 3 has order 6") {
    const auto cert = torsion_order(named(NamedElement::alpha0, 3), 6);
    CHECK(cert.verdict == Verdict::verified);
    CHECK(cert.steps.at(1).method == Method::exact_Bn);
  }
  SUBCASE("half twist at n = 4 has order 4") {
    const auto cert = torsion_order(named(NamedElement::half_twist, 4), 4);
    CHECK(cert.verdict == Verdict::verified);
    for (const auto& s : cert.steps) CHECK_FALSE(s.axiom_backed());
  }
  SUBCASE("alpha1 at n = 4 has order 6, exactly") {
    const auto cert = torsion_order(named(NamedElement::alpha1, 4), 6);
    CHECK(cert.verdict == Verdict::verified);
    for (const auto& s : cert.steps) CHECK_FALSE(s.axiom_backed());
  }
  SUBCASE("alpha2 at n = 3: sigma1^2 is the central involution") {
    const auto s = named(NamedElement::alpha2, 3);
    CHECK(eq_mod_center(s, named(NamedElement::full_twist, 3)));
    const auto cert = torsion_order(s, 2);
    CHECK(cert.verdict == Verdict::verified);
  }
  SUBCASE("wrong claims are refuted") {
    CHECK(torsion_order(named(NamedElement::alpha0, 4), 4).verdict == Verdict::refuted);
    CHECK(torsion_order(named(NamedElement::alpha0, 4), 16).verdict == Verdict::inconclusive);
    CHECK(torsion_order(named(NamedElement::alpha1, 5), 4).verdict == Verdict::refuted);
  }
}

TEST_CASE("property: relations act trivially, exhaustive for n in 3..8") {
  for (int n = 3; n <= 8; ++n) {
    for (const auto& r : presentation_library(PresentationName::sphere_braid, n).relators) {
      CHECK(sphere_endo(BraidWord(n, r)).is_identity());
    }
  }
}

TEST_CASE("property: homomorphism, equivalence and soundness") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + trial % 5;
    const BraidWord w(n, oracle::random_letters(n, 10, rng));
    const BraidWord v(n, oracle::random_letters(n, 10, rng));
    const BraidWord u(n, oracle::random_letters(n, 10, rng));
    CHECK(sphere_endo(w * v) == normalize_outer(compose_endo(sphere_endo(w), sphere_endo(v))));

    CHECK(eq_mod_center(w, w));
    CHECK(eq_mod_center(w, v) == eq_mod_center(v, w));
    const BraidWord w2(n, oracle::rewrite_equal(n, w.letters(), rng));
    const BraidWord w3 = w2 * named(NamedElement::full_twist, n);
    CHECK(eq_mod_center(w, w2));
    CHECK(eq_mod_center(w2, w3));
    CHECK(eq_mod_center(w, w3));
    if (eq_mod_center(w, v) && eq_mod_center(v, u)) CHECK(eq_mod_center(w, u));

    if (!permutation(w).is_identity()) CHECK(acts_trivially(w) == CenterDecision::not_in_center_set);
    if (acts_trivially(w * w) == CenterDecision::not_in_center_set) CHECK_FALSE(square_rule(w).has_value());
  }
}
