#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "spherebraid/garside.hpp"

using namespace spherebraid;

namespace {

// S(B) and F(A) read directly off the permutations.
std::vector<int> starting(const Permutation& b) {
  std::vector<int> s;
  for (int i = 1; i < b.size(); ++i) {
    if (b(i) > b(i + 1)) s.push_back(i);
  }
  return s;
}

std::vector<int> finishing(const Permutation& a) {
  const Permutation inv = a.inverse();
  std::vector<int> f;
  for (int i = 1; i < a.size(); ++i) {
    if (inv(i) > inv(i + 1)) f.push_back(i);
  }
  return f;
}

bool is_normal(const GarsideNormalForm& nf) {
  for (const auto& f : nf.factors) {
    if (f.is_identity() || f.is_delta()) return false;
  }
  for (std::size_t k = 0; k + 1 < nf.factors.size(); ++k) {
    const auto s = starting(nf.factors[k + 1].permutation());
    const auto f = finishing(nf.factors[k].permutation());
    for (int i : s) {
      if (std::find(f.begin(), f.end(), i) == f.end()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("normal form examples") {
  CHECK(normal_form(BraidWord(3, {})).to_string() == "(Delta^0, [])");
  CHECK(normal_form(BraidWord(3, {1, 2, 1})).to_string() == "(Delta^1, [])");
  const auto x = named_element(NamedElement::half_twist, 4);
  CHECK(normal_form(x * x).to_string() == "(Delta^2, [])");
  const auto nf = normal_form(BraidWord(3, {1, -2}));
  CHECK(nf.delta_power == -1);
  CHECK(nf.factors.size() == 2);
  CHECK(nf.to_string() == "(Delta^-1, [[1 3 2], [2 3 1]])");
  CHECK_THROWS_AS(normal_form(BraidWord(1, {})), RangeError);
}

TEST_CASE("simple braids") {
  const auto d = PermutationBraid::delta(4);
  CHECK(d.is_delta());
  CHECK(d.length() == 6);
  CHECK(d.to_word().size() == 6);
  CHECK(permutation(d.to_word()) == Permutation::reversal(4));
  const auto g = PermutationBraid::generator(2, 4);
  CHECK(g.starting_set() == std::vector<int>{2});
  CHECK(g.finishing_set() == std::vector<int>{2});
  CHECK(left_weighted(g, g));
  CHECK_FALSE(left_weighted(PermutationBraid::generator(1, 4), PermutationBraid::generator(3, 4)));
}

TEST_CASE("equal_Bn examples") {
  CHECK(equal_Bn(BraidWord(3, {1, 2, 1}), BraidWord(3, {2, 1, 2})));
  const auto x = named_element(NamedElement::half_twist, 4);
  const auto y = named_element(NamedElement::bipolar_twist, 4);
  CHECK(equal_Bn(conjugate(x, y), y.inverse()));
  CHECK_FALSE(equal_Bn(y * y, named_element(NamedElement::full_twist, 4)));
  CHECK_THROWS_AS(equal_Bn(BraidWord(3, {}), BraidWord(4, {})), RangeError);
}

TEST_CASE("conjugate_by_half_twist examples") {
  CHECK(conjugate_by_half_twist(BraidWord(4, {1})) == normal_form(BraidWord(4, {3})));
  CHECK(conjugate_by_half_twist(BraidWord(4, {})).to_string() == "(Delta^0, [])");
  CHECK(conjugate_by_half_twist(named_element(NamedElement::alpha0, 6)) ==
        normal_form(BraidWord(6, {5, 4, 3, 2, 1})));
}

TEST_CASE("twists for n in 2..10") {
  for (int n = 2; n <= 10; ++n) {
    CAPTURE(n);
    const auto full = normal_form(named_element(NamedElement::full_twist, n));
    CHECK(full.delta_power == 2);
    CHECK(full.factors.empty());
    const auto half = normal_form(named_element(NamedElement::half_twist, n));
    CHECK(half.delta_power == 1);
    CHECK(half.factors.empty());
  }
}

TEST_CASE("property: normal form is left-weighted, unique and keeps the exponent sum") {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 7; ++n) {
    const oracle::Burau burau{n, 16807};
    for (int k = 0; k < 400; ++k) {
      auto letters = oracle::random_letters(n, 30, rng);
      const BraidWord w(n, letters);
      const auto nf = normal_form(w);
      CHECK(is_normal(nf));
      CHECK(normal_form(nf.to_word()) == nf);
      CHECK(burau.of(nf.to_word().letters()) == burau.of(letters));
      long sum = nf.delta_power * n * (n - 1) / 2;
      for (const auto& f : nf.factors) sum += f.length();
      CHECK(sum == exponent_sum(w));
      for (int r = 0; r < 3; ++r) letters = oracle::rewrite_equal(n, letters, rng);
      CHECK(normal_form(BraidWord(n, letters)) == nf);
    }
  }
}

TEST_CASE("property: conjugation by the half twist is the mirror") {
  std::mt19937_64 rng(9);
  for (int n = 3; n <= 7; ++n) {
    for (int k = 0; k < 500; ++k) {
      const BraidWord w(n, oracle::random_letters(n, 20, rng));
      CHECK(conjugate_by_half_twist(w) == normal_form(mirror(w)));
    }
  }
}
