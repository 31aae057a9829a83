#include <doctest.h>

#include <algorithm>

#include "spherebraid/braid_word.hpp"
#include "spherebraid/theorems.hpp"

using namespace spherebraid;

namespace {

bool cites(const ProofStep& s, AxiomId a) { return std::find(s.axioms.begin(), s.axioms.end(), a) != s.axioms.end(); }

const ProofStep& step(const VerificationCertificate& c, std::string_view id) {
  const ProofStep* s = c.find(id);
  REQUIRE(s != nullptr);
  return *s;
}

}  // namespace

TEST_CASE("q8 at n = 4: verified inside the commutator subgroup") {
  const auto c = verify_q8(4);
  CHECK(c.verdict == Verdict::verified);
  CHECK(c.flags.at("in_commutator") == true);
  for (const char* id : {"s1", "s2", "s3", "s4", "s5", "s6", "s7"}) CHECK(step(c, id).ok);
  CHECK(step(c, "s1").method == Method::exact_Bn);
  CHECK(step(c, "s3").method == Method::square_rule);
  CHECK(step(c, "s6").method == Method::coset_enumeration);
}

TEST_CASE("q8 at n = 6: verified, xi(x) recorded") {
  const auto c = verify_q8(6);
  CHECK(c.verdict == Verdict::verified);
  CHECK(c.flags.at("in_commutator") == false);
  CHECK(c.find("s7") == nullptr);
  const auto& note = step(c, "xi-note");
  CHECK(note.statement.find("5 mod 10") != std::string::npos);
  CHECK(note.data.at("check").at("expect").at(0) == 5);
}

TEST_CASE("q8 at odd n is refuted as a realization") {
  const auto c = verify_q8(5);
  CHECK(c.verdict == Verdict::refuted_realization);
  CHECK(c.find("o4") != nullptr);
  CHECK_THROWS_AS(verify_q8(2), RangeError);
}

TEST_CASE("trichotomy for n in 3..12") {
  for (int n = 3; n <= 12; ++n) {
    CAPTURE(n);
    const auto c = verify_q8(n);
    CHECK(c.verdict == (n % 2 == 0 ? Verdict::verified : Verdict::refuted_realization));
    if (n % 2 == 0) {
      CHECK(c.flags.at("in_commutator") == (n % 4 == 0));
      for (const auto& s : c.steps) CHECK_FALSE(cites(s, AxiomId::A5));
    }
  }
}

TEST_CASE("odd obstruction residues") {
  CHECK(odd_obstruction_residues(5) == std::vector<long>{2, 6});
  CHECK(odd_obstruction_residues(3) == std::vector<long>{3, 1});
  for (int n = 3; n <= 11; n += 2) {
    // independent arithmetic: n(n-1)/2 mod 2(n-1) is (n-1)/2 * n reduced
    const long m = 2L * (n - 1);
    const long v = (static_cast<long>(n) * (n - 1) / 2) % m;
    CHECK(odd_obstruction_residues(n) == std::vector<long>{v, (m - v) % m});
    CHECK(v != 0);
    const auto c = verify_odd_obstruction(n);
    CHECK(c.verdict == Verdict::verified);
    CHECK(cites(step(c, "o1"), AxiomId::A5));
    CHECK(step(c, "o1").statement.find("Conjugating H") != std::string::npos);
  }
  CHECK_THROWS_AS(verify_odd_obstruction(4), RangeError);
}

TEST_CASE("dicyclic") {
  for (int n = 3; n <= 10; ++n) {
    CAPTURE(n);
    const auto c = verify_dicyclic(n);
    CHECK(c.verdict == Verdict::verified);
    CHECK(c.flags.at("order") == 4 * n);
    CHECK(c.flags.at("generalized_quaternion") == (n == 4 || n == 8));
    CHECK(step(c, "d3").axioms.empty());
    CHECK(step(c, "d3.1").axioms.empty());
    CHECK(step(c, "d3.2").axioms.empty());
    CHECK((c.find("d7") != nullptr) == (n == 4 || n == 8));
  }
  CHECK(step(verify_dicyclic(3), "d-cross").ok);
  CHECK_THROWS_AS(verify_dicyclic(2), RangeError);
}

TEST_CASE("torsion table") {
  for (int n = 3; n <= 10; ++n) {
    CAPTURE(n);
    const auto c = verify_torsion_table(n);
    CHECK(c.verdict == Verdict::verified);
    CHECK(c.flags.at("orders").at("alpha0") == 2 * n);
    CHECK(c.flags.at("orders").at("alpha1") == 2 * (n - 1));
    CHECK(c.flags.at("orders").at("alpha2") == 2 * (n - 2));
    // flagged steps are exactly the ones citing the classification
    std::vector<std::string> backed;
    for (const auto& s : c.steps) {
      if (cites(s, AxiomId::A5)) backed.push_back(s.id);
    }
    CHECK(c.flags.at("axiom_backed_steps").get<std::vector<std::string>>() == backed);
  }
}

TEST_CASE("background") {
  const auto b2 = verify_background(2);
  CHECK(b2.verdict == Verdict::verified);
  CHECK(step(b2, "b1").ok);
  const auto b3 = verify_background(3);
  CHECK(b3.verdict == Verdict::verified);
  CHECK(step(b3, "b2").ok);
  const auto b5 = verify_background(5);
  CHECK(b5.verdict == Verdict::verified);
  for (const char* id : {"b4.1", "b4.2", "b4.3", "b4.4"}) {
    CHECK(step(b5, id).data.at("engines").at("garside") == true);
    CHECK(step(b5, id).data.at("engines").at("artin") == true);
  }
  CHECK(b5.find("b2") == nullptr);
  CHECK_THROWS_AS(verify_background(1), RangeError);
}

TEST_CASE("certificates: ledger, schema, determinism, replay") {
  for (Claim claim : {Claim::q8, Claim::dicyclic, Claim::torsion, Claim::background}) {
    for (int n = 3; n <= 8; ++n) {
      CAPTURE(n);
      const auto c = verify(claim, n);
      const Json j = c.to_json();
      for (const char* key : {"claim", "n", "verdict", "flags", "steps", "axioms"}) CHECK(j.contains(key));
      // ledger is the union of the step axioms
      std::vector<AxiomId> uni;
      for (const auto& s : c.steps) uni.insert(uni.end(), s.axioms.begin(), s.axioms.end());
      std::sort(uni.begin(), uni.end());
      uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
      CHECK(c.axiom_ledger() == uni);
      CHECK(j.at("axioms").size() == uni.size());
      CHECK(verify(claim, n).to_json().dump() == j.dump());
      CHECK(replay(c).empty());
      CHECK(replay(Json::parse(j.dump())).empty());
    }
  }
}

TEST_CASE("replay detects tampering") {
  Json j = verify_q8(4).to_json();
  for (auto& s : j.at("steps")) {
    if (s.at("id") == "s1") s.at("data").at("check").at("rhs") = "1 2 3";
    if (s.at("id") == "s6") s.at("data").at("check").at("order") = 16;
  }
  CHECK(replay(j) == std::vector<std::string>{"s1", "s6"});
}

TEST_CASE("budgets turn into INCONCLUSIVE, never a wrong verdict") {
  Budget tiny;
  tiny.max_endo_letters = 4;
  CHECK(verify(Claim::q8, 8, tiny).verdict == Verdict::inconclusive);
  Budget few;
  few.max_cosets = 4;
  CHECK(verify(Claim::background, 3, few).verdict == Verdict::inconclusive);
  CHECK(verify(Claim::dicyclic, 5, few).verdict == Verdict::inconclusive);
}

TEST_CASE("claim names") {
  CHECK(parse_claim("odd-obstruction") == Claim::odd_obstruction);
  CHECK(to_string(Claim::torsion) == "torsion");
  CHECK_THROWS_AS(parse_claim("q9"), RangeError);
}
