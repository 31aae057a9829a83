// Scripted verification plans for finite subgroups of B_n(S^2).
//
// Each plan is a fixed DAG of proof steps. Steps that hold in B_n are
// checked by both the Garside and Artin engines; steps on the sphere use
// the outer action plus the square rule or the surface relator, and every
// cited theorem lands in the certificate's axiom ledger.
#pragma once

#include <string>
#include <vector>

#include "spherebraid/budget.hpp"
#include "spherebraid/certificate.hpp"

namespace spherebraid {

/// Even n: the subgroup <x, y> is quaternion of order 8 (inside the
/// commutator subgroup when 4 | n). Odd n: REFUTED-realization, with the
/// obstruction steps. Throws RangeError for n < 3.
VerificationCertificate verify_q8(int n, const Budget& budget = {});

/// No quaternion subgroup for odd n. Throws RangeError for even n or n < 3.
VerificationCertificate verify_odd_obstruction(int n, const Budget& budget = {});

/// <alpha0, x> is dicyclic of order 4n. Throws RangeError for n < 3.
VerificationCertificate verify_dicyclic(int n, const Budget& budget = {});

/// Orders 2n, 2(n-1), 2(n-2) of alpha0, alpha1, alpha2. Throws for n < 3.
VerificationCertificate verify_torsion_table(int n, const Budget& budget = {});

/// Small-group facts for n = 2, 3 plus relation sanity checks.
/// Throws RangeError for n < 2.
VerificationCertificate verify_background(int n, const Budget& budget = {});

/// Both residues +-n(n-1)/2 mod 2(n-1), in that order.
std::vector<long> odd_obstruction_residues(int n);

enum class Claim { q8, dicyclic, odd_obstruction, torsion, background };

std::string_view to_string(Claim claim);
/// Throws RangeError for unknown claims.
Claim parse_claim(std::string_view text);

/// Runs the plan; a ResourceExhausted inside becomes an INCONCLUSIVE
/// certificate.
VerificationCertificate verify(Claim claim, int n, const Budget& budget = {});

/// Re-executes every step's recorded check. Returns the ids of steps whose
/// check failed (empty on success).
std::vector<std::string> replay(const VerificationCertificate& cert, const Budget& budget = {});
std::vector<std::string> replay(const Json& certificate, const Budget& budget = {});

}  // namespace spherebraid
