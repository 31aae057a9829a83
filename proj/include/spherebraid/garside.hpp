// Left-canonical (Garside) normal form in B_n over permutation braids.
//
// A simple element is stored as the permutation it induces (strand j ends
// at position images[j-1]); the positive braid is the unique one in which
// every pair of strands crosses at most once. Products are read left to
// right, matching BraidWord.
#pragma once

#include <string>
#include <vector>

#include "spherebraid/braid_word.hpp"

namespace spherebraid {

class PermutationBraid {
 public:
  PermutationBraid() = default;
  explicit PermutationBraid(Permutation perm) : perm_(std::move(perm)) {}

  static PermutationBraid identity(int n) { return PermutationBraid(Permutation::identity(n)); }
  static PermutationBraid delta(int n) { return PermutationBraid(Permutation::reversal(n)); }
  static PermutationBraid generator(int i, int n);

  int strand_count() const { return perm_.size(); }
  const Permutation& permutation() const { return perm_; }
  int length() const { return perm_.inversion_count(); }
  bool is_identity() const { return perm_.is_identity(); }
  bool is_delta() const;

  /// Positions i such that sigma_i left-divides this braid.
  std::vector<int> starting_set() const;
  /// Positions i such that sigma_i right-divides this braid.
  std::vector<int> finishing_set() const;

  /// Canonical positive word (insertion sort on final positions).
  BraidWord to_word() const;

  friend bool operator==(const PermutationBraid&, const PermutationBraid&) = default;

 private:
  Permutation perm_;
};

struct GarsideNormalForm {
  int strand_count = 1;
  long delta_power = 0;
  std::vector<PermutationBraid> factors;

  /// Delta^p A_1 ... A_k as a braid word.
  BraidWord to_word() const;
  std::string to_string() const;

  friend bool operator==(const GarsideNormalForm&, const GarsideNormalForm&) = default;
};

/// True iff the pair (a, b) is left-weighted: S(b) is contained in F(a).
bool left_weighted(const PermutationBraid& a, const PermutationBraid& b);

/// Throws RangeError for n < 2.
GarsideNormalForm normal_form(const BraidWord& w);

/// Throws RangeError on strand-count mismatch.
bool equal_Bn(const BraidWord& w, const BraidWord& v);

/// Normal form of x w x^-1, x the half twist.
GarsideNormalForm conjugate_by_half_twist(const BraidWord& w);

}  // namespace spherebraid
