// Braid words over n strands and their cheap invariants.
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spherebraid {

/// Raised when a named construction or operation is used outside its range.
class RangeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A permutation of {1,...,n}; images[i-1] is the image of strand i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// i -> n+1-i
  static Permutation reversal(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int strand) const { return images_[strand - 1]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// Left-to-right product: apply *this first, then `next`.
  Permutation then(const Permutation& next) const;
  /// Conjugate by the full reversal: i -> n+1-i on both sides.
  Permutation reversed_conjugate() const;
  /// Number of inversions, i.e. the length of the permutation braid.
  int inversion_count() const;
  /// Smallest k >= 1 with this^k = identity.
  int order() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// ξ(w): an element of Z/2(n-1).
struct Residue {
  std::int64_t value = 0;
  std::int64_t modulus = 1;

  static Residue of(std::int64_t integer, std::int64_t modulus);
  bool is_zero() const { return value == 0; }
  std::string to_string() const;
  friend bool operator==(const Residue&, const Residue&) = default;
};

class BraidWord {
 public:
  BraidWord() = default;
  /// Throws RangeError if n < 1 or any letter is 0 or has |k| > n-1.
  BraidWord(int strand_count, std::vector<int> letters);

  int strand_count() const { return strand_count_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Formal inverse: reversed, signs flipped. No cancellation.
  BraidWord inverse() const;
  BraidWord pow(int exponent) const;
  BraidWord operator*(const BraidWord& rhs) const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strand_count_ = 1;
  std::vector<int> letters_;
};

/// Conjugate of `w` by `by`: by * w * by^-1 (letter-level concatenation).
BraidWord conjugate(const BraidWord& by, const BraidWord& w);

std::int64_t exponent_sum(const BraidWord& w);
/// Exponent sum modulo 2(n-1). Throws RangeError for n = 1.
Residue xi(const BraidWord& w);
/// Image in the symmetric group; the leftmost letter acts first.
Permutation permutation(const BraidWord& w);
/// sigma_i^s -> sigma_{n-i}^s, order preserved.
BraidWord mirror(const BraidWord& w);

enum class NamedElement {
  alpha0,
  alpha1,
  alpha2,
  full_twist,
  half_twist,
  bipolar_twist,
  surface_relator,
};

std::string_view to_string(NamedElement name);
/// Throws RangeError for unknown names.
NamedElement parse_named_element(std::string_view name);

/// The literal words used throughout: alpha_i, the full and half twists,
/// the bipolar twist y (n = 2m) and the surface relator.
BraidWord named_element(NamedElement name, int n);

/// Whitespace-separated signed integers: "1 2 -3" = s1 s2 s3^-1.
/// Throws RangeError naming the offending token.
BraidWord parse_word(std::string_view text, int n);
std::string format_word(const BraidWord& w);
std::string format_letters(std::span<const int> letters);

}  // namespace spherebraid
