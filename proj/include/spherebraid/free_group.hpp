// Free groups and the Artin action of B_n on them.
#pragma once

#include <span>
#include <string>
#include <vector>

#include "spherebraid/braid_word.hpp"
#include "spherebraid/budget.hpp"

namespace spherebraid {

/// A freely reduced word in x_1..x_rank; letter k means x_|k|^sign(k).
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(int rank) : rank_(rank) {}

  /// Free reduction of a raw letter list. Throws RangeError for letters
  /// outside [-rank, rank] or equal to 0.
  static FreeWord reduce(std::span<const int> letters, int rank);
  static FreeWord generator(int index, int rank);

  int rank() const { return rank_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  FreeWord inverse() const;
  /// Concatenation followed by free reduction.
  FreeWord operator*(const FreeWord& rhs) const;
  std::string to_string() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  int rank_ = 1;
  std::vector<int> letters_;
};

FreeWord reduce(std::span<const int> letters, int rank);

/// An endomorphism of the free group of rank r given by the images of x_1..x_r.
class EndoOnBasis {
 public:
  EndoOnBasis() = default;
  /// Throws RangeError when an image has the wrong rank.
  explicit EndoOnBasis(std::vector<FreeWord> images);

  static EndoOnBasis identity(int rank);

  int rank() const { return static_cast<int>(images_.size()); }
  const std::vector<FreeWord>& images() const { return images_; }
  const FreeWord& image(int generator) const { return images_[generator - 1]; }
  bool is_identity() const;
  std::size_t total_length() const;

  friend bool operator==(const EndoOnBasis&, const EndoOnBasis&) = default;

 private:
  std::vector<FreeWord> images_;
};

/// Substitutes images (inverse letters take the inverted image) and reduces.
/// Throws ResourceExhausted if the result would exceed the letter budget.
FreeWord apply_endo(const EndoOnBasis& e, const FreeWord& w, const Budget& budget = {});

/// g -> apply_endo(second, first(g)): `first` acts first, as in word order.
EndoOnBasis compose_endo(const EndoOnBasis& first, const EndoOnBasis& second,
                         const Budget& budget = {});

/// Action of a single letter sigma_i^{+-1} on the rank-n free group:
///   sigma_i:    x_i -> x_i x_{i+1} x_i^-1,  x_{i+1} -> x_i
///   sigma_i^-1: x_i -> x_{i+1},             x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
EndoOnBasis artin_generator_endo(int letter, int n);

/// Composition over the letters of w of the generator actions.
EndoOnBasis artin_disk_endo(const BraidWord& w, const Budget& budget = {});

/// Equality in B_n through the Artin action: true iff w v^-1 acts trivially.
/// Throws RangeError on strand-count mismatch.
bool eq_Bn(const BraidWord& w, const BraidWord& v, const Budget& budget = {});

}  // namespace spherebraid
