#include "spherebraid/free_group.hpp"

#include <cassert>
#include <cstdlib>
#include <numeric>

namespace spherebraid {

namespace {

void check_letter(int k, int rank) {
  if (k == 0 || std::abs(k) > rank) {
    throw RangeError("free-group letter " + std::to_string(k) + " out of range for rank " +
                     std::to_string(rank));
  }
}

// Pushes onto an already reduced stack, cancelling against its top.
inline void push_reduced(std::vector<int>& stack, int k) {
  if (!stack.empty() && stack.back() == -k) {
    stack.pop_back();
  } else {
    stack.push_back(k);
  }
}

[[maybe_unused]] bool is_reduced(const std::vector<int>& letters) {
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (letters[i] == -letters[i - 1]) return false;
  }
  return true;
}

}  // namespace

FreeWord FreeWord::reduce(std::span<const int> letters, int rank) {
  if (rank < 1) throw RangeError("free-group rank must be at least 1");
  FreeWord result(rank);
  result.letters_.reserve(letters.size());
  for (int k : letters) {
    check_letter(k, rank);
    push_reduced(result.letters_, k);
  }
  return result;
}

FreeWord reduce(std::span<const int> letters, int rank) { return FreeWord::reduce(letters, rank); }

FreeWord FreeWord::generator(int index, int rank) {
  const int letter[] = {index};
  return reduce(letter, rank);
}

FreeWord FreeWord::inverse() const {
  FreeWord result(rank_);
  result.letters_.assign(letters_.rbegin(), letters_.rend());
  for (int& k : result.letters_) k = -k;
  return result;
}

FreeWord FreeWord::operator*(const FreeWord& rhs) const {
  if (rhs.rank_ != rank_) throw RangeError("free-group rank mismatch");
  FreeWord result = *this;
  for (int k : rhs.letters_) push_reduced(result.letters_, k);
  return result;
}

std::string FreeWord::to_string() const { return format_letters(letters_); }

EndoOnBasis::EndoOnBasis(std::vector<FreeWord> images) : images_(std::move(images)) {
  for (const auto& image : images_) {
    if (image.rank() != rank()) throw RangeError("endomorphism image has wrong rank");
  }
}

EndoOnBasis EndoOnBasis::identity(int rank) {
  std::vector<FreeWord> images;
  images.reserve(rank);
  for (int g = 1; g <= rank; ++g) images.push_back(FreeWord::generator(g, rank));
  return EndoOnBasis(std::move(images));
}

bool EndoOnBasis::is_identity() const {
  for (int g = 1; g <= rank(); ++g) {
    const auto& letters = images_[g - 1].letters();
    if (letters.size() != 1 || letters[0] != g) return false;
  }
  return true;
}

std::size_t EndoOnBasis::total_length() const {
  return std::accumulate(images_.begin(), images_.end(), std::size_t{0},
                         [](std::size_t acc, const FreeWord& w) { return acc + w.size(); });
}

FreeWord apply_endo(const EndoOnBasis& e, const FreeWord& w, const Budget& budget) {
  if (e.rank() != w.rank()) throw RangeError("rank mismatch between endomorphism and word");
  FreeWord result(w.rank());
  std::vector<int> stack;
  for (int k : w.letters()) {
    const auto& image = e.image(std::abs(k)).letters();
    if (k > 0) {
      for (int a : image) push_reduced(stack, a);
    } else {
      for (auto it = image.rbegin(); it != image.rend(); ++it) push_reduced(stack, -*it);
    }
    if (stack.size() > budget.max_endo_letters) {
      throw ResourceExhausted("free-group image exceeds " + std::to_string(budget.max_endo_letters) +
                              " letters");
    }
  }
  assert(is_reduced(stack));
  result = FreeWord::reduce(stack, w.rank());
  return result;
}

EndoOnBasis compose_endo(const EndoOnBasis& first, const EndoOnBasis& second, const Budget& budget) {
  if (first.rank() != second.rank()) throw RangeError("rank mismatch in composition");
  std::vector<FreeWord> images;
  images.reserve(first.rank());
  std::size_t total = 0;
  for (const auto& image : first.images()) {
    images.push_back(apply_endo(second, image, budget));
    total += images.back().size();
    if (total > budget.max_endo_letters) {
      throw ResourceExhausted("endomorphism images exceed " + std::to_string(budget.max_endo_letters) +
                              " letters");
    }
  }
  return EndoOnBasis(std::move(images));
}

EndoOnBasis artin_generator_endo(int letter, int n) {
  const int i = std::abs(letter);
  if (letter == 0 || i > n - 1) throw RangeError("braid letter out of range for the Artin action");
  std::vector<FreeWord> images = EndoOnBasis::identity(n).images();
  if (letter > 0) {
    const int xi_image[] = {i, i + 1, -i};
    images[i - 1] = reduce(xi_image, n);
    images[i] = FreeWord::generator(i, n);
  } else {
    const int next_image[] = {-(i + 1), i, i + 1};
    images[i - 1] = FreeWord::generator(i + 1, n);
    images[i] = reduce(next_image, n);
  }
  return EndoOnBasis(std::move(images));
}

EndoOnBasis artin_disk_endo(const BraidWord& w, const Budget& budget) {
  const int n = w.strand_count();
  EndoOnBasis result = EndoOnBasis::identity(n);
  for (int k : w.letters()) result = compose_endo(result, artin_generator_endo(k, n), budget);
  return result;
}

bool eq_Bn(const BraidWord& w, const BraidWord& v, const Budget& budget) {
  if (w.strand_count() != v.strand_count()) throw RangeError("strand-count mismatch");
  // The action is a homomorphism into the endomorphism monoid, so
  // w v^-1 acts trivially exactly when w and v act identically; comparing
  // the two sides keeps intermediate images short.
  return artin_disk_endo(w, budget) == artin_disk_endo(v, budget);
}

}  // namespace spherebraid
