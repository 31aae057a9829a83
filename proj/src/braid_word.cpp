#include "spherebraid/braid_word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <charconv>
#include <numeric>
#include <sstream>

namespace spherebraid {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v]) {
      throw RangeError("permutation images must be a bijection on {1,...,n}");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::reversal(int n) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = n - i;
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if (images_[i] != i + 1) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[images_[i] - 1] = i + 1;
  Permutation result;
  result.images_ = std::move(inv);
  return result;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.size() != size()) throw RangeError("permutation size mismatch");
  Permutation result;
  result.images_.resize(images_.size());
  for (int i = 0; i < size(); ++i) result.images_[i] = next.images_[images_[i] - 1];
  return result;
}

Permutation Permutation::reversed_conjugate() const {
  const int n = size();
  Permutation result;
  result.images_.resize(n);
  for (int i = 1; i <= n; ++i) result.images_[n - i] = n + 1 - images_[i - 1];
  return result;
}

int Permutation::inversion_count() const {
  int count = 0;
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) {
      if (images_[i] > images_[j]) ++count;
    }
  }
  return count;
}

int Permutation::order() const {
  // lcm of cycle lengths
  const int n = size();
  std::vector<bool> visited(n, false);
  int result = 1;
  for (int i = 0; i < n; ++i) {
    if (visited[i]) continue;
    int length = 0;
    for (int j = i; !visited[j]; j = images_[j] - 1) {
      visited[j] = true;
      ++length;
    }
    result = std::lcm(result, length);
  }
  return result;
}

Residue Residue::of(std::int64_t integer, std::int64_t modulus) {
  std::int64_t v = integer % modulus;
  if (v < 0) v += modulus;
  return Residue{v, modulus};
}

std::string Residue::to_string() const {
  return std::to_string(value) + " mod " + std::to_string(modulus);
}

BraidWord::BraidWord(int strand_count, std::vector<int> letters)
    : strand_count_(strand_count), letters_(std::move(letters)) {
  if (strand_count_ < 1) throw RangeError("strand count must be at least 1");
  for (int k : letters_) {
    if (k == 0 || std::abs(k) > strand_count_ - 1) {
      throw RangeError("letter " + std::to_string(k) + " out of range for " +
                       std::to_string(strand_count_) + " strands");
    }
  }
}

BraidWord BraidWord::inverse() const {
  BraidWord result;
  result.strand_count_ = strand_count_;
  result.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) result.letters_.push_back(-*it);
  return result;
}

BraidWord BraidWord::pow(int exponent) const {
  const BraidWord base = exponent < 0 ? inverse() : *this;
  BraidWord result;
  result.strand_count_ = strand_count_;
  const int times = std::abs(exponent);
  result.letters_.reserve(base.letters_.size() * times);
  for (int t = 0; t < times; ++t) {
    result.letters_.insert(result.letters_.end(), base.letters_.begin(), base.letters_.end());
  }
  return result;
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
  if (rhs.strand_count_ != strand_count_) throw RangeError("strand count mismatch");
  BraidWord result = *this;
  result.letters_.insert(result.letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return result;
}

BraidWord conjugate(const BraidWord& by, const BraidWord& w) { return by * w * by.inverse(); }

std::int64_t exponent_sum(const BraidWord& w) {
  std::int64_t sum = 0;
  for (int k : w.letters()) sum += k > 0 ? 1 : -1;
  return sum;
}

Residue xi(const BraidWord& w) {
  if (w.strand_count() < 2) throw RangeError("xi needs n >= 2 (modulus 2(n-1) is undefined)");
  return Residue::of(exponent_sum(w), 2 * (w.strand_count() - 1));
}

Permutation permutation(const BraidWord& w) {
  const int n = w.strand_count();
  // occupant[p] = strand currently at position p (0-based)
  std::vector<int> occupant(n);
  std::iota(occupant.begin(), occupant.end(), 1);
  for (int k : w.letters()) {
    const int i = std::abs(k);
    std::swap(occupant[i - 1], occupant[i]);
  }
  std::vector<int> images(n);
  for (int p = 0; p < n; ++p) images[occupant[p] - 1] = p + 1;
  return Permutation(std::move(images));
}

BraidWord mirror(const BraidWord& w) {
  const int n = w.strand_count();
  std::vector<int> letters;
  letters.reserve(w.size());
  for (int k : w.letters()) letters.push_back(k > 0 ? n - k : -(n + k));
  return BraidWord(n, std::move(letters));
}

namespace {

constexpr std::pair<NamedElement, std::string_view> kNames[] = {
    {NamedElement::alpha0, "alpha0"},
    {NamedElement::alpha1, "alpha1"},
    {NamedElement::alpha2, "alpha2"},
    {NamedElement::full_twist, "full_twist"},
    {NamedElement::half_twist, "half_twist"},
    {NamedElement::bipolar_twist, "bipolar_twist"},
    {NamedElement::surface_relator, "surface_relator"},
};

void append_range(std::vector<int>& out, int from, int to) {
  for (int i = from; i <= to; ++i) out.push_back(i);
}

}  // namespace

std::string_view to_string(NamedElement name) {
  for (auto [value, text] : kNames) {
    if (value == name) return text;
  }
  return "unknown";
}

NamedElement parse_named_element(std::string_view name) {
  for (auto [value, text] : kNames) {
    if (text == name) return value;
  }
  throw RangeError("unknown named element '" + std::string(name) + "'");
}

BraidWord named_element(NamedElement name, int n) {
  const std::string label(to_string(name));
  if (n < 2) throw RangeError(label + " needs n >= 2");
  std::vector<int> letters;
  switch (name) {
    case NamedElement::alpha0:
      append_range(letters, 1, n - 1);
      break;
    case NamedElement::alpha1:
      append_range(letters, 1, n - 2);
      letters.push_back(n - 1);
      letters.push_back(n - 1);
      break;
    case NamedElement::alpha2:
      if (n < 3) throw RangeError("alpha2 needs n >= 3");
      append_range(letters, 1, n - 3);
      letters.push_back(n - 2);
      letters.push_back(n - 2);
      break;
    case NamedElement::full_twist:
      for (int t = 0; t < n; ++t) append_range(letters, 1, n - 1);
      break;
    case NamedElement::half_twist:
      for (int top = n - 1; top >= 1; --top) append_range(letters, 1, top);
      break;
    case NamedElement::bipolar_twist: {
      if (n < 4 || n % 2 != 0) throw RangeError("bipolar_twist needs n even and n >= 4");
      const int m = n / 2;
      for (int top = m - 1; top >= 1; --top) append_range(letters, 1, top);
      // s_{2m-1}^-1 (s_{2m-2}^-1 s_{2m-1}^-1) ... (s_{m+1}^-1 ... s_{2m-1}^-1)
      for (int bottom = 2 * m - 1; bottom >= m + 1; --bottom) {
        for (int i = bottom; i <= 2 * m - 1; ++i) letters.push_back(-i);
      }
      break;
    }
    case NamedElement::surface_relator:
      append_range(letters, 1, n - 2);
      letters.push_back(n - 1);
      letters.push_back(n - 1);
      for (int i = n - 2; i >= 1; --i) letters.push_back(i);
      break;
  }
  return BraidWord(n, std::move(letters));
}

BraidWord parse_word(std::string_view text, int n) {
  if (n < 1) throw RangeError("strand count must be at least 1");
  std::vector<int> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    const std::string_view token = text.substr(pos, end - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw RangeError("malformed token '" + std::string(token) + "'");
    }
    if (value == 0 || std::abs(value) > n - 1) {
      throw RangeError("token '" + std::string(token) + "' out of range: generator index must be in [1, " +
                       std::to_string(n - 1) + "]");
    }
    letters.push_back(value);
    pos = end;
  }
  return BraidWord(n, std::move(letters));
}

std::string format_letters(std::span<const int> letters) {
  std::ostringstream out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out << ' ';
    out << letters[i];
  }
  return out.str();
}

std::string format_word(const BraidWord& w) { return format_letters(w.letters()); }

}  // namespace spherebraid
