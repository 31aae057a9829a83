#include "spherebraid/garside.hpp"

#include <cstdlib>
#include <sstream>
#include <utility>

namespace spherebraid {

namespace {

// Raw image vectors, 1-based values; the hot loops avoid re-validating.
using Images = std::vector<int>;

bool in_finishing_set(const Images& inverse_images, int i) {
  return inverse_images[i - 1] > inverse_images[i];
}

bool in_starting_set(const Images& images, int i) { return images[i - 1] > images[i]; }

Images inverse_of(const Images& images) {
  Images inv(images.size());
  for (std::size_t j = 0; j < images.size(); ++j) inv[images[j] - 1] = static_cast<int>(j) + 1;
  return inv;
}

// Moves the largest possible simple prefix of `right` into `left`.
// Returns true if anything moved.
bool make_left_weighted(Images& left, Images& right) {
  const int n = static_cast<int>(left.size());
  Images left_inv = inverse_of(left);
  bool changed = false;
  for (;;) {
    int pick = 0;
    for (int i = 1; i <= n - 1; ++i) {
      if (in_starting_set(right, i) && !in_finishing_set(left_inv, i)) {
        pick = i;
        break;
      }
    }
    if (pick == 0) return changed;
    changed = true;
    // left <- left * sigma_pick : swap the values pick and pick+1
    const int a = left_inv[pick - 1];
    const int b = left_inv[pick];
    std::swap(left[a - 1], left[b - 1]);
    std::swap(left_inv[pick - 1], left_inv[pick]);
    // right <- sigma_pick^-1 * right : swap entries at positions pick, pick+1
    std::swap(right[pick - 1], right[pick]);
  }
}

bool is_identity(const Images& images) {
  for (std::size_t j = 0; j < images.size(); ++j) {
    if (images[j] != static_cast<int>(j) + 1) return false;
  }
  return true;
}

bool is_reversal(const Images& images) {
  const int n = static_cast<int>(images.size());
  for (int j = 0; j < n; ++j) {
    if (images[j] != n - j) return false;
  }
  return true;
}

Images tau(const Images& images) {
  const int n = static_cast<int>(images.size());
  Images result(n);
  for (int i = 1; i <= n; ++i) result[n - i] = n + 1 - images[i - 1];
  return result;
}

// Appends a simple factor to a left-weighted sequence and restores
// left-weightedness by sweeping leftwards.
void append_simple(std::vector<Images>& factors, Images simple) {
  factors.push_back(std::move(simple));
  for (std::size_t j = factors.size() - 1; j > 0; --j) {
    if (!make_left_weighted(factors[j - 1], factors[j])) break;
  }
  if (is_identity(factors.back())) factors.pop_back();
}

}  // namespace

PermutationBraid PermutationBraid::generator(int i, int n) {
  if (i < 1 || i > n - 1) throw RangeError("generator index out of range");
  Images images(n);
  for (int j = 0; j < n; ++j) images[j] = j + 1;
  std::swap(images[i - 1], images[i]);
  return PermutationBraid(Permutation(std::move(images)));
}

bool PermutationBraid::is_delta() const { return is_reversal(perm_.images()); }

std::vector<int> PermutationBraid::starting_set() const {
  std::vector<int> result;
  for (int i = 1; i < strand_count(); ++i) {
    if (in_starting_set(perm_.images(), i)) result.push_back(i);
  }
  return result;
}

std::vector<int> PermutationBraid::finishing_set() const {
  const Images inv = inverse_of(perm_.images());
  std::vector<int> result;
  for (int i = 1; i < strand_count(); ++i) {
    if (in_finishing_set(inv, i)) result.push_back(i);
  }
  return result;
}

BraidWord PermutationBraid::to_word() const {
  const int n = strand_count();
  const Images& target = perm_.images();
  Images occupant(n);
  for (int p = 0; p < n; ++p) occupant[p] = p + 1;
  std::vector<int> letters;
  for (int k = 1; k < n; ++k) {
    for (int p = k; p > 0 && target[occupant[p - 1] - 1] > target[occupant[p] - 1]; --p) {
      std::swap(occupant[p - 1], occupant[p]);
      letters.push_back(p);
    }
  }
  return BraidWord(n, std::move(letters));
}

bool left_weighted(const PermutationBraid& a, const PermutationBraid& b) {
  const Images a_inv = inverse_of(a.permutation().images());
  for (int i = 1; i < b.strand_count(); ++i) {
    if (in_starting_set(b.permutation().images(), i) && !in_finishing_set(a_inv, i)) return false;
  }
  return true;
}

BraidWord GarsideNormalForm::to_word() const {
  const int n = strand_count;
  const BraidWord delta = PermutationBraid::delta(n).to_word();
  BraidWord result = delta.pow(static_cast<int>(delta_power));
  for (const auto& factor : factors) result = result * factor.to_word();
  return result;
}

std::string GarsideNormalForm::to_string() const {
  std::ostringstream out;
  out << "(Delta^" << delta_power << ", [";
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k) out << ", ";
    out << '[' << format_letters(factors[k].permutation().images()) << ']';
  }
  out << "])";
  return out.str();
}

GarsideNormalForm normal_form(const BraidWord& w) {
  const int n = w.strand_count();
  if (n < 2) throw RangeError("normal form needs n >= 2");
  const auto& letters = w.letters();

  // w = Delta^-N * prod tau^{c_j}(s_j), with s_j = sigma_i for positive
  // letters, s_j = Delta sigma_i^-1 for negative ones, and c_j the number
  // of negative letters to the right of position j.
  std::vector<Images> simples(letters.size());
  int negatives_to_right = 0;
  for (std::size_t idx = letters.size(); idx-- > 0;) {
    const int k = letters[idx];
    const int i = std::abs(k);
    Images s(n);
    if (k > 0) {
      for (int j = 0; j < n; ++j) s[j] = j + 1;
      std::swap(s[i - 1], s[i]);
    } else {
      for (int j = 0; j < n; ++j) {
        const int v = n - j;
        s[j] = v == i ? i + 1 : v == i + 1 ? i : v;
      }
    }
    if (negatives_to_right % 2 == 1) s = tau(s);
    simples[idx] = std::move(s);
    if (k < 0) ++negatives_to_right;
  }

  std::vector<Images> factors;
  factors.reserve(letters.size());
  for (auto& s : simples) append_simple(factors, std::move(s));

  GarsideNormalForm nf;
  nf.strand_count = n;
  nf.delta_power = -negatives_to_right;
  std::size_t first = 0;
  while (first < factors.size() && is_reversal(factors[first])) ++first;
  nf.delta_power += static_cast<long>(first);
  while (!factors.empty() && is_identity(factors.back())) factors.pop_back();
  for (std::size_t j = first; j < factors.size(); ++j) {
    nf.factors.emplace_back(Permutation(std::move(factors[j])));
  }
  return nf;
}

bool equal_Bn(const BraidWord& w, const BraidWord& v) {
  if (w.strand_count() != v.strand_count()) throw RangeError("strand-count mismatch");
  return normal_form(w) == normal_form(v);
}

GarsideNormalForm conjugate_by_half_twist(const BraidWord& w) {
  const BraidWord x = named_element(NamedElement::half_twist, w.strand_count());
  return normal_form(conjugate(x, w));
}

}  // namespace spherebraid
