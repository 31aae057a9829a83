// Finite presentations, bounded coset enumeration and small-group tools.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "spherebraid/budget.hpp"
#include "spherebraid/certificate.hpp"

namespace spherebraid {

/// Generators are 1..generator_count; relator letter k means g_|k|^sign(k).
struct FinitePresentation {
  std::string name;
  int generator_count = 1;
  std::vector<std::vector<int>> relators;

  /// Throws RangeError on malformed input.
  void validate() const;
};

enum class PresentationName { sphere_braid, q8, dicyclic };

std::optional<PresentationName> parse_presentation_name(std::string_view text);
std::string_view to_string(PresentationName name);

/// sphere_braid(n): sigma_1..sigma_{n-1}, commutations, braid relations and
/// the surface relator (n >= 2). q8: <a,b | a^4, a^2 b^-2, b^-1 a b a>.
/// dicyclic(n): <a,b | a^2n, a^n b^-2, b^-1 a b a> (n >= 2).
FinitePresentation presentation_library(PresentationName name, int n = 0);

class CayleyTable {
 public:
  CayleyTable() = default;
  /// Throws RangeError unless rows and columns are permutations and 0 is
  /// the identity.
  CayleyTable(int order, std::vector<int> table, std::vector<int> generator_images);

  int order() const { return order_; }
  int multiply(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  int inverse(int a) const;
  int element_order(int a) const;
  const std::vector<int>& table() const { return table_; }
  /// Element index of each presentation generator.
  const std::vector<int>& generator_images() const { return generator_images_; }
  /// Element represented by a word in the presentation generators.
  int evaluate(const std::vector<int>& word) const;
  bool is_abelian() const;
  /// Exhaustive check; O(order^3).
  bool is_associative() const;
  Json to_json() const;

 private:
  int order_ = 1;
  std::vector<int> table_{0};
  std::vector<int> generator_images_;
};

struct Overflow {
  int live_cosets = 0;
};

enum class EnumerationStrategy { hlt, felsch };

/// Enumerates cosets of the trivial subgroup. Returns Overflow when more
/// than max_cosets cosets would be live at once.
std::variant<CayleyTable, Overflow> todd_coxeter(const FinitePresentation& p, int max_cosets,
                                                 EnumerationStrategy strategy = EnumerationStrategy::hlt);

/// Element orders, ascending.
std::vector<int> order_spectrum(const CayleyTable& t);
int involution_count(const CayleyTable& t);

/// Subgroup generated by all commutators, as a sorted list of elements.
std::vector<int> derived_subgroup(const CayleyTable& t);
/// True iff some element of the subset has order equal to the subset size.
bool is_cyclic_subset(const CayleyTable& t, const std::vector<int>& subset);

enum class Order8Type { Q8, D4, Z8, Z4xZ2, Z2cubed };
std::string_view to_string(Order8Type type);

/// Throws RangeError unless t.order() == 8.
Order8Type iso_type_order8(const CayleyTable& t);

/// Whether every relator evaluates to the identity.
bool satisfies_relators(const CayleyTable& t, const FinitePresentation& p);

}  // namespace spherebraid
