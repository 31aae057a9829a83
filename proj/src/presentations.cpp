#include "spherebraid/presentations.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>

#include "spherebraid/braid_word.hpp"

namespace spherebraid {

void FinitePresentation::validate() const {
  if (generator_count < 1) throw RangeError("presentation needs at least one generator");
  for (const auto& relator : relators) {
    for (int k : relator) {
      if (k == 0 || std::abs(k) > generator_count) {
        throw RangeError("relator letter " + std::to_string(k) + " outside the generator range");
      }
    }
  }
}

std::optional<PresentationName> parse_presentation_name(std::string_view text) {
  if (text == "sphere_braid") return PresentationName::sphere_braid;
  if (text == "q8") return PresentationName::q8;
  if (text == "dicyclic") return PresentationName::dicyclic;
  return std::nullopt;
}

std::string_view to_string(PresentationName name) {
  switch (name) {
    case PresentationName::sphere_braid: return "sphere_braid";
    case PresentationName::q8: return "q8";
    case PresentationName::dicyclic: return "dicyclic";
  }
  return "unknown";
}

FinitePresentation presentation_library(PresentationName name, int n) {
  FinitePresentation p;
  switch (name) {
    case PresentationName::sphere_braid: {
      if (n < 2) throw RangeError("sphere_braid presentation needs n >= 2");
      p.name = "sphere_braid(" + std::to_string(n) + ")";
      p.generator_count = n - 1;
      for (int i = 1; i <= n - 1; ++i) {
        for (int j = i + 2; j <= n - 1; ++j) p.relators.push_back({i, j, -i, -j});
      }
      for (int i = 1; i <= n - 2; ++i) p.relators.push_back({i, i + 1, i, -(i + 1), -i, -(i + 1)});
      p.relators.push_back(named_element(NamedElement::surface_relator, n).letters());
      break;
    }
    case PresentationName::q8:
      p.name = "q8";
      p.generator_count = 2;
      p.relators = {{1, 1, 1, 1}, {1, 1, -2, -2}, {-2, 1, 2, 1}};
      break;
    case PresentationName::dicyclic: {
      if (n < 2) throw RangeError("dicyclic presentation needs n >= 2");
      p.name = "dicyclic(" + std::to_string(n) + ")";
      p.generator_count = 2;
      std::vector<int> power(2 * n, 1);
      std::vector<int> half(n, 1);
      half.push_back(-2);
      half.push_back(-2);
      p.relators = {power, half, {-2, 1, 2, 1}};
      break;
    }
  }
  return p;
}

CayleyTable::CayleyTable(int order, std::vector<int> table, std::vector<int> generator_images)
    : order_(order), table_(std::move(table)), generator_images_(std::move(generator_images)) {
  if (order_ < 1 || table_.size() != static_cast<std::size_t>(order_) * order_) {
    throw RangeError("Cayley table has the wrong shape");
  }
  for (int a = 0; a < order_; ++a) {
    std::vector<bool> row(order_, false);
    std::vector<bool> column(order_, false);
    for (int b = 0; b < order_; ++b) {
      const int r = multiply(a, b);
      const int c = multiply(b, a);
      if (r < 0 || r >= order_ || row[r] || c < 0 || c >= order_ || column[c]) {
        throw RangeError("Cayley table row or column is not a permutation");
      }
      row[r] = column[c] = true;
    }
    if (multiply(0, a) != a || multiply(a, 0) != a) throw RangeError("element 0 is not the identity");
  }
  for (int g : generator_images_) {
    if (g < 0 || g >= order_) throw RangeError("generator image out of range");
  }
}

int CayleyTable::inverse(int a) const {
  for (int b = 0; b < order_; ++b) {
    if (multiply(a, b) == 0) return b;
  }
  return -1;  // unreachable for a valid table
}

int CayleyTable::element_order(int a) const {
  int k = 1;
  for (int power = a; power != 0; power = multiply(power, a)) ++k;
  return k;
}

int CayleyTable::evaluate(const std::vector<int>& word) const {
  int element = 0;
  for (int k : word) {
    const int g = generator_images_.at(std::abs(k) - 1);
    element = multiply(element, k > 0 ? g : inverse(g));
  }
  return element;
}

bool CayleyTable::is_abelian() const {
  for (int a = 0; a < order_; ++a) {
    for (int b = a + 1; b < order_; ++b) {
      if (multiply(a, b) != multiply(b, a)) return false;
    }
  }
  return true;
}

bool CayleyTable::is_associative() const {
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      const int ab = multiply(a, b);
      for (int c = 0; c < order_; ++c) {
        if (multiply(ab, c) != multiply(a, multiply(b, c))) return false;
      }
    }
  }
  return true;
}

Json CayleyTable::to_json() const {
  return Json{{"order", order_}, {"table", table_}, {"generator_images", generator_images_}};
}

namespace {

// Coset enumeration over the trivial subgroup, following the HLT and
// Felsch procedures with a union-find coincidence queue.
class CosetEnumerator {
 public:
  CosetEnumerator(const FinitePresentation& p, int max_cosets)
      : width_(2 * p.generator_count), cap_(max_cosets) {
    for (const auto& relator : p.relators) {
      if (relator.empty()) continue;
      std::vector<int> columns;
      columns.reserve(relator.size());
      for (int k : relator) columns.push_back(column(k));
      relators_.push_back(columns);
    }
    // every cyclic conjugate of every relator and its inverse, by first letter
    rotations_.resize(width_);
    std::set<std::vector<int>> seen;
    for (const auto& r : relators_) {
      std::vector<int> inv(r.rbegin(), r.rend());
      for (int& c : inv) c ^= 1;
      const std::vector<int>* words[] = {&r, &inv};
      for (const auto* word : words) {
        for (std::size_t t = 0; t < word->size(); ++t) {
          std::vector<int> rot(word->begin() + static_cast<std::ptrdiff_t>(t), word->end());
          rot.insert(rot.end(), word->begin(), word->begin() + static_cast<std::ptrdiff_t>(t));
          if (seen.insert(rot).second) rotations_[rot.front()].push_back(rot);
        }
      }
    }
    add_row();
  }

  bool run(EnumerationStrategy strategy) {
    if (strategy == EnumerationStrategy::hlt) {
      for (int a = 0; a < rows() && !overflow_; ++a) {
        for (const auto& r : relators_) {
          if (!alive(a)) break;
          scan_and_fill(a, r);
          process_deductions();
          if (overflow_) return false;
        }
        for (int x = 0; x < width_ && alive(a); ++x) {
          if (entry(a, x) < 0) {
            define(a, x);
            process_deductions();
          }
        }
      }
    } else {
      for (int a = 0; a < rows() && !overflow_; ++a) {
        for (int x = 0; x < width_ && alive(a); ++x) {
          if (entry(a, x) < 0) {
            define(a, x);
            process_deductions();
          }
        }
      }
    }
    return !overflow_;
  }

  int live() const { return live_; }

  CayleyTable to_cayley_table() const {
    std::vector<int> index(rows(), -1);
    int order = 0;
    for (int c = 0; c < rows(); ++c) {
      if (alive(c)) index[c] = order++;
    }
    std::vector<int> compact(static_cast<std::size_t>(order) * width_);
    for (int c = 0; c < rows(); ++c) {
      if (!alive(c)) continue;
      for (int x = 0; x < width_; ++x) {
        compact[static_cast<std::size_t>(index[c]) * width_ + x] = index[find_const(entry(c, x))];
      }
    }
    // spanning-tree words for each element
    std::vector<std::vector<int>> words(order);
    std::vector<bool> reached(order, false);
    std::deque<int> queue{0};
    reached[0] = true;
    while (!queue.empty()) {
      const int c = queue.front();
      queue.pop_front();
      for (int x = 0; x < width_; ++x) {
        const int d = compact[static_cast<std::size_t>(c) * width_ + x];
        if (!reached[d]) {
          reached[d] = true;
          words[d] = words[c];
          words[d].push_back(x);
          queue.push_back(d);
        }
      }
    }
    std::vector<int> table(static_cast<std::size_t>(order) * order);
    for (int a = 0; a < order; ++a) {
      for (int b = 0; b < order; ++b) {
        int c = a;
        for (int x : words[b]) c = compact[static_cast<std::size_t>(c) * width_ + x];
        table[static_cast<std::size_t>(a) * order + b] = c;
      }
    }
    std::vector<int> generators;
    for (int x = 0; x < width_; x += 2) generators.push_back(compact[x]);
    return CayleyTable(order, std::move(table), std::move(generators));
  }

 private:
  static int column(int letter) { return 2 * (std::abs(letter) - 1) + (letter < 0 ? 1 : 0); }

  int rows() const { return static_cast<int>(parent_.size()); }
  bool alive(int c) const { return parent_[c] == c; }
  int& entry(int c, int x) { return table_[static_cast<std::size_t>(c) * width_ + x]; }
  int entry(int c, int x) const { return table_[static_cast<std::size_t>(c) * width_ + x]; }

  void add_row() {
    const int c = rows();
    parent_.push_back(c);
    table_.resize(table_.size() + width_, -1);
    ++live_;
  }

  // Dead rows are kept until the end; cap their number as well.
  bool define(int c, int x) {
    if (live_ >= cap_ || rows() >= 64 * cap_ + 64) {
      overflow_ = true;
      return false;
    }
    const int d = rows();
    add_row();
    entry(c, x) = d;
    entry(d, x ^ 1) = c;
    deductions_.emplace_back(c, x);
    return true;
  }

  int find(int c) {
    int root = c;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[c] != root) {
      const int next = parent_[c];
      parent_[c] = root;
      c = next;
    }
    return root;
  }

  int find_const(int c) const {
    while (parent_[c] != c) c = parent_[c];
    return c;
  }

  void merge(int a, int b, std::vector<int>& queue) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue.push_back(b);
    --live_;
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int dead = queue[i];
      for (int x = 0; x < width_; ++x) {
        const int target = entry(dead, x);
        if (target < 0) continue;
        entry(dead, x) = -1;
        if (entry(target, x ^ 1) == dead) entry(target, x ^ 1) = -1;
        const int mu = find(dead);
        const int nu = find(target);
        if (entry(mu, x) >= 0) {
          merge(nu, entry(mu, x), queue);
        } else if (entry(nu, x ^ 1) >= 0) {
          merge(mu, entry(nu, x ^ 1), queue);
        } else {
          entry(mu, x) = nu;
          entry(nu, x ^ 1) = mu;
          deductions_.emplace_back(mu, x);
        }
      }
    }
  }

  void scan_and_fill(int a, const std::vector<int>& word) {
    int f = a;
    int b = a;
    int i = 0;
    int j = static_cast<int>(word.size()) - 1;
    for (;;) {
      while (i <= j && entry(f, word[i]) >= 0) f = entry(f, word[i++]);
      if (i > j) {
        if (f != a) coincidence(f, a);
        return;
      }
      while (j >= i && entry(b, word[j] ^ 1) >= 0) b = entry(b, word[j--] ^ 1);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        entry(f, word[i]) = b;
        entry(b, word[i] ^ 1) = f;
        deductions_.emplace_back(f, word[i]);
        return;
      }
      if (!define(f, word[i])) return;
    }
  }

  void scan(int a, const std::vector<int>& word) {
    int f = a;
    int b = a;
    int i = 0;
    int j = static_cast<int>(word.size()) - 1;
    while (i <= j && entry(f, word[i]) >= 0) f = entry(f, word[i++]);
    if (i > j) {
      if (f != a) coincidence(f, a);
      return;
    }
    while (j >= i && entry(b, word[j] ^ 1) >= 0) b = entry(b, word[j--] ^ 1);
    if (j < i) {
      coincidence(f, b);
    } else if (i == j) {
      entry(f, word[i]) = b;
      entry(b, word[i] ^ 1) = f;
      deductions_.emplace_back(f, word[i]);
    }
  }

  void process_deductions() {
    while (!deductions_.empty() && !overflow_) {
      const auto [c, x] = deductions_.back();
      deductions_.pop_back();
      if (!alive(c)) continue;
      for (const auto& rot : rotations_[x]) {
        scan(c, rot);
        if (!alive(c)) break;
      }
      if (!alive(c)) continue;
      const int d = entry(c, x);
      if (d < 0 || !alive(d)) continue;
      for (const auto& rot : rotations_[x ^ 1]) {
        scan(d, rot);
        if (!alive(d)) break;
      }
    }
  }

  int width_;
  int cap_;
  int live_ = 0;
  bool overflow_ = false;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<std::vector<int>>> rotations_;
  std::vector<int> table_;
  std::vector<int> parent_;
  std::vector<std::pair<int, int>> deductions_;
};

}  // namespace

std::variant<CayleyTable, Overflow> todd_coxeter(const FinitePresentation& p, int max_cosets,
                                                 EnumerationStrategy strategy) {
  p.validate();
  if (max_cosets < 1) throw RangeError("max_cosets must be positive");
  CosetEnumerator enumerator(p, max_cosets);
  if (!enumerator.run(strategy)) return Overflow{enumerator.live()};
  return enumerator.to_cayley_table();
}

std::vector<int> order_spectrum(const CayleyTable& t) {
  std::vector<int> orders;
  orders.reserve(t.order());
  for (int a = 0; a < t.order(); ++a) orders.push_back(t.element_order(a));
  std::sort(orders.begin(), orders.end());
  return orders;
}

int involution_count(const CayleyTable& t) {
  const auto orders = order_spectrum(t);
  return static_cast<int>(std::count(orders.begin(), orders.end(), 2));
}

std::vector<int> derived_subgroup(const CayleyTable& t) {
  std::set<int> subgroup{0};
  for (int a = 0; a < t.order(); ++a) {
    for (int b = 0; b < t.order(); ++b) {
      subgroup.insert(t.multiply(t.multiply(t.inverse(a), t.inverse(b)), t.multiply(a, b)));
    }
  }
  // closure under products
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<int> current(subgroup.begin(), subgroup.end());
    for (int a : current) {
      for (int b : current) {
        if (subgroup.insert(t.multiply(a, b)).second) grew = true;
      }
    }
  }
  return {subgroup.begin(), subgroup.end()};
}

bool is_cyclic_subset(const CayleyTable& t, const std::vector<int>& subset) {
  const int size = static_cast<int>(subset.size());
  return std::any_of(subset.begin(), subset.end(), [&](int a) { return t.element_order(a) == size; });
}

std::string_view to_string(Order8Type type) {
  switch (type) {
    case Order8Type::Q8: return "Q8";
    case Order8Type::D4: return "D4";
    case Order8Type::Z8: return "Z8";
    case Order8Type::Z4xZ2: return "Z4xZ2";
    case Order8Type::Z2cubed: return "Z2cubed";
  }
  return "unknown";
}

Order8Type iso_type_order8(const CayleyTable& t) {
  if (t.order() != 8) throw RangeError("iso_type_order8 needs a group of order 8");
  const auto orders = order_spectrum(t);
  const int involutions = static_cast<int>(std::count(orders.begin(), orders.end(), 2));
  if (!t.is_abelian()) return involutions == 1 ? Order8Type::Q8 : Order8Type::D4;
  if (orders.back() == 8) return Order8Type::Z8;
  if (orders.back() == 4) return Order8Type::Z4xZ2;
  return Order8Type::Z2cubed;
}

bool satisfies_relators(const CayleyTable& t, const FinitePresentation& p) {
  return std::all_of(p.relators.begin(), p.relators.end(),
                     [&](const std::vector<int>& r) { return t.evaluate(r) == 0; });
}

}  // namespace spherebraid
