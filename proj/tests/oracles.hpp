// Independent reference implementations used as test oracles. None of
// these call into the library beyond the plain BraidWord container.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "spherebraid/braid_word.hpp"

namespace oracle {

using Letters = std::vector<int>;

// Strand positions tracked by swapping; result[j-1] = final position of strand j.
inline std::vector<int> strand_positions(int n, const Letters& letters) {
  std::vector<int> at(static_cast<std::size_t>(n));  // at[p-1] = strand sitting at position p
  for (int p = 1; p <= n; ++p) at[p - 1] = p;
  for (int l : letters) {
    const int i = l > 0 ? l : -l;
    std::swap(at[i - 1], at[i]);
  }
  std::vector<int> result(static_cast<std::size_t>(n));
  for (int p = 1; p <= n; ++p) result[at[p - 1] - 1] = p;
  return result;
}

inline Letters free_reduce(const Letters& w) {
  Letters out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

inline Letters free_inverse(const Letters& w) {
  Letters out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

inline Letters concat(std::initializer_list<Letters> parts) {
  Letters out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return free_reduce(out);
}

// Image of a single free word under the disk action of one braid letter.
inline Letters act_letter(int letter, const Letters& w) {
  const int i = letter > 0 ? letter : -letter;
  Letters out;
  for (int g : w) {
    const int x = g > 0 ? g : -g;
    Letters image;
    if (x == i) {
      image = letter > 0 ? Letters{i, i + 1, -i} : Letters{i + 1};
    } else if (x == i + 1) {
      image = letter > 0 ? Letters{i} : Letters{-(i + 1), i, i + 1};
    } else {
      image = {x};
    }
    if (g < 0) image = free_inverse(image);
    out.insert(out.end(), image.begin(), image.end());
  }
  return free_reduce(out);
}

// Disk action by substitution: start from x_j and substitute the images of
// each letter in turn, leftmost letter first.
inline std::vector<Letters> disk_images(int n, const Letters& braid) {
  std::vector<Letters> images;
  for (int j = 1; j <= n; ++j) {
    Letters w{j};
    for (int l : braid) w = act_letter(l, w);
    images.push_back(w);
  }
  return images;
}

// Burau matrices over Z/p at a fixed t; words equal in B_n have equal matrices.
struct Burau {
  static constexpr std::uint64_t p = 1'000'000'007ULL;
  int n;
  std::uint64_t t;

  static std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  }

  using Matrix = std::vector<std::uint64_t>;

  Matrix identity() const {
    Matrix m(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i * n + i)] = 1;
    return m;
  }

  // Right multiplication by the Burau matrix of one letter.
  void apply(Matrix& m, int letter) const {
    const int i = (letter > 0 ? letter : -letter) - 1;
    const std::uint64_t ti = pow_mod(t, p - 2);
    for (int r = 0; r < n; ++r) {
      std::uint64_t& a = m[static_cast<std::size_t>(r * n + i)];
      std::uint64_t& b = m[static_cast<std::size_t>(r * n + i + 1)];
      const std::uint64_t a0 = a;
      const std::uint64_t b0 = b;
      if (letter > 0) {
        // block [[1-t, t], [1, 0]]
        a = ((1 + p - t) % p * a0 + b0) % p;
        b = t * a0 % p;
      } else {
        // block [[0, 1], [1/t, 1 - 1/t]]
        a = ti * b0 % p;
        b = (a0 + (1 + p - ti) % p * b0) % p;
      }
    }
  }

  Matrix of(const Letters& w) const {
    Matrix m = identity();
    for (int l : w) apply(m, l);
    return m;
  }
};

// Quaternion units as (sign, unit) with unit in {1, i, j, k} = {0, 1, 2, 3}.
struct Quaternion {
  int sign = 1;
  int unit = 0;
  friend bool operator==(const Quaternion&, const Quaternion&) = default;
  Quaternion operator*(const Quaternion& o) const {
    static const int table[4][4][2] = {
        {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
        {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
        {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
        {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
    };
    const auto& e = table[unit][o.unit];
    return {sign * o.sign * e[0], e[1]};
  }
};

// Dicyclic group of order 4n: elements a^k b^e, 0 <= k < 2n, e in {0, 1},
// with b a b^-1 = a^-1 and b^2 = a^n.
struct Dicyclic {
  int n;
  std::pair<int, int> mul(std::pair<int, int> x, std::pair<int, int> y) const {
    const int m = 2 * n;
    auto [k1, e1] = x;
    auto [k2, e2] = y;
    int k = e1 == 0 ? k1 + k2 : k1 - k2;
    int e = e1 + e2;
    if (e == 2) {
      k += n;
      e = 0;
    }
    return {((k % m) + m) % m, e};
  }
  int order(std::pair<int, int> x) const {
    std::pair<int, int> y = x;
    int k = 1;
    while (y != std::pair<int, int>{0, 0}) {
      y = mul(y, x);
      ++k;
    }
    return k;
  }
  std::vector<int> spectrum() const {
    std::vector<int> orders;
    for (int e = 0; e < 2; ++e) {
      for (int k = 0; k < 2 * n; ++k) orders.push_back(order({k, e}));
    }
    std::sort(orders.begin(), orders.end());
    return orders;
  }
};

inline Letters random_letters(int n, int max_length, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> length(0, max_length);
  std::uniform_int_distribution<int> index(1, n - 1);
  std::bernoulli_distribution sign(0.5);
  Letters w(static_cast<std::size_t>(length(rng)));
  for (int& l : w) l = sign(rng) ? index(rng) : -index(rng);
  return w;
}

// Splices a relation instance or a cancelling pair into w, then maybe swaps
// a commuting adjacent pair.
inline Letters rewrite_equal(int n, Letters w, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> index(1, n - 1);
  std::uniform_int_distribution<int> kind(0, 3);
  const int i = index(rng);
  const int j = index(rng);
  Letters r;
  switch (kind(rng)) {
    case 0: r = {i, -i}; break;
    case 1: r = {-i, i}; break;
    case 2:
      if (i + 1 < n) r = {i, i + 1, i, -(i + 1), -i, -(i + 1)};
      break;
    default:
      if (i - j >= 2 || j - i >= 2) r = {i, j, -i, -j};
  }
  if (std::bernoulli_distribution(0.5)(rng)) r = free_inverse(r);
  std::uniform_int_distribution<std::size_t> where(0, w.size());
  w.insert(w.begin() + static_cast<std::ptrdiff_t>(where(rng)), r.begin(), r.end());
  if (w.size() >= 2) {
    std::uniform_int_distribution<std::size_t> at(0, w.size() - 2);
    const std::size_t k = at(rng);
    const int a = w[k] > 0 ? w[k] : -w[k];
    const int b = w[k + 1] > 0 ? w[k + 1] : -w[k + 1];
    if (a - b >= 2 || b - a >= 2) std::swap(w[k], w[k + 1]);
  }
  return w;
}

}  // namespace oracle
