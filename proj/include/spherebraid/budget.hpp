#pragma once

#include <cstddef>
#include <stdexcept>

namespace spherebraid {

/// Resource caps shared by the engines. Exceeding a cap aborts the
/// computation with ResourceExhausted; it never produces an answer.
struct Budget {
  std::size_t max_endo_letters = 1'000'000;
  int max_cosets = 10'000;
};

class ResourceExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spherebraid
