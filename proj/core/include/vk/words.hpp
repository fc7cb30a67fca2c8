#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace vk {

/// One signed generator reference. `sign` is +1 or -1.
struct Letter {
  std::string symbol;
  int sign = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A word in a free group: no endpoints, just signed symbols.
using Letters = std::vector<Letter>;

Letter inverse(const Letter& l);
Letters inverse(std::span<const Letter> w);

/// Cancels adjacent x x^-1 pairs until none remain (stack pass, linear time).
Letters free_reduce(std::span<const Letter> w);

/// Free reduction followed by stripping matching inverse letters from the two ends.
Letters cyclic_reduce(std::span<const Letter> w);

Letters concat(std::span<const Letter> a, std::span<const Letter> b);

/// Renders `a a a b^-1` as `a^3 b^-1`; the empty word renders as `1`.
std::string format_letters(std::span<const Letter> w);

}  // namespace vk
