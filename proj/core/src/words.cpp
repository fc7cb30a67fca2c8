#include "vk/words.hpp"

#include <algorithm>

namespace vk {

Letter inverse(const Letter& l) { return Letter{l.symbol, -l.sign}; }

Letters inverse(std::span<const Letter> w) {
  Letters out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

Letters free_reduce(std::span<const Letter> w) {
  Letters out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back().symbol == l.symbol && out.back().sign == -l.sign) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Letters cyclic_reduce(std::span<const Letter> w) {
  Letters r = free_reduce(w);
  std::size_t lo = 0;
  std::size_t hi = r.size();
  while (hi - lo >= 2 && r[lo].symbol == r[hi - 1].symbol && r[lo].sign == -r[hi - 1].sign) {
    ++lo;
    --hi;
  }
  return Letters(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
}

Letters concat(std::span<const Letter> a, std::span<const Letter> b) {
  Letters out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string format_letters(std::span<const Letter> w) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const long run = static_cast<long>(j - i) * w[i].sign;
    if (!out.empty()) out += ' ';
    out += w[i].symbol;
    if (run != 1) out += '^' + std::to_string(run);
    i = j;
  }
  return out;
}

}  // namespace vk
