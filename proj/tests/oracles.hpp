#pragma once

// Slow reference implementations that share no code with the library
// beyond the Graph container.

#include <cstdint>
#include <vector>

#include "domcells/graph.hpp"
#include "domcells/bounds.hpp"

namespace oracle {

// Smallest dominating set size by enumerating subsets in increasing size.
inline std::size_t brute_force_gamma(const domcells::Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> closed(n);
  for (std::size_t v = 0; v < n; ++v) {
    closed[v] = 1U << v;
    for (auto w : g.neighbors(static_cast<domcells::Vertex>(v))) closed[v] |= 1U << w;
  }
  const std::uint32_t all = n == 32 ? ~0U : (1U << n) - 1;
  for (std::size_t size = 1; size <= n; ++size) {
    for (std::uint32_t s = 0; s <= all; ++s) {
      if (static_cast<std::size_t>(__builtin_popcount(s)) != size) continue;
      std::uint32_t cover = 0;
      for (std::size_t v = 0; v < n; ++v)
        if (s >> v & 1U) cover |= closed[v];
      if (cover == all) return size;
    }
  }
  return n;
}

// The coefficients rewritten directly in n (no k):
//   c_n = 3n / (4n + d), d = 0, 2, 1 for n mod 3 = 0, 1, 2
//   maroon factor = 2, 2(n-1)/(n+2), (2n-1)/(n+1).
inline domcells::Rational cn_piecewise(std::size_t n) {
  const long long m = static_cast<long long>(n);
  const long long d[3] = {0, 2, 1};
  return domcells::Rational(3 * m, 4 * m + d[n % 3]);
}

inline domcells::Rational maroon_piecewise(std::size_t n) {
  const long long m = static_cast<long long>(n);
  if (n % 3 == 0) return domcells::Rational(2);
  if (n % 3 == 1) return domcells::Rational(2 * (m - 1), m + 2);
  return domcells::Rational(2 * m - 1, m + 1);
}

}  // namespace oracle
