#pragma once

// Labels of minuscule homogeneous spaces G/P^alpha (simply-laced G) and of
// their varieties of lines through a point, in Bourbaki numbering.

#include <optional>
#include <string>

#include "minlines/rootsys.hpp"

namespace minlines {

struct MinusculeSpaceLabels {
  std::string space;       // X = G/P^alpha
  std::string levi;        // Dynkin type of the Levi L of P^alpha
  std::string lines;       // L_x, the lines through a point
  int lines_dimension = 0;
};

namespace detail {
inline std::string projective(int k, bool dual) {
  return "P^" + std::to_string(k) + (dual ? "*" : "");
}
}  // namespace detail

/// Table row for (type, node), or nullopt when the pair is not minuscule.
inline std::optional<MinusculeSpaceLabels> minuscule_space_labels(const DynkinType& t, int node) {
  const int n = t.rank;
  auto num = [](int k) { return std::to_string(k); };
  switch (t.family) {
    case Family::A: {
      const int m = node;
      if (m < 1 || m > n) return std::nullopt;
      std::string lines;
      // (P^{m-1})^* x P^{n-m}, dropping point factors.
      if (m > 1) lines = detail::projective(m - 1, true);
      if (n - m > 0) lines += (lines.empty() ? "" : " x ") + detail::projective(n - m, false);
      if (lines.empty()) lines = "point";
      std::string levi;
      if (m > 1) levi = "A" + num(m - 1);
      if (n - m > 0) levi += (levi.empty() ? "A" : "xA") + num(n - m);
      return MinusculeSpaceLabels{"G(" + num(m) + "," + num(n + 1) + ")", levi.empty() ? "none" : levi, lines, n - 1};
    }
    case Family::D:
      if (n < 4) return std::nullopt;
      if (node == 1)
        // D3 is A3.
        return MinusculeSpaceLabels{"Q^" + num(2 * n - 2), (n == 4 ? "A" : "D") + num(n - 1), "Q^" + num(2 * n - 4),
                                    2 * n - 4};
      if (node == n - 1 || node == n)
        return MinusculeSpaceLabels{"S^" + num(n * (n - 1) / 2), "A" + num(n - 1), "G(2," + num(n) + ")", 2 * (n - 2)};
      return std::nullopt;
    case Family::E:
      if (n == 6 && (node == 1 || node == 6)) return MinusculeSpaceLabels{"X^16", "D5", "S^10", 10};
      if (n == 7 && node == 7) return MinusculeSpaceLabels{"X^27", "E6", "X^16", 16};
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

}  // namespace minlines
