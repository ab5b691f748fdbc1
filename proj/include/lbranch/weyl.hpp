#pragma once

#include <optional>
#include <set>
#include <vector>

#include "lbranch/root_data.hpp"

namespace lbranch {

/// s_i(lambda) = lambda - <coroot_i, lambda> alpha_i.
inline Weight reflect(const RootDatum& datum, int i, Weight w)
{
  if (i < 0 || i >= datum.rank())
    throw DomainError("node index " + std::to_string(i) + " out of range");
  if (static_cast<int>(w.size()) != datum.rank())
    throw DomainError("weight " + w.to_string() + " has the wrong rank");
  detail::reflect_in_place(datum, i, w);
  return w;
}

struct DominantRep {
  Weight weight;
  int sign = 1;   // parity of the chamber walk
  int length = 0; // number of reflections used
};

/// Chamber walk: reflect at the lowest-index negative coordinate until dominant.
inline DominantRep dominant_representative(const RootDatum& datum, Weight w)
{
  DominantRep out;
  const int n = datum.rank();
  while (true) {
    int i = 0;
    while (i < n && w[i] >= 0)
      ++i;
    if (i == n)
      break;
    detail::reflect_in_place(datum, i, w);
    out.sign = -out.sign;
    ++out.length;
  }
  out.weight = std::move(w);
  return out;
}

struct Regularized {
  Weight weight; // dominant
  int sign = 1;
};

/// Either singular (nullopt) or the dominant w.lambda with sign (-1)^l(w).
using RegularizationResult = std::optional<Regularized>;

inline Weight rho(const RootDatum& datum) { return Weight(std::vector<int>(datum.rank(), 1)); }

/// rho^L = sum_i l_i varpi_i, in base coordinates.
inline Weight rho_L(const ModifiedDatum& md) { return Weight(std::vector<int>(md.l().begin(), md.l().end())); }

/// rho^L - rho, the highest weight of the Steinberg-type factor.
inline Weight rho_shift(const ModifiedDatum& md) { return rho_L(md) - rho(md.base()); }

/// Regularizes lambda under the rho-shifted action w.lambda = w(lambda + rho) - rho.
inline RegularizationResult shifted_regularize(const RootDatum& datum, const Weight& w)
{
  const Weight r = rho(datum);
  auto rep = dominant_representative(datum, w + r);
  for (int x : rep.weight)
    if (x == 0)
      return std::nullopt;
  return Regularized{rep.weight - r, rep.sign};
}

/// Full W-orbit by breadth-first closure under the simple reflections, sorted.
inline std::vector<Weight> orbit(const RootDatum& datum, const Weight& w)
{
  auto s = detail::reflection_closure(datum, w);
  return {s.begin(), s.end()};
}

} // namespace lbranch
