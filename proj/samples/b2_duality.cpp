// B2 at ell = 2: the dual datum is C2, rho^L - rho is the spin weight, and every
// irreducible chi(lambda) with lambda in X* branches to the dual with nonnegative,
// route-independent multiplicities.

#include <iostream>

#include "lbranch/lbranch.hpp"

using namespace lbranch;

int main()
{
  const RootDatum b2(cartan_matrix("B2"));
  const ModifiedDatum md(b2, 2);

  std::cout << "l = (" << md.l(0) << "," << md.l(1) << ")  rho^L - rho = " << rho_shift(md).to_string()
            << "  dim " << to_decimal(weyl_dimension(b2, rho_shift(md))) << '\n';

  const auto steinberg = steinberg_character_identity(md, Weight{1, 0});
  std::cout << "chi(rho) = chi(varpi2) . chi^L(varpi1) on " << steinberg.weights_compared
            << " weights: " << (steinberg.holds ? "holds" : "fails") << '\n';

  for (const auto& lambda : sublattice_dominant_weights(md, 4)) {
    const BranchingResult r = branch(md, lambda);
    std::cout << lambda.to_string() << " ->";
    for (const auto& [mu, m] : dominance_sorted(md.dual(), r.m()))
      std::cout << ' ' << to_decimal(m) << "x" << mu.to_string();
    std::cout << "   agree " << (r.agree.value_or(false) ? "yes" : "no") << '\n';
  }
}
