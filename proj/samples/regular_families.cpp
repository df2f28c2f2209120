// Walks through the regular abelian subgroups T_c of W_3: builds a few
// families, checks the defining properties, and shows that conjugating by
// d x1^2 D3 moves T_c to T_{c+2d}.

#include <iostream>

#include "hyperwreath/hyperwreath.hpp"

using namespace hyperwreath;

int main() {
  const int n = 3;
  int failures = 0;
  for (int c = 0; c <= 2; ++c) {
    const RegularFamily f = make_family(c, n);
    std::cout << "T_" << c << " = <";
    for (std::size_t i = 0; i < f.generators.size(); ++i) std::cout << (i ? ", " : "") << f.generators[i].to_string();
    std::cout << ">\n";
    const bool ok = is_abelian(f) && is_normal_in_N0(f) && orbit_injectivity(f, 2);
    std::cout << "  abelian, normal under N_0, injective on the radius-2 grid: " << (ok ? "yes" : "no") << '\n';
    failures += ok ? 0 : 1;
  }

  for (int d = -2; d <= 2; ++d) {
    const auto c = family_parameter(conjugate_family(make_family(1, n), d));
    std::cout << "T_1 conjugated by " << d << "*x1^2 D3 is T_" << (c ? c->get_str() : "?") << '\n';
    failures += (c && *c == 1 + 2 * d) ? 0 : 1;
  }

  // the top generator is central, so every T_c meets the center
  const GroupElement z = GroupElement::delta(n, n);
  std::cout << "tdeg(D3) = " << tdeg(z).to_string() << ", in Z_1: " << center_membership(z, Ordinal::finite(1)) << '\n';
  return failures == 0 ? 0 : 1;
}
