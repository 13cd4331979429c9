// Prints the collapse report for family A over a small grid.
#include <iostream>

#include "qcp/qcp.hpp"

int main() {
  for (std::int64_t p : {2, 4, 6})
    for (std::int64_t s = 1; s <= p; ++s) {
      if (p % s) continue;
      const auto a = qcp::family_matrix({qcp::FamilyKind::A, 2, p, s, 1});
      const auto r = qcp::collapse_report(a);
      std::cout << "A(m=2,p=" << p << ",s=" << s << ")  lcm " << r.lcm_period << "  min " << r.minimum_period
                << (r.collapse ? "  collapse" : "") << '\n';
      for (std::uint64_t k = 1; k <= r.quasi_polynomial.period(); ++k)
        std::cout << "    q = " << k << " mod " << r.quasi_polynomial.period() << ":  "
                  << r.quasi_polynomial.constituent(k).to_string("q") << '\n';
    }
}
