// Sylow p-exponents of GL_n over W_r(F_q) and F_q[t]/t^r side by side.
//
//   pexp_gap [n p r]      defaults: 2 3 3

#include <cstdlib>
#include <iostream>

#include "kkg/matgrp.hpp"

int main(int argc, char** argv) {
  unsigned n = 2, r = 3;
  unsigned long long p = 3;
  if (argc == 4) {
    n = static_cast<unsigned>(std::atoi(argv[1]));
    p = std::strtoull(argv[2], nullptr, 10);
    r = static_cast<unsigned>(std::atoi(argv[3]));
  }
  for (auto kind : {kkg::RingKind::Witt, kkg::RingKind::Poly}) {
    const auto g = kkg::make_group(kkg::Family::GL, n, kind, p, 1, r);
    const auto res = kkg::p_exponent(g);
    std::cout << g.name() << ": exp_p = " << res.value << "  (bound " << res.upper_bound.value << ", witness "
              << kkg::render_matrix(res.lower_witness) << ")\n";
  }
}
