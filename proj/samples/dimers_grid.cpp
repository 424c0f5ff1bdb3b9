// Domino tilings of m x n boards via a Kasteleyn orientation.
#include <iostream>

#include "exactcomb/exactcomb.hpp"

using namespace exactcomb;

int main() {
  for (std::size_t m = 2; m <= 8; m += 2)
    for (std::size_t n = m; n <= 8; ++n) {
      const auto g = dimers::grid_graph(m, n);
      const auto o = dimers::kasteleyn_orient(g, dimers::grid_embedding(g, m, n));
      std::cout << m << "x" << n << ": " << dimers::count_matchings_fkt(g, o) << '\n';
    }
}
