// Binary de Bruijn cycles of order n are the Euler tours of G_n (nodes are
// words of length n-1, arcs words of length n).
#include <iostream>

#include "exactcomb/exactcomb.hpp"

using namespace exactcomb;

int main() {
  std::cout << "n=1  cycles=" << debruijn::count_pn_cycles(1) << '\n';
  for (unsigned n = 2; n <= 6; ++n)
    std::cout << "n=" << n << "  cycles=" << debruijn::count_pn_cycles(n)
              << "  tours=" << euler::count_euler_tours(debruijn::build_graph(2, n).graph) << '\n';
  std::cout << "least of order 4: " << debruijn::enumerate_pn_cycles(4).front().to_string() << '\n';
}
