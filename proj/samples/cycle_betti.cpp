// Betti numbers of I(C_n) from the lcm-lattice oracle next to the recursion.

#include <cstdlib>
#include <iostream>

#include "cutscope/betti.hpp"
#include "cutscope/cut.hpp"
#include "cutscope/cycle_formulas.hpp"

int main(int argc, char** argv) {
  using namespace cutscope;
  const int n = argc > 1 ? std::atoi(argv[1]) : 5;
  const BettiTable oracle = betti(cut_ideal(cycle(n)));
  std::cout << "oracle:    " << poincare(oracle).to_string() << "\n";
  if (n >= 4) {
    const BettiTable rec = betti_recursion_graded(n);
    std::cout << "recursion: " << poincare(rec).to_string() << "\n"
              << (rec.same_entries(oracle) ? "agree" : "differ") << "\n";
  }
}
