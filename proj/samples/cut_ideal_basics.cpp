// Builds I(C_4), checks the generator count and the clique-sum product.

#include <iostream>

#include "cutscope/cut.hpp"
#include "cutscope/graph.hpp"
#include "cutscope/ideal.hpp"

int main() {
  using namespace cutscope;
  const Graph square = cycle(4);
  const MonomialIdeal I = cut_ideal(square);
  std::cout << "I(C4) has " << I.mu() << " generators:\n";
  for (const auto& m : I.gens()) std::cout << "  " << m.to_string() << "\n";

  // Two triangles sharing vertex 1: the cut ideal is the product of the two.
  const Graph bowtie = clique_sum(cycle(3), cycle(3), VertexPairing::glue(1, 1));
  const int m = bowtie.edge_count();
  const MonomialIdeal prod = product(embed(cut_ideal(cycle(3)), 0, m), embed(cut_ideal(cycle(3)), 3, m));
  std::cout << "bowtie: " << cut_ideal(bowtie).mu() << " generators, product form "
            << (equals(cut_ideal(bowtie), prod) ? "matches" : "differs") << "\n";
}
