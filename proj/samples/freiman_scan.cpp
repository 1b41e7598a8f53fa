// Lists the graphs on at most five vertices whose cut ideal is Freiman.

#include <iostream>

#include "cutscope/freiman.hpp"

int main() {
  using namespace cutscope;
  const Classification c = classify_small(5, 6, 2'000'000, Parallelism::hardware());
  std::cout << c.examined << " graphs, " << c.freiman.size() << " Freiman\n";
  for (const auto& cg : c.freiman) {
    const auto name = listed_name(cg.graph);
    std::cout << (name ? *name : "?") << "\t" << describe(cg.graph) << "\n";
  }
}
