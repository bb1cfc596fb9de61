// Regenerates the committed composition-relation data file.  Run from the
// repository root:  omega-gendata data/comp_rel.json

#include <fstream>
#include <iostream>

#include "omega/lattice.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: omega-gendata <output-path>\n";
    return 1;
  }
  auto rel = omega::build_comp_rel();
  std::ofstream out(argv[1], std::ios::binary);
  if (!out) {
    std::cerr << "cannot open " << argv[1] << "\n";
    return 1;
  }
  out << rel.to_json();
  std::cout << "wrote " << argv[1] << "\n";
  return 0;
}
