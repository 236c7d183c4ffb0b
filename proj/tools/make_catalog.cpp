// Writes the standard catalog instances as JSON files into the given directory.

#include <cctype>
#include <filesystem>
#include <iostream>
#include <string>

#include "hopfmon/catalog.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_catalog OUTDIR\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  for (const hopfmon::Instance& inst : hopfmon::standard_catalog()) {
    std::string name;
    for (const char c : inst.label) {
      if (std::isalnum(static_cast<unsigned char>(c))) {
        name += c;
      } else if (c == '^') {
        name += "dual";
      } else if (!name.empty() && name.back() != '_') {
        name += '_';
      }
    }
    while (!name.empty() && name.back() == '_') name.pop_back();
    hopfmon::save(inst, dir / (name + ".json"));
    std::cout << (dir / (name + ".json")).string() << "\n";
  }

  // The bare Sweedler instance, for the transmute command to start from.
  hopfmon::QuasitriangularExample q = hopfmon::build_sweedler(5, 1);
  hopfmon::Instance h4("H4", q.hopf);
  h4.basis = {"1", "g", "x", "gx"};
  h4.r = q.r;
  hopfmon::save(h4, dir / "H4.json");

  // kZ2 with g g = 1 + g: fails the bialgebra axioms.
  const hopfmon::FieldSpec f5 = hopfmon::FieldSpec::prime_field(5);
  hopfmon::Instance broken("kZ2 mutated", hopfmon::build_group_algebra(f5, hopfmon::cyclic_group_table(2)));
  broken.hopf.bialgebra.algebra.mult.set(1, 3, 1);
  hopfmon::save(broken, dir / "kZ2_mutated.json");
  return 0;
}
