// Colourings of the cube's faces, vertices and edges up to rotation.
#include <iostream>

#include "exactcomb/exactcomb.hpp"

using namespace exactcomb;

int main() {
  const std::pair<const char*, polya::PermGroup> parts[] = {
      {"faces", polya::cube_face_group()},
      {"vertices", polya::cube_vertex_group()},
      {"edges", polya::cube_edge_group()},
  };
  for (const auto& [name, group] : parts) {
    const auto z = polya::cycle_index(group);
    std::cout << name << ": " << z.to_string() << '\n';
    for (unsigned k = 2; k <= 4; ++k) std::cout << "  " << k << " colours: " << polya::count_patterns(z, k) << '\n';
  }
  const auto faces = polya::cycle_index(polya::cube_face_group());
  std::cout << "faces in z, w: " << polya::pattern_inventory(faces, polya::colors_as_variables({"z", "w"})).to_string() << '\n';
}
