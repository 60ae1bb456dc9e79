// Small walk-through of the connectivity and 2-edge connectivity indexes.

#include <iostream>

#include <dndtree/dndtree.hpp>

int main() {
  dndtree::DndIndex conn(6);
  conn.insert(0, 1);
  conn.insert(1, 2);
  conn.insert(3, 4);
  std::cout << "0~2: " << conn.connected(0, 2) << "  0~3: " << conn.connected(0, 3) << '\n';

  conn.insert(2, 3);
  std::cout << "after (2,3), 0~4: " << conn.connected(0, 4) << '\n';

  conn.erase(1, 2);
  std::cout << "after removing (1,2), 0~4: " << conn.connected(0, 4) << '\n';

  const auto s = conn.component_stats();
  std::cout << "components " << s.components << ", largest " << s.largest_component << '\n';

  // a triangle with a pendant edge: the pendant is a bridge
  dndtree::Dnd2Index ecc(4);
  ecc.insert(0, 1);
  ecc.insert(1, 2);
  ecc.insert(2, 0);
  ecc.insert(2, 3);
  std::cout << "0 and 1 two-edge-connected: " << ecc.two_edge_connected(0, 1) << '\n';
  std::cout << "2 and 3 two-edge-connected: " << ecc.two_edge_connected(2, 3) << '\n';
  ecc.erase(0, 1);
  std::cout << "after removing (0,1), 0 and 2: " << ecc.two_edge_connected(0, 2) << '\n';
}
