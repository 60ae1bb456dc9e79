// Replays a synthetic timestamped stream through a few window sizes.

#include <iostream>
#include <sstream>

#include <dndtree/dndtree.hpp>

int main() {
  std::stringstream rows;
  dndtree::Rng rng(3);
  for (int t = 0; t < 5000; ++t)
    rows << dndtree::uniform_below(rng, 400) << ' ' << dndtree::uniform_below(rng, 400) << ' ' << t << '\n';
  const dndtree::EdgeStream stream = dndtree::parse_edge_stream(rows);

  std::vector<std::pair<std::string, dndtree::MetricsReport>> reports;
  for (double pct : {5.0, 20.0, 80.0}) {
    dndtree::WindowConfig cfg;
    cfg.fraction = pct / 100.0;
    cfg.queries = 10'000;
    reports.emplace_back("w" + std::to_string(int(pct)), dndtree::run_sliding_window(stream, dndtree::Mode::conn, cfg));
  }
  dndtree::write_csv(std::cout, reports);
}
