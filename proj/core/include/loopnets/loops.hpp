#pragma once

#include <cstddef>
#include <vector>

namespace loopnets {

/// Unbased discrete loop stored as the lexicographically smallest rotation
/// of its cyclic vertex sequence.
struct DiscreteLoop {
  std::vector<int> vertices;  // canonical rotation, length >= 2
  int multiplicity = 1;       // largest j such that the sequence is a j-fold repeat

  std::size_t length() const { return vertices.size(); }
  bool operator==(const DiscreteLoop&) const = default;
  bool operator<(const DiscreteLoop& o) const { return vertices < o.vertices; }
};

/// Canonicalize a based cyclic sequence (base point forgotten).
DiscreteLoop canonical_loop(const std::vector<int>& cycle);

/// Based loop: path[0] is the base; the step path.back() -> path[0] closes it.
struct BasedLoop {
  int base = 0;
  std::vector<int> path;

  int base_visits() const;
  /// Excursions from the base back to the base, in temporal order.
  std::vector<std::vector<int>> excursions() const;
};

}  // namespace loopnets
