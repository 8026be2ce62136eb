#pragma once

#include <boost/dynamic_bitset.hpp>
#include <utility>
#include <vector>

namespace argonaut {

using Bitset = boost::dynamic_bitset<>;
using Edge = std::pair<int, int>;  // (attacker, target)

struct Digraph {
  int n = 0;
  std::vector<Bitset> attackers;  // attackers[b] has bit a iff a attacks b
  std::vector<Bitset> targets;    // targets[a] has bit b iff a attacks b

  static Digraph from_edges(int n, const std::vector<Edge>& edges);
  std::vector<Edge> edges() const;
};

}  // namespace argonaut
