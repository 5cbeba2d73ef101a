#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ihara/graph.hpp"

namespace ihara {

using GroupElement = std::vector<long>;

/// Abelian group Z/n_1 x ... x Z/n_k. An order of 0 stands for a free Z
/// factor, so rank-k lattices Z^k are {0,...,0}.
struct AbelianGroup {
  std::vector<long> orders;

  std::size_t rank() const { return orders.size(); }
  bool is_finite() const;
  std::size_t order() const; // requires is_finite()
  std::size_t index_of(const GroupElement& g) const;
  GroupElement element(std::size_t index) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement reduce(const GroupElement& g) const;
};

/// Voltages on the base's edges, each oriented first -> second as stored in
/// the graph. The reverse orientation implicitly carries the inverse.
struct VoltageAssignment {
  AbelianGroup group;
  std::vector<GroupElement> voltages; // one per base edge

  void validate(const MultiGraph& base) const;
};

struct Cover {
  MultiGraph graph;
  std::vector<std::size_t> projection; // cover vertex -> base vertex
  std::size_t sheets = 1;
  std::size_t components = 1;
};

/// Derived graph on V(base) x G: each base edge x -> y with voltage s lifts to
/// (x,g) -- (y,g+s) for every g. Vertex (x,g) has index x*|G| + index(g).
Cover derived_graph(const MultiGraph& base, const VoltageAssignment& volt);

struct TowerLevel {
  MultiGraph graph;
  std::size_t index = 1;               // N_i
  std::vector<std::size_t> projection; // level vertex -> base vertex
  std::size_t components = 1;
};

struct Tower {
  MultiGraph base;
  std::vector<TowerLevel> levels;
  std::string provenance;
  enum class Kind { cyclic, homology } kind = Kind::cyclic;
  std::vector<GroupElement> voltages; // cyclic towers only: integer lifts over Z^k
};

/// Level i is the derived graph with voltages reduced into (Z/n_i)^k, where k
/// is the length of each voltage vector. Orders must form a divisibility
/// chain; the base itself is prepended as level 1 when orders[0] != 1.
Tower cyclic_tower(const MultiGraph& base, const std::vector<GroupElement>& voltages,
                   const std::vector<long>& orders);

inline constexpr std::size_t kDefaultSizeCap = 10000;

/// Iterated mod-p homology covers: at each step, breadth-first spanning tree
/// from vertex 0, the j-th non-tree edge gets the j-th generator of (Z/p)^r,
/// r = 1 - chi(current level). ResourceError if a level would exceed the cap.
Tower homology_tower(const MultiGraph& base, long p, std::size_t depth,
                     std::size_t size_cap = kDefaultSizeCap);

/// Surjective, constant fibres, and locally isomorphic: the projected
/// neighbour multiset of every cover vertex equals that of its image.
bool validate_cover(const MultiGraph& cover, const MultiGraph& base,
                    const std::vector<std::size_t>& projection);

} // namespace ihara
