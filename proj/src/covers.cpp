#include "ihara/covers.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "ihara/errors.hpp"

namespace ihara {

bool AbelianGroup::is_finite() const {
  return std::all_of(orders.begin(), orders.end(), [](long n) { return n > 0; });
}

std::size_t AbelianGroup::order() const {
  if (!is_finite()) throw InputError("group order requested for an infinite group");
  std::size_t n = 1;
  for (long k : orders) n *= static_cast<std::size_t>(k);
  return n;
}

GroupElement AbelianGroup::reduce(const GroupElement& g) const {
  if (g.size() != orders.size()) throw InputError("group element has the wrong rank");
  GroupElement out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    out[i] = orders[i] > 0 ? ((g[i] % orders[i]) + orders[i]) % orders[i] : g[i];
  }
  return out;
}

std::size_t AbelianGroup::index_of(const GroupElement& g) const {
  const auto r = reduce(g);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    idx = idx * static_cast<std::size_t>(orders[i]) + static_cast<std::size_t>(r[i]);
  }
  return idx;
}

GroupElement AbelianGroup::element(std::size_t index) const {
  GroupElement g(orders.size());
  for (std::size_t i = orders.size(); i-- > 0;) {
    const auto n = static_cast<std::size_t>(orders[i]);
    g[i] = static_cast<long>(index % n);
    index /= n;
  }
  return g;
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return reduce(s);
}

void VoltageAssignment::validate(const MultiGraph& base) const {
  if (voltages.size() != base.edge_count()) {
    std::ostringstream msg;
    msg << "voltage assignment has " << voltages.size() << " entries for " << base.edge_count()
        << " edges";
    throw InputError(msg.str());
  }
  for (const auto& s : voltages) {
    if (s.size() != group.rank()) throw InputError("voltage rank does not match the group rank");
  }
  for (long n : group.orders) {
    if (n < 0) throw InputError("group orders must be >= 0");
  }
}

Cover derived_graph(const MultiGraph& base, const VoltageAssignment& volt) {
  volt.validate(base);
  const std::size_t order = volt.group.order();
  std::vector<Edge> edges;
  edges.reserve(base.edge_count() * order);
  for (std::size_t i = 0; i < base.edge_count(); ++i) {
    const auto [x, y] = base.edges()[i];
    for (std::size_t gi = 0; gi < order; ++gi) {
      const auto g = volt.group.element(gi);
      const auto h = volt.group.add(g, volt.voltages[i]);
      edges.emplace_back(x * order + gi, y * order + volt.group.index_of(h));
    }
  }
  std::vector<std::size_t> projection(base.vertex_count() * order);
  for (std::size_t v = 0; v < projection.size(); ++v) projection[v] = v / order;

  std::string name = base.name() + "~";
  for (std::size_t i = 0; i < volt.group.orders.size(); ++i) {
    name += (i ? "x" : "") + std::string("Z") + std::to_string(volt.group.orders[i]);
  }
  MultiGraph g(base.vertex_count() * order, std::move(edges), name);
  const auto components = g.component_count();
  return Cover{std::move(g), std::move(projection), order, components};
}

Tower cyclic_tower(const MultiGraph& base, const std::vector<GroupElement>& voltages,
                   const std::vector<long>& orders) {
  if (orders.empty()) throw InputError("cyclic_tower: empty order list");
  if (voltages.size() != base.edge_count()) {
    throw InputError("cyclic_tower: need one voltage per base edge");
  }
  const std::size_t rank = voltages.empty() ? 1 : voltages.front().size();
  for (const auto& s : voltages) {
    if (s.size() != rank) throw InputError("cyclic_tower: voltages must share one rank");
  }
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] < 1) throw InputError("cyclic_tower: orders must be positive");
    if (i > 0 && orders[i] % orders[i - 1] != 0) {
      std::ostringstream msg;
      msg << "cyclic_tower: order " << orders[i - 1] << " does not divide " << orders[i]
          << " (subgroups would not be nested)";
      throw InputError(msg.str());
    }
  }

  Tower tower{base, {}, {}, Tower::Kind::cyclic, voltages};
  std::ostringstream prov;
  prov << "cyclic (Z/n)^" << rank << " tower, n in [";
  std::vector<long> chain = orders;
  if (chain.front() != 1) chain.insert(chain.begin(), 1);
  for (std::size_t i = 0; i < chain.size(); ++i) {
    prov << (i ? "," : "") << chain[i];
    VoltageAssignment volt{AbelianGroup{std::vector<long>(rank, chain[i])}, voltages};
    auto cover = derived_graph(base, volt);
    tower.levels.push_back({std::move(cover.graph), cover.sheets, std::move(cover.projection),
                            cover.components});
  }
  prov << "]";
  tower.provenance = prov.str();
  return tower;
}

namespace {

// Edge indices of a breadth-first spanning forest rooted at vertex 0.
std::vector<bool> bfs_tree_edges(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> incident(n);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto [a, b] = g.edges()[i];
    incident[a].emplace_back(b, i);
    if (a != b) incident[b].emplace_back(a, i);
  }
  std::vector<bool> tree(g.edge_count(), false);
  std::vector<bool> seen(n, false);
  std::queue<std::size_t> todo;
  seen[0] = true;
  todo.push(0);
  while (!todo.empty()) {
    const auto x = todo.front();
    todo.pop();
    for (const auto& [y, i] : incident[x]) {
      if (!seen[y]) {
        seen[y] = true;
        tree[i] = true;
        todo.push(y);
      }
    }
  }
  return tree;
}

} // namespace

Tower homology_tower(const MultiGraph& base, long p, std::size_t depth, std::size_t size_cap) {
  if (p < 2) throw InputError("homology_tower: p must be a prime >= 2");
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw InputError("homology_tower: p must be prime");
  }
  if (!base.is_connected()) throw InputError("homology_tower: base must be connected");

  Tower tower{base, {}, {}, Tower::Kind::homology, {}};
  std::vector<std::size_t> identity(base.vertex_count());
  for (std::size_t v = 0; v < identity.size(); ++v) identity[v] = v;
  tower.levels.push_back({base, 1, identity, 1});

  std::ostringstream prov;
  prov << "iterated mod-" << p << " homology tower, depth " << depth;
  for (std::size_t level = 1; level <= depth; ++level) {
    const auto& current = tower.levels.back();
    const long rank = 1 - current.graph.euler_characteristic();
    std::size_t order = 1;
    for (long i = 0; i < rank; ++i) {
      if (order > size_cap) break;
      order *= static_cast<std::size_t>(p);
    }
    const std::size_t size = current.graph.vertex_count() * order;
    if (rank > 0 && (order > size_cap || size > size_cap)) {
      std::ostringstream msg;
      msg << "homology_tower: level " << level + 1 << " would have " << current.graph.vertex_count()
          << " * " << p << "^" << rank << " vertices, above the size cap " << size_cap;
      throw ResourceError(msg.str());
    }

    const auto tree = bfs_tree_edges(current.graph);
    VoltageAssignment volt{AbelianGroup{std::vector<long>(static_cast<std::size_t>(rank), p)}, {}};
    std::size_t generator = 0;
    for (std::size_t i = 0; i < current.graph.edge_count(); ++i) {
      GroupElement s(static_cast<std::size_t>(rank), 0);
      if (!tree[i]) s[generator++] = 1;
      volt.voltages.push_back(std::move(s));
    }
    auto cover = derived_graph(current.graph, volt);
    std::vector<std::size_t> to_base(cover.projection.size());
    for (std::size_t v = 0; v < to_base.size(); ++v) to_base[v] = current.projection[cover.projection[v]];
    tower.levels.push_back({std::move(cover.graph), current.index * cover.sheets, std::move(to_base),
                            cover.components});
  }
  tower.provenance = prov.str();
  return tower;
}

bool validate_cover(const MultiGraph& cover, const MultiGraph& base,
                    const std::vector<std::size_t>& projection) {
  if (projection.size() != cover.vertex_count()) return false;
  if (cover.vertex_count() % base.vertex_count() != 0) return false;
  const std::size_t sheets = cover.vertex_count() / base.vertex_count();
  if (cover.edge_count() != sheets * base.edge_count()) return false;

  std::vector<std::size_t> fibre(base.vertex_count(), 0);
  for (auto x : projection) {
    if (x >= base.vertex_count()) return false;
    ++fibre[x];
  }
  if (std::any_of(fibre.begin(), fibre.end(), [&](std::size_t f) { return f != sheets; })) return false;

  auto base_nbrs = base.neighbor_lists();
  for (auto& l : base_nbrs) std::sort(l.begin(), l.end());
  const auto cover_nbrs = cover.neighbor_lists();
  for (std::size_t x = 0; x < cover.vertex_count(); ++x) {
    std::vector<std::size_t> projected;
    projected.reserve(cover_nbrs[x].size());
    for (auto y : cover_nbrs[x]) projected.push_back(projection[y]);
    std::sort(projected.begin(), projected.end());
    if (projected != base_nbrs[projection[x]]) return false;
  }
  return true;
}

} // namespace ihara
