#include "ihara/graph.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <queue>
#include <sstream>

#include "ihara/errors.hpp"

namespace ihara {

struct MultiGraph::Cache {
  std::once_flag spectrum_once;
  SpectrumData spectrum;
};

MultiGraph::MultiGraph(std::size_t vertex_count, std::vector<Edge> edges, std::string name)
    : vertex_count_(vertex_count), edges_(std::move(edges)), name_(std::move(name)),
      degrees_(vertex_count, 0), cache_(std::make_shared<Cache>()) {
  if (vertex_count_ == 0) {
    throw InputError("graph must have at least one vertex");
  }
  for (const auto& [a, b] : edges_) {
    if (a >= vertex_count_ || b >= vertex_count_) {
      std::ostringstream msg;
      msg << "edge (" << a << "," << b << ") has an endpoint outside [0," << vertex_count_ << ")";
      throw InputError(msg.str());
    }
    ++degrees_[a];
    ++degrees_[b];
  }
}

int MultiGraph::max_degree() const {
  return *std::max_element(degrees_.begin(), degrees_.end());
}

std::size_t MultiGraph::loop_count() const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.first == e.second; }));
}

Eigen::MatrixXd MultiGraph::adjacency() const {
  const auto n = static_cast<Eigen::Index>(vertex_count_);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [x, y] : edges_) {
    const auto i = static_cast<Eigen::Index>(x);
    const auto j = static_cast<Eigen::Index>(y);
    a(i, j) += 1.0;
    a(j, i) += 1.0;
  }
  return a;
}

std::vector<std::vector<std::size_t>> MultiGraph::neighbor_lists() const {
  std::vector<std::vector<std::size_t>> out(vertex_count_);
  for (std::size_t x = 0; x < vertex_count_; ++x) {
    out[x].reserve(static_cast<std::size_t>(degrees_[x]));
  }
  for (const auto& [x, y] : edges_) {
    out[x].push_back(y);
    out[y].push_back(x);
  }
  return out;
}

std::size_t MultiGraph::component_count() const {
  std::vector<std::size_t> parent(vertex_count_);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::size_t components = vertex_count_;
  for (const auto& [x, y] : edges_) {
    const auto rx = find(x);
    const auto ry = find(y);
    if (rx != ry) {
      parent[rx] = ry;
      --components;
    }
  }
  return components;
}

bool MultiGraph::is_bipartite() const {
  const auto adj = neighbor_lists();
  std::vector<int> color(vertex_count_, -1);
  for (std::size_t s = 0; s < vertex_count_; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<std::size_t> todo;
    todo.push(s);
    while (!todo.empty()) {
      const auto x = todo.front();
      todo.pop();
      for (auto y : adj[x]) {
        if (color[y] == -1) {
          color[y] = 1 - color[x];
          todo.push(y);
        } else if (color[y] == color[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

const SpectrumData& MultiGraph::spectrum() const {
  std::call_once(cache_->spectrum_once, [this] { cache_->spectrum = ihara::spectrum(*this); });
  return cache_->spectrum;
}

MultiGraph build_graph(std::size_t vertex_count, std::vector<Edge> edges, std::string name) {
  return MultiGraph(vertex_count, std::move(edges), std::move(name));
}

RegularityInfo regularity(const MultiGraph& g) {
  RegularityInfo info;
  info.degree_sequence = g.degrees();
  info.chi = g.euler_characteristic();
  const auto& d = info.degree_sequence;
  info.is_regular = std::all_of(d.begin(), d.end(), [&](int x) { return x == d.front(); });
  info.q = info.is_regular ? d.front() - 1 : 0;
  return info;
}

SpectrumData spectrum(const MultiGraph& g) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g.adjacency(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericError("adjacency eigensolver did not converge for graph '" + g.name() + "'");
  }
  SpectrumData out;
  const auto& ev = solver.eigenvalues();
  out.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  out.spectral_bound = static_cast<double>(g.max_degree());
  return out;
}

namespace named {

MultiGraph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return MultiGraph(n, std::move(edges), "C" + std::to_string(n));
}

MultiGraph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return MultiGraph(n, std::move(edges), "K" + std::to_string(n));
}

MultiGraph bouquet(std::size_t loops) {
  return MultiGraph(1, std::vector<Edge>(loops, Edge{0, 0}), "bouquet" + std::to_string(loops));
}

MultiGraph path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return MultiGraph(n, std::move(edges), "P" + std::to_string(n));
}

MultiGraph petersen() {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);         // outer cycle
    edges.emplace_back(i, i + 5);               // spokes
    edges.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
  }
  return MultiGraph(10, std::move(edges), "petersen");
}

} // namespace named

} // namespace ihara
