#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace ihara {

using Complex = std::complex<double>;
using Edge = std::pair<std::size_t, std::size_t>;

struct RegularityInfo {
  bool is_regular = false;
  int q = 0; // meaningful only when regular: common degree is q + 1
  std::vector<int> degree_sequence;
  long chi = 0;
};

struct SpectrumData {
  std::vector<double> eigenvalues; // ascending, with multiplicity
  double spectral_bound = 0.0;     // max degree
};

/// Finite undirected multigraph. Loops and parallel edges are allowed; a loop
/// contributes 2 to the degree and 2 to the adjacency diagonal.
///
/// Immutable after construction. The spectrum is computed lazily once and
/// shared between copies, so a graph can be handed to concurrent workers.
class MultiGraph {
public:
  MultiGraph(std::size_t vertex_count, std::vector<Edge> edges, std::string name = {});

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& name() const { return name_; }

  long euler_characteristic() const {
    return static_cast<long>(vertex_count_) - static_cast<long>(edges_.size());
  }
  int degree(std::size_t x) const { return degrees_.at(x); }
  const std::vector<int>& degrees() const { return degrees_; }
  int max_degree() const;
  std::size_t loop_count() const;

  Eigen::MatrixXd adjacency() const;
  /// For each vertex, the other endpoint of every incident edge-end (a loop
  /// appears twice).
  std::vector<std::vector<std::size_t>> neighbor_lists() const;

  std::size_t component_count() const;
  bool is_connected() const { return component_count() == 1; }
  bool is_bipartite() const;

  const SpectrumData& spectrum() const;

private:
  struct Cache;

  std::size_t vertex_count_;
  std::vector<Edge> edges_;
  std::string name_;
  std::vector<int> degrees_;
  std::shared_ptr<Cache> cache_;
};

MultiGraph build_graph(std::size_t vertex_count, std::vector<Edge> edges, std::string name = {});

RegularityInfo regularity(const MultiGraph& g);

/// Dense symmetric eigensolve of the adjacency operator. Throws NumericError
/// if the solver does not converge.
SpectrumData spectrum(const MultiGraph& g);

// Small named graphs used throughout tests, examples, and the CLI corpus.
namespace named {
MultiGraph cycle(std::size_t n);
MultiGraph complete(std::size_t n);
MultiGraph bouquet(std::size_t loops);
MultiGraph path(std::size_t n);
MultiGraph petersen();
} // namespace named

} // namespace ihara
