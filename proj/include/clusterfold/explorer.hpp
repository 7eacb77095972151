#ifndef CLUSTERFOLD_EXPLORER_HPP
#define CLUSTERFOLD_EXPLORER_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "clusterfold/fold.hpp"
#include "clusterfold/seed.hpp"

namespace clusterfold {

struct ExplorerError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IncompleteGraph : ExplorerError {
  using ExplorerError::ExplorerError;
};

/// Exchange graph: nodes are seeds up to canonical form, edges single
/// mutations labeled by the mutated vertex (or block) id. Nodes are sorted
/// by canonical key, so equal enumerations print identically regardless of
/// thread count or schedule.
struct ExchangeGraph {
  struct Edge {
    int from = 0;
    int label = 0;
    int to = 0;
    bool operator<(const Edge& o) const {
      if (from != o.from) return from < o.from;
      if (label != o.label) return label < o.label;
      return to < o.to;
    }
    bool operator==(const Edge& o) const {
      return from == o.from && label == o.label && to == o.to;
    }
  };

  std::vector<Seed> nodes;
  std::vector<std::string> keys;  // canonical keys aligned with nodes
  std::vector<Edge> edges;        // directed; involutive pairs; sorted
  int origin = 0;
  bool complete = true;

  std::size_t undirected_edge_count() const;
};

/// Worker count: CLUSTERFOLD_THREADS when set, hardware concurrency otherwise.
unsigned default_thread_count();

constexpr std::size_t kDefaultNodeCap = 1000000;

/// Breadth-first closure under single mutations at all mutable vertices.
/// When the cap is hit the partial graph is returned with complete = false.
/// threads = 0 means default_thread_count().
ExchangeGraph enumerate_ordinary(const Seed& start, std::size_t cap = kDefaultNodeCap,
                                 unsigned threads = 0);

/// Same closure under orbit mutations at all mutable blocks.
ExchangeGraph enumerate_orbit(const Seed& start, const SeedFolding& sf,
                              std::size_t cap = kDefaultNodeCap, unsigned threads = 0);

/// All distinct vertex variables over a complete graph, canonical order.
std::vector<LaurentPoly> cluster_variables(const ExchangeGraph& g);

struct IndependenceReport {
  std::size_t monomial_count = 0;
  std::size_t rank = 0;
  int degree_bound = 0;
  bool independent = false;
  Json to_json() const;
};

/// Linear independence of cluster monomials of total degree <= degree:
/// expands every monomial in the initial variables and computes the exact
/// rational rank of the coefficient matrix.
IndependenceReport check_independence(const ExchangeGraph& g, int degree);

/// Exact rank by fraction-free (Bareiss) elimination.
std::size_t integer_matrix_rank(std::vector<std::vector<Integer>> m);

std::string fingerprint64(const std::string& s);
std::string to_dot(const ExchangeGraph& g);

}  // namespace clusterfold

#endif
