#ifndef RDS_GRAPH_HPP
#define RDS_GRAPH_HPP

#include <utility>
#include <vector>

#include "rds/row.hpp"

namespace rds {

// Vertex labels are 1-based everywhere.  A VertexSet is canonical: sorted
// strictly increasing.  That is also the order sets are compared and emitted.
using VertexSet = std::vector<int>;

// Simple undirected graph, immutable once built.  edges is canonical
// (each pair a < b, list sorted); adjacency[v] lists v's neighbours ascending.
struct GraphSpec {
  int order = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> adjacency;  // index 0 unused
};

GraphSpec make_graph(int order, std::vector<std::pair<int, int>> edges);
GraphSpec make_cycle(int n);  // n >= 3
GraphSpec make_path(int n);   // n >= 1 (a single vertex has no edges)

// S is restrained dominating iff every vertex outside S has at least one
// neighbour inside S and at least one neighbour outside S.  Vacuously true
// for S = V.  Throws InvalidVertex unless s is canonical with labels in 1..n.
bool is_restrained_dominating(const GraphSpec& g, const VertexSet& s);

// Subset enumeration refuses orders beyond this unless the caller raises the
// limit explicitly (the CLI additionally honours $RDS_BRUTE_LIMIT).
inline constexpr int kDefaultBruteForceLimit = 26;

// Every restrained dominating set of size i, lexicographically sorted.
// i outside 0..n yields an empty list.  Throws OrderTooLarge past the limit.
std::vector<VertexSet> enumerate_rds(const GraphSpec& g, int i,
                                     int brute_force_limit = kDefaultBruteForceLimit);

// Same walk, counting only.
Count count_rds(const GraphSpec& g, int i,
                int brute_force_limit = kDefaultBruteForceLimit);

// Full row of counts keyed by cardinality, iterating the size-i combinations
// for each i in turn.
CoefficientRow count_rds_by_cardinality(const GraphSpec& g,
                                        int brute_force_limit = kDefaultBruteForceLimit);

// Sizes of the connected components induced by V \ S, ascending.
// (For cycles these are all 2 whenever S is restrained dominating.)
std::vector<int> complement_component_sizes(const GraphSpec& g, const VertexSet& s);

}  // namespace rds

#endif  // RDS_GRAPH_HPP
