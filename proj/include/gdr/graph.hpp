#pragma once

#include "gdr/subspace.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gdr {

/// Names of the algorithm graphs; `custom` is any user-supplied pair.
enum class GraphName {
    sequential,
    complete,
    parallel_down,
    parallel_up,
    malitsky_tam,
    generalized_ryu,
    custom,
};

/// The six named configurations, in canonical output order.
inline constexpr GraphName kNamedGraphs[] = {
    GraphName::sequential,   GraphName::complete,     GraphName::parallel_down,
    GraphName::parallel_up,  GraphName::malitsky_tam, GraphName::generalized_ryu,
};

std::string_view to_string(GraphName name);
std::optional<GraphName> parse_graph_name(std::string_view text);

/// Directed edge (from, to) with 0-based nodes; order preservation means from < to.
struct Edge {
    int from = 0;
    int to = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/**
 * The pair (G, G') defining one member of the graph-based DR family.
 *
 * Construction validates: n >= 2, every edge respects the node order, no
 * duplicate edges, E' is a subset of E, G is connected and G' is a connected
 * spanning subgraph. Edge lists are kept sorted.
 */
class AlgorithmGraph {
public:
    AlgorithmGraph(int n, std::vector<Edge> edges, std::vector<Edge> sub_edges,
                   GraphName name = GraphName::custom);

    int size() const noexcept { return n_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<Edge>& sub_edges() const noexcept { return sub_edges_; }
    GraphName name() const noexcept { return name_; }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<Edge> sub_edges_;
    GraphName name_;
};

/// Builds one of the six named configurations.
AlgorithmGraph build_named(GraphName name, int n);
AlgorithmGraph build_named(std::string_view name, int n);

/// Laplacian of G'.
Matrix laplacian(const AlgorithmGraph& g);

/**
 * Full-rank factor Z (n x (n-1)) with Z Z^T = L.
 *
 * Columns are sqrt(lambda) q for the n-1 largest eigenpairs, in descending
 * eigenvalue order, with each eigenvector's first nonzero entry made positive.
 * Throws DisconnectedSubgraph when rank(L) != n-1.
 */
Matrix factor_z(const Matrix& laplacian);

/// delta_i = in-degree minus out-degree in G.
std::vector<int> degree_balance(const AlgorithmGraph& g);

/// Solves Z alpha = delta; throws InconsistentSystem if the residual exceeds 1e-8.
Vector solve_alpha(const Matrix& z, std::span<const int> delta);

/// Everything the iteration needs from the graph, precomputed once.
struct SplittingOperator {
    AlgorithmGraph graph;
    std::vector<int> d_in;
    std::vector<int> d_out;
    std::vector<int> d;
    std::vector<std::vector<int>> in_neighbors;
    Matrix laplacian;
    Matrix z;
    std::vector<int> delta;
    Vector alpha;

    int size() const noexcept { return graph.size(); }
};

SplittingOperator build_operator(const AlgorithmGraph& g);

}  // namespace gdr
