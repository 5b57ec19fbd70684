#include "gdr/graph.hpp"

#include "gdr/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

namespace gdr {
namespace {

constexpr std::pair<GraphName, std::string_view> kNames[] = {
    {GraphName::sequential, "sequential"},
    {GraphName::complete, "complete"},
    {GraphName::parallel_down, "parallel_down"},
    {GraphName::parallel_up, "parallel_up"},
    {GraphName::malitsky_tam, "malitsky_tam"},
    {GraphName::generalized_ryu, "generalized_ryu"},
    {GraphName::custom, "custom"},
};

class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int a) {
        while (parent_[a] != a) {
            parent_[a] = parent_[parent_[a]];
            a = parent_[a];
        }
        return a;
    }
    void unite(int a, int b) { parent_[find(a)] = find(b); }

private:
    std::vector<int> parent_;
};

bool connected(int n, const std::vector<Edge>& edges) {
    DisjointSets sets(n);
    for (const auto& e : edges) {
        sets.unite(e.from, e.to);
    }
    const int root = sets.find(0);
    for (int i = 1; i < n; ++i) {
        if (sets.find(i) != root) {
            return false;
        }
    }
    return true;
}

std::vector<Edge> sequential_edges(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) {
        e.push_back({i, i + 1});
    }
    return e;
}

std::vector<Edge> complete_edges(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            e.push_back({i, j});
        }
    }
    return e;
}

std::vector<Edge> parallel_down_edges(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) {
        e.push_back({i, n - 1});
    }
    return e;
}

std::vector<Edge> parallel_up_edges(int n) {
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i) {
        e.push_back({0, i});
    }
    return e;
}

std::vector<Edge> unique_sorted(std::vector<Edge> e) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    return e;
}

}  // namespace

std::string_view to_string(GraphName name) {
    for (const auto& [value, text] : kNames) {
        if (value == name) {
            return text;
        }
    }
    return "unknown";
}

std::optional<GraphName> parse_graph_name(std::string_view text) {
    for (const auto& [value, name] : kNames) {
        if (name == text) {
            return value;
        }
    }
    return std::nullopt;
}

AlgorithmGraph::AlgorithmGraph(int n, std::vector<Edge> edges, std::vector<Edge> sub_edges,
                               GraphName name)
    : n_(n), edges_(std::move(edges)), sub_edges_(std::move(sub_edges)), name_(name) {
    if (n_ < 2) {
        throw InvalidInput("graph: need at least two nodes");
    }
    auto check_edges = [this](std::vector<Edge>& list, const char* which) {
        for (const auto& e : list) {
            if (e.from < 0 || e.to >= n_ || e.from >= e.to) {
                throw InvalidInput(std::string("graph: edge (") + std::to_string(e.from + 1) + "," +
                                   std::to_string(e.to + 1) + ") in " + which +
                                   " is out of range or breaks the node order");
            }
        }
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
            throw InvalidInput(std::string("graph: duplicate edge in ") + which);
        }
    };
    check_edges(edges_, "G");
    check_edges(sub_edges_, "G'");
    if (!std::includes(edges_.begin(), edges_.end(), sub_edges_.begin(), sub_edges_.end())) {
        throw InvalidInput("graph: G' has an edge that is not in G");
    }
    if (!connected(n_, edges_)) {
        throw DisconnectedSubgraph("graph: G is not connected");
    }
    if (!connected(n_, sub_edges_)) {
        throw DisconnectedSubgraph("graph: G' is not a connected spanning subgraph");
    }
}

AlgorithmGraph build_named(GraphName name, int n) {
    if (n < 2) {
        throw InvalidInput("build_named: need n >= 2");
    }
    switch (name) {
        case GraphName::sequential:
            return {n, sequential_edges(n), sequential_edges(n), name};
        case GraphName::complete:
            return {n, complete_edges(n), complete_edges(n), name};
        case GraphName::parallel_down:
            return {n, parallel_down_edges(n), parallel_down_edges(n), name};
        case GraphName::parallel_up:
            return {n, parallel_up_edges(n), parallel_up_edges(n), name};
        case GraphName::malitsky_tam: {
            auto ring = sequential_edges(n);
            ring.push_back({0, n - 1});
            return {n, unique_sorted(std::move(ring)), sequential_edges(n), name};
        }
        case GraphName::generalized_ryu:
            return {n, complete_edges(n), parallel_down_edges(n), name};
        case GraphName::custom:
            break;
    }
    throw InvalidInput("build_named: '" + std::string(to_string(name)) + "' is not a named configuration");
}

AlgorithmGraph build_named(std::string_view name, int n) {
    const auto parsed = parse_graph_name(name);
    if (!parsed) {
        throw InvalidInput("build_named: unknown algorithm '" + std::string(name) + "'");
    }
    return build_named(*parsed, n);
}

Matrix laplacian(const AlgorithmGraph& g) {
    const int n = g.size();
    Matrix l = Matrix::Zero(n, n);
    for (const auto& e : g.sub_edges()) {
        l(e.from, e.from) += 1.0;
        l(e.to, e.to) += 1.0;
        l(e.from, e.to) = -1.0;
        l(e.to, e.from) = -1.0;
    }
    return l;
}

Matrix factor_z(const Matrix& laplacian) {
    const Eigen::Index n = laplacian.rows();
    if (n < 2 || laplacian.cols() != n) {
        throw InvalidInput("factor_z: Laplacian must be square with n >= 2");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> eig(laplacian);
    if (eig.info() != Eigen::Success) {
        throw InvalidInput("factor_z: eigendecomposition failed");
    }
    const Vector& values = eig.eigenvalues();  // ascending
    const Matrix& vectors = eig.eigenvectors();
    const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
    if (values(0) < -1e-10 * scale) {
        throw InvalidInput("factor_z: Laplacian is not positive semidefinite");
    }
    if (values(1) <= 1e-10 * scale) {
        throw DisconnectedSubgraph("factor_z: Laplacian rank is below n-1");
    }
    Matrix z(n, n - 1);
    if (n == 2) {
        // Rank-one closed form; gives exactly (1, -1) for a single edge.
        const double root = std::sqrt(laplacian(0, 0));
        z << root, laplacian(1, 0) / root;
        return z;
    }
    for (Eigen::Index j = 0; j < n - 1; ++j) {
        const Eigen::Index src = n - 1 - j;
        Vector q = vectors.col(src);
        for (Eigen::Index i = 0; i < n; ++i) {
            if (std::abs(q(i)) > 1e-12) {
                if (q(i) < 0) {
                    q = -q;
                }
                break;
            }
        }
        z.col(j) = std::sqrt(values(src)) * q;
    }
    return z;
}

std::vector<int> degree_balance(const AlgorithmGraph& g) {
    std::vector<int> delta(static_cast<std::size_t>(g.size()), 0);
    for (const auto& e : g.edges()) {
        --delta[e.from];
        ++delta[e.to];
    }
    return delta;
}

Vector solve_alpha(const Matrix& z, std::span<const int> delta) {
    if (static_cast<Eigen::Index>(delta.size()) != z.rows()) {
        throw InvalidInput("solve_alpha: delta length does not match Z");
    }
    Vector rhs(z.rows());
    for (Eigen::Index i = 0; i < z.rows(); ++i) {
        rhs(i) = delta[static_cast<std::size_t>(i)];
    }
    Vector alpha = z.colPivHouseholderQr().solve(rhs);
    const double residual = (z * alpha - rhs).norm();
    if (!(residual <= 1e-8)) {
        throw InconsistentSystem("solve_alpha: residual " + std::to_string(residual) +
                                 " exceeds 1e-8");
    }
    return alpha;
}

SplittingOperator build_operator(const AlgorithmGraph& g) {
    const int n = g.size();
    SplittingOperator op{.graph = g,
                         .d_in = std::vector<int>(n, 0),
                         .d_out = std::vector<int>(n, 0),
                         .d = std::vector<int>(n, 0),
                         .in_neighbors = std::vector<std::vector<int>>(n),
                         .laplacian = laplacian(g),
                         .z = {},
                         .delta = degree_balance(g),
                         .alpha = {}};
    for (const auto& e : g.edges()) {
        ++op.d_out[e.from];
        ++op.d_in[e.to];
        op.in_neighbors[e.to].push_back(e.from);
    }
    for (int i = 0; i < n; ++i) {
        op.d[i] = op.d_in[i] + op.d_out[i];
    }
    op.z = factor_z(op.laplacian);
    op.alpha = solve_alpha(op.z, op.delta);
    return op;
}

}  // namespace gdr
