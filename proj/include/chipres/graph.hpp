#pragma once

#include "chipres/linalg.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace chipres {

/// Vertex subsets are bitmasks over vertex indices (n is small everywhere).
using VertexSet = std::uint32_t;

/// Finite connected multigraph without loops. Vertices and edges are
/// identified by their position in the input; edge k carries the reference
/// orientation tail(k) -> head(k) taken from the input order of endpoints.
///
/// Oriented edges are encoded as 2k (the reference direction e_k) and 2k+1
/// (the inverse). All orderings downstream derive from these indices.
class Multigraph {
public:
    Multigraph(std::vector<std::string> vertex_names, std::vector<std::pair<int, int>> edges);

    int n() const { return static_cast<int>(names_.size()); }
    int m() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::string& name(int v) const { return names_[v]; }
    int vertex_index(const std::string& name) const;  // throws on unknown name

    int tail(int edge) const { return edges_[edge].first; }
    int head(int edge) const { return edges_[edge].second; }

    // Oriented-edge accessors; o ranges over 0..2m-1.
    int ohead(int o) const { return (o & 1) ? edges_[o >> 1].first : edges_[o >> 1].second; }
    int otail(int o) const { return (o & 1) ? edges_[o >> 1].second : edges_[o >> 1].first; }
    static int inverse(int o) { return o ^ 1; }
    static int edge_of(int o) { return o >> 1; }

    int degree(int v) const { return degree_[v]; }
    int multiplicity(int u, int v) const { return mult_[static_cast<size_t>(u) * n() + v]; }
    const std::vector<int>& incident_edges(int v) const { return incident_[v]; }

    bool subset_connected(VertexSet s) const;
    std::vector<int> bfs_distances(int root) const;
    bool is_biconnected() const;

    VertexSet full_set() const { return (n() >= 32) ? ~VertexSet(0) : ((VertexSet(1) << n()) - 1); }

private:
    std::vector<std::string> names_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> degree_;
    std::vector<int> mult_;  // n x n edge multiplicities
    std::vector<std::vector<int>> incident_;
};

/// A cut [A, A^c] with q on the A side; a bond when both sides induce
/// connected subgraphs.
struct Cut {
    VertexSet side_with_q = 0;
    VertexSet other = 0;
    bool is_bond = false;
};

/// Spanning tree plus its orientation away from q (unique source at q).
struct SpanningTree {
    std::vector<int> edge_indices;       // sorted
    std::vector<int> sourced_orientation;  // oriented-edge ids of O_T, sorted
};

/// Parses the graph file formats described in the README: either the JSON
/// object {"vertices": [...], "edges": [[a, b], ...]} or plain text with the
/// vertex list on the first line and one edge per following line.
Multigraph parse_graph(const std::string& text);

/// Full n x n Laplacian, or with row/column `reduced_at` removed.
IntMatrix laplacian(const Multigraph& g, int reduced_at = -1);

/// All cuts [A, A^c] with q in A; bonds only unless all_cuts. Deterministic
/// order: ascending bitmask of A^c.
std::vector<Cut> enumerate_cuts(const Multigraph& g, int q, bool all_cuts);

inline std::vector<Cut> enumerate_bonds(const Multigraph& g, int q) { return enumerate_cuts(g, q, false); }

/// Matrix-tree count, exact.
Int spanning_tree_count(const Multigraph& g, int q);

/// All spanning trees in lexicographic order of their edge index sets, each
/// with the orientation O_T rooted at q.
std::vector<SpanningTree> spanning_trees(const Multigraph& g, int q);

}  // namespace chipres
