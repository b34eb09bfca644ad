#include "chipres/graph.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace chipres {

Multigraph::Multigraph(std::vector<std::string> vertex_names, std::vector<std::pair<int, int>> edges)
    : names_(std::move(vertex_names)), edges_(std::move(edges)) {
    const int nv = n();
    if (nv < 1) throw std::invalid_argument("graph must have at least one vertex");
    {
        std::map<std::string, int> seen;
        for (int v = 0; v < nv; ++v)
            if (!seen.emplace(names_[v], v).second)
                throw std::invalid_argument("duplicate vertex name: " + names_[v]);
    }
    if (nv > 30) throw std::invalid_argument("graph too large for this library (n <= 30)");
    degree_.assign(nv, 0);
    mult_.assign(static_cast<size_t>(nv) * nv, 0);
    incident_.assign(nv, {});
    for (int k = 0; k < m(); ++k) {
        auto [t, h] = edges_[k];
        if (t < 0 || t >= nv || h < 0 || h >= nv) throw std::invalid_argument("edge endpoint out of range");
        if (t == h) throw std::invalid_argument("loop edge rejected: " + names_[t]);
        ++degree_[t];
        ++degree_[h];
        ++mult_[static_cast<size_t>(t) * nv + h];
        ++mult_[static_cast<size_t>(h) * nv + t];
        incident_[t].push_back(k);
        incident_[h].push_back(k);
    }
    if (!subset_connected(full_set())) throw std::invalid_argument("graph must be connected");
}

int Multigraph::vertex_index(const std::string& name) const {
    for (int v = 0; v < n(); ++v)
        if (names_[v] == name) return v;
    throw std::invalid_argument("unknown vertex name: " + name);
}

bool Multigraph::subset_connected(VertexSet s) const {
    if (s == 0) return true;
    int start = 0;
    while (!(s >> start & 1)) ++start;
    VertexSet seen = VertexSet(1) << start;
    std::vector<int> stack{start};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int k : incident_[v]) {
            int w = tail(k) == v ? head(k) : tail(k);
            if ((s >> w & 1) && !(seen >> w & 1)) {
                seen |= VertexSet(1) << w;
                stack.push_back(w);
            }
        }
    }
    return seen == s;
}

std::vector<int> Multigraph::bfs_distances(int root) const {
    std::vector<int> dist(n(), -1);
    dist[root] = 0;
    std::vector<int> queue{root};
    for (size_t i = 0; i < queue.size(); ++i) {
        int v = queue[i];
        for (int k : incident_[v]) {
            int w = tail(k) == v ? head(k) : tail(k);
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

bool Multigraph::is_biconnected() const {
    if (n() <= 2) return true;
    // No articulation point: removing any vertex leaves the rest connected.
    for (int v = 0; v < n(); ++v) {
        VertexSet rest = full_set() & ~(VertexSet(1) << v);
        if (!subset_connected(rest)) return false;
    }
    return true;
}

namespace {

Multigraph from_lists(const std::vector<std::string>& vertices,
                      const std::vector<std::pair<std::string, std::string>>& edges) {
    std::map<std::string, int> index;
    for (size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> es;
    es.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        auto ia = index.find(a), ib = index.find(b);
        if (ia == index.end()) throw std::invalid_argument("unknown vertex name: " + a);
        if (ib == index.end()) throw std::invalid_argument("unknown vertex name: " + b);
        es.emplace_back(ia->second, ib->second);
    }
    return Multigraph(vertices, es);
}

}  // namespace

Multigraph parse_graph(const std::string& text) {
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw std::invalid_argument("empty graph description");
    if (text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument(std::string("malformed graph JSON: ") + e.what());
        }
        if (!j.contains("vertices") || !j.contains("edges"))
            throw std::invalid_argument("graph JSON needs \"vertices\" and \"edges\"");
        std::vector<std::string> vertices = j["vertices"].get<std::vector<std::string>>();
        std::vector<std::pair<std::string, std::string>> edges;
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2) throw std::invalid_argument("each edge must be a pair");
            edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
        return from_lists(vertices, edges);
    }
    // Plain text: vertices on the first line, then one edge per line.
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> vertices;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) vertices.push_back(tok);
        if (!vertices.empty()) break;
    }
    std::vector<std::pair<std::string, std::string>> edges;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;
        if (!(ls >> b) || (ls >> extra)) throw std::invalid_argument("edge lines must contain two vertex names");
        edges.emplace_back(a, b);
    }
    return from_lists(vertices, edges);
}

IntMatrix laplacian(const Multigraph& g, int reduced_at) {
    const int n = g.n();
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
        if (v != reduced_at) keep.push_back(v);
    IntMatrix L(static_cast<int>(keep.size()), static_cast<int>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = 0; j < keep.size(); ++j)
            L.at(static_cast<int>(i), static_cast<int>(j)) =
                (keep[i] == keep[j]) ? Int(g.degree(keep[i])) : Int(-g.multiplicity(keep[i], keep[j]));
    return L;
}

std::vector<Cut> enumerate_cuts(const Multigraph& g, int q, bool all_cuts) {
    std::vector<Cut> cuts;
    const VertexSet full = g.full_set();
    for (VertexSet b = 1; b <= full; ++b) {
        if (b & (VertexSet(1) << q)) continue;
        Cut c;
        c.other = b;
        c.side_with_q = full & ~b;
        c.is_bond = g.subset_connected(b) && g.subset_connected(c.side_with_q);
        if (all_cuts || c.is_bond) cuts.push_back(c);
    }
    return cuts;
}

Int spanning_tree_count(const Multigraph& g, int q) {
    if (g.n() == 1) return 1;
    RankDet rd = rank_det(laplacian(g, q).to_rational());
    return num(rd.det);
}

std::vector<SpanningTree> spanning_trees(const Multigraph& g, int q) {
    const int n = g.n(), m = g.m();
    std::vector<SpanningTree> trees;
    if (n == 1) {
        trees.push_back({});
        return trees;
    }
    std::vector<int> choice;
    std::vector<int> parent(n);

    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    // Lexicographic backtracking over edge index sets of size n-1.
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(choice.size()) == n - 1) {
            SpanningTree t;
            t.edge_indices = choice;
            // Orient every tree edge away from q by BFS through tree edges.
            std::vector<int> dist(n, -1);
            dist[q] = 0;
            std::vector<int> queue{q};
            std::vector<int> oriented;
            for (size_t i = 0; i < queue.size(); ++i) {
                int v = queue[i];
                for (int k : choice) {
                    int w = -1;
                    if (g.tail(k) == v) w = g.head(k);
                    else if (g.head(k) == v) w = g.tail(k);
                    if (w < 0 || dist[w] >= 0) continue;
                    dist[w] = dist[v] + 1;
                    oriented.push_back(g.tail(k) == v ? 2 * k : 2 * k + 1);
                    queue.push_back(w);
                }
            }
            std::sort(oriented.begin(), oriented.end());
            t.sourced_orientation = std::move(oriented);
            trees.push_back(std::move(t));
            return;
        }
        int need = n - 1 - static_cast<int>(choice.size());
        for (int k = next; k + need <= m; ++k) {
            int a = find(g.tail(k)), b = find(g.head(k));
            if (a == b) continue;  // cycle
            std::vector<int> saved = parent;
            parent[a] = b;
            choice.push_back(k);
            self(self, k + 1);
            choice.pop_back();
            parent = saved;
        }
    };
    for (int v = 0; v < n; ++v) parent[v] = v;
    rec(rec, 0);
    return trees;
}

}  // namespace chipres
