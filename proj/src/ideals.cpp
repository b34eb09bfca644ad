#include "chipres/ideals.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace chipres {

std::string var_name(const Multigraph& g, Ring ring, int var) {
    if (ring == Ring::R) return "x" + std::to_string(var + 1);
    int k = var >> 1;
    return (var & 1) ? "y_eb" + std::to_string(k + 1) : "y_e" + std::to_string(k + 1);
}

std::string mono_string(const Multigraph& g, const Monomial& m) {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < m.exp.size(); ++i) {
        if (m.exp[i] == 0) continue;
        if (!first) out << "*";
        out << var_name(g, m.ring, static_cast<int>(i));
        if (m.exp[i] != 1) out << "^" << m.exp[i];
        first = false;
    }
    if (first) out << "1";
    return out.str();
}

std::map<std::string, int> mono_exponent_map(const Multigraph& g, const Monomial& m) {
    std::map<std::string, int> out;
    for (size_t i = 0; i < m.exp.size(); ++i)
        if (m.exp[i] != 0) out[var_name(g, m.ring, static_cast<int>(i))] = m.exp[i];
    return out;
}

Monomial mono_parse(const Multigraph& g, Ring ring, const std::string& text) {
    int nvars = ring == Ring::R ? g.n() : 2 * g.m();
    Monomial m = Monomial::one(ring, nvars);
    if (text == "1" || text.empty()) return m;
    std::istringstream in(text);
    std::string factor;
    while (std::getline(in, factor, '*')) {
        std::string name = factor;
        int e = 1;
        if (auto pos = factor.find('^'); pos != std::string::npos) {
            name = factor.substr(0, pos);
            e = std::stoi(factor.substr(pos + 1));
        }
        int var = -1;
        for (int i = 0; i < nvars; ++i)
            if (var_name(g, ring, i) == name) { var = i; break; }
        if (var < 0) throw std::invalid_argument("unknown variable: " + name);
        m.exp[var] += e;
        if (m.exp[var] < 0) m.laurent = true;
    }
    return m;
}

namespace {

// D(A, B): for v in A, the number of edges from v into B.
Monomial cut_divisor_monomial(const Multigraph& g, VertexSet a, VertexSet b) {
    Monomial m = Monomial::one(Ring::R, g.n());
    for (int k = 0; k < g.m(); ++k) {
        int t = g.tail(k), h = g.head(k);
        if ((a >> t & 1) && (b >> h & 1)) ++m.exp[t];
        if ((a >> h & 1) && (b >> t & 1)) ++m.exp[h];
    }
    return m;
}

// Product over oriented edges with head in A and tail in B.
Monomial cut_edge_monomial(const Multigraph& g, VertexSet heads, VertexSet tails) {
    Monomial m = Monomial::one(Ring::S, 2 * g.m());
    for (int o = 0; o < 2 * g.m(); ++o)
        if ((heads >> g.ohead(o) & 1) && (tails >> g.otail(o) & 1)) m.exp[o] = 1;
    return m;
}

}  // namespace

GeneratingSet cut_generators(const Multigraph& g, int q, IdealKind ideal, bool minimal) {
    GeneratingSet out;
    out.ideal = ideal;
    out.minimal = minimal;
    for (const Cut& cut : enumerate_cuts(g, q, !minimal)) {
        switch (ideal) {
            case IdealKind::IG:
                out.binomials.push_back({cut_divisor_monomial(g, cut.other, cut.side_with_q),
                                         cut_divisor_monomial(g, cut.side_with_q, cut.other)});
                break;
            case IdealKind::MG:
                out.monomials.push_back(cut_divisor_monomial(g, cut.other, cut.side_with_q));
                break;
            case IdealKind::JG:
                out.binomials.push_back({cut_edge_monomial(g, cut.other, cut.side_with_q),
                                         cut_edge_monomial(g, cut.side_with_q, cut.other)});
                break;
            case IdealKind::OG:
                out.monomials.push_back(cut_edge_monomial(g, cut.other, cut.side_with_q));
                break;
        }
    }
    return out;
}

TermOrder grevlex_q_order(const Multigraph& g, int q) {
    TermOrder order;
    order.kind = TermOrder::Kind::GrevlexQ;
    std::vector<int> dist = g.bfs_distances(q);
    order.rank_of_var.resize(g.n());
    std::iota(order.rank_of_var.begin(), order.rank_of_var.end(), 0);
    std::stable_sort(order.rank_of_var.begin(), order.rank_of_var.end(),
                     [&](int a, int b) { return dist[a] < dist[b]; });
    return order;
}

bool grevlex_q_less(const Multigraph& g, int q, const Monomial& a, const Monomial& b) {
    if (a.ring != Ring::R || b.ring != Ring::R)
        throw std::invalid_argument("grevlex_q compares monomials in the vertex ring only");
    return grevlex_q_order(g, q).less(a, b);
}

Monomial normal_form_IG(const Multigraph& g, int q, const Monomial& m) {
    if (m.ring != Ring::R) throw std::invalid_argument("normal_form_IG needs a vertex-ring monomial");
    if (m.laurent) throw std::invalid_argument("normal_form_IG needs a true monomial");
    Divisor d(m.exp.begin(), m.exp.end());
    Divisor r = q_reduce(g, q, d);
    Monomial out = Monomial::one(Ring::R, g.n());
    for (int v = 0; v < g.n(); ++v) {
        if (r[v] < 0) throw std::logic_error("normal form of an effective divisor must stay effective");
        out.exp[v] = static_cast<int>(r[v]);
    }
    return out;
}

Monomial specialize_phi(const Multigraph& g, const Monomial& m) {
    if (m.ring != Ring::S) throw std::invalid_argument("specialize_phi needs an edge-ring monomial");
    Monomial out = Monomial::one(Ring::R, g.n());
    for (int o = 0; o < 2 * g.m(); ++o) out.exp[g.ohead(o)] += m.exp[o];
    out.laurent = false;
    for (int e : out.exp)
        if (e < 0) out.laurent = true;
    return out;
}

Binomial specialize_phi(const Multigraph& g, const Binomial& b) {
    return {specialize_phi(g, b.lead), specialize_phi(g, b.trail)};
}

std::vector<FacetPrime> facets_and_primes(const Multigraph& g, int q) {
    std::vector<FacetPrime> out;
    for (SpanningTree& t : spanning_trees(g, q)) {
        FacetPrime fp;
        fp.prime = t.sourced_orientation;
        std::vector<bool> in_tree(2 * g.m(), false);
        for (int o : t.sourced_orientation) in_tree[o] = true;
        for (int o = 0; o < 2 * g.m(); ++o)
            if (!in_tree[o]) fp.facet.push_back(o);
        fp.tree = std::move(t);
        out.push_back(std::move(fp));
    }
    return out;
}

SpanningTree find_facet(const Multigraph& g, int q, const Monomial& m) {
    if (m.ring != Ring::S) throw std::invalid_argument("find_facet needs an edge-ring monomial");
    if (!m.squarefree()) throw std::invalid_argument("find_facet needs a squarefree monomial");
    for (const Monomial& gen : cut_generators(g, q, IdealKind::OG, true).monomials)
        if (mono_divides(gen, m)) throw std::invalid_argument("monomial lies in the ideal");

    SpanningTree t;
    VertexSet a = VertexSet(1) << q;
    while (a != g.full_set()) {
        int pick = -1;
        for (int o = 0; o < 2 * g.m(); ++o) {
            if (!(a >> g.otail(o) & 1) || (a >> g.ohead(o) & 1)) continue;
            if (m.exp[o] != 0) continue;
            pick = o;
            break;
        }
        if (pick < 0) throw std::logic_error("frontier exhausted; monomial was in the ideal after all");
        t.edge_indices.push_back(Multigraph::edge_of(pick));
        t.sourced_orientation.push_back(pick);
        a |= VertexSet(1) << g.ohead(pick);
    }
    std::sort(t.edge_indices.begin(), t.edge_indices.end());
    std::sort(t.sourced_orientation.begin(), t.sourced_orientation.end());
    return t;
}

LsopSets lsop_sets(const Multigraph& g, int q, const std::map<int, int>& distinguished_in_edges) {
    LsopSets sets;
    sets.distinguished.assign(g.n(), -1);
    for (auto [v, o] : distinguished_in_edges) {
        if (v < 0 || v >= g.n() || o < 0 || o >= 2 * g.m())
            throw std::invalid_argument("distinguished in-edge out of range");
        if (g.ohead(o) != v) throw std::invalid_argument("distinguished edge must point into its vertex");
        sets.distinguished[v] = o;
    }
    for (int v = 0; v < g.n(); ++v) {
        if (sets.distinguished[v] >= 0) continue;
        for (int o = 0; o < 2 * g.m(); ++o)
            if (g.ohead(o) == v) { sets.distinguished[v] = o; break; }
    }
    for (int v = 0; v < g.n(); ++v) {
        for (int o = 0; o < 2 * g.m(); ++o)
            if (g.ohead(o) == v && o != sets.distinguished[v])
                sets.L.push_back({o, sets.distinguished[v]});
    }
    sets.Lq = sets.L;
    sets.Lq.push_back({sets.distinguished[q], -1});
    return sets;
}

int lsop_facet_rank(const Multigraph& g, int q, const LsopSets& sets, const std::vector<int>& facet) {
    std::vector<int> col_of(2 * g.m(), -1);
    for (size_t i = 0; i < facet.size(); ++i) col_of[facet[i]] = static_cast<int>(i);
    RatMatrix m(static_cast<int>(sets.Lq.size()), static_cast<int>(facet.size()));
    for (size_t r = 0; r < sets.Lq.size(); ++r) {
        const LinearForm& f = sets.Lq[r];
        if (col_of[f.plus_var] >= 0) m.at(static_cast<int>(r), col_of[f.plus_var]) += 1;
        if (f.minus_var >= 0 && col_of[f.minus_var] >= 0) m.at(static_cast<int>(r), col_of[f.minus_var]) -= 1;
    }
    return rank_of(m);
}

bool lsop_is_valid(const Multigraph& g, int q, const LsopSets& sets) {
    if (static_cast<int>(sets.L.size()) != 2 * g.m() - g.n()) return false;
    if (static_cast<int>(sets.Lq.size()) != 2 * g.m() - g.n() + 1) return false;
    for (const FacetPrime& fp : facets_and_primes(g, q))
        if (lsop_facet_rank(g, q, sets, fp.facet) != static_cast<int>(fp.facet.size())) return false;
    return true;
}

Int parking_count(const Multigraph& g, int q) {
    const int n = g.n();
    if (n == 1) return 1;
    Divisor d(n, Int(0));
    Int count = 0;
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            if (is_q_reduced(g, q, d)) ++count;
            return;
        }
        if (v == q) {
            self(self, v + 1);
            return;
        }
        for (int c = 0; c < g.degree(v); ++c) {
            d[v] = c;
            self(self, v + 1);
        }
        d[v] = 0;
    };
    rec(rec, 0);
    return count;
}

}  // namespace chipres
