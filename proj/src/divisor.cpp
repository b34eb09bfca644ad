#include "chipres/divisor.hpp"

#include <algorithm>
#include <stdexcept>

namespace chipres {

Int divisor_degree(const Divisor& d) {
    Int s = 0;
    for (const Int& v : d) s += v;
    return s;
}

namespace {

template <typename T>
std::vector<T> apply_laplacian(const Multigraph& g, const std::vector<T>& f) {
    std::vector<T> out(g.n(), T(0));
    for (int k = 0; k < g.m(); ++k) {
        T diff = f[g.tail(k)] - f[g.head(k)];
        out[g.tail(k)] += diff;
        out[g.head(k)] -= diff;
    }
    return out;
}

}  // namespace

Divisor laplacian_apply(const Multigraph& g, const std::vector<Int>& f) { return apply_laplacian(g, f); }

PotentialFunctional laplacian_apply(const Multigraph& g, const PotentialFunctional& f) {
    return apply_laplacian(g, f);
}

PotentialFunctional boundary_apply(const Multigraph& g, const EdgeFunctional& sigma) {
    if (static_cast<int>(sigma.size()) != 2 * g.m())
        throw std::invalid_argument("edge functional must have one value per oriented edge");
    PotentialFunctional out(g.n(), Rat(0));
    for (int o = 0; o < 2 * g.m(); ++o) {
        out[g.ohead(o)] += sigma[o];
        out[g.otail(o)] -= sigma[o];
    }
    return out;
}

RatMatrix greens_matrix(const Multigraph& g, int q) {
    const int n = g.n();
    RatMatrix j(n, n);
    if (n == 1) return j;
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
        if (v != q) keep.push_back(v);
    RatMatrix L = laplacian(g, q).to_rational();
    // Column p of the inverse gives j_q(p, .) restricted off q.
    for (size_t pi = 0; pi < keep.size(); ++pi) {
        std::vector<Rat> rhs(keep.size(), Rat(0));
        rhs[pi] = 1;
        auto x = rat_solve(L, rhs);
        if (!x) throw std::logic_error("reduced Laplacian must be invertible");
        for (size_t vi = 0; vi < keep.size(); ++vi) j.at(keep[pi], keep[vi]) = (*x)[vi];
    }
    return j;
}

Rat energy_pairing(const RatMatrix& greens, const Divisor& d1, const Divisor& d2) {
    if (divisor_degree(d1) != 0 || divisor_degree(d2) != 0)
        throw std::invalid_argument("energy pairing needs degree-zero divisors");
    Rat acc = 0;
    const int n = greens.rows();
    for (int u = 0; u < n; ++u) {
        if (d1[u] == 0) continue;
        for (int v = 0; v < n; ++v) {
            if (d2[v] == 0) continue;
            acc += Rat(d1[u]) * greens.at(u, v) * Rat(d2[v]);
        }
    }
    return acc;
}

Rat energy_pairing(const Multigraph& g, int q, const Divisor& d1, const Divisor& d2) {
    return energy_pairing(greens_matrix(g, q), d1, d2);
}

PotentialWeights bq_theta(const Multigraph& g, int q) {
    const int n = g.n();
    RatMatrix j = greens_matrix(g, q);
    PotentialWeights w;
    w.b_q.assign(n, Rat(0));
    for (int v = 0; v < n; ++v)
        for (int p = 0; p < n; ++p) w.b_q[v] += j.at(p, v);
    // Clear denominators: kappa * b_q is integral since j values lie in
    // (1/kappa) Z; then divide out the common gcd.
    Int kappa = spanning_tree_count(g, q);
    std::vector<Int> scaled(n);
    Int common = kappa;
    for (int v = 0; v < n; ++v) {
        Rat s = w.b_q[v] * Rat(kappa);
        if (!is_integer(s)) throw std::logic_error("kappa * b_q must be integral");
        scaled[v] = num(s);
        common = boost::multiprecision::gcd(common, scaled[v]);
    }
    if (common == 0) common = 1;
    w.theta_q.resize(n);
    for (int v = 0; v < n; ++v) w.theta_q[v] = scaled[v] / common;
    w.lambda_q.resize(2 * g.m());
    for (int o = 0; o < 2 * g.m(); ++o) w.lambda_q[o] = w.theta_q[g.ohead(o)];
    return w;
}

namespace {

bool cone_test(const Multigraph& g, int q, const PotentialFunctional& gamma) {
    if (g.is_biconnected()) {
        for (int p = 0; p < g.n(); ++p)
            if (p != q && !(gamma[p] > 0)) return false;
        return true;
    }
    for (const Cut& cut : enumerate_bonds(g, q)) {
        Rat s = 0;
        for (int p = 0; p < g.n(); ++p)
            if (cut.other >> p & 1) s += gamma[p];
        if (!(s > 0)) return false;
    }
    return true;
}

}  // namespace

bool cone_membership(const Multigraph& g, int q, ConeKind kind, const std::vector<Rat>& fnl) {
    if (kind == ConeKind::MCone) {
        if (static_cast<int>(fnl.size()) != g.n())
            throw std::invalid_argument("M-cone candidates are vertex functionals (one value per vertex)");
        return cone_test(g, q, laplacian_apply(g, fnl));
    }
    if (static_cast<int>(fnl.size()) != 2 * g.m())
        throw std::invalid_argument("O-cone candidates are edge functionals (one value per oriented edge)");
    return cone_test(g, q, boundary_apply(g, fnl));
}

namespace {

/// Burnt set of Dhar's algorithm started at q; requires d >= 0 off q.
VertexSet burn(const Multigraph& g, int q, const Divisor& d) {
    VertexSet burnt = VertexSet(1) << q;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.n(); ++v) {
            if (burnt >> v & 1) continue;
            Int threat = 0;
            for (int k : g.incident_edges(v)) {
                int w = g.tail(k) == v ? g.head(k) : g.tail(k);
                if (burnt >> w & 1) ++threat;
            }
            if (d[v] < threat) {
                burnt |= VertexSet(1) << v;
                changed = true;
            }
        }
    }
    return burnt;
}

}  // namespace

bool is_q_reduced(const Multigraph& g, int q, const Divisor& d) {
    for (int v = 0; v < g.n(); ++v)
        if (v != q && d[v] < 0) return false;
    return burn(g, q, d) == g.full_set();
}

Divisor q_reduce(const Multigraph& g, int q, const Divisor& d) {
    const int n = g.n();
    Divisor cur = d;
    if (n == 1) return cur;

    // Phase 1: make the divisor effective off q by borrowing along distance
    // levels, farthest first. Borrowing at the superlevel set A_k only
    // affects levels k and k-1.
    std::vector<int> dist = g.bfs_distances(q);
    int maxd = *std::max_element(dist.begin(), dist.end());
    for (int k = maxd; k >= 1; --k) {
        Int times = 0;
        for (int v = 0; v < n; ++v) {
            if (dist[v] != k || cur[v] >= 0) continue;
            Int down = 0;
            for (int e : g.incident_edges(v)) {
                int w = g.tail(e) == v ? g.head(e) : g.tail(e);
                if (dist[w] < k) ++down;
            }
            times = std::max(times, ceil_div(-cur[v], down));
        }
        if (times == 0) continue;
        std::vector<Int> chi(n, Int(0));
        for (int v = 0; v < n; ++v)
            if (dist[v] >= k) chi[v] = times;
        Divisor delta = laplacian_apply(g, chi);
        for (int v = 0; v < n; ++v) cur[v] += delta[v];
    }

    // Phase 2: repeatedly fire the maximal unburnt set.
    while (true) {
        VertexSet burnt = burn(g, q, cur);
        if (burnt == g.full_set()) break;
        std::vector<Int> chi(n, Int(0));
        for (int v = 0; v < n; ++v)
            if (!(burnt >> v & 1)) chi[v] = 1;
        Divisor delta = laplacian_apply(g, chi);
        for (int v = 0; v < n; ++v) cur[v] -= delta[v];
    }
    return cur;
}

bool linearly_equivalent(const Multigraph& g, int q, const Divisor& d1, const Divisor& d2) {
    if (divisor_degree(d1) != divisor_degree(d2)) return false;
    if (g.n() == 1) return true;
    std::vector<Rat> rhs;
    for (int v = 0; v < g.n(); ++v)
        if (v != q) rhs.emplace_back(d1[v] - d2[v]);
    auto x = rat_solve(laplacian(g, q).to_rational(), rhs);
    if (!x) return false;
    for (const Rat& v : *x)
        if (!is_integer(v)) return false;
    return true;
}

std::vector<Int> pic0_invariants(const Multigraph& g, int q) {
    std::vector<Int> out;
    if (g.n() == 1) return out;
    SmithResult s = smith_normal_form(laplacian(g, q));
    for (const Int& f : s.factors)
        if (f != 1) out.push_back(f);
    return out;
}

}  // namespace chipres
