#include "chipres/cells.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace chipres {

int worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    int workers = hw ? static_cast<int>(hw) : 1;
    if (const char* env = std::getenv("CHIPRES_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) workers = std::min(workers, cap);
    }
    return std::max(1, workers);
}

namespace {

/// Runs fn(i) for i in [0, count) on up to worker_count() threads.
template <typename Fn>
void parallel_for(int count, Fn&& fn) {
    int workers = std::min(worker_count(), count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& t : pool) t.join();
}

}  // namespace

// ---------------------------------------------------------------------------
// Enumeration of acyclic partial orientations
// ---------------------------------------------------------------------------

namespace {

struct PartitionWalker {
    const Multigraph& g;
    int q;
    CellMode mode;
    std::vector<APOrientation>* out;

    std::vector<int> block_of;
    std::vector<VertexSet> block_masks;

    void run() {
        block_of.assign(g.n(), 0);
        assign(1);
    }

    // Restricted-growth enumeration of set partitions.
    void assign(int v) {
        int used = v == 0 ? 0 : 1 + *std::max_element(block_of.begin(), block_of.begin() + v);
        if (v == g.n()) {
            emit_partition(used);
            return;
        }
        for (int b = 0; b <= used; ++b) {
            block_of[v] = b;
            assign(v + 1);
        }
        block_of[v] = 0;
    }

    void emit_partition(int k) {
        block_masks.assign(k, 0);
        for (int v = 0; v < g.n(); ++v) block_masks[block_of[v]] |= VertexSet(1) << v;
        for (int b = 0; b < k; ++b)
            if (!g.subset_connected(block_masks[b])) return;
        if (mode == CellMode::Sourced && k < 2) return;

        // Quotient block pairs that carry at least one edge.
        std::vector<std::pair<int, int>> pairs;
        for (int b1 = 0; b1 < k; ++b1)
            for (int b2 = b1 + 1; b2 < k; ++b2) {
                bool adjacent = false;
                for (int e = 0; e < g.m() && !adjacent; ++e) {
                    int bt = block_of[g.tail(e)], bh = block_of[g.head(e)];
                    if ((bt == b1 && bh == b2) || (bt == b2 && bh == b1)) adjacent = true;
                }
                if (adjacent) pairs.emplace_back(b1, b2);
            }

        std::vector<int> dir(pairs.size(), 0);  // 0: first lower, 1: second lower
        std::vector<std::uint32_t> reach(k, 0); // reach[b] = blocks reachable from b (excl. b)
        orient(0, pairs, dir, reach, k);
    }

    void orient(size_t i, const std::vector<std::pair<int, int>>& pairs, std::vector<int>& dir,
                std::vector<std::uint32_t>& reach, int k) {
        if (i == pairs.size()) {
            emit_orientation(pairs, dir, k);
            return;
        }
        auto [b1, b2] = pairs[i];
        for (int d = 0; d < 2; ++d) {
            int lo = d == 0 ? b1 : b2, hi = d == 0 ? b2 : b1;
            if (reach[hi] >> lo & 1) continue;  // directed cycle
            std::vector<std::uint32_t> saved = reach;
            std::uint32_t add = reach[hi] | (std::uint32_t(1) << hi);
            for (int b = 0; b < k; ++b)
                if (b == lo || (reach[b] >> lo & 1)) reach[b] |= add;
            dir[i] = d;
            orient(i + 1, pairs, dir, reach, k);
            reach = saved;
        }
    }

    void emit_orientation(const std::vector<std::pair<int, int>>& pairs, const std::vector<int>& dir, int k) {
        // lower[b1][b2] records the uphill direction per adjacent pair.
        std::map<std::pair<int, int>, bool> first_is_lower;
        std::uint32_t has_incoming = 0;
        for (size_t i = 0; i < pairs.size(); ++i) {
            first_is_lower[pairs[i]] = dir[i] == 0;
            has_incoming |= std::uint32_t(1) << (dir[i] == 0 ? pairs[i].second : pairs[i].first);
        }
        int sources = 0, source_block = -1;
        for (int b = 0; b < k; ++b)
            if (!(has_incoming >> b & 1)) {
                ++sources;
                source_block = b;
            }
        bool sourced = sources == 1 && source_block == block_of[q];
        if (mode == CellMode::Sourced && !sourced) return;

        APOrientation apo;
        apo.nblocks = k;
        apo.block_of = block_of;
        apo.sourced = sourced;
        for (int e = 0; e < g.m(); ++e) {
            int bt = block_of[g.tail(e)], bh = block_of[g.head(e)];
            if (bt == bh) continue;
            apo.crossing_mask |= std::uint32_t(1) << e;
            auto key = std::minmax(bt, bh);
            bool tail_lower = first_is_lower[{key.first, key.second}] == (key.first == bt);
            int active = tail_lower ? 2 * e : 2 * e + 1;  // uphill oriented edge
            apo.active.push_back(active);
            apo.active_mask |= std::uint64_t(1) << active;
        }
        out->push_back(std::move(apo));
    }
};

}  // namespace

std::vector<APOrientation> enumerate_cells(const Multigraph& g, int q, CellMode mode) {
    if (2 * g.m() > 62) throw std::invalid_argument("graph too large for cell enumeration (m <= 31)");
    std::vector<APOrientation> out;
    PartitionWalker walker{g, q, mode, &out};
    walker.run();
    std::stable_sort(out.begin(), out.end(), [](const APOrientation& a, const APOrientation& b) {
        if (a.nblocks != b.nblocks) return a.nblocks < b.nblocks;
        return a.active_mask < b.active_mask;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Geometry helpers (exact)
// ---------------------------------------------------------------------------

int affine_rank(const std::vector<std::vector<Rat>>& pts) {
    if (pts.empty()) return -1;
    RatMatrix m(static_cast<int>(pts.size()) - 1, static_cast<int>(pts[0].size()));
    for (size_t r = 1; r < pts.size(); ++r)
        for (size_t c = 0; c < pts[0].size(); ++c) m.at(static_cast<int>(r - 1), static_cast<int>(c)) = pts[r][c] - pts[0][c];
    return rank_of(m);
}

namespace {

std::vector<Rat> vec_sub(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

std::vector<Rat> centroid(const std::vector<std::vector<Rat>>& pts) {
    std::vector<Rat> out(pts.at(0).size(), Rat(0));
    for (const auto& p : pts)
        for (size_t i = 0; i < out.size(); ++i) out[i] += p[i];
    Rat f(1, static_cast<long>(pts.size()));
    for (Rat& v : out) v *= f;
    return out;
}

/// Greedy affinely independent tuple (lexicographically least in the given
/// vertex order); returns the dim difference vectors from the first point.
std::vector<std::vector<Rat>> reference_frame(const std::vector<std::vector<Rat>>& pts, int dim) {
    std::vector<std::vector<Rat>> frame;
    if (dim == 0) return frame;
    std::vector<std::vector<Rat>> chosen{pts.at(0)};
    for (size_t i = 1; i < pts.size() && static_cast<int>(frame.size()) < dim; ++i) {
        std::vector<std::vector<Rat>> trial = chosen;
        trial.push_back(pts[i]);
        if (affine_rank(trial) == static_cast<int>(trial.size()) - 1) {
            frame.push_back(vec_sub(pts[i], pts[0]));
            chosen = std::move(trial);
        }
    }
    if (static_cast<int>(frame.size()) != dim) throw std::logic_error("cell has fewer independent vertices than its dimension");
    return frame;
}

/// Sign of the determinant expressing `target` in the coordinates of
/// `basis`; both must span the same space.
int orientation_sign(const std::vector<std::vector<Rat>>& basis, const std::vector<std::vector<Rat>>& target) {
    const int d = static_cast<int>(basis.size());
    if (d == 0) return 1;
    const int ambient = static_cast<int>(basis[0].size());
    RatMatrix B(ambient, d);
    for (int c = 0; c < d; ++c)
        for (int r = 0; r < ambient; ++r) B.at(r, c) = basis[c][r];
    RatMatrix X(d, d);
    for (int c = 0; c < d; ++c) {
        std::vector<Rat> rhs(ambient);
        for (int r = 0; r < ambient; ++r) rhs[r] = target[c][r];
        auto coords = rat_solve(B, rhs);
        if (!coords) throw std::logic_error("incidence frame does not span its facet");
        for (int r = 0; r < d; ++r) X.at(r, c) = (*coords)[r];
    }
    Rat det = rank_det(X).det;
    if (det == 0) throw std::logic_error("degenerate incidence frame");
    return sign(det) > 0 ? 1 : -1;
}

}  // namespace

// ---------------------------------------------------------------------------
// Bounded complex
// ---------------------------------------------------------------------------

namespace {

Monomial label_from_active(const Multigraph& g, const std::vector<int>& active) {
    Monomial m = Monomial::one(Ring::S, 2 * g.m());
    for (int o : active) m.exp[o] = 1;
    return m;
}

CellComplex build_bounded(const Multigraph& g, int q, const Rat& c) {
    CellComplex cx;
    cx.kind = ComplexKind::Bounded;
    cx.n = g.n();
    cx.m = g.m();
    cx.q = q;
    cx.c = c;

    std::vector<APOrientation> apos = enumerate_cells(g, q, CellMode::Sourced);
    int top = g.n() - 2;
    cx.cells.assign(std::max(0, top + 1), {});
    if (g.n() < 2) return cx;

    // Bond registry and the masks of the corresponding vertex cells.
    for (const Cut& b : enumerate_bonds(g, q)) cx.bonds.push_back(b.other);

    for (APOrientation& apo : apos) {
        Cell cell;
        cell.dim = apo.dim_bounded();
        cell.apo = std::move(apo);
        cx.cells.at(cell.dim).push_back(std::move(cell));
    }
    for (auto& layer : cx.cells)
        std::sort(layer.begin(), layer.end(),
                  [](const Cell& a, const Cell& b) { return a.apo.active_mask < b.apo.active_mask; });

    if (static_cast<int>(cx.cells[0].size()) != static_cast<int>(cx.bonds.size()))
        throw std::logic_error("bounded complex vertices must biject with bonds");

    // Vertex data for each bond: active mask and rational coordinates.
    std::vector<std::uint64_t> bond_active(cx.bonds.size(), 0);
    std::vector<std::uint32_t> bond_crossing(cx.bonds.size(), 0);
    std::vector<std::vector<Rat>> bond_coords(cx.bonds.size());
    for (size_t i = 0; i < cx.bonds.size(); ++i) {
        VertexSet B = cx.bonds[i];
        for (int o = 0; o < 2 * g.m(); ++o)
            if ((B >> g.ohead(o) & 1) && !(B >> g.otail(o) & 1)) {
                bond_active[i] |= std::uint64_t(1) << o;
                bond_crossing[i] |= std::uint32_t(1) << Multigraph::edge_of(o);
            }
        int size = 0;
        for (int v = 0; v < g.n(); ++v)
            if (B >> v & 1) ++size;
        // f = (c n / |B|) chi_B - c 1: one level for B, one for everything else.
        std::vector<Rat> f(g.n(), -c);
        for (int v = 0; v < g.n(); ++v)
            if (B >> v & 1) f[v] += c * g.n() / size;
        bond_coords[i] = std::move(f);
    }

    for (int d = 0; d <= top; ++d) {
        for (Cell& cell : cx.cells[d]) {
            for (size_t i = 0; i < cx.bonds.size(); ++i)
                if ((bond_active[i] & ~cell.apo.active_mask) == 0 &&
                    (bond_crossing[i] & ~cell.apo.crossing_mask) == 0)
                    cell.vertex_ids.push_back(static_cast<int>(i));
            for (int id : cell.vertex_ids) cell.verts.push_back(bond_coords[id]);
            cell.label = label_from_active(g, cell.apo.active);
            cell.frame = reference_frame(cell.verts, d);
        }
    }

    // Facets: one dimension down, sign-vector degeneration.
    for (int d = 1; d <= top; ++d) {
        for (Cell& cell : cx.cells[d]) {
            std::vector<Rat> cell_centroid = centroid(cell.verts);
            for (size_t j = 0; j < cx.cells[d - 1].size(); ++j) {
                const Cell& facet = cx.cells[d - 1][j];
                if ((facet.apo.active_mask & ~cell.apo.active_mask) != 0) continue;
                if ((facet.apo.crossing_mask & ~cell.apo.crossing_mask) != 0) continue;
                FacetRef ref;
                ref.cell = static_cast<int>(j);
                ref.face_label = facet.label;
                std::vector<std::vector<Rat>> target = facet.frame;
                target.push_back(vec_sub(cell_centroid, centroid(facet.verts)));
                ref.sign = orientation_sign(cell.frame, target);
                cell.facets.push_back(std::move(ref));
            }
        }
    }
    return cx;
}

// ---------------------------------------------------------------------------
// Torus complex
// ---------------------------------------------------------------------------

using LatticePoint = std::vector<int>;   // values on reference-oriented edges
using PointList = std::vector<LatticePoint>;  // sorted ascending

PointList cell_lattice_points(const Multigraph& g, const APOrientation& apo) {
    const int k = apo.nblocks;
    // Lattice points of the cell are coboundaries of integer block functions
    // that step by 0 or 1 along every uphill dag edge (normalized to vanish
    // on block 0).
    std::set<std::pair<int, int>> arrows;  // (low block, high block)
    for (int o : apo.active) arrows.emplace(apo.block_of[g.otail(o)], apo.block_of[g.ohead(o)]);

    std::vector<std::vector<int>> nbrs(k);
    for (auto [lo, hi] : arrows) {
        nbrs[lo].push_back(hi);
        nbrs[hi].push_back(lo);
    }
    std::vector<int> order;
    std::vector<char> seen(k, 0);
    order.push_back(0);
    seen[0] = 1;
    for (size_t i = 0; i < order.size(); ++i)
        for (int b : nbrs[order[i]])
            if (!seen[b]) {
                seen[b] = 1;
                order.push_back(b);
            }
    if (static_cast<int>(order.size()) != k) throw std::logic_error("quotient of a connected graph must be connected");

    std::set<LatticePoint> pts;
    std::vector<int> F(k, 0);
    std::vector<char> assigned(k, 0);
    auto consistent = [&](int b) {
        for (auto [lo, hi] : arrows) {
            if (lo != b && hi != b) continue;
            if (!assigned[lo] || !assigned[hi]) continue;
            int diff = F[hi] - F[lo];
            if (diff < 0 || diff > 1) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == order.size()) {
            LatticePoint p(g.m(), 0);
            for (int e = 0; e < g.m(); ++e) p[e] = F[apo.block_of[g.head(e)]] - F[apo.block_of[g.tail(e)]];
            pts.insert(std::move(p));
            return;
        }
        int b = order[idx];
        if (idx == 0) {
            F[b] = 0;
            assigned[b] = 1;
            self(self, idx + 1);
            assigned[b] = 0;
            return;
        }
        // Anchor to any already-assigned neighbor; candidates span two values.
        int anchor_lo = -10 * k, anchor_hi = 10 * k;
        for (auto [lo, hi] : arrows) {
            if (hi == b && assigned[lo]) {
                anchor_lo = std::max(anchor_lo, F[lo]);
                anchor_hi = std::min(anchor_hi, F[lo] + 1);
            } else if (lo == b && assigned[hi]) {
                anchor_lo = std::max(anchor_lo, F[hi] - 1);
                anchor_hi = std::min(anchor_hi, F[hi]);
            }
        }
        for (int val = anchor_lo; val <= anchor_hi; ++val) {
            F[b] = val;
            assigned[b] = 1;
            if (consistent(b)) self(self, idx + 1);
            assigned[b] = 0;
        }
    };
    rec(rec, 0);
    return PointList(pts.begin(), pts.end());
}

LatticePoint point_sub(const LatticePoint& a, const LatticePoint& b) {
    LatticePoint out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

PointList translate_sorted(const PointList& pts, const LatticePoint& by) {
    PointList out;
    out.reserve(pts.size());
    for (const LatticePoint& p : pts) out.push_back(point_sub(p, by));
    std::sort(out.begin(), out.end());
    return out;
}

/// Canonical orbit representative: among all translates putting a vertex at
/// the origin, the lexicographically greatest sorted vertex list.
PointList canonical_rep(const PointList& pts) {
    PointList best;
    for (const LatticePoint& v : pts) {
        PointList cand = translate_sorted(pts, v);
        if (best.empty() || cand > best) best = std::move(cand);
    }
    return best;
}

Monomial label_from_points(const Multigraph& g, const PointList& pts) {
    Monomial m = Monomial::one(Ring::S, 2 * g.m());
    bool laurent = false;
    for (int e = 0; e < g.m(); ++e) {
        int hi = pts[0][e], lo = pts[0][e];
        for (const LatticePoint& p : pts) {
            hi = std::max(hi, p[e]);
            lo = std::min(lo, p[e]);
        }
        m.exp[2 * e] = hi;
        m.exp[2 * e + 1] = -lo;
        if (hi < 0 || -lo < 0) laurent = true;
    }
    m.laurent = laurent;
    return m;
}

std::vector<std::vector<Rat>> points_to_rat(const PointList& pts) {
    std::vector<std::vector<Rat>> out;
    out.reserve(pts.size());
    for (const LatticePoint& p : pts) {
        std::vector<Rat> v(p.size());
        for (size_t i = 0; i < p.size(); ++i) v[i] = p[i];
        out.push_back(std::move(v));
    }
    return out;
}

APOrientation apo_from_relint(const Multigraph& g, const PointList& pts) {
    // Sign vector of the cell at the average of its vertices.
    std::vector<int> sum(g.m(), 0);
    for (const LatticePoint& p : pts)
        for (int e = 0; e < g.m(); ++e) sum[e] += p[e];
    APOrientation apo;
    std::vector<int> parent(g.n());
    for (int v = 0; v < g.n(); ++v) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int e = 0; e < g.m(); ++e) {
        if (sum[e] > 0) {
            apo.active.push_back(2 * e);
            apo.active_mask |= std::uint64_t(1) << (2 * e);
            apo.crossing_mask |= std::uint32_t(1) << e;
        } else if (sum[e] < 0) {
            apo.active.push_back(2 * e + 1);
            apo.active_mask |= std::uint64_t(1) << (2 * e + 1);
            apo.crossing_mask |= std::uint32_t(1) << e;
        } else {
            parent[find(g.tail(e))] = find(g.head(e));
        }
    }
    std::sort(apo.active.begin(), apo.active.end());
    apo.block_of.assign(g.n(), -1);
    int next = 0;
    for (int v = 0; v < g.n(); ++v) {
        int r = find(v);
        if (apo.block_of[r] < 0) apo.block_of[r] = next++;
        apo.block_of[v] = apo.block_of[r];
    }
    apo.nblocks = next;
    return apo;
}

CellComplex build_torus(const Multigraph& g, int q, const Rat& c) {
    CellComplex cx;
    cx.kind = ComplexKind::Torus;
    cx.n = g.n();
    cx.m = g.m();
    cx.q = q;
    cx.c = c;
    int top = g.n() - 1;
    cx.cells.assign(top + 1, {});

    std::vector<APOrientation> central = enumerate_cells(g, q, CellMode::Central);
    std::vector<std::vector<PointList>> star(top + 1);  // origin-star cells per dim
    for (const APOrientation& apo : central) star[apo.dim_central()].push_back(cell_lattice_points(g, apo));

    // Orbit representatives per dimension.
    std::vector<std::map<PointList, int>> orbit_index(top + 1);
    for (int d = 0; d <= top; ++d) {
        std::set<PointList> reps;
        for (const PointList& pts : star[d]) reps.insert(canonical_rep(pts));
        for (const PointList& rep : reps) {
            Cell cell;
            cell.dim = d;
            cell.apo = apo_from_relint(g, rep);
            cell.label = label_from_points(g, rep);
            cell.verts = points_to_rat(rep);
            cell.frame = reference_frame(cell.verts, d);
            orbit_index[d][rep] = static_cast<int>(cx.cells[d].size());
            cx.cells[d].push_back(std::move(cell));
        }
    }

    // Facets of each canonical representative; far facets are translates of
    // origin-star cells and may carry Laurent labels.
    for (int d = 1; d <= top; ++d) {
        for (Cell& cell : cx.cells[d]) {
            PointList cell_pts;
            for (const auto& v : cell.verts) {
                LatticePoint p(v.size());
                for (size_t i = 0; i < v.size(); ++i) p[i] = num(v[i]).convert_to<int>();
                cell_pts.push_back(std::move(p));
            }
            std::set<LatticePoint> cell_vert_lookup(cell_pts.begin(), cell_pts.end());
            std::set<PointList> seen;
            std::vector<Rat> cell_centroid = centroid(cell.verts);
            for (const LatticePoint& v : cell_pts) {
                for (const PointList& d0 : star[d - 1]) {
                    PointList cand;
                    cand.reserve(d0.size());
                    bool inside = true;
                    for (const LatticePoint& w : d0) {
                        LatticePoint abs(w.size());
                        for (size_t i = 0; i < w.size(); ++i) abs[i] = w[i] + v[i];
                        if (!cell_vert_lookup.count(abs)) { inside = false; break; }
                        cand.push_back(std::move(abs));
                    }
                    if (!inside) continue;
                    std::sort(cand.begin(), cand.end());
                    if (!seen.insert(cand).second) continue;
                    PointList rep = canonical_rep(cand);
                    auto it = orbit_index[d - 1].find(rep);
                    if (it == orbit_index[d - 1].end()) throw std::logic_error("facet orbit missing from torus complex");
                    FacetRef ref;
                    ref.cell = it->second;
                    ref.face_label = label_from_points(g, cand);
                    const Cell& facet_rep = cx.cells[d - 1][it->second];
                    std::vector<std::vector<Rat>> target = facet_rep.frame;
                    target.push_back(vec_sub(cell_centroid, centroid(points_to_rat(cand))));
                    ref.sign = orientation_sign(cell.frame, target);
                    cell.facets.push_back(std::move(ref));
                }
            }
        }
    }
    return cx;
}

}  // namespace

CellComplex build_complex(const Multigraph& g, int q, ComplexKind kind, const Rat& c) {
    if (!(c > 0 && c < 1)) throw std::invalid_argument("slice parameter c must satisfy 0 < c < 1");
    return kind == ComplexKind::Bounded ? build_bounded(g, q, c) : build_torus(g, q, c);
}

// ---------------------------------------------------------------------------
// Polynomials and resolutions
// ---------------------------------------------------------------------------

void poly_add(Poly& p, const Monomial& m, int coeff) {
    if (coeff == 0) return;
    for (auto it = p.begin(); it != p.end(); ++it) {
        if (it->mono == m) {
            it->coeff += coeff;
            if (it->coeff == 0) p.erase(it);
            return;
        }
        if (m.exp < it->mono.exp) {
            p.insert(it, {m, coeff});
            return;
        }
    }
    p.push_back({m, coeff});
}

bool poly_zero(const Poly& p) { return p.empty(); }

namespace {

Monomial maybe_phi(const Multigraph& g, bool phi, const Monomial& m) {
    return phi ? specialize_phi(g, m) : m;
}

Monomial ratio_or_throw(const Monomial& a, const Monomial& b) {
    Monomial r = mono_div(a, b);
    if (r.laurent) throw std::logic_error("differential entry is not a monomial");
    return r;
}

}  // namespace

LabeledChainComplex resolution(const Multigraph& g, int q, IdealKind ideal, const Rat& c) {
    const bool phi = ideal == IdealKind::MG || ideal == IdealKind::IG;
    const bool torus = ideal == IdealKind::JG || ideal == IdealKind::IG;
    CellComplex cx = build_complex(g, q, torus ? ComplexKind::Torus : ComplexKind::Bounded, c);

    LabeledChainComplex res;
    res.ideal = ideal;
    res.ring = phi ? Ring::R : Ring::S;
    const int shift = torus ? 1 : 0;  // F_i = (i + shift)-cells
    int len = static_cast<int>(cx.cells.size()) - shift;
    if (len < 0) len = 0;
    res.labels.resize(len);
    res.diff.resize(len);

    for (int i = 0; i < len; ++i) {
        const auto& layer = cx.cells[i + shift];
        for (const Cell& cell : layer) res.labels[i].push_back(maybe_phi(g, phi, cell.label));
        if (i == 0) continue;
        const auto& prev = cx.cells[i - 1 + shift];
        res.diff[i].assign(prev.size(), std::vector<Poly>(layer.size()));
        for (size_t col = 0; col < layer.size(); ++col) {
            Monomial top = maybe_phi(g, phi, layer[col].label);
            for (const FacetRef& ref : layer[col].facets) {
                Monomial entry = ratio_or_throw(top, maybe_phi(g, phi, ref.face_label));
                poly_add(res.diff[i][ref.cell][col], entry, ref.sign);
            }
        }
    }

    if (len > 0) {
        const auto& layer = cx.cells[shift];
        res.augmentation.resize(layer.size());
        for (size_t col = 0; col < layer.size(); ++col) {
            Monomial top = maybe_phi(g, phi, layer[col].label);
            if (!torus) {
                poly_add(res.augmentation[col], top, 1);
                continue;
            }
            for (const FacetRef& ref : layer[col].facets)
                poly_add(res.augmentation[col], ratio_or_throw(top, maybe_phi(g, phi, ref.face_label)), ref.sign);
        }
    }
    return res;
}

BettiTable betti_from_resolution(const LabeledChainComplex& res) {
    BettiTable t;
    t.totals.assign(res.length(), Int(0));
    for (int i = 0; i < res.length(); ++i)
        for (const Monomial& m : res.labels[i]) {
            t.graded[{i, m.total_degree()}] += 1;
            t.totals[i] += 1;
        }
    return t;
}

BettiTable betti_table(const Multigraph& g, int q) {
    CellComplex cx = build_complex(g, q, ComplexKind::Bounded);
    BettiTable t;
    t.totals.assign(std::max(0, g.n() - 1), Int(0));
    for (int d = 0; d <= cx.top_dim(); ++d)
        for (const Cell& cell : cx.cells[d]) {
            Monomial lm = specialize_phi(g, cell.label);
            t.graded[{d, lm.total_degree()}] += 1;
            t.totals[d] += 1;
            Divisor div(g.n(), Int(0));
            for (int v = 0; v < g.n(); ++v) div[v] = lm.exp[v];
            Divisor reduced = q_reduce(g, q, div);
            std::ostringstream key;
            for (int v = 0; v < g.n(); ++v) {
                if (v) key << ",";
                key << g.name(v) << ":" << reduced[v];
            }
            t.fine[{d, key.str()}] += 1;
        }
    return t;
}

}  // namespace chipres
