#include "chipres/cells.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <atomic>
#include <thread>

namespace chipres {

namespace {

template <typename Fn>
void parallel_for_verify(int count, Fn&& fn) {
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

std::string poly_debug(const Poly& p) {
    std::ostringstream out;
    for (const PolyTerm& t : p) out << (t.coeff >= 0 ? "+" : "") << t.coeff << "*[...]";
    return out.str();
}

/// Composes two polynomial matrices and reports any nonzero entry.
bool compose_is_zero(const std::vector<std::vector<Poly>>& A, const std::vector<std::vector<Poly>>& B) {
    if (A.empty() || B.empty()) return true;
    size_t rows = A.size(), mid = A[0].size(), cols = B[0].size();
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) {
            Poly acc;
            for (size_t k = 0; k < mid; ++k)
                for (const PolyTerm& ta : A[r][k])
                    for (const PolyTerm& tb : B[k][c]) poly_add(acc, mono_mul(ta.mono, tb.mono), ta.coeff * tb.coeff);
            if (!poly_zero(acc)) return false;
        }
    return true;
}

}  // namespace

std::string verify_check_name(VerifyCheck check) {
    switch (check) {
        case VerifyCheck::D2Zero: return "d2zero";
        case VerifyCheck::SubcomplexAcyclic: return "subcomplex-acyclic";
        case VerifyCheck::Minimal: return "minimal";
        case VerifyCheck::BettiEqual: return "betti-equal";
        case VerifyCheck::Window: return "window";
    }
    return "?";
}

VerifyReport check_d2zero(const LabeledChainComplex& res) {
    VerifyReport rep;
    // Augmentation against the first differential.
    if (res.length() > 1 && !res.diff[1].empty()) {
        std::vector<std::vector<Poly>> aug(1);
        aug[0] = res.augmentation;
        if (!compose_is_zero(aug, res.diff[1]))
            rep.fail(ideal_name(res.ideal) + ": augmentation composed with d1 is nonzero");
    }
    for (int i = 1; i + 1 < res.length(); ++i)
        if (!compose_is_zero(res.diff[i], res.diff[i + 1])) {
            std::ostringstream msg;
            msg << ideal_name(res.ideal) << ": d" << i << " * d" << (i + 1) << " != 0";
            rep.fail(msg.str());
        }
    return rep;
}

VerifyReport check_minimal(const LabeledChainComplex& res) {
    VerifyReport rep;
    auto scan = [&](const Poly& p, int i) {
        for (const PolyTerm& t : p)
            if (t.mono.total_degree() == 0) {
                std::ostringstream msg;
                msg << ideal_name(res.ideal) << ": unit entry in differential " << i << " (" << poly_debug(p) << ")";
                rep.fail(msg.str());
            }
    };
    for (const Poly& p : res.augmentation) scan(p, 0);
    for (int i = 1; i < res.length(); ++i)
        for (const auto& row : res.diff[i])
            for (const Poly& p : row) scan(p, i);
    return rep;
}

VerifyReport check_subcomplex_acyclic(const Multigraph& g, const CellComplex& bounded, bool phi_labels) {
    VerifyReport rep;
    if (bounded.kind != ComplexKind::Bounded) {
        rep.fail("subcomplex-acyclic runs on the bounded complex");
        return rep;
    }
    if (bounded.cells.empty() || bounded.cells[0].empty()) return rep;

    // Labels of every cell (in the ring we are testing), then the lcm
    // lattice generated by the vertex labels.
    std::vector<std::vector<Monomial>> labels(bounded.cells.size());
    for (size_t d = 0; d < bounded.cells.size(); ++d)
        for (const Cell& cell : bounded.cells[d])
            labels[d].push_back(phi_labels ? specialize_phi(g, cell.label) : cell.label);

    std::set<std::vector<int>> lattice;
    std::vector<Monomial> frontier = labels[0];
    for (const Monomial& m : frontier) lattice.insert(m.exp);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> current(lattice.begin(), lattice.end());
        for (const auto& a : current)
            for (const Monomial& v : labels[0]) {
                Monomial am{v.ring, a, false};
                std::vector<int> l = mono_lcm(am, v).exp;
                if (lattice.insert(l).second) grew = true;
            }
    }

    // Distinct subcomplexes only: the homology run is keyed by which cells
    // survive the divisibility cut.
    std::map<std::vector<std::vector<char>>, std::vector<int>> distinct;  // mask -> example exps
    for (const auto& exps : lattice) {
        Monomial bound{labels[0][0].ring, exps, false};
        std::vector<std::vector<char>> mask(bounded.cells.size());
        for (size_t d = 0; d < bounded.cells.size(); ++d) {
            mask[d].resize(bounded.cells[d].size());
            for (size_t i = 0; i < bounded.cells[d].size(); ++i)
                mask[d][i] = mono_divides(labels[d][i], bound) ? 1 : 0;
        }
        distinct.emplace(std::move(mask), exps);
    }

    std::vector<const std::vector<std::vector<char>>*> tasks;
    std::vector<const std::vector<int>*> task_exps;
    for (const auto& [mask, exps] : distinct) {
        tasks.push_back(&mask);
        task_exps.push_back(&exps);
    }
    std::vector<std::string> errors(tasks.size());
    parallel_for_verify(static_cast<int>(tasks.size()), [&](int ti) {
        const auto& mask = *tasks[ti];
        // Renumber surviving cells and assemble the boundary matrices.
        std::vector<std::vector<int>> index(mask.size());
        std::vector<int> counts(mask.size(), 0);
        for (size_t d = 0; d < mask.size(); ++d) {
            index[d].assign(mask[d].size(), -1);
            for (size_t i = 0; i < mask[d].size(); ++i)
                if (mask[d][i]) index[d][i] = counts[d]++;
        }
        int topd = 0;
        for (size_t d = 0; d < mask.size(); ++d)
            if (counts[d] > 0) topd = static_cast<int>(d);
        if (counts[0] == 0) {
            errors[ti] = "empty subcomplex for a lattice label";
            return;
        }
        std::vector<RatMatrix> boundaries;
        for (int d = 1; d <= topd; ++d) {
            RatMatrix B(counts[d - 1], counts[d]);
            for (size_t i = 0; i < mask[d].size(); ++i) {
                if (!mask[d][i]) continue;
                for (const FacetRef& ref : bounded.cells[d][i].facets) {
                    if (index[d - 1][ref.cell] < 0) {
                        errors[ti] = "subcomplex not closed under faces";
                        return;
                    }
                    B.at(index[d - 1][ref.cell], index[d][static_cast<int>(i)]) = ref.sign;
                }
            }
            boundaries.push_back(std::move(B));
        }
        ChainComplexQ cc(counts[0], std::move(boundaries));
        std::vector<int> h = cc.homology_ranks();
        bool ok = h[0] == 1;
        for (size_t i = 1; i < h.size(); ++i) ok = ok && h[i] == 0;
        if (!ok) {
            std::ostringstream msg;
            msg << "subcomplex for label exps [";
            for (size_t i = 0; i < task_exps[ti]->size(); ++i) msg << (i ? "," : "") << (*task_exps[ti])[i];
            msg << "] is not acyclic";
            errors[ti] = msg.str();
        }
    });
    for (const std::string& e : errors)
        if (!e.empty()) rep.fail((phi_labels ? std::string("MG labels: ") : std::string("OG labels: ")) + e);
    return rep;
}

VerifyReport check_window(const Multigraph& g, const CellComplex& cx) {
    VerifyReport rep;
    if (cx.kind == ComplexKind::Bounded) {
        for (int d = 0; d <= cx.top_dim(); ++d)
            for (const Cell& cell : cx.cells[d]) {
                if (affine_rank(cell.verts) != d) rep.fail("bounded cell has wrong affine dimension");
                // Sign vector at the vertex average must reproduce the
                // orientation data.
                std::vector<Rat> mid(g.n(), Rat(0));
                for (const auto& v : cell.verts)
                    for (int i = 0; i < g.n(); ++i) mid[i] += v[i];
                std::uint64_t active = 0;
                std::uint32_t crossing = 0;
                for (int e = 0; e < g.m(); ++e) {
                    Rat diff = mid[g.head(e)] - mid[g.tail(e)];
                    if (diff > 0) active |= std::uint64_t(1) << (2 * e);
                    if (diff < 0) active |= std::uint64_t(1) << (2 * e + 1);
                    if (diff != 0) crossing |= std::uint32_t(1) << e;
                }
                if (active != cell.apo.active_mask || crossing != cell.apo.crossing_mask)
                    rep.fail("bounded cell sign vector disagrees with its orientation");
                // Vertex membership by sign degeneration against all bonds.
                std::set<int> claimed(cell.vertex_ids.begin(), cell.vertex_ids.end());
                for (size_t b = 0; b < cx.bonds.size(); ++b) {
                    std::uint64_t bact = 0;
                    std::uint32_t bcross = 0;
                    for (int o = 0; o < 2 * g.m(); ++o)
                        if ((cx.bonds[b] >> g.ohead(o) & 1) && !(cx.bonds[b] >> g.otail(o) & 1)) {
                            bact |= std::uint64_t(1) << o;
                            bcross |= std::uint32_t(1) << Multigraph::edge_of(o);
                        }
                    bool geom = (bact & ~cell.apo.active_mask) == 0 && (bcross & ~cell.apo.crossing_mask) == 0;
                    if (geom != claimed.count(static_cast<int>(b)))
                        rep.fail("bounded cell vertex set disagrees with sign degeneration");
                }
                // Label = lcm of vertex labels = active set.
                Monomial lcm = Monomial::one(Ring::S, 2 * g.m());
                for (int id : cell.vertex_ids) {
                    Monomial vl = Monomial::one(Ring::S, 2 * g.m());
                    for (int o = 0; o < 2 * g.m(); ++o)
                        if ((cx.bonds[id] >> g.ohead(o) & 1) && !(cx.bonds[id] >> g.otail(o) & 1)) vl.exp[o] = 1;
                    lcm = mono_lcm(lcm, vl);
                }
                if (!(lcm == cell.label)) rep.fail("bounded cell label is not the lcm of its vertex labels");
            }
        return rep;
    }

    // Torus: every canonical cell must consist exactly of the lattice points
    // allowed by the ceiling/floor window around a relative-interior point.
    for (int d = 0; d <= cx.top_dim(); ++d)
        for (const Cell& cell : cx.cells[d]) {
            if (affine_rank(cell.verts) != d) rep.fail("torus cell has wrong affine dimension");
            std::vector<Rat> mid(g.m(), Rat(0));
            bool has_origin = false;
            for (const auto& v : cell.verts) {
                bool zero = true;
                for (int e = 0; e < g.m(); ++e) {
                    mid[e] += v[e];
                    if (v[e] != 0) zero = false;
                }
                has_origin = has_origin || zero;
            }
            if (!has_origin) rep.fail("canonical torus cell does not contain the origin");
            Rat scale(1, static_cast<long>(cell.verts.size()));
            std::vector<Int> lo(g.m()), hi(g.m());
            for (int e = 0; e < g.m(); ++e) {
                Rat v = mid[e] * scale;
                lo[e] = floor_rat(v);
                hi[e] = ceil_rat(v);
            }
            // Enumerate integer potentials f with f(q) = 0 satisfying
            // lo_e <= f(head) - f(tail) <= hi_e for every edge.
            std::set<std::vector<int>> found;
            std::vector<int> dist = g.bfs_distances(cx.q);
            std::vector<int> order(g.n());
            for (int v = 0, i = 0; v < g.n(); ++v) order[i++] = v;
            std::sort(order.begin(), order.end(), [&](int a, int b) { return dist[a] < dist[b]; });
            std::vector<int> f(g.n(), 0);
            std::vector<char> set(g.n(), 0);
            auto rec = [&](auto&& self, int idx) -> void {
                if (idx == g.n()) {
                    std::vector<int> pt(g.m());
                    for (int e = 0; e < g.m(); ++e) pt[e] = f[g.head(e)] - f[g.tail(e)];
                    found.insert(std::move(pt));
                    return;
                }
                int v = order[idx];
                if (v == cx.q) {
                    f[v] = 0;
                    set[v] = 1;
                    self(self, idx + 1);
                    set[v] = 0;
                    return;
                }
                // Candidate values from one already-set neighbor; the window
                // has width <= 1 so at most two values survive.
                long lo_v = -10 * g.n(), hi_v = 10 * g.n();
                bool anchored = false;
                for (int e = 0; e < g.m(); ++e) {
                    int t = g.tail(e), h = g.head(e);
                    if (h == v && set[t]) {
                        lo_v = std::max<long>(lo_v, (Int(f[t]) + lo[e]).convert_to<long>());
                        hi_v = std::min<long>(hi_v, (Int(f[t]) + hi[e]).convert_to<long>());
                        anchored = true;
                    } else if (t == v && set[h]) {
                        lo_v = std::max<long>(lo_v, (Int(f[h]) - hi[e]).convert_to<long>());
                        hi_v = std::min<long>(hi_v, (Int(f[h]) - lo[e]).convert_to<long>());
                        anchored = true;
                    }
                }
                if (!anchored) {
                    rep.fail("window check: BFS order left a vertex unanchored");
                    return;
                }
                for (long val = lo_v; val <= hi_v; ++val) {
                    f[v] = static_cast<int>(val);
                    set[v] = 1;
                    self(self, idx + 1);
                    set[v] = 0;
                }
            };
            rec(rec, 0);
            std::set<std::vector<int>> claimed;
            for (const auto& v : cell.verts) {
                std::vector<int> pt(g.m());
                for (int e = 0; e < g.m(); ++e) pt[e] = num(v[e]).convert_to<int>();
                claimed.insert(std::move(pt));
            }
            if (found != claimed) rep.fail("torus cell vertex set disagrees with its ceiling/floor window");
        }
    return rep;
}

VerifyReport check_betti_equal(const Multigraph& g, int q) {
    VerifyReport rep;
    BettiTable ref;
    bool have_ref = false;
    for (IdealKind ideal : {IdealKind::OG, IdealKind::MG, IdealKind::JG, IdealKind::IG}) {
        BettiTable t = betti_from_resolution(resolution(g, q, ideal));
        if (!have_ref) {
            ref = t;
            have_ref = true;
            continue;
        }
        if (t.graded != ref.graded || t.totals != ref.totals)
            rep.fail("Z-graded Betti tables differ between " + ideal_name(IdealKind::OG) + " and " + ideal_name(ideal));
    }
    return rep;
}

VerifyReport verify_check(const Multigraph& g, int q, VerifyCheck check) {
    VerifyReport rep;
    switch (check) {
        case VerifyCheck::D2Zero:
            for (IdealKind ideal : {IdealKind::OG, IdealKind::MG, IdealKind::JG, IdealKind::IG})
                rep.merge(check_d2zero(resolution(g, q, ideal)));
            return rep;
        case VerifyCheck::SubcomplexAcyclic: {
            CellComplex bounded = build_complex(g, q, ComplexKind::Bounded);
            rep.merge(check_subcomplex_acyclic(g, bounded, false));
            rep.merge(check_subcomplex_acyclic(g, bounded, true));
            return rep;
        }
        case VerifyCheck::Minimal:
            for (IdealKind ideal : {IdealKind::OG, IdealKind::MG, IdealKind::JG, IdealKind::IG})
                rep.merge(check_minimal(resolution(g, q, ideal)));
            return rep;
        case VerifyCheck::BettiEqual:
            return check_betti_equal(g, q);
        case VerifyCheck::Window:
            rep.merge(check_window(g, build_complex(g, q, ComplexKind::Bounded)));
            rep.merge(check_window(g, build_complex(g, q, ComplexKind::Torus)));
            return rep;
    }
    return rep;
}

VerifyReport verify_all_cell_checks(const Multigraph& g, int q) {
    VerifyReport rep;
    for (VerifyCheck c : {VerifyCheck::D2Zero, VerifyCheck::SubcomplexAcyclic, VerifyCheck::Minimal,
                          VerifyCheck::BettiEqual, VerifyCheck::Window})
        rep.merge(verify_check(g, q, c));
    return rep;
}

}  // namespace chipres
