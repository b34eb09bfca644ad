// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include "chipres/cells.hpp"
#include "chipres/ideals.hpp"
#include "chipres/oracle.hpp"
#include "chipres/report.hpp"

#include <algorithm>
#include <atomic>
#include <iostream>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

using namespace chipres;

namespace {

// --------------------------------------------------------------------------
// Harness
// --------------------------------------------------------------------------

struct Harness {
    int failures = 0;

    void report(int id, const std::string& name, bool pass, const std::string& detail = "") {
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << ": " << name;
        if (!pass && !detail.empty()) std::cout << " [" << detail << "]";
        std::cout << std::endl;
        if (!pass) ++failures;
    }
};

template <typename Fn>
void parallel_over(int count, Fn&& fn) {
    int workers = std::min(worker_count(), count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& t : pool) t.join();
}

// --------------------------------------------------------------------------
// Graph sweeps
// --------------------------------------------------------------------------

Multigraph k3() {
    return Multigraph({"u1", "u2", "u3"}, {{2, 1}, {1, 0}, {0, 2}});
}

Multigraph fig_graph() {
    return Multigraph({"u1", "u2", "u3", "u4"}, {{1, 0}, {3, 0}, {2, 1}, {3, 2}, {3, 1}});
}

std::vector<std::string> default_names(int n) {
    std::vector<std::string> names;
    for (int v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
    return names;
}

bool mask_connected(int n, const std::vector<std::pair<int, int>>& pairs, std::uint32_t mask) {
    std::vector<int> adj(n, 0);
    std::uint32_t seen = 1;
    bool grew = true;
    while (grew) {
        grew = false;
        for (size_t i = 0; i < pairs.size(); ++i) {
            if (!(mask >> i & 1)) continue;
            auto [a, b] = pairs[i];
            if ((seen >> a & 1) != (seen >> b & 1)) {
                seen |= (std::uint32_t(1) << a) | (std::uint32_t(1) << b);
                grew = true;
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (!(seen >> v & 1)) return false;
    return true;
}

/// Canonical form of a labeled simple graph: minimum adjacency bitstring
/// over all vertex permutations.
std::uint64_t canonical_code(int n, const std::set<std::pair<int, int>>& edges) {
    std::vector<int> perm(n);
    for (int v = 0; v < n; ++v) perm[v] = v;
    std::uint64_t best = ~std::uint64_t(0);
    do {
        std::uint64_t code = 0;
        int bit = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b, ++bit) {
                auto e = std::minmax(perm[a], perm[b]);
                if (edges.count({e.first, e.second})) code |= std::uint64_t(1) << bit;
            }
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

struct SweepGraph {
    Multigraph g;
    std::vector<int> q_reps;  // one q per automorphism orbit
};

/// Every connected simple graph with n <= nmax vertices, one labeled
/// representative per isomorphism class, with q sweeping vertex orbits.
std::vector<SweepGraph> simple_graph_reps(int nmax) {
    std::vector<SweepGraph> out;
    for (int n = 1; n <= nmax; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
        std::set<std::uint64_t> seen;
        for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << pairs.size()); ++mask) {
            if (n > 1 && __builtin_popcount(mask) < n - 1) continue;
            if (!mask_connected(n, pairs, mask)) continue;
            std::set<std::pair<int, int>> edges;
            std::vector<std::pair<int, int>> edge_list;
            for (size_t i = 0; i < pairs.size(); ++i)
                if (mask >> i & 1) {
                    edges.insert(pairs[i]);
                    edge_list.push_back(pairs[i]);
                }
            if (!seen.insert(canonical_code(n, edges)).second) continue;
            SweepGraph sg{Multigraph(default_names(n), edge_list), {}};
            // Vertex orbits under the automorphism group.
            std::vector<int> orbit(n);
            for (int v = 0; v < n; ++v) orbit[v] = v;
            std::vector<int> perm(n);
            for (int v = 0; v < n; ++v) perm[v] = v;
            do {
                bool automorphism = true;
                for (auto [a, b] : edge_list) {
                    auto e = std::minmax(perm[a], perm[b]);
                    if (!edges.count({e.first, e.second})) { automorphism = false; break; }
                }
                if (automorphism)
                    for (int v = 0; v < n; ++v) {
                        int a = std::min(orbit[v], orbit[perm[v]]);
                        orbit[v] = orbit[perm[v]] = a;
                    }
            } while (std::next_permutation(perm.begin(), perm.end()));
            std::set<int> reps;
            for (int v = 0; v < n; ++v) {
                int r = v;
                while (orbit[r] != r) r = orbit[r];
                reps.insert(r);
            }
            sg.q_reps.assign(reps.begin(), reps.end());
            out.push_back(std::move(sg));
        }
    }
    return out;
}

std::vector<Multigraph> random_multigraphs(int count, std::mt19937& rng) {
    std::vector<Multigraph> out;
    while (static_cast<int>(out.size()) < count) {
        std::uniform_int_distribution<int> nd(2, 6);
        int n = nd(rng);
        std::uniform_int_distribution<int> pick(0, n - 1);
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v < n; ++v) edges.emplace_back(pick(rng) % v, v);
        std::uniform_int_distribution<int> md(0, 9 - (n - 1));
        int extra = md(rng);
        while (extra > 0) {
            int a = pick(rng), b = pick(rng);
            if (a == b) continue;
            edges.emplace_back(a, b);
            --extra;
        }
        out.emplace_back(default_names(n), edges);
    }
    return out;
}

// --------------------------------------------------------------------------
// Sign comparison up to a global sign per cell
// --------------------------------------------------------------------------

struct SignSystem {
    std::map<std::string, int> ids;
    std::vector<std::tuple<int, int, int>> constraints;  // sigma_a sigma_b = r

    int id(const std::string& cell) {
        auto it = ids.find(cell);
        if (it != ids.end()) return it->second;
        int v = static_cast<int>(ids.size());
        ids[cell] = v;
        return v;
    }
    void require(const std::string& a, const std::string& b, int ratio) {
        constraints.emplace_back(id(a), id(b), ratio);
    }
    bool solvable() const {
        int n = static_cast<int>(ids.size());
        for (std::uint32_t assign = 0; assign < (std::uint32_t(1) << n); ++assign) {
            bool ok = true;
            for (auto [a, b, r] : constraints) {
                int sa = (assign >> a & 1) ? -1 : 1;
                int sb = (assign >> b & 1) ? -1 : 1;
                if (sa * sb != r) { ok = false; break; }
            }
            if (ok) return true;
        }
        return n == 0;
    }
};

// --------------------------------------------------------------------------
// Criterion 1: the K3 example
// --------------------------------------------------------------------------

bool criterion_k3(std::string& detail) {
    Multigraph g = k3();
    int q = g.vertex_index("u3");
    std::ostringstream why;

    // Minimal Groebner basis of IG as an unordered set up to element sign.
    {
        auto gens = cut_generators(g, q, IdealKind::IG, true).binomials;
        std::set<std::set<std::string>> got, want = {{"x1^2", "x2*x3"}, {"x3^2", "x1*x2"}, {"x1*x3", "x2^2"}};
        for (const Binomial& b : gens) got.insert({mono_string(g, b.lead), mono_string(g, b.trail)});
        if (got != want) why << "IG generators differ; ";
    }
    if (betti_table(g, q).totals != std::vector<Int>{Int(3), Int(2)}) why << "betti != (3,2); ";

    // Torus labels exactly as printed.
    CellComplex torus = build_complex(g, q, ComplexKind::Torus);
    auto label = [&](const Cell& c) { return mono_string(g, c.label); };
    {
        std::multiset<std::string> got;
        for (int d = 0; d <= torus.top_dim(); ++d)
            for (const Cell& c : torus.cells[d]) got.insert(label(c));
        std::multiset<std::string> want = {"1",
                                           "y_e2*y_eb3", "y_e1*y_eb3", "y_e1*y_eb2",
                                           "y_e1*y_e2*y_eb3", "y_e1*y_eb2*y_eb3"};
        if (got != want) why << "torus labels differ; ";
    }

    // Differentials of the JG and IG resolutions, up to per-cell sign.
    for (bool ig : {false, true}) {
        LabeledChainComplex res = resolution(g, q, ig ? IdealKind::IG : IdealKind::JG);
        std::map<std::string, int> e_of, f_of;
        for (size_t i = 0; i < res.labels[0].size(); ++i) e_of[mono_string(g, res.labels[0][i])] = static_cast<int>(i);
        for (size_t i = 0; i < res.labels[1].size(); ++i) f_of[mono_string(g, res.labels[1][i])] = static_cast<int>(i);
        const char* E = ig ? "x1^2" : "y_e2*y_eb3";
        const char* Ep = ig ? "x1*x2" : "y_e1*y_eb3";
        const char* Epp = ig ? "x2^2" : "y_e1*y_eb2";
        const char* F = ig ? "x1^2*x2" : "y_e1*y_e2*y_eb3";
        const char* Fp = ig ? "x1*x2^2" : "y_e1*y_eb2*y_eb3";
        if (!e_of.count(E) || !e_of.count(Ep) || !e_of.count(Epp) || !f_of.count(F) || !f_of.count(Fp)) {
            why << (ig ? "IG" : "JG") << " labels missing; ";
            continue;
        }
        SignSystem sigma;
        bool entries_ok = true;
        // Augmentation rows: paper's d1 with + on the first listed monomial.
        auto aug_row = [&](const char* cell, const char* plus, const char* minus) {
            const Poly& p = res.augmentation[e_of[cell]];
            std::map<std::string, int> terms;
            for (const PolyTerm& t : p) terms[mono_string(g, t.mono)] = t.coeff;
            if (terms.size() != 2 || !terms.count(plus) || !terms.count(minus) || terms[plus] != -terms[minus]) {
                entries_ok = false;
                return;
            }
            sigma.require(cell, "p", terms[plus]);
        };
        if (ig) {
            aug_row(E, "x1^2", "x2*x3");
            aug_row(Ep, "x3^2", "x1*x2");
            aug_row(Epp, "x1*x3", "x2^2");
        } else {
            aug_row(E, "y_e2*y_eb3", "y_eb2*y_e3");
            aug_row(Ep, "y_eb1*y_e3", "y_e1*y_eb3");
            aug_row(Epp, "y_eb1*y_e2", "y_e1*y_eb2");
        }
        // d2 rows as printed.
        struct Want {
            const char* f;
            const char* e;
            const char* mono;
            int sign;
        };
        std::vector<Want> wants;
        if (ig)
            wants = {{F, E, "x2", 1},  {F, Epp, "x3", -1},  {F, Ep, "x1", 1},
                     {Fp, E, "x3", 1}, {Fp, Epp, "x1", -1}, {Fp, Ep, "x2", 1}};
        else
            wants = {{F, E, "y_e1", 1},   {F, Epp, "y_e3", -1},   {F, Ep, "y_e2", 1},
                     {Fp, E, "y_eb1", 1}, {Fp, Epp, "y_eb3", -1}, {Fp, Ep, "y_eb2", 1}};
        for (const Want& w : wants) {
            const Poly& p = res.diff[1][e_of[w.e]][f_of[w.f]];
            if (p.size() != 1 || mono_string(g, p[0].mono) != w.mono) {
                entries_ok = false;
                continue;
            }
            sigma.require(w.f, w.e, p[0].coeff * w.sign);
        }
        if (!entries_ok) why << (ig ? "IG" : "JG") << " differential monomials differ; ";
        else if (!sigma.solvable()) why << (ig ? "IG" : "JG") << " signs not reachable by per-cell flips; ";
    }

    detail = why.str();
    return detail.empty();
}

// --------------------------------------------------------------------------
// Criterion 2: the running 4-vertex example
// --------------------------------------------------------------------------

bool criterion_fig(std::string& detail) {
    Multigraph g = fig_graph();
    int q = g.vertex_index("u4");
    std::ostringstream why;

    auto strings_of = [&](const std::vector<Monomial>& ms) {
        std::set<std::string> out;
        for (const Monomial& m : ms) out.insert(mono_string(g, m));
        return out;
    };
    if (strings_of(cut_generators(g, q, IdealKind::OG, true).monomials) !=
        std::set<std::string>{"y_eb1*y_e4*y_e5", "y_e2*y_e3*y_e5", "y_eb3*y_e4", "y_eb1*y_e3*y_e5",
                              "y_e1*y_e2", "y_e2*y_e4*y_e5"})
        why << "OG generators differ; ";
    if (strings_of(cut_generators(g, q, IdealKind::MG, true).monomials) !=
        std::set<std::string>{"x2^2*x3", "x1*x2^2", "x3^2", "x2^3", "x1^2", "x1*x2*x3"})
        why << "MG generators differ; ";
    if (betti_table(g, q).totals != std::vector<Int>{Int(6), Int(9), Int(4)}) why << "betti != (6,9,4); ";

    // Facets tau_1..tau_8 as sets of oriented-edge variables.
    {
        auto tau = [&](std::vector<const char*> names) {
            std::set<std::string> s;
            for (auto* n : names) s.insert(n);
            return s;
        };
        std::set<std::set<std::string>> want = {
            tau({"y_e1", "y_e3", "y_e4", "y_e5", "y_eb2", "y_eb4", "y_eb5"}),
            tau({"y_e1", "y_e3", "y_e4", "y_eb1", "y_eb2", "y_eb4", "y_eb5"}),
            tau({"y_e2", "y_e3", "y_e4", "y_eb1", "y_eb2", "y_eb4", "y_eb5"}),
            tau({"y_e1", "y_e3", "y_e5", "y_eb2", "y_eb3", "y_eb4", "y_eb5"}),
            tau({"y_e1", "y_e3", "y_eb1", "y_eb2", "y_eb3", "y_eb4", "y_eb5"}),
            tau({"y_e2", "y_e3", "y_eb1", "y_eb2", "y_eb3", "y_eb4", "y_eb5"}),
            tau({"y_e1", "y_e5", "y_eb1", "y_eb2", "y_eb3", "y_eb4", "y_eb5"}),
            tau({"y_e2", "y_e5", "y_eb1", "y_eb2", "y_eb3", "y_eb4", "y_eb5"})};
        std::set<std::set<std::string>> got;
        for (const FacetPrime& fp : facets_and_primes(g, q)) {
            std::set<std::string> s;
            for (int o : fp.facet) s.insert(var_name(g, Ring::S, o));
            got.insert(s);
        }
        if (got != want) why << "facets differ from tau_1..tau_8; ";
    }

    // l.s.o.p. under the distinguished in-edges {e1, e3, e4, eb4}.
    {
        std::map<int, int> distinguished{{g.vertex_index("u1"), 0},
                                         {g.vertex_index("u2"), 4},
                                         {g.vertex_index("u3"), 6},
                                         {g.vertex_index("u4"), 7}};
        LsopSets sets = lsop_sets(g, q, distinguished);
        std::set<std::pair<std::string, std::string>> got, want = {
            {"y_e2", "y_e1"},  {"y_eb1", "y_e3"}, {"y_e5", "y_e3"},
            {"y_eb3", "y_e4"}, {"y_eb2", "y_eb4"}, {"y_eb5", "y_eb4"}};
        for (const LinearForm& f : sets.L)
            got.insert({var_name(g, Ring::S, f.plus_var), var_name(g, Ring::S, f.minus_var)});
        if (got != want) why << "L differs from the worked example; ";
        if (sets.Lq.size() != 7) why << "|L^(q)| != 7; ";
        if (!lsop_is_valid(g, q, sets)) why << "L^(q) fails the facet-rank criterion; ";
        auto fps = facets_and_primes(g, q);
        bool tau1_rank = false;
        for (const FacetPrime& fp : fps) {
            std::set<std::string> s;
            for (int o : fp.facet) s.insert(var_name(g, Ring::S, o));
            if (s == std::set<std::string>{"y_e1", "y_e3", "y_e4", "y_e5", "y_eb2", "y_eb4", "y_eb5"})
                tau1_rank = lsop_facet_rank(g, q, sets, fp.facet) == 7;
        }
        if (!tau1_rank) why << "rank on tau_1 != 7; ";
    }

    if (strings_of(alexander_dual_gens(g, q).monomials) !=
        std::set<std::string>{"x1*x2^2*x3^2", "x1*x2^3*x3", "x1^2*x2^2*x3", "x1^2*x2*x3^2"})
        why << "Alexander dual differs; ";

    // d2 row for F2, identified through the S-labels.
    for (bool mg : {false, true}) {
        LabeledChainComplex res = resolution(g, q, mg ? IdealKind::MG : IdealKind::OG);
        CellComplex cx = build_complex(g, q, ComplexKind::Bounded);
        auto find_cell = [&](int dim, const std::string& s) {
            for (size_t i = 0; i < cx.cells[dim].size(); ++i)
                if (mono_string(g, cx.cells[dim][i].label) == s) return static_cast<int>(i);
            return -1;
        };
        int f2 = find_cell(2, "y_eb1*y_e2*y_eb3*y_e4*y_e5");
        int e2 = find_cell(1, "y_eb1*y_eb3*y_e4*y_e5");
        int e4 = find_cell(1, "y_eb1*y_e2*y_e4*y_e5");
        int e5 = find_cell(1, "y_e2*y_eb3*y_e4*y_e5");
        if (f2 < 0 || e2 < 0 || e4 < 0 || e5 < 0) {
            why << "F2/E2/E4/E5 labels missing; ";
            break;
        }
        auto row_entry = [&](int row, const char* mono) {
            const Poly& p = res.diff[2][row][f2];
            return p.size() == 1 && mono_string(g, p[0].mono) == mono && (p[0].coeff == 1 || p[0].coeff == -1);
        };
        bool ok = row_entry(e2, mg ? "x1" : "y_e2") && row_entry(e4, mg ? "x3" : "y_eb3") &&
                  row_entry(e5, mg ? "x2" : "y_eb1");
        int nonzero = 0;
        for (size_t r = 0; r < res.diff[2].size(); ++r)
            if (!poly_zero(res.diff[2][r][f2])) ++nonzero;
        if (!ok || nonzero != 3) why << (mg ? "MG" : "OG") << " F2 row differs; ";
    }

    detail = why.str();
    return detail.empty();
}

// --------------------------------------------------------------------------
// Criteria 3-7: sweeps
// --------------------------------------------------------------------------

struct Sweep {
    std::vector<SweepGraph> reps;        // iso reps of simple graphs, n <= 5
    std::vector<Multigraph> multigraphs; // 50 random, n <= 6, m <= 9
};

bool criterion_kappa(const Sweep& sweep, std::string& detail) {
    std::ostringstream why;
    auto check = [&](const Multigraph& g) {
        Int det = spanning_tree_count(g, 0);
        Int trees = Int(spanning_trees(g, 0).size());
        for (int q = 0; q < g.n(); ++q) {
            Int parking = parking_count(g, q);
            Int facets = Int(facets_and_primes(g, q).size());
            if (det != trees || det != parking || det != facets) {
                why << "kappa mismatch (n=" << g.n() << ", m=" << g.m() << ", q=" << q << "); ";
                return;
            }
        }
    };
    check(k3());
    check(fig_graph());
    // Exhaustive over all connected simple graphs with n <= 5 (labeled).
    for (int n = 1; n <= 5; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
        for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << pairs.size()); ++mask) {
            if (n > 1 && __builtin_popcount(mask) < n - 1) continue;
            if (!mask_connected(n, pairs, mask)) continue;
            std::vector<std::pair<int, int>> edges;
            for (size_t i = 0; i < pairs.size(); ++i)
                if (mask >> i & 1) edges.push_back(pairs[i]);
            check(Multigraph(default_names(n), edges));
        }
    }
    for (const Multigraph& g : sweep.multigraphs) check(g);
    detail = why.str();
    return detail.empty();
}

bool criterion_resolution_validity(const Sweep& sweep, std::string& detail) {
    std::vector<std::pair<const Multigraph*, int>> tasks;
    for (const SweepGraph& sg : sweep.reps)
        for (int q : sg.q_reps) tasks.emplace_back(&sg.g, q);
    for (const Multigraph& g : sweep.multigraphs) tasks.emplace_back(&g, 0);
    std::vector<std::string> errors(tasks.size());
    parallel_over(static_cast<int>(tasks.size()), [&](int i) {
        const auto& [gp, q] = tasks[i];
        const Multigraph& g = *gp;
        std::ostringstream why;
        for (IdealKind ideal : {IdealKind::OG, IdealKind::MG, IdealKind::JG, IdealKind::IG}) {
            LabeledChainComplex res = resolution(g, q, ideal);
            if (res.length() != g.n() - 1) why << ideal_name(ideal) << " length != n-1; ";
            if (!check_d2zero(res).pass) why << ideal_name(ideal) << " d2zero; ";
            if (!check_minimal(res).pass) why << ideal_name(ideal) << " minimality; ";
        }
        CellComplex bounded = build_complex(g, q, ComplexKind::Bounded);
        if (!check_subcomplex_acyclic(g, bounded, false).pass) why << "OG subcomplex acyclicity; ";
        if (!check_subcomplex_acyclic(g, bounded, true).pass) why << "MG subcomplex acyclicity; ";
        if (!check_betti_equal(g, q).pass) why << "betti-equal; ";
        if (!why.str().empty()) errors[i] = "n=" + std::to_string(g.n()) + " q=" + std::to_string(q) + ": " + why.str();
    });
    std::ostringstream all;
    for (const std::string& e : errors)
        if (!e.empty()) all << e;
    detail = all.str();
    return detail.empty();
}

bool criterion_oracle(const Sweep& sweep, std::string& detail) {
    std::vector<std::pair<const Multigraph*, int>> tasks;
    for (const SweepGraph& sg : sweep.reps)
        for (int q : sg.q_reps) tasks.emplace_back(&sg.g, q);
    std::vector<std::string> errors(tasks.size());
    parallel_over(static_cast<int>(tasks.size()), [&](int i) {
        const auto& [gp, q] = tasks[i];
        const Multigraph& g = *gp;
        BettiTable cellular = betti_table(g, q);
        for (IdealKind target : {IdealKind::OG, IdealKind::MG}) {
            BettiTable oracle = oracle_betti(g, q, target, 16);
            if (oracle.graded != cellular.graded || oracle.totals != cellular.totals)
                errors[i] += "oracle " + ideal_name(target) + " disagrees (n=" + std::to_string(g.n()) +
                             " q=" + std::to_string(q) + "); ";
        }
    });
    std::ostringstream all;
    for (const std::string& e : errors)
        if (!e.empty()) all << e;
    detail = all.str();
    return detail.empty();
}

bool criterion_grobner(const Sweep& sweep, std::string& detail) {
    std::vector<std::pair<const Multigraph*, int>> tasks;
    for (const SweepGraph& sg : sweep.reps)
        for (int q : sg.q_reps) tasks.emplace_back(&sg.g, q);
    for (const Multigraph& g : sweep.multigraphs) tasks.emplace_back(&g, 0);
    std::vector<std::string> errors(tasks.size());
    parallel_over(static_cast<int>(tasks.size()), [&](int i) {
        const auto& [gp, q] = tasks[i];
        const Multigraph& g = *gp;
        if (g.n() < 2) return;
        std::ostringstream why;
        auto ig = cut_generators(g, q, IdealKind::IG, true).binomials;
        if (!buchberger_verify(ig, grevlex_q_order(g, q))) why << "IG basis fails under <_q; ";
        auto jg = cut_generators(g, q, IdealKind::JG, true).binomials;
        std::mt19937 rng(1000003u * static_cast<unsigned>(i) + 17);
        for (int rep = 0; rep < 5; ++rep)
            if (!buchberger_verify(jg, random_weight_order(2 * g.m(), jg, rng))) {
                why << "JG basis fails under a weight order; ";
                break;
            }
        PotentialWeights w = bq_theta(g, q);
        std::vector<Int> theta(w.theta_q.begin(), w.theta_q.end());
        auto ini = weight_initial(ig, theta);
        auto mg = cut_generators(g, q, IdealKind::MG, true).monomials;
        std::sort(mg.begin(), mg.end());
        if (!ini) {
            why << "theta ties on a bond binomial; ";
        } else {
            auto got = *ini;
            std::sort(got.begin(), got.end());
            if (got != mg) why << "ini_theta(IG) != MG; ";
        }
        std::vector<Int> lambda(w.lambda_q.begin(), w.lambda_q.end());
        auto ini2 = weight_initial(jg, lambda);
        auto og = cut_generators(g, q, IdealKind::OG, true).monomials;
        std::sort(og.begin(), og.end());
        if (!ini2) {
            why << "lambda ties on a bond binomial; ";
        } else {
            auto got = *ini2;
            std::sort(got.begin(), got.end());
            if (got != og) why << "ini_lambda(JG) != OG; ";
        }
        if (!why.str().empty()) errors[i] = "n=" + std::to_string(g.n()) + " q=" + std::to_string(q) + ": " + why.str();
    });
    std::ostringstream all;
    for (const std::string& e : errors)
        if (!e.empty()) all << e;
    detail = all.str();
    return detail.empty();
}

bool criterion_potential(const Sweep& sweep, std::string& detail) {
    std::vector<std::pair<const Multigraph*, int>> tasks;
    for (const SweepGraph& sg : sweep.reps)
        for (int q : sg.q_reps) tasks.emplace_back(&sg.g, q);
    for (const Multigraph& g : sweep.multigraphs) tasks.emplace_back(&g, 0);
    std::vector<std::string> errors(tasks.size());
    std::atomic<long> asserted{0}, skipped{0};
    parallel_over(static_cast<int>(tasks.size()), [&](int i) {
        const auto& [gp, q] = tasks[i];
        const Multigraph& g = *gp;
        std::ostringstream why;
        RatMatrix j = greens_matrix(g, q);
        for (int p = 0; p < g.n(); ++p)
            for (int v = 0; v < g.n(); ++v) {
                if (j.at(p, v) != j.at(v, p)) why << "greens not symmetric; ";
                if (j.at(p, v) < 0 || j.at(p, v) > j.at(p, p)) why << "greens bounds; ";
            }
        std::mt19937 rng(7777u + static_cast<unsigned>(i));
        std::uniform_int_distribution<int> val(-5, 5);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Int> f(g.n());
            for (int v = 0; v < g.n(); ++v) f[v] = val(rng);
            Divisor lf = laplacian_apply(g, f);
            for (int p = 0; p < g.n(); ++p) {
                Rat acc = 0;
                for (int v = 0; v < g.n(); ++v) acc += j.at(p, v) * Rat(lf[v]);
                if (acc != Rat(f[p] - f[q])) {
                    why << "identity (3.2) fails; ";
                    break;
                }
            }
        }
        if (g.n() >= 2) {
            int q2 = q == 0 ? g.n() - 1 : 0;
            for (int trial = 0; trial < 10; ++trial) {
                Divisor d1(g.n(), Int(0)), d2(g.n(), Int(0));
                Int s1 = 0, s2 = 0;
                for (int v = 0; v + 1 < g.n(); ++v) {
                    d1[v] = val(rng);
                    d2[v] = val(rng);
                    s1 += d1[v];
                    s2 += d2[v];
                }
                d1[g.n() - 1] = -s1;
                d2[g.n() - 1] = -s2;
                if (energy_pairing(g, q, d1, d2) != energy_pairing(g, q2, d1, d2)) {
                    why << "energy pairing depends on the sink; ";
                    break;
                }
            }
        }
        // q_reduce against the exhaustive minimizer whenever the reduced
        // form lies inside the search ball.
        int radius = g.n() >= 6 ? 2 : 3;
        std::uniform_int_distribution<int> coeff(-3, 4);
        RatMatrix reduced_lap = g.n() > 1 ? laplacian(g, q).to_rational() : RatMatrix(0, 0);
        for (int trial = 0; trial < 50; ++trial) {
            Divisor d(g.n());
            for (int v = 0; v < g.n(); ++v) d[v] = coeff(rng);
            Divisor r = q_reduce(g, q, d);
            if (q_reduce(g, q, r) != r) why << "q_reduce not idempotent; ";
            if (!is_q_reduced(g, q, r) || !linearly_equivalent(g, q, d, r)) why << "q_reduce broke the class; ";
            if (g.n() == 1) continue;
            std::vector<Rat> rhs;
            for (int v = 0; v < g.n(); ++v)
                if (v != q) rhs.emplace_back(r[v] - d[v]);
            auto fsol = rat_solve(reduced_lap, rhs);
            bool inside = fsol.has_value();
            if (inside)
                for (const Rat& x : *fsol)
                    if (!is_integer(x) || abs(num(x)) > radius) inside = false;
            if (!inside) {
                ++skipped;
                continue;
            }
            ++asserted;
            if (brute_bq_min(g, q, d, radius) != r) why << "brute b_q minimizer disagrees; ";
        }
        if (!why.str().empty()) errors[i] = "n=" + std::to_string(g.n()) + " q=" + std::to_string(q) + ": " + why.str();
    });
    std::ostringstream all;
    for (const std::string& e : errors)
        if (!e.empty()) all << e;
    if (asserted.load() < 10 * static_cast<long>(tasks.size()))
        all << "too few in-ball brute comparisons (" << asserted.load() << " asserted, " << skipped.load()
            << " skipped); ";
    detail = all.str();
    return detail.empty();
}

// --------------------------------------------------------------------------
// Criterion 8: negative controls
// --------------------------------------------------------------------------

bool criterion_negative(std::string& detail) {
    std::ostringstream why;
    Multigraph g = fig_graph();
    int q = g.vertex_index("u4");

    LabeledChainComplex res = resolution(g, q, IdealKind::OG);
    if (!check_d2zero(res).pass) why << "baseline d2zero should pass; ";
    bool flipped = false;
    for (auto& row : res.diff[2]) {
        for (Poly& p : row)
            if (!p.empty() && !flipped) {
                p[0].coeff = -p[0].coeff;
                flipped = true;
            }
        if (flipped) break;
    }
    if (check_d2zero(res).pass) why << "flipped incidence sign not detected; ";

    // Removing the generator with lead x1^2 from the K3 basis leaves the
    // S-pair of the other two with a non-reducing normal form.
    {
        Multigraph t = k3();
        int qt = t.vertex_index("u3");
        TermOrder order = grevlex_q_order(t, qt);
        auto ig = cut_generators(t, qt, IdealKind::IG, true).binomials;
        std::vector<Binomial> pruned;
        for (const Binomial& b : ig) {
            std::string lead = mono_string(t, order.less(b.lead, b.trail) ? b.trail : b.lead);
            if (lead != "x1^2") pruned.push_back(b);
        }
        if (pruned.size() != 2 || buchberger_verify(pruned, order)) why << "removing an IG generator not detected; ";
    }

    for (Rat c : {Rat(1), Rat(0), Rat(2)}) {
        try {
            build_complex(g, q, ComplexKind::Bounded, c);
            why << "c = " << to_string(c) << " not rejected; ";
        } catch (const std::invalid_argument&) {
        }
    }
    detail = why.str();
    return detail.empty();
}

}  // namespace

int main() {
    Harness h;

    std::string detail;
    h.report(1, "K3 example: IG basis, Betti (3,2), torus labels, differentials", criterion_k3(detail), detail);
    h.report(2, "running example: OG/MG generators, Betti (6,9,4), facets, l.s.o.p., dual, F2 row",
             criterion_fig(detail), detail);

    Sweep sweep;
    sweep.reps = simple_graph_reps(5);
    std::mt19937 rng(20240229);
    sweep.multigraphs = random_multigraphs(50, rng);
    {
        int pairs = 0;
        for (const SweepGraph& sg : sweep.reps) pairs += static_cast<int>(sg.q_reps.size());
        std::cout << "sweep: " << sweep.reps.size() << " simple iso classes (" << pairs
                  << " (G,q) pairs) + " << sweep.multigraphs.size() << " random multigraphs" << std::endl;
    }

    h.report(3, "kappa agreement: det = #trees = #parking = #facets", criterion_kappa(sweep, detail), detail);
    h.report(4, "resolution validity: d2zero, acyclicity, minimality, length, betti-equal",
             criterion_resolution_validity(sweep, detail), detail);
    h.report(5, "oracle agreement: Taylor-strand Betti = cellular Betti", criterion_oracle(sweep, detail), detail);
    h.report(6, "Groebner certification: S-pairs and weight initial ideals", criterion_grobner(sweep, detail), detail);
    h.report(7, "potential theory: Green's identities, energy, q-reduction", criterion_potential(sweep, detail),
             detail);
    h.report(8, "negative controls: sabotaged sign, pruned basis, bad slice", criterion_negative(detail), detail);

    if (h.failures == 0)
        std::cout << "acceptance: all 8 criteria passed" << std::endl;
    else
        std::cout << "acceptance: " << h.failures << " criteria FAILED" << std::endl;
    return h.failures == 0 ? 0 : 1;
}
