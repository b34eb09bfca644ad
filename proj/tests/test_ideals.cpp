#include "chipres/ideals.hpp"

#include "chipres/oracle.hpp"
#include "fixtures.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace chipres;

namespace {

std::set<std::string> mono_strings(const Multigraph& g, const std::vector<Monomial>& ms) {
    std::set<std::string> out;
    for (const Monomial& m : ms) out.insert(mono_string(g, m));
    return out;
}

// Binomial set comparison up to a global sign per element.
bool same_binomials(const std::vector<Binomial>& got, std::vector<std::pair<std::string, std::string>> want,
                    const Multigraph& g) {
    if (got.size() != want.size()) return false;
    for (const Binomial& b : got) {
        auto a = std::make_pair(mono_string(g, b.lead), mono_string(g, b.trail));
        auto r = std::make_pair(a.second, a.first);
        auto it = std::find(want.begin(), want.end(), a);
        if (it == want.end()) it = std::find(want.begin(), want.end(), r);
        if (it == want.end()) return false;
        want.erase(it);
    }
    return want.empty();
}

}  // namespace

TEST_CASE("K3 minimal Groebner basis of IG") {
    Multigraph g = fixtures::k3();
    GeneratingSet gs = cut_generators(g, g.vertex_index("u3"), IdealKind::IG, true);
    CHECK(same_binomials(gs.binomials,
                         {{"x1^2", "x2*x3"}, {"x3^2", "x1*x2"}, {"x1*x3", "x2^2"}}, g));
}

TEST_CASE("running example generator sets") {
    Multigraph g = fixtures::fig();
    int q = g.vertex_index("u4");
    CHECK(mono_strings(g, cut_generators(g, q, IdealKind::MG, true).monomials) ==
          std::set<std::string>{"x2^2*x3", "x1*x2^2", "x3^2", "x2^3", "x1^2", "x1*x2*x3"});
    CHECK(mono_strings(g, cut_generators(g, q, IdealKind::OG, true).monomials) ==
          std::set<std::string>{"y_eb1*y_e4*y_e5", "y_e2*y_e3*y_e5", "y_eb3*y_e4", "y_eb1*y_e3*y_e5",
                                "y_e1*y_e2", "y_e2*y_e4*y_e5"});
    // JG generators specialize to IG generators under phi.
    auto jg = cut_generators(g, q, IdealKind::JG, true).binomials;
    auto ig = cut_generators(g, q, IdealKind::IG, true).binomials;
    REQUIRE(jg.size() == ig.size());
    for (size_t i = 0; i < jg.size(); ++i) {
        Binomial mapped = specialize_phi(g, jg[i]);
        CHECK(mapped.lead == ig[i].lead);
        CHECK(mapped.trail == ig[i].trail);
    }
}

TEST_CASE("single edge MG is the variable at the non-sink") {
    Multigraph g = fixtures::single_edge();
    auto ms = cut_generators(g, g.vertex_index("q"), IdealKind::MG, true).monomials;
    REQUIRE(ms.size() == 1);
    CHECK(mono_string(g, ms[0]) == "x1");
}

TEST_CASE("minimal monomial generating sets are inclusion-minimal") {
    for (const Multigraph& g : {fixtures::k3(), fixtures::fig()}) {
        for (int q = 0; q < g.n(); ++q)
            for (IdealKind ideal : {IdealKind::MG, IdealKind::OG}) {
                auto ms = cut_generators(g, q, ideal, true).monomials;
                for (size_t i = 0; i < ms.size(); ++i)
                    for (size_t j = 0; j < ms.size(); ++j)
                        if (i != j) CHECK_FALSE(mono_divides(ms[i], ms[j]));
            }
    }
}

TEST_CASE("grevlex order follows BFS distance with x_q smallest") {
    Multigraph g = fixtures::k3();
    int q = g.vertex_index("u3");
    auto x = [&](const char* name) {
        Monomial m = Monomial::one(Ring::R, 3);
        m.exp[g.vertex_index(name)] = 1;
        return m;
    };
    CHECK(grevlex_q_less(g, q, x("u3"), x("u1")));
    CHECK(grevlex_q_less(g, q, x("u3"), x("u2")));
    CHECK(grevlex_q_less(g, q, x("u1"), mono_mul(x("u1"), x("u1"))));
    // Leading term of x3^2 - x1 x2 is x1 x2.
    Monomial x3sq = mono_mul(x("u3"), x("u3"));
    Monomial x1x2 = mono_mul(x("u1"), x("u2"));
    CHECK(grevlex_q_less(g, q, x3sq, x1x2));
}

TEST_CASE("the lead of every bond binomial is the cut-in monomial") {
    std::mt19937 rng(12);
    auto check_graph = [&](const Multigraph& g) {
        for (int q = 0; q < g.n(); ++q) {
            TermOrder order = grevlex_q_order(g, q);
            for (const Binomial& b : cut_generators(g, q, IdealKind::IG, true).binomials)
                CHECK(order.less(b.trail, b.lead));
        }
    };
    check_graph(fixtures::k3());
    check_graph(fixtures::fig());
    check_graph(fixtures::single_edge());
}

TEST_CASE("normal forms modulo IG") {
    Multigraph g = fixtures::k3();
    int q = g.vertex_index("u3");
    Monomial one = Monomial::one(Ring::R, 3);
    CHECK(normal_form_IG(g, q, one) == one);
    Monomial x1sq = one;
    x1sq.exp[g.vertex_index("u1")] = 2;
    Monomial x2x3 = one;
    x2x3.exp[g.vertex_index("u2")] = 1;
    x2x3.exp[q] = 1;
    CHECK(normal_form_IG(g, q, x1sq) == x2x3);
    CHECK(normal_form_IG(g, q, x2x3) == x2x3);
}

TEST_CASE("normal forms coincide exactly for equivalent equal-degree divisors") {
    std::mt19937 rng(77);
    Multigraph g = fixtures::fig();
    int q = g.vertex_index("u4");
    std::uniform_int_distribution<int> val(0, 3);
    for (int trial = 0; trial < 40; ++trial) {
        Monomial m1 = Monomial::one(Ring::R, g.n()), m2 = Monomial::one(Ring::R, g.n());
        for (int v = 0; v < g.n(); ++v) {
            m1.exp[v] = val(rng);
            m2.exp[v] = val(rng);
        }
        Divisor d1(m1.exp.begin(), m1.exp.end()), d2(m2.exp.begin(), m2.exp.end());
        bool same_class = linearly_equivalent(g, q, d1, d2);
        bool same_nf = normal_form_IG(g, q, m1) == normal_form_IG(g, q, m2);
        CHECK(same_nf == same_class);
    }
}

TEST_CASE("phi on the running example") {
    Multigraph g = fixtures::fig();
    Monomial m = Monomial::one(Ring::S, 2 * g.m());
    m.exp[2 * 2 + 1] = 1;  // y_eb3
    m.exp[2 * 3] = 1;      // y_e4
    Monomial image = specialize_phi(g, m);
    CHECK(mono_string(g, image) == "x3^2");
    CHECK(specialize_phi(g, Monomial::one(Ring::S, 2 * g.m())).is_one());
}

TEST_CASE("phi maps OG generators bijectively onto MG generators") {
    for (const Multigraph& g : {fixtures::k3(), fixtures::fig(), fixtures::single_edge()}) {
        for (int q = 0; q < g.n(); ++q) {
            auto og = cut_generators(g, q, IdealKind::OG, true).monomials;
            auto mg = cut_generators(g, q, IdealKind::MG, true).monomials;
            std::vector<Monomial> mapped;
            for (const Monomial& m : og) mapped.push_back(specialize_phi(g, m));
            std::sort(mapped.begin(), mapped.end());
            std::sort(mg.begin(), mg.end());
            CHECK(mapped == mg);
        }
    }
}

TEST_CASE("facets and primes per spanning tree") {
    Multigraph fig = fixtures::fig();
    int q = fig.vertex_index("u4");
    auto fps = facets_and_primes(fig, q);
    CHECK(fps.size() == 8);
    for (const FacetPrime& fp : fps) CHECK(fp.facet.size() == 2 * fig.m() - fig.n() + 1);
    // The tree {e1, e3, e4} gives tau = everything except {e1, e3, e4}.
    bool found = false;
    for (const FacetPrime& fp : fps)
        if (fp.tree.edge_indices == std::vector<int>{0, 2, 3}) {
            found = true;
            CHECK(fp.prime == std::vector<int>{0, 4, 6});  // e1, e3, e4 reference-oriented
            std::set<std::string> tau;
            for (int o : fp.facet) tau.insert(var_name(fig, Ring::S, o));
            CHECK(tau == std::set<std::string>{"y_e2", "y_e5", "y_eb1", "y_eb2", "y_eb3", "y_eb4", "y_eb5"});
        }
    CHECK(found);

    Multigraph k3 = fixtures::k3();
    auto k3_fps = facets_and_primes(k3, k3.vertex_index("u3"));
    CHECK(k3_fps.size() == 3);
    for (const FacetPrime& fp : k3_fps) CHECK(fp.facet.size() == 4);
}

TEST_CASE("no facet contains the support of any OG generator") {
    for (const Multigraph& g : {fixtures::k3(), fixtures::fig()}) {
        for (int q = 0; q < g.n(); ++q) {
            auto og = cut_generators(g, q, IdealKind::OG, true).monomials;
            for (const FacetPrime& fp : facets_and_primes(g, q)) {
                std::set<int> tau(fp.facet.begin(), fp.facet.end());
                for (const Monomial& gen : og) {
                    bool inside = true;
                    for (size_t o = 0; o < gen.exp.size(); ++o)
                        if (gen.exp[o] > 0 && !tau.count(static_cast<int>(o))) inside = false;
                    CHECK_FALSE(inside);
                }
            }
        }
    }
}

TEST_CASE("find_facet follows the greedy frontier") {
    Multigraph fig = fixtures::fig();
    int q = fig.vertex_index("u4");
    // The product over tau_8 = everything except {e1, e3, e4}.
    Monomial m = Monomial::one(Ring::S, 2 * fig.m());
    for (int o : {2, 8, 1, 3, 5, 7, 9}) m.exp[o] = 1;  // e2, e5, eb1..eb5
    SpanningTree t = find_facet(fig, q, m);
    CHECK(t.sourced_orientation == std::vector<int>{0, 4, 6});

    Multigraph se = fixtures::single_edge();
    SpanningTree ts = find_facet(se, se.vertex_index("q"), Monomial::one(Ring::S, 2));
    CHECK(ts.edge_indices == std::vector<int>{0});

    Monomial gen = Monomial::one(Ring::S, 2 * fig.m());
    gen.exp[5] = 1;  // y_eb3
    gen.exp[6] = 1;  // y_e4
    CHECK_THROWS_AS(find_facet(fig, q, gen), std::invalid_argument);
    Monomial notsf = Monomial::one(Ring::S, 2 * fig.m());
    notsf.exp[0] = 2;
    CHECK_THROWS_AS(find_facet(fig, q, notsf), std::invalid_argument);
}

TEST_CASE("l.s.o.p. sets reproduce the worked example") {
    Multigraph fig = fixtures::fig();
    int q = fig.vertex_index("u4");
    // Distinguished in-edges e1 -> u1, e3 -> u2, e4 -> u3, eb4 -> u4.
    std::map<int, int> distinguished{{fig.vertex_index("u1"), 0},
                                     {fig.vertex_index("u2"), 4},
                                     {fig.vertex_index("u3"), 6},
                                     {fig.vertex_index("u4"), 7}};
    LsopSets sets = lsop_sets(fig, q, distinguished);
    REQUIRE(sets.L.size() == 6);
    REQUIRE(sets.Lq.size() == 7);
    auto has = [&](int plus, int minus) {
        return std::any_of(sets.L.begin(), sets.L.end(),
                           [&](const LinearForm& f) { return f.plus_var == plus && f.minus_var == minus; });
    };
    CHECK(has(2, 0));  // y_e2 - y_e1
    CHECK(has(1, 4));  // y_eb1 - y_e3
    CHECK(has(8, 4));  // y_e5 - y_e3
    CHECK(has(5, 6));  // y_eb3 - y_e4
    CHECK(has(3, 7));  // y_eb2 - y_eb4
    CHECK(has(9, 7));  // y_eb5 - y_eb4
    CHECK(sets.Lq.back().plus_var == 7);
    CHECK(sets.Lq.back().minus_var == -1);
    CHECK(lsop_is_valid(fig, q, sets));

    auto fps = facets_and_primes(fig, q);
    CHECK(lsop_facet_rank(fig, q, sets, fps[0].facet) == 7);

    // Wrong head in the distinguished map is rejected.
    CHECK_THROWS_AS(lsop_sets(fig, q, {{fig.vertex_index("u1"), 4}}), std::invalid_argument);
}

TEST_CASE("default l.s.o.p. sets are valid on the fixtures") {
    for (const Multigraph& g : {fixtures::k3(), fixtures::fig(), fixtures::single_edge()})
        for (int q = 0; q < g.n(); ++q) CHECK(lsop_is_valid(g, q, lsop_sets(g, q)));
}

TEST_CASE("Alexander dual generators match the paper and the brute oracle") {
    Multigraph fig = fixtures::fig();
    int q = fig.vertex_index("u4");
    CHECK(mono_strings(fig, alexander_dual_gens(fig, q).monomials) ==
          std::set<std::string>{"x1*x2^2*x3^2", "x1*x2^3*x3", "x1^2*x2^2*x3", "x1^2*x2*x3^2"});

    Multigraph se = fixtures::single_edge();
    CHECK(mono_strings(se, alexander_dual_gens(se, se.vertex_index("q")).monomials) ==
          std::set<std::string>{"x1"});

    for (const Multigraph& g : {fixtures::k3(), fixtures::fig()})
        for (int q2 = 0; q2 < g.n(); ++q2) {
            auto fast = alexander_dual_gens(g, q2).monomials;
            auto brute = alexander_dual_brute(g, q2);
            std::sort(fast.begin(), fast.end());
            CHECK(fast == brute);
        }
}

TEST_CASE("parking counts agree with the tree count") {
    Multigraph k3 = fixtures::k3();
    CHECK(parking_count(k3, k3.vertex_index("u3")) == 3);
    Multigraph fig = fixtures::fig();
    CHECK(parking_count(fig, fig.vertex_index("u4")) == 8);
    Multigraph se = fixtures::single_edge();
    CHECK(parking_count(se, se.vertex_index("q")) == 1);
}

TEST_CASE("OG equals the weight-initial of JG for any accepted O-cone weight") {
    std::mt19937 rng(2024);
    for (const Multigraph& g : {fixtures::k3(), fixtures::fig()}) {
        int q = 0;
        auto jg = cut_generators(g, q, IdealKind::JG, true).binomials;
        auto og = cut_generators(g, q, IdealKind::OG, true).monomials;
        std::sort(og.begin(), og.end());
        std::uniform_int_distribution<int> wv(0, 30);
        int accepted = 0;
        while (accepted < 5) {
            std::vector<Rat> sigma(2 * g.m());
            std::vector<Int> weights(2 * g.m());
            for (int o = 0; o < 2 * g.m(); ++o) {
                int v = wv(rng);
                sigma[o] = Rat(v);
                weights[o] = v;
            }
            if (!cone_membership(g, q, ConeKind::OCone, sigma)) continue;
            ++accepted;
            auto ini = weight_initial(jg, weights);
            REQUIRE(ini.has_value());
            std::vector<Monomial> got = *ini;
            std::sort(got.begin(), got.end());
            CHECK(got == og);
        }
    }
}
