#include "chipres/report.hpp"

#include "chipres/oracle.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace chipres {

Divisor parse_divisor(const Multigraph& g, const std::string& text) {
    Divisor d(g.n(), Int(0));
    if (text.empty()) return d;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto pos = item.find(':');
        if (pos == std::string::npos) throw std::invalid_argument("divisor entries look like name:coeff");
        std::string name = item.substr(0, pos);
        Int coeff(item.substr(pos + 1));
        d[g.vertex_index(name)] += coeff;
    }
    return d;
}

std::string divisor_string(const Multigraph& g, const Divisor& d) {
    std::ostringstream out;
    bool first = true;
    for (int v = 0; v < g.n(); ++v) {
        if (d[v] == 0) continue;
        if (!first) out << ",";
        out << g.name(v) << ":" << d[v].str();
        first = false;
    }
    return first ? "0" : out.str();
}

namespace {

Json mono_json(const Multigraph& g, const Monomial& m) {
    Json j;
    j["exponents"] = mono_exponent_map(g, m);
    j["str"] = mono_string(g, m);
    return j;
}

Json graph_json(const Multigraph& g, int q) {
    Json j;
    j["vertices"] = g.vertex_names();
    Json edges = Json::array();
    for (int k = 0; k < g.m(); ++k) edges.push_back({g.name(g.tail(k)), g.name(g.head(k))});
    j["edges"] = edges;
    j["q"] = g.name(q);
    return j;
}

std::string oriented_edge_name(int o) {
    int k = (o >> 1) + 1;
    return (o & 1) ? "eb" + std::to_string(k) : "e" + std::to_string(k);
}

}  // namespace

Json gens_report(const Multigraph& g, int q, IdealKind ideal, bool all_cuts) {
    GeneratingSet gs = cut_generators(g, q, ideal, !all_cuts);
    Json j;
    j["graph"] = graph_json(g, q);
    j["ideal"] = ideal_name(ideal);
    j["minimal"] = gs.minimal;
    Json list = Json::array();
    for (const Binomial& b : gs.binomials) {
        Json e;
        e["lead"] = mono_json(g, b.lead);
        e["trail"] = mono_json(g, b.trail);
        list.push_back(e);
    }
    for (const Monomial& m : gs.monomials) {
        Json e;
        e["lead"] = mono_json(g, m);
        list.push_back(e);
    }
    j["generators"] = list;
    return j;
}

Json betti_report(const Multigraph& g, int q, bool fine) {
    BettiTable t = betti_table(g, q);
    Json j;
    j["graph"] = graph_json(g, q);
    Json totals = Json::array();
    for (const Int& v : t.totals) totals.push_back(v.convert_to<long long>());
    j["totals"] = totals;
    Json graded = Json::object();
    for (const auto& [key, count] : t.graded)
        graded[std::to_string(key.first)][std::to_string(key.second)] = count.convert_to<long long>();
    j["graded"] = graded;
    if (fine) {
        Json fj = Json::object();
        for (const auto& [key, count] : t.fine) fj[std::to_string(key.first)][key.second] = count.convert_to<long long>();
        j["fine"] = fj;
    }
    return j;
}

namespace {

Json poly_json(const Multigraph& g, const Poly& p) {
    Json terms = Json::array();
    for (const PolyTerm& t : p) {
        Json e;
        e["coeff"] = t.coeff;
        e["monomial"] = mono_exponent_map(g, t.mono);
        e["str"] = mono_string(g, t.mono);
        terms.push_back(e);
    }
    return terms;
}

}  // namespace

Json resolution_report(const Multigraph& g, int q, IdealKind ideal) {
    LabeledChainComplex res = resolution(g, q, ideal);
    Json j;
    j["graph"] = graph_json(g, q);
    j["ideal"] = ideal_name(ideal);
    j["ring"] = res.ring == Ring::R ? "R" : "S";
    Json ranks = Json::array();
    Json modules = Json::array();
    for (int i = 0; i < res.length(); ++i) {
        ranks.push_back(res.labels[i].size());
        Json cells = Json::array();
        for (const Monomial& m : res.labels[i]) cells.push_back(mono_json(g, m));
        modules.push_back(cells);
    }
    j["ranks"] = ranks;
    j["modules"] = modules;
    Json aug = Json::array();
    for (const Poly& p : res.augmentation) aug.push_back(poly_json(g, p));
    j["augmentation"] = aug;
    Json diffs = Json::array();
    for (int i = 1; i < res.length(); ++i) {
        Json entries = Json::array();
        for (size_t r = 0; r < res.diff[i].size(); ++r)
            for (size_t c = 0; c < res.diff[i][r].size(); ++c)
                if (!poly_zero(res.diff[i][r][c])) {
                    Json e;
                    e["row"] = r;
                    e["col"] = c;
                    e["terms"] = poly_json(g, res.diff[i][r][c]);
                    entries.push_back(e);
                }
        diffs.push_back(entries);
    }
    j["differentials"] = diffs;
    return j;
}

std::string resolution_dot(const Multigraph& g, int q, IdealKind ideal) {
    const bool torus = ideal == IdealKind::JG || ideal == IdealKind::IG;
    const bool phi = ideal == IdealKind::MG || ideal == IdealKind::IG;
    CellComplex cx = build_complex(g, q, torus ? ComplexKind::Torus : ComplexKind::Bounded);
    std::ostringstream out;
    out << "digraph face_poset {\n";
    for (int d = 0; d <= cx.top_dim(); ++d)
        for (size_t i = 0; i < cx.cells[d].size(); ++i) {
            Monomial label = phi ? specialize_phi(g, cx.cells[d][i].label) : cx.cells[d][i].label;
            out << "  c" << d << "_" << i << " [label=\"" << mono_string(g, label) << "\"];\n";
        }
    for (int d = 1; d <= cx.top_dim(); ++d)
        for (size_t i = 0; i < cx.cells[d].size(); ++i)
            for (const FacetRef& ref : cx.cells[d][i].facets)
                out << "  c" << d << "_" << i << " -> c" << (d - 1) << "_" << ref.cell << ";\n";
    out << "}\n";
    return out.str();
}

Json greens_report(const Multigraph& g, int q) {
    RatMatrix j = greens_matrix(g, q);
    Json out;
    out["graph"] = graph_json(g, q);
    Json rows = Json::array();
    for (int r = 0; r < j.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < j.cols(); ++c) row.push_back(to_string(j.at(r, c)));
        rows.push_back(row);
    }
    out["matrix"] = rows;
    return out;
}

Json trees_report(const Multigraph& g, int q, bool enumerate) {
    Json j;
    j["graph"] = graph_json(g, q);
    j["count"] = spanning_tree_count(g, q).str();
    if (enumerate) {
        Json list = Json::array();
        for (const SpanningTree& t : spanning_trees(g, q)) {
            Json e;
            e["edges"] = t.edge_indices;
            Json oriented = Json::array();
            for (int o : t.sourced_orientation) oriented.push_back(oriented_edge_name(o));
            e["oriented"] = oriented;
            list.push_back(e);
        }
        j["trees"] = list;
    }
    return j;
}

Json facets_report(const Multigraph& g, int q) {
    Json j;
    j["graph"] = graph_json(g, q);
    Json list = Json::array();
    for (const FacetPrime& fp : facets_and_primes(g, q)) {
        Json e;
        e["tree_edges"] = fp.tree.edge_indices;
        Json tau = Json::array(), prime = Json::array();
        for (int o : fp.facet) tau.push_back(var_name(g, Ring::S, o));
        for (int o : fp.prime) prime.push_back(var_name(g, Ring::S, o));
        e["tau"] = tau;
        e["prime"] = prime;
        list.push_back(e);
    }
    j["facets"] = list;
    return j;
}

Json dual_report(const Multigraph& g, int q) {
    GeneratingSet gs = alexander_dual_gens(g, q);
    Json j;
    j["graph"] = graph_json(g, q);
    j["dual_of"] = "MG";
    Json list = Json::array();
    for (const Monomial& m : gs.monomials) list.push_back(mono_json(g, m));
    j["generators"] = list;
    return j;
}

Json reduce_report(const Multigraph& g, int q, const Divisor& d) {
    Json j;
    j["graph"] = graph_json(g, q);
    j["input"] = divisor_string(g, d);
    j["reduced"] = divisor_string(g, q_reduce(g, q, d));
    return j;
}

namespace {

struct SuiteRunner {
    const Multigraph& g;
    int q;
    Json checks = Json::array();
    bool all_pass = true;

    void record(const std::string& name, bool pass, const std::string& detail = "") {
        Json c;
        c["name"] = name;
        c["pass"] = pass;
        if (!detail.empty()) c["detail"] = detail;
        checks.push_back(c);
        all_pass = all_pass && pass;
    }

    void record(const std::string& name, const VerifyReport& rep) {
        std::string detail;
        for (const std::string& f : rep.failures) detail += (detail.empty() ? "" : "; ") + f;
        record(name, rep.pass, detail);
    }

    void run_cells() {
        for (VerifyCheck c : {VerifyCheck::D2Zero, VerifyCheck::SubcomplexAcyclic, VerifyCheck::Minimal,
                              VerifyCheck::BettiEqual, VerifyCheck::Window})
            record(verify_check_name(c), verify_check(g, q, c));
    }

    void run_oracle() {
        BettiTable cellular = betti_table(g, q);
        for (IdealKind target : {IdealKind::OG, IdealKind::MG}) {
            std::string name = "oracle-betti-" + ideal_name(target);
            try {
                BettiTable oracle = oracle_betti(g, q, target, 16);
                record(name, oracle.graded == cellular.graded && oracle.totals == cellular.totals);
            } catch (const std::invalid_argument& e) {
                record(name + "-skipped", true, e.what());
            }
        }
        record("buchberger-IG-grevlex",
               buchberger_verify(cut_generators(g, q, IdealKind::IG, true).binomials, grevlex_q_order(g, q)));
        std::mt19937 rng(12345);
        std::vector<Binomial> jg = cut_generators(g, q, IdealKind::JG, true).binomials;
        bool jg_ok = true;
        for (int i = 0; i < 5 && g.n() > 1; ++i)
            jg_ok = jg_ok && buchberger_verify(jg, random_weight_order(2 * g.m(), jg, rng));
        record("buchberger-JG-random-weights", jg_ok);
        bool bq_ok = true;
        std::uniform_int_distribution<int> coeff(-3, 4);
        for (int trial = 0; trial < 20; ++trial) {
            Divisor d(g.n());
            for (int v = 0; v < g.n(); ++v) d[v] = coeff(rng);
            Divisor reduced = q_reduce(g, q, d);
            Divisor brute = brute_bq_min(g, q, d, 4);
            bq_ok = bq_ok && reduced == brute;
        }
        record("qreduce-vs-brute-bq", bq_ok);
    }

    void run_potential() {
        RatMatrix j = greens_matrix(g, q);
        bool sym = true, bounds = true;
        for (int p = 0; p < g.n(); ++p)
            for (int v = 0; v < g.n(); ++v) {
                sym = sym && j.at(p, v) == j.at(v, p);
                bounds = bounds && j.at(p, v) >= 0 && j.at(p, v) <= j.at(p, p);
            }
        record("greens-symmetric", sym);
        record("greens-bounds", bounds);
        std::mt19937 rng(777);
        std::uniform_int_distribution<int> val(-5, 5);
        bool identity = true;
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<Int> f(g.n());
            for (int v = 0; v < g.n(); ++v) f[v] = val(rng);
            Divisor lf = laplacian_apply(g, f);
            for (int p = 0; p < g.n(); ++p) {
                Rat acc = 0;
                for (int v = 0; v < g.n(); ++v) acc += j.at(p, v) * Rat(lf[v]);
                identity = identity && acc == Rat(f[p] - f[q]);
            }
        }
        record("greens-laplacian-identity", identity);
        bool energy_ok = true;
        if (g.n() >= 2) {
            int q2 = q == 0 ? 1 : 0;
            for (int trial = 0; trial < 10; ++trial) {
                Divisor d1(g.n()), d2(g.n());
                Int s1 = 0, s2 = 0;
                for (int v = 0; v + 1 < g.n(); ++v) {
                    d1[v] = val(rng);
                    d2[v] = val(rng);
                    s1 += d1[v];
                    s2 += d2[v];
                }
                d1[g.n() - 1] = -s1;
                d2[g.n() - 1] = -s2;
                energy_ok = energy_ok && energy_pairing(g, q, d1, d2) == energy_pairing(g, q2, d1, d2);
            }
        }
        record("energy-q-independence", energy_ok);
        PotentialWeights w = bq_theta(g, q);
        PotentialFunctional theta(g.n());
        for (int v = 0; v < g.n(); ++v) theta[v] = Rat(w.theta_q[v]);
        record("theta-in-M-cone", g.n() < 2 || cone_membership(g, q, ConeKind::MCone, theta));
        EdgeFunctional lambda(2 * g.m());
        for (int o = 0; o < 2 * g.m(); ++o) lambda[o] = Rat(w.lambda_q[o]);
        record("lambda-in-O-cone", g.n() < 2 || cone_membership(g, q, ConeKind::OCone, lambda));
        bool idem = true, cls = true;
        std::uniform_int_distribution<int> coeff(-3, 4);
        for (int trial = 0; trial < 15; ++trial) {
            Divisor d(g.n());
            for (int v = 0; v < g.n(); ++v) d[v] = coeff(rng);
            Divisor r = q_reduce(g, q, d);
            idem = idem && q_reduce(g, q, r) == r;
            cls = cls && linearly_equivalent(g, q, d, r) && is_q_reduced(g, q, r);
        }
        record("qreduce-idempotent", idem);
        record("qreduce-class-invariant", cls);
    }

    void run_grobner() {
        if (g.n() < 2) {
            record("initial-theta-equals-MG", true);
            record("initial-lambda-equals-OG", true);
            return;
        }
        PotentialWeights w = bq_theta(g, q);
        std::vector<Int> theta(w.theta_q.begin(), w.theta_q.end());
        auto ini = weight_initial(cut_generators(g, q, IdealKind::IG, true).binomials, theta);
        std::vector<Monomial> mg = cut_generators(g, q, IdealKind::MG, true).monomials;
        bool ok = ini.has_value();
        if (ok) {
            std::vector<Monomial> got = *ini;
            std::sort(got.begin(), got.end());
            std::vector<Monomial> want = mg;
            std::sort(want.begin(), want.end());
            ok = got == want;
        }
        record("initial-theta-equals-MG", ok);
        std::vector<Int> lambda(w.lambda_q.begin(), w.lambda_q.end());
        auto ini2 = weight_initial(cut_generators(g, q, IdealKind::JG, true).binomials, lambda);
        std::vector<Monomial> og = cut_generators(g, q, IdealKind::OG, true).monomials;
        bool ok2 = ini2.has_value();
        if (ok2) {
            std::vector<Monomial> got = *ini2;
            std::sort(got.begin(), got.end());
            std::vector<Monomial> want = og;
            std::sort(want.begin(), want.end());
            ok2 = got == want;
        }
        record("initial-lambda-equals-OG", ok2);
        // Leads of the minimal Groebner basis under <_q reproduce MG.
        TermOrder order = grevlex_q_order(g, q);
        std::vector<Monomial> leads;
        for (const Binomial& b : cut_generators(g, q, IdealKind::IG, true).binomials)
            leads.push_back(order.less(b.lead, b.trail) ? b.trail : b.lead);
        std::sort(leads.begin(), leads.end());
        std::vector<Monomial> want = mg;
        std::sort(want.begin(), want.end());
        record("grevlex-leads-equal-MG", leads == want);
    }
};

}  // namespace

Json verify_report(const Multigraph& g, int q, const std::string& suite) {
    SuiteRunner runner{g, q};
    if (suite == "cells" || suite == "all") runner.run_cells();
    if (suite == "oracle" || suite == "all") runner.run_oracle();
    if (suite == "potential" || suite == "all") runner.run_potential();
    if (suite == "grobner" || suite == "all") runner.run_grobner();
    if (runner.checks.empty()) throw std::invalid_argument("unknown suite: " + suite + " (cells|oracle|potential|grobner|all)");
    Json j;
    j["graph"] = graph_json(g, q);
    j["suite"] = suite;
    j["checks"] = runner.checks;
    j["pass"] = runner.all_pass;
    return j;
}

namespace {

void text_walk(const Json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            text_walk(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    } else if (j.is_array()) {
        int idx = 0;
        for (const auto& e : j) text_walk(e, prefix + "[" + std::to_string(idx++) + "]", out);
    } else {
        out << prefix << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

}  // namespace

std::string json_to_text(const Json& j) {
    std::ostringstream out;
    text_walk(j, "", out);
    return out.str();
}

}  // namespace chipres
