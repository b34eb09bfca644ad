#include "chipres/oracle.hpp"

#include "chipres/ideals.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace chipres {

namespace {

/// Rank of a sparse integer matrix over Q. Unit pivots are preferred so the
/// elimination stays integral on the incidence-style matrices we meet here.
int sparse_rank(int nrows, int ncols, std::vector<std::map<int, Rat>> rows) {
    std::vector<char> row_done(nrows, 0);
    int rank = 0;
    while (true) {
        // Pick the shortest unfinished row, preferring a unit leading entry.
        int best = -1;
        bool best_unit = false;
        for (int r = 0; r < nrows; ++r) {
            if (row_done[r] || rows[r].empty()) continue;
            bool unit = false;
            for (const auto& [c, v] : rows[r])
                if (v == 1 || v == -1) { unit = true; break; }
            if (best < 0 || (unit && !best_unit) || (unit == best_unit && rows[r].size() < rows[best].size())) {
                best = r;
                best_unit = unit;
            }
        }
        if (best < 0) break;
        ++rank;
        row_done[best] = 1;
        // Choose the pivot column (unit if possible).
        int pc = rows[best].begin()->first;
        for (const auto& [c, v] : rows[best])
            if (v == 1 || v == -1) { pc = c; break; }
        Rat pv = rows[best][pc];
        std::map<int, Rat> pivot_row = rows[best];
        for (int r = 0; r < nrows; ++r) {
            if (r == best || row_done[r]) continue;
            auto it = rows[r].find(pc);
            if (it == rows[r].end()) continue;
            Rat f = it->second / pv;
            for (const auto& [c, v] : pivot_row) {
                auto jt = rows[r].find(c);
                if (jt == rows[r].end()) {
                    rows[r].emplace(c, -f * v);
                } else {
                    jt->second -= f * v;
                    if (jt->second == 0) rows[r].erase(jt);
                }
            }
        }
    }
    return rank;
}

}  // namespace

BettiTable oracle_betti(const Multigraph& g, int q, IdealKind target, int max_gens) {
    if (target != IdealKind::OG && target != IdealKind::MG)
        throw std::invalid_argument("oracle_betti handles the monomial ideals OG and MG");
    std::vector<Monomial> gens = cut_generators(g, q, target, true).monomials;
    const int r = static_cast<int>(gens.size());
    if (r > max_gens) throw std::invalid_argument("oracle_betti: too many generators (" + std::to_string(r) + ")");

    const size_t nvars = r ? gens[0].exp.size() : 0;
    const std::uint32_t total = std::uint32_t(1) << r;

    // lcm of every generator subset, grouped into multidegree strands.
    std::vector<std::vector<int>> lcms(total, std::vector<int>(nvars, 0));
    std::map<std::vector<int>, std::vector<std::uint32_t>> strands;
    for (std::uint32_t s = 1; s < total; ++s) {
        std::uint32_t low = s & (~s + 1);
        int gi = 0;
        while (!(s >> gi & 1)) ++gi;
        lcms[s] = lcms[s ^ low];
        for (size_t v = 0; v < nvars; ++v) lcms[s][v] = std::max(lcms[s][v], gens[gi].exp[v]);
        strands[lcms[s]].push_back(s);
    }

    BettiTable out;
    out.totals.assign(std::max(0, g.n() - 1), Int(0));
    for (auto& [deg_vec, members] : strands) {
        int jdeg = 0;
        for (int e : deg_vec) jdeg += e;
        int maxpc = 0;
        std::map<std::uint32_t, int> index;  // subset -> index within its layer
        std::vector<std::vector<std::uint32_t>> layers(r + 1);
        for (std::uint32_t s : members) {
            int pc = __builtin_popcount(s);
            index[s] = static_cast<int>(layers[pc].size());
            layers[pc].push_back(s);
            maxpc = std::max(maxpc, pc);
        }
        // Boundary D_k within the strand; Tor_i(S/I) in this multidegree is
        // the homology at layer i.
        std::vector<int> rank_d(maxpc + 2, 0);
        for (int k = 1; k <= maxpc; ++k) {
            if (layers[k].empty() || layers[k - 1].empty()) continue;
            std::vector<std::map<int, Rat>> rows(layers[k - 1].size());
            for (size_t col = 0; col < layers[k].size(); ++col) {
                std::uint32_t s = layers[k][col];
                int pos = 0;
                for (int gi = 0; gi < r; ++gi) {
                    if (!(s >> gi & 1)) continue;
                    std::uint32_t t = s ^ (std::uint32_t(1) << gi);
                    if (lcms[t] == deg_vec) {
                        auto it = index.find(t);
                        if (it != index.end())
                            rows[it->second][static_cast<int>(col)] = (pos % 2 == 0) ? 1 : -1;
                    }
                    ++pos;
                }
            }
            rank_d[k] = sparse_rank(static_cast<int>(layers[k - 1].size()), static_cast<int>(layers[k].size()),
                                    std::move(rows));
        }
        for (int i = 1; i <= maxpc; ++i) {
            int h = static_cast<int>(layers[i].size()) - rank_d[i] - rank_d[i + 1];
            if (h <= 0) continue;
            // Ideal convention: beta_i(ideal) = beta_{i+1}(S/I) = H_{i+1}.
            int ideal_i = i - 1;
            out.graded[{ideal_i, jdeg}] += h;
            if (ideal_i >= static_cast<int>(out.totals.size())) out.totals.resize(ideal_i + 1, Int(0));
            out.totals[ideal_i] += h;
        }
    }
    while (!out.totals.empty() && out.totals.back() == 0) out.totals.pop_back();
    return out;
}

namespace {

struct OrientedBinomial {
    Monomial lead, trail;
};

std::vector<OrientedBinomial> orient_all(const std::vector<Binomial>& gens, const TermOrder& order) {
    std::vector<OrientedBinomial> out;
    for (const Binomial& b : gens) {
        if (b.lead == b.trail) throw std::invalid_argument("degenerate binomial (lead == trail)");
        if (order.less(b.lead, b.trail))
            out.push_back({b.trail, b.lead});
        else
            out.push_back({b.lead, b.trail});
    }
    return out;
}

/// Reduces the pure difference m1 - m2 modulo the oriented binomials.
bool reduces_to_zero(Monomial m1, Monomial m2, const std::vector<OrientedBinomial>& gens, const TermOrder& order) {
    while (true) {
        if (m1 == m2) return true;
        bool first_leads = order.less(m2, m1);
        Monomial& lead = first_leads ? m1 : m2;
        bool stepped = false;
        for (const OrientedBinomial& h : gens) {
            if (!mono_divides(h.lead, lead)) continue;
            lead = mono_mul(mono_div(lead, h.lead), h.trail);
            stepped = true;
            break;
        }
        if (!stepped) return false;
    }
}

}  // namespace

bool buchberger_verify(const std::vector<Binomial>& gens, const TermOrder& order) {
    std::vector<OrientedBinomial> oriented = orient_all(gens, order);
    for (size_t i = 0; i < oriented.size(); ++i)
        for (size_t j = i + 1; j < oriented.size(); ++j) {
            Monomial lcm = mono_lcm(oriented[i].lead, oriented[j].lead);
            Monomial m1 = mono_mul(mono_div(lcm, oriented[j].lead), oriented[j].trail);
            Monomial m2 = mono_mul(mono_div(lcm, oriented[i].lead), oriented[i].trail);
            if (!reduces_to_zero(m1, m2, oriented, order)) return false;
        }
    return true;
}

TermOrder random_weight_order(int nvars, const std::vector<Binomial>& gens, std::mt19937& rng) {
    std::uniform_int_distribution<int> dist(1, 100);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        TermOrder order;
        order.kind = TermOrder::Kind::Weight;
        order.weights.resize(nvars);
        for (int i = 0; i < nvars; ++i) order.weights[i] = dist(rng);
        bool generic = true;
        for (const Binomial& b : gens) {
            Int wl = 0, wt = 0;
            for (size_t v = 0; v < b.lead.exp.size(); ++v) {
                wl += order.weights[v] * b.lead.exp[v];
                wt += order.weights[v] * b.trail.exp[v];
            }
            if (wl == wt) { generic = false; break; }
        }
        if (generic) return order;
    }
    throw std::runtime_error("could not sample a generic weight order");
}

std::optional<std::vector<Monomial>> weight_initial(const std::vector<Binomial>& gens,
                                                    const std::vector<Int>& weights) {
    std::vector<Monomial> out;
    for (const Binomial& b : gens) {
        Int wl = 0, wt = 0;
        for (size_t v = 0; v < b.lead.exp.size(); ++v) {
            wl += weights[v] * b.lead.exp[v];
            wt += weights[v] * b.trail.exp[v];
        }
        if (wl == wt) return std::nullopt;
        out.push_back(wl > wt ? b.lead : b.trail);
    }
    return out;
}

Divisor brute_bq_min(const Multigraph& g, int q, const Divisor& d, int radius) {
    const int n = g.n();
    PotentialWeights w = bq_theta(g, q);
    auto bq_of = [&](const Divisor& dv) {
        Rat acc = 0;
        for (int v = 0; v < n; ++v) acc += w.b_q[v] * Rat(dv[v]);
        return acc;
    };
    Divisor best_eff, best_any;
    Rat val_eff, val_any;
    std::vector<Int> f(n, Int(0));
    auto consider = [&](const Divisor& cand) {
        Rat val = bq_of(cand);
        if (best_any.empty() || val < val_any || (val == val_any && cand < best_any)) {
            best_any = cand;
            val_any = val;
        }
        bool eff = true;
        for (int v = 0; v < n; ++v)
            if (v != q && cand[v] < 0) { eff = false; break; }
        if (eff && (best_eff.empty() || val < val_eff || (val == val_eff && cand < best_eff))) {
            best_eff = cand;
            val_eff = val;
        }
    };
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            Divisor delta = laplacian_apply(g, f);
            Divisor cand(n);
            for (int i = 0; i < n; ++i) cand[i] = d[i] + delta[i];
            consider(cand);
            return;
        }
        if (v == q) {
            self(self, v + 1);
            return;
        }
        for (int val = -radius; val <= radius; ++val) {
            f[v] = val;
            self(self, v + 1);
        }
        f[v] = 0;
    };
    rec(rec, 0);
    return best_eff.empty() ? best_any : best_eff;
}

std::vector<Monomial> alexander_dual_brute(const Multigraph& g, int q) {
    std::vector<Monomial> gens = cut_generators(g, q, IdealKind::MG, true).monomials;
    const int n = g.n();
    std::vector<int> cap(n, 0);
    for (int v = 0; v < n; ++v)
        if (v != q) cap[v] = g.degree(v);
    auto in_ideal = [&](const std::vector<int>& e) {
        Monomial m{Ring::R, e, false};
        for (const Monomial& gen : gens)
            if (mono_divides(gen, m)) return true;
        return false;
    };
    // x^b lies in the dual iff x^(a-b) is outside the ideal; collect the
    // minimal such b over the exponent box.
    std::vector<std::vector<int>> members;
    std::vector<int> b(n, 0);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            std::vector<int> rest(n);
            for (int i = 0; i < n; ++i) rest[i] = cap[i] - b[i];
            if (!in_ideal(rest)) members.push_back(b);
            return;
        }
        if (v == q) {
            self(self, v + 1);
            return;
        }
        for (int val = 0; val <= cap[v]; ++val) {
            b[v] = val;
            self(self, v + 1);
        }
        b[v] = 0;
    };
    rec(rec, 0);
    std::vector<Monomial> out;
    for (const auto& cand : members) {
        bool minimal = true;
        for (const auto& other : members)
            if (other != cand) {
                bool divides = true;
                for (int v = 0; v < n; ++v)
                    if (other[v] > cand[v]) { divides = false; break; }
                if (divides) { minimal = false; break; }
            }
        if (minimal) out.push_back(Monomial{Ring::R, cand, false});
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace chipres
