#include "chipres/cells.hpp"
#include "chipres/ideals.hpp"

#include <algorithm>

namespace chipres {

GeneratingSet alexander_dual_gens(const Multigraph& g, int q) {
    GeneratingSet out;
    out.ideal = IdealKind::MG;
    out.minimal = true;
    if (g.n() < 2) return out;

    // a = degree divisor off q; dual generators are x^{a+1} / m'_F for the
    // top cells F of the bounded complex whose quotient divides x^a.
    std::vector<int> bound(g.n(), 0);
    Monomial shifted = Monomial::one(Ring::R, g.n());
    for (int v = 0; v < g.n(); ++v) {
        if (v == q) continue;
        bound[v] = g.degree(v);
        shifted.exp[v] = g.degree(v) + 1;
    }
    CellComplex cx = build_complex(g, q, ComplexKind::Bounded);
    std::vector<Monomial> candidates;
    for (const Cell& cell : cx.cells[cx.top_dim()]) {
        Monomial dual = mono_div(shifted, specialize_phi(g, cell.label));
        if (dual.laurent) continue;
        bool fits = true;
        for (int v = 0; v < g.n() && fits; ++v) fits = dual.exp[v] <= bound[v];
        if (fits) candidates.push_back(std::move(dual));
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const Monomial& c : candidates) {
        bool minimal = true;
        for (const Monomial& other : candidates)
            if (!(other == c) && mono_divides(other, c)) { minimal = false; break; }
        if (minimal) out.monomials.push_back(c);
    }
    return out;
}

}  // namespace chipres
