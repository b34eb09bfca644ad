#pragma once

#include "chipres/numeric.hpp"

#include <string>
#include <vector>

namespace chipres {

/// R = K[x_v] over vertices; S = K[y_e] over oriented edges.
enum class Ring { R, S };

/// Exponent-vector monomial. Negative exponents are allowed when `laurent`
/// is set; only the lattice-tiling labels produce those.
struct Monomial {
    Ring ring = Ring::R;
    std::vector<int> exp;
    bool laurent = false;

    static Monomial one(Ring ring, int nvars) { return Monomial{ring, std::vector<int>(nvars, 0), false}; }

    int total_degree() const {
        int d = 0;
        for (int e : exp) d += e;
        return d;
    }
    bool is_one() const {
        for (int e : exp)
            if (e != 0) return false;
        return true;
    }
    bool squarefree() const {
        for (int e : exp)
            if (e < 0 || e > 1) return false;
        return true;
    }
    bool operator==(const Monomial& other) const { return ring == other.ring && exp == other.exp; }
    bool operator<(const Monomial& other) const { return exp < other.exp; }  // container order only
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);  // exact a / b, may go Laurent
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b

struct Binomial {
    Monomial lead;
    Monomial trail;
};

enum class IdealKind { IG, MG, JG, OG };

std::string ideal_name(IdealKind k);
IdealKind ideal_from_name(const std::string& s);

/// Generating set for one of the four ideals; monomial ideals fill
/// `monomials`, binomial ideals fill `binomials`.
struct GeneratingSet {
    IdealKind ideal;
    bool minimal = false;
    std::vector<Binomial> binomials;
    std::vector<Monomial> monomials;
};

/// Term orders used for Groebner verification: the distance-compatible
/// grevlex <_q on R, or a positive weight vector with lex tie-break.
struct TermOrder {
    enum class Kind { GrevlexQ, Weight };
    Kind kind = Kind::Weight;
    std::vector<int> rank_of_var;  // GrevlexQ: rank 0 = smallest variable (x_q)
    std::vector<Int> weights;      // Weight: one positive weight per variable

    bool less(const Monomial& a, const Monomial& b) const;
};

}  // namespace chipres
