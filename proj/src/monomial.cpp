#include "chipres/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace chipres {

namespace {

void check_same(const Monomial& a, const Monomial& b) {
    if (a.ring != b.ring || a.exp.size() != b.exp.size())
        throw std::invalid_argument("monomials live in different rings");
}

}  // namespace

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    check_same(a, b);
    Monomial out = a;
    for (size_t i = 0; i < out.exp.size(); ++i) out.exp[i] += b.exp[i];
    out.laurent = a.laurent || b.laurent;
    return out;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    check_same(a, b);
    Monomial out = a;
    bool laurent = false;
    for (size_t i = 0; i < out.exp.size(); ++i) {
        out.exp[i] -= b.exp[i];
        if (out.exp[i] < 0) laurent = true;
    }
    out.laurent = laurent;
    return out;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    check_same(a, b);
    Monomial out = a;
    for (size_t i = 0; i < out.exp.size(); ++i) out.exp[i] = std::max(a.exp[i], b.exp[i]);
    out.laurent = a.laurent || b.laurent;
    return out;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    check_same(a, b);
    for (size_t i = 0; i < a.exp.size(); ++i)
        if (a.exp[i] > b.exp[i]) return false;
    return true;
}

std::string ideal_name(IdealKind k) {
    switch (k) {
        case IdealKind::IG: return "IG";
        case IdealKind::MG: return "MG";
        case IdealKind::JG: return "JG";
        case IdealKind::OG: return "OG";
    }
    return "?";
}

IdealKind ideal_from_name(const std::string& s) {
    if (s == "IG") return IdealKind::IG;
    if (s == "MG") return IdealKind::MG;
    if (s == "JG") return IdealKind::JG;
    if (s == "OG") return IdealKind::OG;
    throw std::invalid_argument("unknown ideal: " + s + " (expected IG|MG|JG|OG)");
}

bool TermOrder::less(const Monomial& a, const Monomial& b) const {
    if (a.exp.size() != b.exp.size()) throw std::invalid_argument("term order: ring mismatch");
    if (kind == Kind::GrevlexQ) {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        // Reverse lexicographic: the first difference at the small-variable
        // end decides; more of a small variable means smaller.
        for (size_t r = 0; r < rank_of_var.size(); ++r) {
            int var = rank_of_var[r];
            int diff = a.exp[var] - b.exp[var];
            if (diff != 0) return diff > 0;
        }
        return false;
    }
    Int wa = 0, wb = 0;
    for (size_t i = 0; i < a.exp.size(); ++i) {
        wa += weights[i] * a.exp[i];
        wb += weights[i] * b.exp[i];
    }
    if (wa != wb) return wa < wb;
    for (size_t i = 0; i < a.exp.size(); ++i) {
        int diff = a.exp[i] - b.exp[i];
        if (diff != 0) return diff < 0;
    }
    return false;
}

}  // namespace chipres
