#pragma once

#include "chipres/divisor.hpp"
#include "chipres/graph.hpp"
#include "chipres/monomial.hpp"

#include <map>
#include <string>
#include <vector>

namespace chipres {

/// Variable naming scheme shared by the CLI, exports and tests:
/// x<i+1> for vertex i, y_e<k+1> / y_eb<k+1> for oriented edges 2k / 2k+1.
std::string var_name(const Multigraph& g, Ring ring, int var);
std::string mono_string(const Multigraph& g, const Monomial& m);
std::map<std::string, int> mono_exponent_map(const Multigraph& g, const Monomial& m);

/// Parses names produced by mono_string back into a monomial (test support).
Monomial mono_parse(const Multigraph& g, Ring ring, const std::string& text);

/// Closed-form generating sets from cuts: binomials for IG/JG, their leading
/// monomials for MG/OG. minimal restricts to bonds, which yields minimal
/// generating sets (and for IG a minimal Groebner basis).
GeneratingSet cut_generators(const Multigraph& g, int q, IdealKind ideal, bool minimal);

/// The grevlex order <_q on R determined by BFS distance from q (ties by
/// vertex index).
TermOrder grevlex_q_order(const Multigraph& g, int q);
bool grevlex_q_less(const Multigraph& g, int q, const Monomial& a, const Monomial& b);

/// Normal form of a monomial modulo (I_G, <_q): the standard monomial with
/// q-reduced exponent divisor.
Monomial normal_form_IG(const Multigraph& g, int q, const Monomial& m);

/// phi: y_e -> x_{head(e)}.
Monomial specialize_phi(const Multigraph& g, const Monomial& m);
Binomial specialize_phi(const Multigraph& g, const Binomial& b);

struct FacetPrime {
    SpanningTree tree;
    std::vector<int> facet;  // oriented-edge ids of tau_T = E(G) \ O_T
    std::vector<int> prime;  // oriented-edge ids of O_T
};

/// One facet of Sigma_G^q and its minimal prime per spanning tree.
std::vector<FacetPrime> facets_and_primes(const Multigraph& g, int q);

/// Greedy frontier search for a facet containing a squarefree monomial not
/// in O_G^q; lowest oriented-edge index is chosen at each step.
SpanningTree find_facet(const Multigraph& g, int q, const Monomial& m);

/// Linear form y_plus - y_minus (minus_var < 0 encodes a single variable).
struct LinearForm {
    int plus_var;
    int minus_var;  // -1 for the lone y_{e_q} form
};

struct LsopSets {
    std::vector<int> distinguished;  // vertex -> oriented in-edge id
    std::vector<LinearForm> L;
    std::vector<LinearForm> Lq;
};

/// The l.s.o.p. sets for S/O_G^q from distinguished in-edges; empty map
/// selects the lowest-index in-edge per vertex.
LsopSets lsop_sets(const Multigraph& g, int q, const std::map<int, int>& distinguished_in_edges = {});

/// Kind-Kleinschmidt check: restriction of Lq to every facet has full rank.
bool lsop_is_valid(const Multigraph& g, int q, const LsopSets& sets);
int lsop_facet_rank(const Multigraph& g, int q, const LsopSets& sets, const std::vector<int>& facet);

/// Minimal generators of the Alexander dual of M_G^q with respect to the
/// degree divisor, read from the relabeled top cells of the bounded complex.
GeneratingSet alexander_dual_gens(const Multigraph& g, int q);

/// Number of G-parking functions with respect to q, by direct enumeration.
Int parking_count(const Multigraph& g, int q);

}  // namespace chipres
