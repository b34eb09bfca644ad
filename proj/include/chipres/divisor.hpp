#pragma once

#include "chipres/graph.hpp"

#include <vector>

namespace chipres {

/// Integer divisor, indexed by vertex position.
using Divisor = std::vector<Int>;

/// Rational functional on vertices (vartheta, eta, b_q rows, Green's rows).
using PotentialFunctional = std::vector<Rat>;

/// Rational functional on oriented edges; values on e and e-bar are
/// independent (general 1-chains).
using EdgeFunctional = std::vector<Rat>;

Int divisor_degree(const Divisor& d);

/// Laplacian applied to an integer or rational vertex function.
Divisor laplacian_apply(const Multigraph& g, const std::vector<Int>& f);
PotentialFunctional laplacian_apply(const Multigraph& g, const PotentialFunctional& f);

/// Boundary of a 1-chain: (d sigma)(v) = sum over heads at v minus tails at v.
PotentialFunctional boundary_apply(const Multigraph& g, const EdgeFunctional& sigma);

/// Green's functions j_q(p, v): full n x n matrix, row/column q identically
/// zero; Delta j_q(p, .) = (p)-(q) with j_q(p, q) = 0.
RatMatrix greens_matrix(const Multigraph& g, int q);

/// Energy pairing of two degree-zero divisors; throws on nonzero degree.
Rat energy_pairing(const Multigraph& g, int q, const Divisor& d1, const Divisor& d2);
Rat energy_pairing(const RatMatrix& greens, const Divisor& d1, const Divisor& d2);

struct PotentialWeights {
    PotentialFunctional b_q;     // b_q(v) = sum_p j_q(p, v)
    std::vector<Int> theta_q;    // integer rescaling of b_q
    std::vector<Int> lambda_q;   // lambda_q(e) = theta_q(head(e)), one per oriented edge
};

PotentialWeights bq_theta(const Multigraph& g, int q);

enum class ConeKind { MCone, OCone };

/// Does the functional select M_G^q from I_G (M-cone) resp. O_G^q from J_G
/// (O-cone)? M-cone candidates are vertex functionals (size n), O-cone
/// candidates edge functionals (size 2m). On 2-connected graphs the
/// vertexwise criterion is used; with cut vertices both cones fall back to
/// the bond-sum test.
bool cone_membership(const Multigraph& g, int q, ConeKind kind, const std::vector<Rat>& fnl);

/// Dhar burning test: no nonempty subset avoiding q can fire without driving
/// one of its vertices negative. Requires D >= 0 off q.
bool is_q_reduced(const Multigraph& g, int q, const Divisor& d);

/// The unique q-reduced divisor linearly equivalent to d.
Divisor q_reduce(const Multigraph& g, int q, const Divisor& d);

bool linearly_equivalent(const Multigraph& g, int q, const Divisor& d1, const Divisor& d2);

/// Invariant factors (> 1) of the reduced Laplacian: the cycle structure of
/// Pic^0(G).
std::vector<Int> pic0_invariants(const Multigraph& g, int q);

}  // namespace chipres
