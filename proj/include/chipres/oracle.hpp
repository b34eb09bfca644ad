#pragma once

#include "chipres/cells.hpp"
#include "chipres/divisor.hpp"
#include "chipres/graph.hpp"
#include "chipres/monomial.hpp"

#include <optional>
#include <random>

namespace chipres {

/// Betti table of OG or MG computed independently of the cellular route:
/// strand-by-strand homology of the Taylor complex over the minimal
/// generators. Refuses above max_gens (exponential in the generator count).
BettiTable oracle_betti(const Multigraph& g, int q, IdealKind target, int max_gens = 12);

/// Full Buchberger certification: every S-pair of the binomial set must
/// reduce to zero against it under the given term order.
bool buchberger_verify(const std::vector<Binomial>& gens, const TermOrder& order);

/// Random positive weight order with entries in 1..100; resampled until the
/// orientation of every supplied binomial is strict.
TermOrder random_weight_order(int nvars, const std::vector<Binomial>& gens, std::mt19937& rng);

/// Initial forms of binomials under a weight vector; nullopt when some
/// binomial is tied (the weight does not represent a term order for it).
std::optional<std::vector<Monomial>> weight_initial(const std::vector<Binomial>& gens,
                                                    const std::vector<Int>& weights);

/// Exhaustive minimizer of b_q over {D + Delta(f) : |f| <= radius, f(q)=0},
/// restricted to divisors effective off q when any exist in the ball.
Divisor brute_bq_min(const Multigraph& g, int q, const Divisor& d, int radius);

/// Direct Alexander duality over the exponent box (test oracle for the
/// cocellular route).
std::vector<Monomial> alexander_dual_brute(const Multigraph& g, int q);

}  // namespace chipres
