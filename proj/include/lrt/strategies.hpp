// strategies.hpp - concrete quantum strategies: optimal CHSH, the coin-mixing
// lower-bound strategy, the canonical Magic Square reflection strategy, and
// the depolarizing noise model.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "lrt/games.hpp"
#include "lrt/qsim.hpp"

namespace lrt {

/// State plus projective measurement families {A_ax} on factor A and
/// {B_by} on factor B. The state is an ensemble so that depolarized
/// strategies flow through the same code path as pure ones.
struct Strategy {
    StateEnsemble state;
    Index dim_a = 0, dim_b = 0;
    // alice_povms[a][xi] acts on factor A; xi indexes game.alice_outputs
    std::vector<std::vector<CMatrix>> alice_povms;
    std::vector<std::vector<CMatrix>> bob_povms;

    void validate() const;  // throws on invariant violation
};

/// Magic Square strategy in reflection form: +-1-valued observables
/// F[a][b] on factor A and G[a][b] on factor B with
///   F_ab^2 = G_ab^2 = I,   prod_b F_ab = I,   prod_a G_ab = -I,
/// same-row F's commuting and same-column G's commuting.
struct ReflectionStrategy {
    StateEnsemble state;
    Index dim_a = 0, dim_b = 0;
    std::array<std::array<CMatrix, 3>, 3> F;
    std::array<std::array<CMatrix, 3>, 3> G;

    void validate(double tol = 1e-8) const;
    /// Outcome-z projector (I + (-1)^z F_ab)/2 of the bit x_b.
    CMatrix f_proj(int a, int b, int z) const;
    CMatrix g_proj(int a, int b, int z) const;
};

/// Bell state + X/Z for Alice, (X+Z)/sqrt2 and (X-Z)/sqrt2 for Bob.
/// Scores (2+sqrt2)/4 at CHSH.
Strategy chsh_optimal();

/// The shared-coin strategy: with probability r both players output 0
/// (Bob then guesses perfectly), else they play the optimal strategy.
/// Returns the (P1, P2) point; the locus is the line
/// P2 = 1 + 3*sqrt2/4 - sqrt2*P1.
std::pair<double, double> chsh_mixed(double r);

/// Mermin-Peres square on two maximally entangled qubit pairs; wins with
/// probability 1 and satisfies every reflection-strategy relation exactly.
ReflectionStrategy magic_square_canonical();

/// Replace the state by (1-p)*psi + p*(maximally mixed), carried as a
/// weighted pure-state ensemble. Observables are unchanged.
ReflectionStrategy depolarize(const ReflectionStrategy& rs, double p);

/// Recover the projective-measurement strategy: A_ax = prod_b F^{x_b}_ab
/// (the rows commute, so the product is an orthogonal projector), and
/// B_by analogously. Output alphabets follow games::magic_square().
Strategy strategy_from_reflection(const ReflectionStrategy& rs);

std::string strategy_to_json(const Strategy& s);

}  // namespace lrt
