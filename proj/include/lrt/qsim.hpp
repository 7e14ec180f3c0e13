// qsim.hpp - dense complex linear algebra and quantum-state utilities.
//
// Everything here is a pure function on immutable values; dimensions stay
// small (<= a few hundred), so dense cubic-cost algorithms throughout.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <vector>

namespace lrt {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Index = Eigen::Index;

inline constexpr double kHermTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;

/// Pure state on a bipartite system, amplitudes in the product basis
/// |i_a i_b> with the B index fastest.
struct PureState {
    CVector amplitudes;
    Index dim_a = 0;
    Index dim_b = 0;

    PureState() = default;
    PureState(CVector amps, Index da, Index db);

    Index dim() const { return dim_a * dim_b; }
};

/// A pure state with a weight; lists of these stand in for mixed states
/// (all downstream quantities are linear in the density operator).
struct WeightedState {
    double weight = 1.0;
    PureState state;
};

using StateEnsemble = std::vector<WeightedState>;

/// Hermitian operator; construction validates self-adjointness to 1e-12.
struct HermOp {
    CMatrix matrix;

    HermOp() = default;
    explicit HermOp(CMatrix m);

    Index dim() const { return matrix.rows(); }
};

/// Kronecker product, dimension (rA*rB) x (cA*cB).
CMatrix tensor(const CMatrix& a, const CMatrix& b);

/// Trace out the first tensor factor of a (dim_a*dim_b)-dimensional operator.
HermOp partial_trace_a(const HermOp& op, Index dim_a, Index dim_b);

/// (1/2) sum |eig(rho - sigma)|. Inputs may be subnormalized.
double trace_distance(const HermOp& rho, const HermOp& sigma);

/// Optimal probability of guessing the bit m of an equal-weight ensemble
/// {(rho_{0,z}, rho_{1,z})}_z of subnormalized states with total trace 1:
/// sum_z [ (tr rho_0z + tr rho_1z)/2 + trace_distance(rho_0z, rho_1z) ].
/// Operators must be PSD up to a -1e-10 eigenvalue floor.
double helstrom_guess(const std::vector<std::pair<HermOp, HermOp>>& pairs);

// small constructors used all over the test and strategy code
CMatrix identity(Index n);
CMatrix pauli_x();
CMatrix pauli_y();
CMatrix pauli_z();

/// Projector onto the (-1)^z eigenspace of a +-1-valued observable.
CMatrix eigenprojector(const CMatrix& observable, int z);

/// Density operator of an ensemble (sum of weighted pure projectors).
HermOp density(const StateEnsemble& ens);

/// sqrt(sum_k w_k <psi_k| M^dag M |psi_k>), the ensemble extension of
/// the vector norm ||M|psi>||.
double ensemble_norm(const StateEnsemble& ens, const CMatrix& m);

/// sum_k w_k <psi_k| M |psi_k>  (real part; M expected Hermitian-valued).
double ensemble_expectation(const StateEnsemble& ens, const CMatrix& m);

}  // namespace lrt
