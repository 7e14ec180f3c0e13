// games.hpp - nonlocal game definitions (CHSH, Magic Square), correlations
// and scoring.

#pragma once

#include <string>
#include <vector>

#include "lrt/qsim.hpp"

namespace lrt {

struct Strategy;  // strategies.hpp

/// A 2-player game: an input distribution q over A x B and a score
/// function H: A x B x X x Y -> [0,1]. Outputs are label values (plain
/// bits for CHSH, 3-bit strings packed into ints for Magic Square) and
/// are addressed by their index in the label lists.
struct NonlocalGame {
    std::string name;
    int na = 0, nb = 0;                 // input alphabet sizes
    std::vector<int> alice_outputs;     // label values, size nx
    std::vector<int> bob_outputs;       // label values, size ny
    std::vector<double> q;              // na*nb, sums to 1
    std::vector<double> score;          // na*nb*nx*ny, values in [0,1]

    int nx() const { return static_cast<int>(alice_outputs.size()); }
    int ny() const { return static_cast<int>(bob_outputs.size()); }
    double input_prob(int a, int b) const { return q[a * nb + b]; }
    double H(int a, int b, int xi, int yi) const {
        return score[((a * nb + b) * nx() + xi) * ny() + yi];
    }
    bool complete_support() const;
};

/// Conditional output distribution P(xy|ab), stored dense with index
/// order (a, b, x, y). Construction validates normalization and the
/// non-signaling marginals to 1e-9.
struct Correlation {
    int na = 0, nb = 0, nx = 0, ny = 0;
    std::vector<double> p;  // na*nb*nx*ny

    Correlation() = default;
    Correlation(int na_, int nb_, int nx_, int ny_, std::vector<double> vals);

    double operator()(int x, int y, int a, int b) const {
        return p[((a * nb + b) * nx + x) * ny + y];
    }
    double& at(int x, int y, int a, int b) {
        return p[((a * nb + b) * nx + x) * ny + y];
    }
    /// P(x|a), independent of b by the non-signaling check.
    double alice_marginal(int x, int a) const;
    double bob_marginal(int y, int b) const;

    std::string to_json() const;
};

/// The b-th bit of a 3-bit output string, counting from the left.
inline int bit_of(int value, int b) { return (value >> (2 - b)) & 1; }

NonlocalGame chsh();
NonlocalGame magic_square();

double expected_score(const NonlocalGame& g, const Correlation& c);

Correlation correlation_from_strategy(const Strategy& s);

}  // namespace lrt
