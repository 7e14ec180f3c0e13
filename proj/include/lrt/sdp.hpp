// sdp.hpp - dense semidefinite programming with certified dual bounds.
//
// Two solvers share one certification rule:
//  * solve():      primal-dual path-following interior-point method with
//                  Nesterov-Todd scaling and a dense Cholesky of the Schur
//                  complement. Intended for problems up to a few thousand
//                  constraints.
//  * solve_partition(): operator-splitting solver for moment problems whose
//                  equality structure is an orthogonal partition of matrix
//                  cells (one value per cell class). Scales to instances
//                  whose constraint count makes the dense Schur complement
//                  impractical.
//
// Both report bounds of the form  dual objective + n * eta, where eta
// compensates the most negative eigenvalue of the dual slack matrix. The
// compensation is a true upper-bound correction whenever the feasible set
// satisfies tr X <= n, which holds for every moment matrix this project
// produces (their PSD constraint forces unit-bounded diagonals).

#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

namespace lrt::sdp {

using Eigen::MatrixXd;
using Eigen::VectorXd;
using Index = Eigen::Index;

/// Symmetric matrix as upper-triangle triplets; <A,X> counts off-diagonal
/// entries twice (both triangles).
struct SparseSym {
    Index n = 0;
    struct Entry {
        int i, j;
        double v;
    };
    std::vector<Entry> entries;  // i <= j

    explicit SparseSym(Index n_ = 0) : n(n_) {}
    void add(int i, int j, double v);
    double inner(const MatrixXd& x) const;
    MatrixXd dense() const;
    void add_to(MatrixXd& m, double scale) const;  // m += scale * A
    double norm() const;                           // Frobenius
};

/// maximize <C,X>  s.t.  <A_i,X> = b_i,  X >= 0.
struct SdpProblem {
    Index n = 0;
    SparseSym objective{0};
    std::vector<SparseSym> constraints;
    std::vector<double> rhs;

    std::string to_json() const;
    static SdpProblem from_json(const std::string& text);
};

enum class SolveStatus { Optimal, MaxIter, InfeasibleSuspected };

struct SdpSolution {
    MatrixXd X;
    VectorXd y;
    MatrixXd S;  // sum_i y_i A_i - C
    double primal_obj = 0, dual_obj = 0;
    double primal_residual = 0, dual_residual = 0, gap = 0;
    SolveStatus status = SolveStatus::MaxIter;
    int iterations = 0;
};

SdpSolution solve(const SdpProblem& p, double tol = 1e-8, int max_iter = 200);

/// Dual objective plus n * |most negative dual-slack eigenvalue|, computed
/// from a fresh solve. Errors out if the dual residual exceeds 1e-7 rather
/// than returning a silent bound.
double certified_upper_bound(const SdpProblem& p, double tol = 1e-8);

/// The same compensation applied to an externally supplied multiplier
/// vector: b.y + n * max(0, -lambda_min(sum_i y_i A_i - C)).
double certify_from_dual(const SdpProblem& p, const VectorXd& y);

// ---------------------------------------------------------------------------
// Partitioned moment form:
//   maximize q.y  s.t.  M(y) >= 0,  y[norm_class] = 1,  pin.y (=|>=) value,
//   y[c] = 0 for c in zero_classes,
// where M(y) places y[c] at every cell of class c.

struct PartitionSdp {
    Index n = 0;
    std::vector<int> cls;  // n*n class ids, row-major, symmetric
    int num_classes = 0;
    int norm_class = 0;
    std::vector<int> zero_classes;
    VectorXd q;    // objective over classes
    VectorXd pin;  // pinned functional (may be empty)
    double pin_value = 0;
    bool pin_at_least = false;  // false: equality, true: pin.y >= value

    int cls_at(Index i, Index j) const { return cls[i * n + j]; }
};

struct PartitionOptions {
    double tol_gap = 5e-7;      // stop when |cert - q.y| below this
    double tol_primal = 1e-8;   // and the PSD-split residual below this
    int max_iter = 200000;
    int check_every = 100;
    double rho = 1.0;
    double over_relax = 1.6;
    // warm start (class values and scaled dual matrix from a prior solve)
    std::optional<VectorXd> warm_y;
    std::optional<MatrixXd> warm_dual;
    std::optional<double> warm_rho;
};

struct PartitionResult {
    VectorXd y;              // class values at the last iterate
    MatrixXd scaled_dual;    // for warm-starting the next solve
    double rho = 1.0;
    double primal_obj = 0;   // q.y (estimate; exact feasibility up to residual)
    double certified_bound = 0;  // rigorous upper bound on the optimum
    double eta = 0;              // slack-negativity compensation used
    double residual_l1 = 0;      // first-order stationarity remainder
    double primal_residual = 0;
    int iterations = 0;
    bool converged = false;
};

PartitionResult solve_partition(const PartitionSdp& p,
                                const PartitionOptions& opts = {});

}  // namespace lrt::sdp
