#include "lrt/qsim.hpp"

#include <cmath>
#include <limits>

namespace lrt {

PureState::PureState(CVector amps, Index da, Index db)
    : amplitudes(std::move(amps)), dim_a(da), dim_b(db) {
    if (dim_a <= 0 || dim_b <= 0 || amplitudes.size() != dim_a * dim_b)
        throw std::invalid_argument("PureState: amplitude count != dim_a*dim_b");
    if (!amplitudes.allFinite())
        throw std::invalid_argument("PureState: non-finite amplitude");
    double n2 = amplitudes.squaredNorm();
    if (std::abs(n2 - 1.0) > 1e-12)
        throw std::invalid_argument("PureState: squared norm deviates from 1");
}

HermOp::HermOp(CMatrix m) : matrix(std::move(m)) {
    if (matrix.rows() != matrix.cols())
        throw std::invalid_argument("HermOp: not square");
    if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > kHermTol)
        throw std::invalid_argument("HermOp: not Hermitian within 1e-12");
}

CMatrix tensor(const CMatrix& a, const CMatrix& b) {
    const Index ra = a.rows(), ca = a.cols(), rb = b.rows(), cb = b.cols();
    if (ra > std::numeric_limits<Index>::max() / std::max<Index>(rb, 1) ||
        ca > std::numeric_limits<Index>::max() / std::max<Index>(cb, 1))
        throw std::overflow_error("tensor: dimension product overflows");
    CMatrix out(ra * rb, ca * cb);
    for (Index i = 0; i < ra; ++i)
        for (Index j = 0; j < ca; ++j)
            out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
    return out;
}

HermOp partial_trace_a(const HermOp& op, Index dim_a, Index dim_b) {
    if (op.dim() != dim_a * dim_b)
        throw std::invalid_argument("partial_trace_a: dimension mismatch");
    CMatrix out = CMatrix::Zero(dim_b, dim_b);
    for (Index k = 0; k < dim_a; ++k)
        out += op.matrix.block(k * dim_b, k * dim_b, dim_b, dim_b);
    return HermOp(std::move(out));
}

double trace_distance(const HermOp& rho, const HermOp& sigma) {
    if (rho.dim() != sigma.dim())
        throw std::invalid_argument("trace_distance: dimension mismatch");
    Eigen::SelfAdjointEigenSolver<CMatrix> es(rho.matrix - sigma.matrix,
                                              Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

namespace {

double checked_trace(const HermOp& op) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(op.matrix, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kPsdTol)
        throw std::invalid_argument("helstrom_guess: operator not PSD");
    return op.matrix.trace().real();
}

}  // namespace

double helstrom_guess(const std::vector<std::pair<HermOp, HermOp>>& pairs) {
    double total = 0.0, guess = 0.0;
    for (const auto& [r0, r1] : pairs) {
        const double t0 = checked_trace(r0), t1 = checked_trace(r1);
        total += t0 + t1;
        guess += 0.5 * (t0 + t1) + trace_distance(r0, r1);
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw std::invalid_argument("helstrom_guess: ensemble trace != 1");
    return guess;
}

CMatrix identity(Index n) { return CMatrix::Identity(n, n); }

CMatrix pauli_x() {
    CMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

CMatrix pauli_y() {
    CMatrix m(2, 2);
    m << std::complex<double>(0, 0), std::complex<double>(0, -1),
        std::complex<double>(0, 1), std::complex<double>(0, 0);
    return m;
}

CMatrix pauli_z() {
    CMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

CMatrix eigenprojector(const CMatrix& observable, int z) {
    const double sign = (z == 0) ? 1.0 : -1.0;
    return 0.5 * (identity(observable.rows()) + sign * observable);
}

HermOp density(const StateEnsemble& ens) {
    if (ens.empty()) throw std::invalid_argument("density: empty ensemble");
    const Index d = ens.front().state.dim();
    CMatrix rho = CMatrix::Zero(d, d);
    for (const auto& ws : ens)
        rho += ws.weight * (ws.state.amplitudes * ws.state.amplitudes.adjoint());
    return HermOp(std::move(rho));
}

double ensemble_norm(const StateEnsemble& ens, const CMatrix& m) {
    double s = 0.0;
    for (const auto& ws : ens)
        s += ws.weight * (m * ws.state.amplitudes).squaredNorm();
    return std::sqrt(std::max(0.0, s));
}

double ensemble_expectation(const StateEnsemble& ens, const CMatrix& m) {
    double s = 0.0;
    for (const auto& ws : ens) {
        const CVector& v = ws.state.amplitudes;
        s += ws.weight * (v.adjoint() * m * v)(0, 0).real();
    }
    return s;
}

}  // namespace lrt
