#include "lrt/strategies.hpp"

#include <cmath>

#include "json.hpp"

namespace lrt {

namespace {

void check_projector_family(const std::vector<std::vector<CMatrix>>& fam,
                            Index dim, const char* who) {
    for (const auto& povm : fam) {
        CMatrix sum = CMatrix::Zero(dim, dim);
        for (const auto& p : povm) {
            if (p.rows() != dim || p.cols() != dim)
                throw std::invalid_argument(std::string(who) +
                                            ": projector dimension mismatch");
            if ((p - p.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
                throw std::invalid_argument(std::string(who) +
                                            ": projector not Hermitian");
            if ((p * p - p).cwiseAbs().maxCoeff() > 1e-10)
                throw std::invalid_argument(std::string(who) +
                                            ": projector not idempotent");
            sum += p;
        }
        if ((sum - identity(dim)).cwiseAbs().maxCoeff() > 1e-10)
            throw std::invalid_argument(std::string(who) +
                                        ": family does not sum to identity");
    }
}

void check_ensemble(const StateEnsemble& ens, Index da, Index db) {
    if (ens.empty()) throw std::invalid_argument("empty state ensemble");
    double total = 0;
    for (const auto& ws : ens) {
        if (ws.weight < -1e-12)
            throw std::invalid_argument("negative ensemble weight");
        if (ws.state.dim_a != da || ws.state.dim_b != db)
            throw std::invalid_argument("ensemble state dimension mismatch");
        total += ws.weight;
    }
    if (std::abs(total - 1.0) > 1e-10)
        throw std::invalid_argument("ensemble weights do not sum to 1");
}

}  // namespace

void Strategy::validate() const {
    check_ensemble(state, dim_a, dim_b);
    if (alice_povms.empty() || bob_povms.empty())
        throw std::invalid_argument("Strategy: missing measurement family");
    check_projector_family(alice_povms, dim_a, "alice");
    check_projector_family(bob_povms, dim_b, "bob");
}

void ReflectionStrategy::validate(double tol) const {
    check_ensemble(state, dim_a, dim_b);
    const CMatrix ia = identity(dim_a), ib = identity(dim_b);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            if ((F[a][b] * F[a][b] - ia).cwiseAbs().maxCoeff() > tol)
                throw std::invalid_argument("F_ab^2 != I");
            if ((G[a][b] * G[a][b] - ib).cwiseAbs().maxCoeff() > tol)
                throw std::invalid_argument("G_ab^2 != I");
            if ((F[a][b] - F[a][b].adjoint()).cwiseAbs().maxCoeff() > tol)
                throw std::invalid_argument("F_ab not Hermitian");
            if ((G[a][b] - G[a][b].adjoint()).cwiseAbs().maxCoeff() > tol)
                throw std::invalid_argument("G_ab not Hermitian");
        }
    for (int a = 0; a < 3; ++a) {
        if ((F[a][0] * F[a][1] * F[a][2] - ia).cwiseAbs().maxCoeff() > tol)
            throw std::invalid_argument("row product of F != I");
        for (int b = 0; b < 3; ++b)
            for (int b2 = b + 1; b2 < 3; ++b2)
                if ((F[a][b] * F[a][b2] - F[a][b2] * F[a][b])
                        .cwiseAbs()
                        .maxCoeff() > tol)
                    throw std::invalid_argument("same-row F's do not commute");
    }
    for (int b = 0; b < 3; ++b) {
        if ((G[0][b] * G[1][b] * G[2][b] + ib).cwiseAbs().maxCoeff() > tol)
            throw std::invalid_argument("column product of G != -I");
        for (int a = 0; a < 3; ++a)
            for (int a2 = a + 1; a2 < 3; ++a2)
                if ((G[a][b] * G[a2][b] - G[a2][b] * G[a][b])
                        .cwiseAbs()
                        .maxCoeff() > tol)
                    throw std::invalid_argument("same-column G's do not commute");
    }
}

CMatrix ReflectionStrategy::f_proj(int a, int b, int z) const {
    return eigenprojector(F[a][b], z);
}

CMatrix ReflectionStrategy::g_proj(int a, int b, int z) const {
    return eigenprojector(G[a][b], z);
}

Strategy chsh_optimal() {
    const double s = 1.0 / std::sqrt(2.0);
    Strategy st;
    st.dim_a = st.dim_b = 2;
    CVector amps(4);
    amps << s, 0, 0, s;
    st.state = {{1.0, PureState(amps, 2, 2)}};
    const CMatrix obs_a[2] = {pauli_x(), pauli_z()};
    const CMatrix obs_b[2] = {s * (pauli_x() + pauli_z()),
                              s * (pauli_x() - pauli_z())};
    st.alice_povms.resize(2);
    st.bob_povms.resize(2);
    for (int i = 0; i < 2; ++i) {
        st.alice_povms[i] = {eigenprojector(obs_a[i], 0),
                             eigenprojector(obs_a[i], 1)};
        st.bob_povms[i] = {eigenprojector(obs_b[i], 0),
                           eigenprojector(obs_b[i], 1)};
    }
    return st;
}

std::pair<double, double> chsh_mixed(double r) {
    if (!(r >= 0.0 && r <= 1.0))
        throw std::invalid_argument("chsh_mixed: r outside [0,1]");
    const double opt = (2.0 + std::sqrt(2.0)) / 4.0;
    return {0.75 * r + opt * (1.0 - r), 1.0 * r + opt * (1.0 - r)};
}

ReflectionStrategy magic_square_canonical() {
    ReflectionStrategy rs;
    rs.dim_a = rs.dim_b = 4;
    // maximally entangled pair of qubit pairs: (1/2) sum_m |m>_A |m>_B
    CVector amps = CVector::Zero(16);
    for (int m = 0; m < 4; ++m) amps(m * 4 + m) = 0.5;
    rs.state = {{1.0, PureState(amps, 4, 4)}};

    const CMatrix I2 = identity(2), X = pauli_x(), Y = pauli_y(), Z = pauli_z();
    // Mermin-Peres square: rows multiply to +I, columns to -I
    std::array<std::array<CMatrix, 3>, 3> sq;
    sq[0] = {tensor(I2, Z), tensor(Z, I2), tensor(Z, Z)};
    sq[1] = {tensor(X, I2), tensor(I2, X), tensor(X, X)};
    sq[2] = {-tensor(X, Z), -tensor(Z, X), tensor(Y, Y)};
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            rs.F[a][b] = sq[a][b];
            rs.G[a][b] = sq[a][b].transpose();  // (M ox M^T) fixes |psi>
        }
    return rs;
}

ReflectionStrategy depolarize(const ReflectionStrategy& rs, double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("depolarize: p outside [0,1]");
    ReflectionStrategy out = rs;
    if (p == 0.0) return out;
    const Index d = rs.dim_a * rs.dim_b;
    out.state.clear();
    for (const auto& ws : rs.state)
        if (ws.weight * (1.0 - p) > 0.0)
            out.state.push_back({ws.weight * (1.0 - p), ws.state});
    for (Index k = 0; k < d; ++k) {
        CVector e = CVector::Zero(d);
        e(k) = 1.0;
        out.state.push_back({p / static_cast<double>(d),
                             PureState(e, rs.dim_a, rs.dim_b)});
    }
    return out;
}

Strategy strategy_from_reflection(const ReflectionStrategy& rs) {
    rs.validate(1e-8);
    const NonlocalGame g = magic_square();
    Strategy st;
    st.state = rs.state;
    st.dim_a = rs.dim_a;
    st.dim_b = rs.dim_b;
    st.alice_povms.resize(3);
    st.bob_povms.resize(3);
    for (int a = 0; a < 3; ++a)
        for (int x : g.alice_outputs) {
            CMatrix proj = identity(rs.dim_a);
            for (int b = 0; b < 3; ++b) proj = proj * rs.f_proj(a, b, bit_of(x, b));
            st.alice_povms[a].push_back(proj);
        }
    for (int b = 0; b < 3; ++b)
        for (int y : g.bob_outputs) {
            CMatrix proj = identity(rs.dim_b);
            for (int a = 0; a < 3; ++a) proj = proj * rs.g_proj(a, b, bit_of(y, a));
            st.bob_povms[b].push_back(proj);
        }
    st.validate();
    return st;
}

std::string strategy_to_json(const Strategy& s) {
    nlohmann::json j;
    j["dim_a"] = s.dim_a;
    j["dim_b"] = s.dim_b;
    auto mat_json = [](const CMatrix& m) {
        nlohmann::json rows = nlohmann::json::array();
        for (Index i = 0; i < m.rows(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (Index k = 0; k < m.cols(); ++k)
                row.push_back({m(i, k).real(), m(i, k).imag()});
            rows.push_back(row);
        }
        return rows;
    };
    j["state"] = nlohmann::json::array();
    for (const auto& ws : s.state) {
        nlohmann::json amp = nlohmann::json::array();
        for (Index i = 0; i < ws.state.amplitudes.size(); ++i)
            amp.push_back({ws.state.amplitudes(i).real(),
                           ws.state.amplitudes(i).imag()});
        j["state"].push_back({{"weight", ws.weight}, {"amplitudes", amp}});
    }
    j["alice_povms"] = nlohmann::json::array();
    for (const auto& povm : s.alice_povms) {
        nlohmann::json jm = nlohmann::json::array();
        for (const auto& m : povm) jm.push_back(mat_json(m));
        j["alice_povms"].push_back(jm);
    }
    j["bob_povms"] = nlohmann::json::array();
    for (const auto& povm : s.bob_povms) {
        nlohmann::json jm = nlohmann::json::array();
        for (const auto& m : povm) jm.push_back(mat_json(m));
        j["bob_povms"].push_back(jm);
    }
    return j.dump(2);
}

}  // namespace lrt
