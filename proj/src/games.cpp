#include "lrt/games.hpp"

#include <cmath>
#include <sstream>

#include "lrt/strategies.hpp"
#include "json.hpp"

namespace lrt {

bool NonlocalGame::complete_support() const {
    for (double v : q)
        if (v <= 0) return false;
    return true;
}

Correlation::Correlation(int na_, int nb_, int nx_, int ny_,
                         std::vector<double> vals)
    : na(na_), nb(nb_), nx(nx_), ny(ny_), p(std::move(vals)) {
    if (static_cast<int>(p.size()) != na * nb * nx * ny)
        throw std::invalid_argument("Correlation: wrong entry count");
    for (double v : p)
        if (!(v >= -1e-12) || !std::isfinite(v))
            throw std::invalid_argument("Correlation: negative or non-finite entry");
    // normalization per input pair
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < nb; ++b) {
            double s = 0;
            for (int x = 0; x < nx; ++x)
                for (int y = 0; y < ny; ++y) s += (*this)(x, y, a, b);
            if (std::abs(s - 1.0) > 1e-9)
                throw std::invalid_argument("Correlation: not normalized");
        }
    // non-signaling: marginals independent of the far input
    for (int a = 0; a < na; ++a)
        for (int x = 0; x < nx; ++x) {
            double ref = 0;
            for (int y = 0; y < ny; ++y) ref += (*this)(x, y, a, 0);
            for (int b = 1; b < nb; ++b) {
                double m = 0;
                for (int y = 0; y < ny; ++y) m += (*this)(x, y, a, b);
                if (std::abs(m - ref) > 1e-9)
                    throw std::invalid_argument("Correlation: Alice marginal signals");
            }
        }
    for (int b = 0; b < nb; ++b)
        for (int y = 0; y < ny; ++y) {
            double ref = 0;
            for (int x = 0; x < nx; ++x) ref += (*this)(x, y, 0, b);
            for (int a = 1; a < na; ++a) {
                double m = 0;
                for (int x = 0; x < nx; ++x) m += (*this)(x, y, a, b);
                if (std::abs(m - ref) > 1e-9)
                    throw std::invalid_argument("Correlation: Bob marginal signals");
            }
        }
}

double Correlation::alice_marginal(int x, int a) const {
    double s = 0;
    for (int y = 0; y < ny; ++y) s += (*this)(x, y, a, 0);
    return s;
}

double Correlation::bob_marginal(int y, int b) const {
    double s = 0;
    for (int x = 0; x < nx; ++x) s += (*this)(x, y, 0, b);
    return s;
}

std::string Correlation::to_json() const {
    nlohmann::json j;
    j["index_order"] = "(a, b, x, y) with y fastest";
    j["na"] = na;
    j["nb"] = nb;
    j["nx"] = nx;
    j["ny"] = ny;
    j["p"] = p;
    return j.dump(2);
}

NonlocalGame chsh() {
    NonlocalGame g;
    g.name = "chsh";
    g.na = g.nb = 2;
    g.alice_outputs = {0, 1};
    g.bob_outputs = {0, 1};
    g.q.assign(4, 0.25);
    g.score.assign(16, 0.0);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int x = 0; x < 2; ++x)
                for (int y = 0; y < 2; ++y)
                    g.score[((a * 2 + b) * 2 + x) * 2 + y] =
                        static_cast<double>(x ^ y ^ !(a & b));
    return g;
}

NonlocalGame magic_square() {
    NonlocalGame g;
    g.name = "magic_square";
    g.na = g.nb = 3;
    g.alice_outputs = {0b000, 0b011, 0b101, 0b110};  // even parity
    g.bob_outputs = {0b100, 0b010, 0b001, 0b111};    // odd parity
    g.q.assign(9, 1.0 / 9.0);
    g.score.assign(9 * 16, 0.0);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int xi = 0; xi < 4; ++xi)
                for (int yi = 0; yi < 4; ++yi) {
                    const int x = g.alice_outputs[xi], y = g.bob_outputs[yi];
                    g.score[((a * 3 + b) * 4 + xi) * 4 + yi] =
                        (bit_of(x, b) == bit_of(y, a)) ? 1.0 : 0.0;
                }
    return g;
}

double expected_score(const NonlocalGame& g, const Correlation& c) {
    if (c.na != g.na || c.nb != g.nb || c.nx != g.nx() || c.ny != g.ny())
        throw std::invalid_argument("expected_score: alphabet mismatch");
    double s = 0;
    for (int a = 0; a < g.na; ++a)
        for (int b = 0; b < g.nb; ++b)
            for (int x = 0; x < c.nx; ++x)
                for (int y = 0; y < c.ny; ++y)
                    s += g.input_prob(a, b) * g.H(a, b, x, y) * c(x, y, a, b);
    return s;
}

Correlation correlation_from_strategy(const Strategy& s) {
    s.validate();
    const int na = static_cast<int>(s.alice_povms.size());
    const int nb = static_cast<int>(s.bob_povms.size());
    const int nx = static_cast<int>(s.alice_povms[0].size());
    const int ny = static_cast<int>(s.bob_povms[0].size());
    std::vector<double> vals(static_cast<size_t>(na) * nb * nx * ny, 0.0);
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < nb; ++b)
            for (int x = 0; x < nx; ++x)
                for (int y = 0; y < ny; ++y) {
                    const CMatrix op =
                        tensor(s.alice_povms[a][x], s.bob_povms[b][y]);
                    double v = ensemble_expectation(s.state, op);
                    vals[((a * nb + b) * nx + x) * ny + y] = std::max(0.0, v);
                }
    return Correlation(na, nb, nx, ny, std::move(vals));
}

}  // namespace lrt
