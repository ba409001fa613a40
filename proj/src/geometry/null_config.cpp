#include "nullwave/geometry/null_config.hpp"

#include <sstream>

namespace nullwave {

NullConfig::NullConfig(std::array<CoVec4, 4> zetas, Metric4 metric)
    : zetas_(std::move(zetas)), metric_(std::move(metric)) {
    for (int i = 1; i <= 4; ++i) {
        if (zeta(i).is_zero()) throw ConfigError("covector " + std::to_string(i) + " is zero");
        RhoRational n = norm_sq(metric_, zeta(i));
        if (!n.is_zero())
            throw ConfigError("covector " + std::to_string(i) + " is not light-like: norm " + n.to_string());
    }
    Mat4 rows;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) rows(i, j) = zetas_[static_cast<std::size_t>(i)][j];
    if (determinant(rows).is_zero()) throw ConfigError("covectors are linearly dependent");
    RhoRational total = norm_sq(metric_, sum());
    if (!total.is_zero()) throw ConfigError("sum of covectors is not light-like: norm " + total.to_string());
}

CoVec4 NullConfig::sum() const { return zetas_[0] + zetas_[1] + zetas_[2] + zetas_[3]; }

std::array<CoVec4, 4> tilde_zetas() {
    return {CoVec4(1, 0, 1, 0), CoVec4(1, 0, 0, 1), CoVec4(-1, -1, 0, 0), CoVec4(1, -1, 0, 0)};
}

NullConfig standard_config() {
    auto tilde = tilde_zetas();
    RhoRational a1(1);
    RhoRational a2(-1);
    RhoRational a4 = RhoRational::monomial(1, 10);
    RhoRational a3 = solve_null_scale(a1, a2, a4, tilde);
    return NullConfig({a1 * tilde[0], a2 * tilde[1], a3 * tilde[2], a4 * tilde[3]});
}

RhoRational solve_null_scale(const RhoRational& alpha1, const RhoRational& alpha2, const RhoRational& alpha4,
                             const std::array<CoVec4, 4>& tilde, const Metric4& metric) {
    const std::array<RhoRational, 4> alpha{alpha1, alpha2, RhoRational(0), alpha4};
    // |sum|^2 = sum_i alpha_i^2 |t_i|^2 + 2 sum_{i<j} alpha_i alpha_j h(t_i, t_j).
    RhoRational constant;
    RhoRational linear;
    RhoRational quad = norm_sq(metric, tilde[2]);
    if (!quad.is_zero()) throw ConfigError("third covector is not light-like; the condition is not linear");
    for (std::size_t i = 0; i < 4; ++i) {
        if (i == 2) continue;
        constant += alpha[i] * alpha[i] * norm_sq(metric, tilde[i]);
        linear += 2 * alpha[i] * pairing(metric, tilde[i], tilde[2]);
        for (std::size_t j = i + 1; j < 4; ++j) {
            if (j == 2) continue;
            constant += 2 * alpha[i] * alpha[j] * pairing(metric, tilde[i], tilde[j]);
        }
    }
    if (linear.is_zero()) {
        std::ostringstream os;
        os << "coefficient of alpha_3 vanishes:";
        for (std::size_t i : {0u, 1u, 3u})
            os << " alpha_" << i + 1 << "*h(t_" << i + 1 << ",t_3) = "
               << (alpha[i] * pairing(metric, tilde[i], tilde[2])).to_string() << ";";
        throw ConfigError(os.str());
    }
    return -constant / linear;
}

std::vector<PairingEntry> pairing_table(const NullConfig& config) {
    std::vector<PairingEntry> out;
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            out.push_back({i, j, pairing(config.metric(), config.zeta(i), config.zeta(j))});
    return out;
}

std::vector<NormEntry> triple_norm_table(const NullConfig& config) {
    std::vector<NormEntry> out;
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            for (int k = j + 1; k <= 4; ++k)
                out.push_back({{i, j, k}, norm_sq(config.metric(), config.zeta(i) + config.zeta(j) + config.zeta(k))});
    return out;
}

std::string FlatPoint::to_string() const {
    std::ostringstream os;
    os << "(" << x[0].get_str() << ", " << x[1].get_str() << ", " << x[2].get_str() << ", " << x[3].get_str() << ")";
    return os.str();
}

bool causally_unrelated(const FlatPoint& p, const FlatPoint& q) {
    Rational dt = q.x[0] - p.x[0];
    Rational spatial = 0;
    for (std::size_t i = 1; i < 4; ++i) {
        Rational d = q.x[i] - p.x[i];
        spatial += d * d;
    }
    return spatial > dt * dt;
}

bool Backtrace::all_unrelated() const {
    for (const auto& p : pairs)
        if (!p.unrelated) return false;
    return true;
}

Backtrace backtrace_sources(const FlatPoint& q0, const NullConfig& config, const Rational& rho_value,
                            const std::array<Rational, 4>& times) {
    if (rho_value <= 1) throw std::invalid_argument("rho_value must exceed 1");
    for (const auto& t : times)
        if (sgn(t) < 0) throw std::invalid_argument("source times must be non-negative");
    Backtrace out;
    Mat4 tangents;
    for (int i = 0; i < 4; ++i) {
        CoVec4 v = raise(config.metric(), config.zeta(i + 1));
        std::array<Rational, 4> d;
        for (int a = 0; a < 4; ++a) d[static_cast<std::size_t>(a)] = v[a].evaluate(rho_value);
        if (sgn(d[0]) == 0) throw ConfigError("ray direction has no time component");
        Rational t0 = d[0];
        for (auto& c : d) c /= t0;
        auto& src = out.sources[static_cast<std::size_t>(i)];
        for (std::size_t a = 0; a < 4; ++a) {
            src.x[a] = q0.x[a] - times[static_cast<std::size_t>(i)] * d[a];
            tangents(i, static_cast<int>(a)) = RhoRational(d[a]);
        }
        out.directions[static_cast<std::size_t>(i)] = d;
    }
    out.tangents_independent = !determinant(tangents).is_zero();
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            out.pairs.push_back({i + 1, j + 1,
                                 causally_unrelated(out.sources[static_cast<std::size_t>(i)],
                                                    out.sources[static_cast<std::size_t>(j)])});
    return out;
}

}  // namespace nullwave
