#include "nullwave/interaction/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nullwave::oracle {

namespace {

using Real = long double;
using Vec = std::array<Real, 4>;
using Mat = std::array<Real, 16>;

Mat mul(const Mat& a, const Mat& b) {
    Mat c{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            for (int j = 0; j < 4; ++j) c[4 * i + j] += a[4 * i + k] * b[4 * k + j];
    return c;
}

Mat scaled(Mat a, Real s) {
    for (Real& x : a) x *= s;
    return a;
}

Mat plus(Mat a, const Mat& b) {
    for (int i = 0; i < 16; ++i) a[i] += b[i];
    return a;
}

Real quad(const Mat& m, const Vec& x) {
    Real s = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) s += m[4 * i + j] * x[i] * x[j];
    return s;
}

struct Wave {
    Mat amp{};
    Vec cov{};
};

class Engine {
public:
    Engine(const NullConfig& config, Real rho) {
        if (!(rho >= kRhoMin && rho <= kRhoMax))
            throw std::invalid_argument("oracle rho must lie in [1.5, 4]");
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                hinv_[4 * i + j] = config.metric().inverse()(i, j).evaluate(rho);
                hlow_[4 * i + j] = config.metric().lower()(i, j).evaluate(rho);
            }
        for (int w = 0; w < 4; ++w) {
            Vec z{};
            for (int i = 0; i < 4; ++i) z[i] = config.zeta(w + 1)[i].evaluate(rho);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) leaves_[w].amp[4 * i + j] = z[i] * z[j];
            leaves_[w].cov = z;
        }
    }

    Wave eval(const TermNode& t) {
        if (t.kind == TermNode::Kind::Leaf) return leaves_[t.wave - 1];
        std::string key = t.to_string();
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        Wave out;
        if (t.kind == TermNode::Kind::Inverse) {
            Wave c = eval(*t.children.front());
            out.cov = c.cov;
            out.amp = scaled(c.amp, Real(1) / quad(hinv_, c.cov));
        } else {
            std::vector<Wave> args;
            for (const auto& c : t.children) args.push_back(eval(*c));
            for (const auto& a : args)
                for (int i = 0; i < 4; ++i) out.cov[i] += a.cov[i];
            switch (t.form.kind) {
                case FormKind::Quasilinear: out.amp = quasilinear(args); break;
                case FormKind::Semilinear: out.amp = semilinear(args); break;
                case FormKind::Full: out.amp = plus(quasilinear(args), semilinear(args)); break;
                case FormKind::WaveOperator:
                    // -1/2 h^{pq} (i xi_p)(i xi_q) u
                    out.amp = scaled(args[0].amp, 0.5 * quad(hinv_, args[0].cov));
                    break;
            }
        }
        cache_.emplace(std::move(key), out);
        return out;
    }

private:
    // (-1)^k (H A_1 H ... A_{k-1} H)^{pq} (i xi_p)(i xi_q) A_k, averaged over the
    // order of the coefficient slots.
    Mat quasilinear(const std::vector<Wave>& args) const {
        const int k = static_cast<int>(args.size());
        const Wave& last = args.back();
        std::vector<int> order(static_cast<std::size_t>(k - 1));
        std::iota(order.begin(), order.end(), 0);
        Real total = 0;
        int count = 0;
        do {
            Mat chain = hinv_;
            for (int s : order) chain = mul(mul(chain, args[s].amp), hinv_);
            total += quad(chain, last.cov);
            ++count;
        } while (std::next_permutation(order.begin(), order.end()));
        Real sign = (k % 2 == 0) ? 1.0 : -1.0;
        return scaled(last.amp, -sign * total / count);
    }

    // Two-derivative part of twice the Ricci quadratic terms, polarized: every
    // slot is assigned to exactly one factor of
    //   2 g^{ab} g_{ps} g^{pl} G_{l mu b} g^{sc} G_{c nu a}
    //   + g_{nu l} g^{lx} G_{x ab} g^{aq} g^{bd} d_mu u_{qd} + (mu <-> nu)
    // and the sum over assignments is divided by k!.
    Mat semilinear(const std::vector<Wave>& args) const {
        const int k = static_cast<int>(args.size());
        const int subsets = 1 << k;
        std::vector<Mat> ginv(static_cast<std::size_t>(subsets));
        for (int mask = 0; mask < subsets; ++mask) {
            std::vector<int> members;
            for (int s = 0; s < k; ++s)
                if (mask & (1 << s)) members.push_back(s);
            Mat acc{};
            if (members.empty()) acc = hinv_;
            else do {
                Mat m = hinv_;
                for (int s : members) m = mul(mul(m, args[s].amp), hinv_);
                acc = plus(acc, m);
            } while (std::next_permutation(members.begin(), members.end()));
            ginv[mask] = (members.size() % 2 == 0) ? acc : scaled(acc, Real(-1));
        }
        auto glow = [&](int mask) -> const Mat* {
            if (mask == 0) return &hlow_;
            for (int s = 0; s < k; ++s)
                if (mask == (1 << s)) return &args[s].amp;
            return nullptr;
        };
        // Lowered Christoffel of one slot: G[l][a][b].
        std::vector<std::array<Real, 64>> christ(static_cast<std::size_t>(k));
        for (int s = 0; s < k; ++s) {
            const Mat& m = args[s].amp;
            const Vec& x = args[s].cov;
            for (int l = 0; l < 4; ++l)
                for (int a = 0; a < 4; ++a)
                    for (int b = 0; b < 4; ++b)
                        christ[s][16 * l + 4 * a + b] = 0.5 * (x[b] * m[4 * l + a] + x[a] * m[4 * l + b] - x[l] * m[4 * a + b]);
        }
        auto raise_first = [&](const Mat& g, const std::array<Real, 64>& c) {
            std::array<Real, 64> out{};
            for (int p = 0; p < 4; ++p)
                for (int l = 0; l < 4; ++l)
                    if (g[4 * p + l] != 0)
                        for (int ab = 0; ab < 16; ++ab) out[16 * p + ab] += g[4 * p + l] * c[16 * l + ab];
            return out;
        };

        Mat res{};
        long assignments = 1;
        for (int s = 0; s < k; ++s) assignments *= 6;
        for (long code = 0; code < assignments; ++code) {
            long c = code;
            int mask[6] = {0, 0, 0, 0, 0, 0};
            for (int s = 0; s < k; ++s) {
                mask[c % 6] |= 1 << s;
                c /= 6;
            }
            auto single = [&](int m) { return m != 0 && (m & (m - 1)) == 0; };
            auto slot_of = [&](int m) { return __builtin_ctz(static_cast<unsigned>(m)); };

            // Quadratic Christoffel term: groups (ab, ps, pl, field 1, sc, field 2).
            if (single(mask[3]) && single(mask[5]) && glow(mask[1])) {
                const Mat& gab = ginv[mask[0]];
                const Mat& gps = *glow(mask[1]);
                auto g1 = raise_first(ginv[mask[2]], christ[slot_of(mask[3])]);
                auto g2 = raise_first(ginv[mask[4]], christ[slot_of(mask[5])]);
                for (int mu = 0; mu < 4; ++mu)
                    for (int nu = 0; nu < 4; ++nu) {
                        Real w = 0;
                        for (int p = 0; p < 4; ++p)
                            for (int x = 0; x < 4; ++x) {
                                if (gps[4 * p + x] == 0) continue;
                                for (int a = 0; a < 4; ++a)
                                    for (int b = 0; b < 4; ++b)
                                        w += gps[4 * p + x] * g1[16 * p + 4 * mu + b] * g2[16 * x + 4 * nu + a] * gab[4 * a + b];
                            }
                        res[4 * mu + nu] += 2 * w;
                    }
            }
            // Cross term: groups (nu l, l x, field G, aq, bd, differentiated field).
            if (single(mask[2]) && single(mask[5]) && glow(mask[0])) {
                const Mat& gnl = *glow(mask[0]);
                auto gam = raise_first(ginv[mask[1]], christ[slot_of(mask[2])]);
                const Mat& gaq = ginv[mask[3]];
                const Mat& gbd = ginv[mask[4]];
                const Wave& w = args[slot_of(mask[5])];
                Vec y{};
                for (int l = 0; l < 4; ++l)
                    for (int a = 0; a < 4; ++a)
                        for (int b = 0; b < 4; ++b) {
                            Real g = gam[16 * l + 4 * a + b];
                            if (g == 0) continue;
                            for (int q = 0; q < 4; ++q)
                                for (int d = 0; d < 4; ++d) y[l] += g * gaq[4 * a + q] * gbd[4 * b + d] * w.amp[4 * q + d];
                        }
                for (int mu = 0; mu < 4; ++mu)
                    for (int nu = 0; nu < 4; ++nu) {
                        Real left = 0, right = 0;
                        for (int l = 0; l < 4; ++l) {
                            left += gnl[4 * nu + l] * y[l];
                            right += gnl[4 * mu + l] * y[l];
                        }
                        res[4 * mu + nu] += left * w.cov[mu] + right * w.cov[nu];
                    }
            }
        }
        Real factorial = 1;
        for (int s = 2; s <= k; ++s) factorial *= s;
        // Two derivatives contribute i^2 = -1.
        return scaled(res, -1.0 / factorial);
    }

    Mat hinv_{};
    Mat hlow_{};
    std::array<Wave, 4> leaves_{};
    std::map<std::string, Wave> cache_;
};

Matrix narrow(const Mat& m, Real sign = 1) {
    Matrix out{};
    for (int i = 0; i < 16; ++i) out[i] = static_cast<double>(sign * m[i]);
    return out;
}

}  // namespace

Matrix evaluate(const TermNode& tree, const NullConfig& config, double rho) {
    Engine e(config, rho);
    return narrow(e.eval(tree).amp);
}

Matrix evaluate(const InteractionTerm& term, const NullConfig& config, double rho) {
    Engine e(config, rho);
    return narrow(e.eval(*term.tree).amp, term.sign);
}

Matrix evaluate_sum(const std::vector<InteractionTerm>& terms, const NullConfig& config, double rho, double* magnitude) {
    Engine e(config, rho);
    Mat total{};
    Real biggest = 0;
    for (const auto& t : terms) {
        Mat m = scaled(e.eval(*t.tree).amp, t.sign);
        for (Real x : m) biggest = std::max(biggest, std::fabs(x));
        total = plus(total, m);
    }
    if (magnitude) *magnitude = static_cast<double>(biggest);
    return narrow(total);
}

Comparison compare(const Sym2T& exact, const Matrix& approx, double rho, double floor, double tolerance) {
    Comparison c;
    c.floor = floor;
    c.agrees = true;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double x = exact(i, j).evaluate(rho);
            double err = std::fabs(x - approx[4 * i + j]);
            double rel = err / std::max({std::fabs(x), floor, std::numeric_limits<double>::min()});
            if (rel > c.max_rel_error) {
                c.max_rel_error = rel;
                c.worst_row = i;
                c.worst_col = j;
            }
            c.max_abs_error = std::max(c.max_abs_error, err);
        }
    c.agrees = c.max_rel_error <= tolerance;
    return c;
}

std::string to_string(const Matrix& m) {
    std::ostringstream os;
    os.precision(12);
    for (int i = 0; i < 4; ++i) {
        os << "[";
        for (int j = 0; j < 4; ++j) os << (j ? ", " : "") << m[4 * i + j];
        os << "]\n";
    }
    return os.str();
}

}  // namespace nullwave::oracle
