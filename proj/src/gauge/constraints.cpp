#include "nullwave/gauge/constraints.hpp"

#include <stdexcept>
#include <utility>

namespace nullwave {

std::string to_string(ConstraintKind kind) {
    switch (kind) {
        case ConstraintKind::HarmonicGauge: return "HarmonicGauge";
        case ConstraintKind::ConservationLaw: return "ConservationLaw";
        case ConstraintKind::ScalarConservation: return "ScalarConservation";
        case ConstraintKind::MaxwellConservation: return "MaxwellConservation";
    }
    return "unknown";
}

CoVec4 harmonic_gauge_residual(const Metric4& m, const CoVec4& xi, const Sym2T& a) {
    CoVec4 up = raise(m, xi);
    RhoRational trace;
    for (int p = 0; p < kDim; ++p)
        for (int q = 0; q < kDim; ++q)
            if (!m.inverse()(p, q).is_zero()) trace += m.inverse()(p, q) * a(p, q);
    CoVec4 r;
    for (int mu = 0; mu < kDim; ++mu) {
        RhoRational acc = RhoRational(Rational(1, 2)) * xi[mu] * trace;
        for (int b = 0; b < kDim; ++b) acc -= up[b] * a(b, mu);
        r[mu] = acc;
    }
    return r;
}

CoVec4 conservation_residual(const Metric4& m, const CoVec4& eta, const Sym2T& a) {
    CoVec4 up = raise(m, eta);
    CoVec4 r;
    for (int j = 0; j < kDim; ++j) {
        RhoRational acc;
        for (int k = 0; k < kDim; ++k) acc += up[k] * a(k, j);
        r[j] = acc;
    }
    return r;
}

CoVec4 scalar_conservation_residual(const Metric4& m, const CoVec4& eta, const Sym2T& a,
                                    const std::vector<RhoRational>& b, const std::vector<CoVec4>& phi_gradients) {
    if (b.empty()) throw std::invalid_argument("at least one scalar field is required");
    if (b.size() != phi_gradients.size())
        throw std::invalid_argument("scalar amplitudes and gradients differ in length: " + std::to_string(b.size()) +
                                    " vs " + std::to_string(phi_gradients.size()));
    CoVec4 r = RhoRational(Rational(1, 2)) * conservation_residual(m, eta, a);
    for (std::size_t l = 0; l < b.size(); ++l) r = r + b[l] * phi_gradients[l];
    return r;
}

RhoRational maxwell_conservation_residual(const CoVec4& eta, const CoVec4& b) {
    RhoRational acc;
    for (int a = 0; a < kDim; ++a) acc += eta[a] * b[a];
    return acc;
}

int exact_rank(std::vector<std::vector<RhoRational>> rows) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows.front().size();
    std::size_t rank = 0;
    RhoRational prev_pivot(1);
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const RhoRational p = rows[rank][col];
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            RhoRational f = rows[r][col];
            for (std::size_t c = 0; c < ncols; ++c)
                rows[r][c] = (p * rows[r][c] - f * rows[rank][c]) / prev_pivot;
        }
        prev_pivot = p;
        ++rank;
    }
    return static_cast<int>(rank);
}

namespace {

// Basis of the symmetric fiber: E_ii and E_ij + E_ji for i < j.
std::vector<Sym2T> sym2_basis() {
    std::vector<Sym2T> basis;
    for (int i = 0; i < kDim; ++i)
        for (int j = i; j < kDim; ++j) {
            Mat4 e;
            e(i, j) = 1;
            e(j, i) = 1;
            basis.emplace_back(e);
        }
    return basis;
}

std::vector<std::vector<RhoRational>> columns_to_rows(const std::vector<CoVec4>& images) {
    std::vector<std::vector<RhoRational>> rows(kDim, std::vector<RhoRational>(images.size()));
    for (std::size_t c = 0; c < images.size(); ++c)
        for (int r = 0; r < kDim; ++r) rows[static_cast<std::size_t>(r)][c] = images[c][r];
    return rows;
}

}  // namespace

ConstraintDimension constraint_space_dim(ConstraintKind kind, const Metric4& m, const CoVec4& covector) {
    ConstraintDimension out;
    out.fiber_dimension = kind == ConstraintKind::MaxwellConservation ? kDim : 10;
    if (covector.is_zero()) {
        out.dimension = out.fiber_dimension;
        out.degenerate = true;
        return out;
    }
    std::vector<CoVec4> images;
    if (kind == ConstraintKind::MaxwellConservation) {
        std::vector<std::vector<RhoRational>> row{std::vector<RhoRational>(kDim)};
        for (int a = 0; a < kDim; ++a) {
            CoVec4 e;
            e[a] = 1;
            row[0][static_cast<std::size_t>(a)] = maxwell_conservation_residual(covector, e);
        }
        out.rank = exact_rank(row);
    } else {
        for (const auto& e : sym2_basis()) {
            switch (kind) {
                case ConstraintKind::HarmonicGauge: images.push_back(harmonic_gauge_residual(m, covector, e)); break;
                case ConstraintKind::ConservationLaw: images.push_back(conservation_residual(m, covector, e)); break;
                case ConstraintKind::ScalarConservation:
                    images.push_back(scalar_conservation_residual(m, covector, e, {RhoRational(0)}, {CoVec4()}));
                    break;
                case ConstraintKind::MaxwellConservation: break;
            }
        }
        out.rank = exact_rank(columns_to_rows(images));
    }
    out.dimension = out.fiber_dimension - out.rank;
    return out;
}

CoVec4 random_null_covector(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 7);
    Rational u(num(rng), den(rng));
    Rational v(num(rng), den(rng));
    u.canonicalize();
    v.canonicalize();
    Rational s = u * u + v * v;
    Rational n1 = 2 * u / (s + 1);
    Rational n2 = 2 * v / (s + 1);
    Rational n3 = (s - 1) / (s + 1);
    long t_num = 0;
    while (t_num == 0) t_num = num(rng);
    Rational t(t_num, den(rng));
    t.canonicalize();
    return CoVec4(RhoRational(t), RhoRational(Rational(t * n1)), RhoRational(Rational(t * n2)),
                  RhoRational(Rational(t * n3)));
}

}  // namespace nullwave
