#pragma once

#include "nullwave/algebra/rho_rational.hpp"

#include <array>
#include <string>

namespace nullwave {

inline constexpr int kDim = 4;

/// Covector with components indexed 0..3, time first.
struct CoVec4 {
    std::array<RhoRational, kDim> c{};

    CoVec4() = default;
    CoVec4(RhoRational c0, RhoRational c1, RhoRational c2, RhoRational c3) : c{c0, c1, c2, c3} {}

    RhoRational& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
    const RhoRational& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
    bool is_zero() const;

    friend CoVec4 operator+(const CoVec4& a, const CoVec4& b);
    friend CoVec4 operator-(const CoVec4& a, const CoVec4& b);
    friend CoVec4 operator*(const RhoRational& s, const CoVec4& a);
    CoVec4 operator-() const { return RhoRational(-1) * *this; }
    friend bool operator==(const CoVec4& a, const CoVec4& b) { return a.c == b.c; }
    friend bool operator!=(const CoVec4& a, const CoVec4& b) { return !(a == b); }

    std::string to_string() const;
};

/// General 4x4 matrix over Q(rho); used for intermediate products.
struct Mat4 {
    std::array<std::array<RhoRational, kDim>, kDim> m{};

    static Mat4 identity();
    RhoRational& operator()(int i, int j) { return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    const RhoRational& operator()(int i, int j) const {
        return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    bool is_zero() const;
    bool is_symmetric() const;
    Mat4 transpose() const;

    friend Mat4 operator+(const Mat4& a, const Mat4& b);
    friend Mat4 operator-(const Mat4& a, const Mat4& b);
    friend Mat4 operator*(const Mat4& a, const Mat4& b);
    friend Mat4 operator*(const RhoRational& s, const Mat4& a);
    friend bool operator==(const Mat4& a, const Mat4& b) { return a.m == b.m; }
    friend bool operator!=(const Mat4& a, const Mat4& b) { return !(a == b); }
};

/// Symmetric two-tensor. Construction from a Mat4 verifies symmetry.
class Sym2T {
public:
    Sym2T() = default;
    /// Throws std::invalid_argument if the matrix is not symmetric.
    explicit Sym2T(const Mat4& m);

    const RhoRational& operator()(int i, int j) const { return m_(i, j); }
    const Mat4& matrix() const { return m_; }
    bool is_zero() const { return m_.is_zero(); }

    friend Sym2T operator+(const Sym2T& a, const Sym2T& b) { return Sym2T(a.m_ + b.m_); }
    friend Sym2T operator-(const Sym2T& a, const Sym2T& b) { return Sym2T(a.m_ - b.m_); }
    friend Sym2T operator*(const RhoRational& s, const Sym2T& a) { return Sym2T(s * a.m_); }
    friend bool operator==(const Sym2T& a, const Sym2T& b) { return a.m_ == b.m_; }
    friend bool operator!=(const Sym2T& a, const Sym2T& b) { return !(a == b); }

    /// Largest infinity degree over the entries.
    std::int64_t entry_order() const;
    /// Four rows of entry strings.
    std::string to_string() const;

private:
    Mat4 m_;
};

/// Constant background metric with its exact inverse.
class Metric4 {
public:
    /// Minkowski metric diag(-1, 1, 1, 1).
    Metric4();
    /// Throws std::invalid_argument for non-symmetric or singular input.
    explicit Metric4(const Mat4& lower);

    static Metric4 minkowski() { return Metric4(); }
    /// lambda^2 times the Minkowski metric.
    static Metric4 conformal_minkowski(const RhoRational& lambda);

    const Mat4& lower() const { return lower_; }
    const Mat4& inverse() const { return inverse_; }
    bool is_minkowski() const;

private:
    Mat4 lower_;
    Mat4 inverse_;
};

/// Exact inverse by Gauss-Jordan elimination; throws std::domain_error if singular.
Mat4 invert(const Mat4& a);
RhoRational determinant(const Mat4& a);

/// m^{ab} zeta_a eta_b.
RhoRational pairing(const Metric4& m, const CoVec4& zeta, const CoVec4& eta);
RhoRational norm_sq(const Metric4& m, const CoVec4& zeta);
/// (m^-1 S m^-1)^{pq} xi_p xi_q.
RhoRational sandwich(const Metric4& m, const Sym2T& s, const CoVec4& xi);
/// (m^-1 S1 m^-1 S2 m^-1)^{pq} xi_p xi_q.
RhoRational double_sandwich(const Metric4& m, const Sym2T& s1, const Sym2T& s2, const CoVec4& xi);
/// a_mu b_nu + a_nu b_mu.
Sym2T sym_outer(const CoVec4& a, const CoVec4& b);
/// a_mu a_nu.
Sym2T outer_square(const CoVec4& a);
/// Index raising with the inverse metric: (m^-1 zeta)^a.
CoVec4 raise(const Metric4& m, const CoVec4& zeta);

}  // namespace nullwave
