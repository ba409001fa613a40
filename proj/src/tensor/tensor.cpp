#include "nullwave/tensor/tensor.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nullwave {

bool CoVec4::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const RhoRational& x) { return x.is_zero(); });
}

CoVec4 operator+(const CoVec4& a, const CoVec4& b) {
    CoVec4 r;
    for (int i = 0; i < kDim; ++i) r[i] = a[i] + b[i];
    return r;
}

CoVec4 operator-(const CoVec4& a, const CoVec4& b) {
    CoVec4 r;
    for (int i = 0; i < kDim; ++i) r[i] = a[i] - b[i];
    return r;
}

CoVec4 operator*(const RhoRational& s, const CoVec4& a) {
    CoVec4 r;
    for (int i = 0; i < kDim; ++i) r[i] = s * a[i];
    return r;
}

std::string CoVec4::to_string() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < kDim; ++i) os << (i ? ", " : "") << c[static_cast<std::size_t>(i)].to_string();
    os << ")";
    return os.str();
}

Mat4 Mat4::identity() {
    Mat4 r;
    for (int i = 0; i < kDim; ++i) r(i, i) = 1;
    return r;
}

bool Mat4::is_zero() const {
    for (const auto& row : m)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

bool Mat4::is_symmetric() const {
    for (int i = 0; i < kDim; ++i)
        for (int j = i + 1; j < kDim; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

Mat4 Mat4::transpose() const {
    Mat4 r;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) r(i, j) = (*this)(j, i);
    return r;
}

Mat4 operator+(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

Mat4 operator-(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

Mat4 operator*(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            RhoRational acc;
            for (int k = 0; k < kDim; ++k)
                if (!a(i, k).is_zero() && !b(k, j).is_zero()) acc += a(i, k) * b(k, j);
            r(i, j) = acc;
        }
    return r;
}

Mat4 operator*(const RhoRational& s, const Mat4& a) {
    Mat4 r;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) r(i, j) = s * a(i, j);
    return r;
}

Sym2T::Sym2T(const Mat4& m) : m_(m) {
    if (!m_.is_symmetric()) throw std::invalid_argument("Sym2T built from a non-symmetric matrix");
}

std::int64_t Sym2T::entry_order() const {
    std::int64_t best = kNegInfinity;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) best = std::max(best, infinity_degree(m_(i, j)));
    return best;
}

std::string Sym2T::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < kDim; ++i) {
        os << "[";
        for (int j = 0; j < kDim; ++j) os << (j ? ", " : "") << m_(i, j).to_string();
        os << "]" << (i + 1 < kDim ? "\n" : "");
    }
    return os.str();
}

Mat4 invert(const Mat4& a) {
    Mat4 work = a;
    Mat4 inv = Mat4::identity();
    for (int col = 0; col < kDim; ++col) {
        int pivot = -1;
        for (int r = col; r < kDim; ++r)
            if (!work(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::domain_error("singular matrix");
        std::swap(work.m[static_cast<std::size_t>(col)], work.m[static_cast<std::size_t>(pivot)]);
        std::swap(inv.m[static_cast<std::size_t>(col)], inv.m[static_cast<std::size_t>(pivot)]);
        RhoRational p = work(col, col).inverse();
        for (int j = 0; j < kDim; ++j) {
            work(col, j) *= p;
            inv(col, j) *= p;
        }
        for (int r = 0; r < kDim; ++r) {
            if (r == col || work(r, col).is_zero()) continue;
            RhoRational f = work(r, col);
            for (int j = 0; j < kDim; ++j) {
                work(r, j) -= f * work(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

RhoRational determinant(const Mat4& a) {
    Mat4 work = a;
    RhoRational det(1);
    for (int col = 0; col < kDim; ++col) {
        int pivot = -1;
        for (int r = col; r < kDim; ++r)
            if (!work(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return RhoRational(0);
        if (pivot != col) {
            std::swap(work.m[static_cast<std::size_t>(col)], work.m[static_cast<std::size_t>(pivot)]);
            det = -det;
        }
        det *= work(col, col);
        RhoRational p = work(col, col).inverse();
        for (int r = col + 1; r < kDim; ++r) {
            if (work(r, col).is_zero()) continue;
            RhoRational f = work(r, col) * p;
            for (int j = col; j < kDim; ++j) work(r, j) -= f * work(col, j);
        }
    }
    return det;
}

Metric4::Metric4() {
    lower_(0, 0) = -1;
    for (int i = 1; i < kDim; ++i) lower_(i, i) = 1;
    inverse_ = lower_;
}

Metric4::Metric4(const Mat4& lower) : lower_(lower) {
    if (!lower_.is_symmetric()) throw std::invalid_argument("metric must be symmetric");
    try {
        inverse_ = invert(lower_);
    } catch (const std::domain_error&) {
        throw std::invalid_argument("metric must be invertible");
    }
    if (lower_ * inverse_ != Mat4::identity()) throw std::logic_error("metric inverse check failed");
}

Metric4 Metric4::conformal_minkowski(const RhoRational& lambda) {
    return Metric4((lambda * lambda) * Metric4().lower());
}

bool Metric4::is_minkowski() const { return lower_ == Metric4().lower(); }

RhoRational pairing(const Metric4& m, const CoVec4& zeta, const CoVec4& eta) {
    const Mat4& inv = m.inverse();
    RhoRational acc;
    for (int a = 0; a < kDim; ++a) {
        if (zeta[a].is_zero()) continue;
        for (int b = 0; b < kDim; ++b)
            if (!inv(a, b).is_zero() && !eta[b].is_zero()) acc += inv(a, b) * zeta[a] * eta[b];
    }
    return acc;
}

RhoRational norm_sq(const Metric4& m, const CoVec4& zeta) { return pairing(m, zeta, zeta); }

CoVec4 raise(const Metric4& m, const CoVec4& zeta) {
    CoVec4 r;
    for (int a = 0; a < kDim; ++a) {
        RhoRational acc;
        for (int b = 0; b < kDim; ++b)
            if (!m.inverse()(a, b).is_zero()) acc += m.inverse()(a, b) * zeta[b];
        r[a] = acc;
    }
    return r;
}

namespace {

RhoRational quadratic(const Mat4& q, const CoVec4& xi) {
    RhoRational acc;
    for (int p = 0; p < kDim; ++p)
        for (int r = 0; r < kDim; ++r)
            if (!q(p, r).is_zero()) acc += q(p, r) * xi[p] * xi[r];
    return acc;
}

}  // namespace

RhoRational sandwich(const Metric4& m, const Sym2T& s, const CoVec4& xi) {
    const Mat4& h = m.inverse();
    return quadratic(h * s.matrix() * h, xi);
}

RhoRational double_sandwich(const Metric4& m, const Sym2T& s1, const Sym2T& s2, const CoVec4& xi) {
    const Mat4& h = m.inverse();
    return quadratic(h * s1.matrix() * h * s2.matrix() * h, xi);
}

Sym2T sym_outer(const CoVec4& a, const CoVec4& b) {
    Mat4 r;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) r(i, j) = a[i] * b[j] + a[j] * b[i];
    return Sym2T(r);
}

Sym2T outer_square(const CoVec4& a) {
    Mat4 r;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) r(i, j) = a[i] * a[j];
    return Sym2T(r);
}

}  // namespace nullwave
