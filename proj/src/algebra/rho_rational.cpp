#include "nullwave/algebra/rho_rational.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nullwave {

namespace {

using Dense = std::vector<Rational>;  // index = degree in the compressed variable

void trim(Dense& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Dense to_dense(const LaurentPoly& p, std::int64_t stride) {
    Dense d;
    for (const auto& [e, c] : p.terms()) {
        auto k = static_cast<std::size_t>(e / stride);
        if (d.size() <= k) d.resize(k + 1);
        d[k] = c;
    }
    return d;
}

LaurentPoly from_dense(const Dense& d, std::int64_t stride) {
    std::vector<LaurentPoly::Term> terms;
    for (std::size_t k = 0; k < d.size(); ++k)
        if (sgn(d[k]) != 0) terms.emplace_back(static_cast<std::int64_t>(k) * stride, d[k]);
    return LaurentPoly::from_terms(std::move(terms));
}

// Returns quotient, leaves remainder in a.
Dense divide(Dense& a, const Dense& b) {
    trim(a);
    if (a.size() < b.size()) return {};
    Dense q(a.size() - b.size() + 1);
    const Rational& lead = b.back();
    const std::size_t low = b.size() - 1;
    for (std::size_t top = a.size(); top-- > low;) {
        if (sgn(a[top]) == 0) continue;
        Rational f = a[top] / lead;
        std::size_t shift = top - low;
        q[shift] = f;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
    }
    trim(a);
    trim(q);
    return q;
}

Dense monic_gcd(Dense a, Dense b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        divide(a, b);
        std::swap(a, b);
    }
    if (a.empty()) return a;
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
    return a;
}

}  // namespace

RhoRational::RhoRational(const Rational& c) : num_(c), den_(1) { canonicalize(); }

RhoRational::RhoRational(const LaurentPoly& p) : num_(p), den_(1) { canonicalize(); }

RhoRational::RhoRational(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    canonicalize();
}

RhoRational RhoRational::monomial(const Rational& c, std::int64_t e) {
    return RhoRational(LaurentPoly::monomial(c, e));
}

void RhoRational::canonicalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    // Clear negative powers and common powers of rho.
    std::int64_t low = std::min(num_.low_degree(), den_.low_degree());
    if (low != 0) {
        num_ = num_.shifted(-low);
        den_ = den_.shifted(-low);
    }
    // A monomial on either side can only share rho-powers, which are gone.
    if (!num_.is_monomial() && !den_.is_monomial()) {
        std::int64_t stride = std::gcd(num_.exponent_stride(), den_.exponent_stride());
        if (stride == 0) stride = 1;
        Dense n = to_dense(num_, stride);
        Dense d = to_dense(den_, stride);
        Dense g = monic_gcd(n, d);
        if (g.size() > 1) {
            Dense qn = divide(n, g);
            Dense qd = divide(d, g);
            num_ = from_dense(qn, stride);
            den_ = from_dense(qd, stride);
        }
    }
    // Integer coefficients with joint content one, positive leading denominator.
    Integer lcm_den = 1;
    for (const auto* p : {&num_, &den_})
        for (const auto& t : p->terms()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), t.second.get_den_mpz_t());
    Integer content = 0;
    for (const auto* p : {&num_, &den_})
        for (const auto& t : p->terms()) {
            Integer v = t.second.get_num() * (lcm_den / t.second.get_den());
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        }
    Rational scale(lcm_den, content);
    scale.canonicalize();
    if (sgn(den_.leading_coefficient()) < 0) scale = -scale;
    if (scale != 1) {
        num_ *= scale;
        den_ *= scale;
    }
}

RhoRational RhoRational::operator-() const {
    RhoRational r = *this;
    r.num_ = -r.num_;
    return r;
}

RhoRational operator+(const RhoRational& a, const RhoRational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RhoRational(a.num_ + b.num_, a.den_);
    return RhoRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RhoRational operator-(const RhoRational& a, const RhoRational& b) { return a + (-b); }

RhoRational operator*(const RhoRational& a, const RhoRational& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return RhoRational(a.num_ * b.num_, a.den_ * b.den_);
}

RhoRational operator/(const RhoRational& a, const RhoRational& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero rational function");
    return RhoRational(a.num_ * b.den_, a.den_ * b.num_);
}

RhoRational RhoRational::inverse() const { return RhoRational(1) / *this; }

RhoRational RhoRational::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    RhoRational out(1);
    RhoRational base = *this;
    while (n > 0) {
        if (n & 1) out *= base;
        base *= base;
        n >>= 1;
    }
    return out;
}

LaurentPoly RhoRational::as_laurent() const {
    if (!den_.is_monomial()) throw std::domain_error("not a Laurent polynomial: " + to_string());
    const auto& [e, c] = den_.terms().front();
    return (num_ * Rational(1 / c)).shifted(-e);
}

double RhoRational::evaluate(double rho) const { return num_.evaluate(rho) / den_.evaluate(rho); }

Rational RhoRational::evaluate(const Rational& rho) const {
    Rational d = den_.evaluate(rho);
    if (sgn(d) == 0) throw std::domain_error("pole of " + to_string() + " at rho = " + rho.get_str());
    return num_.evaluate(rho) / d;
}

std::string RhoRational::to_string() const {
    std::string n = num_.to_string();
    if (den_ == LaurentPoly(1)) return n;
    if (num_.size() > 1) n = "(" + n + ")";
    std::string d = den_.to_string();
    bool bare = den_.is_monomial() && (den_.leading_coefficient() == 1 || den_.degree() == 0);
    return n + "/" + (bare ? d : "(" + d + ")");
}

std::int64_t infinity_degree(const RhoRational& a) {
    if (a.is_zero()) return kNegInfinity;
    return a.numerator().degree() - a.denominator().degree();
}

Rational LaurentTail::coefficient(std::int64_t e) const {
    for (const auto& [x, c] : terms)
        if (x == e) return c;
    return 0;
}

std::string LaurentTail::to_string() const {
    std::string s = terms.empty() ? "0" : sum().to_string();
    if (!exact()) s += " + O(rho^" + std::to_string(error_exponent) + ")";
    return s;
}

LaurentTail expand_at_infinity(const RhoRational& a, int n_terms) {
    if (a.is_zero()) throw std::domain_error("expansion of the zero function");
    if (n_terms <= 0) throw std::domain_error("expansion needs a positive term count");
    LaurentPoly rem = a.numerator();
    const LaurentPoly& den = a.denominator();
    LaurentTail out;
    for (int i = 0; i < n_terms && !rem.is_zero(); ++i) {
        std::int64_t e = rem.degree() - den.degree();
        Rational c = rem.leading_coefficient() / den.leading_coefficient();
        out.terms.emplace_back(e, c);
        rem -= den * LaurentPoly::monomial(c, e);
    }
    out.error_exponent = rem.is_zero() ? kNegInfinity : rem.degree() - den.degree();
    return out;
}

}  // namespace nullwave
