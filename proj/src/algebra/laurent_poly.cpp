#include "nullwave/algebra/laurent_poly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace nullwave {

namespace {

// mpq_class(n, d) stores its arguments unreduced; arithmetic assumes reduced input.
Rational reduced(Rational c) {
    c.canonicalize();
    return c;
}

}  // namespace

LaurentPoly::LaurentPoly(const Rational& c) {
    if (sgn(c) != 0) terms_.emplace_back(0, reduced(c));
}

LaurentPoly LaurentPoly::monomial(const Rational& c, Exponent e) {
    LaurentPoly p;
    if (sgn(c) != 0) p.terms_.emplace_back(e, reduced(c));
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    std::map<Exponent, Rational, std::greater<>> acc;
    for (auto& [e, c] : terms) acc[e] += reduced(c);
    LaurentPoly p;
    for (auto& [e, c] : acc)
        if (sgn(c) != 0) p.terms_.emplace_back(e, c);
    return p;
}

Rational LaurentPoly::coefficient(Exponent e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, Exponent x) { return t.first > x; });
    if (it != terms_.end() && it->first == e) return it->second;
    return 0;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
}

void LaurentPoly::merge_add(const LaurentPoly& o, bool subtract) {
    if (o.terms_.empty()) return;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->first > b->first)) {
            out.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->first > a->first) {
            out.emplace_back(b->first, subtract ? Rational(-b->second) : b->second);
            ++b;
        } else {
            Rational c = subtract ? Rational(a->second - b->second) : Rational(a->second + b->second);
            if (sgn(c) != 0) out.emplace_back(a->first, std::move(c));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    merge_add(o, false);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    merge_add(o, true);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.is_monomial()) {
        LaurentPoly p = a;
        const auto& [e, c] = b.terms_.front();
        for (auto& t : p.terms_) {
            t.first += e;
            t.second *= c;
        }
        return p;
    }
    if (a.is_monomial()) return b * a;
    std::vector<LaurentPoly::Term> raw;
    raw.reserve(a.size() * b.size());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) raw.emplace_back(ea + eb, ca * cb);
    return LaurentPoly::from_terms(std::move(raw));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

LaurentPoly LaurentPoly::shifted(Exponent shift) const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.first += shift;
    return p;
}

LaurentPoly LaurentPoly::truncated_below(Exponent min_exponent) const {
    LaurentPoly p;
    for (const auto& t : terms_)
        if (t.first >= min_exponent) p.terms_.push_back(t);
    return p;
}

LaurentPoly::Exponent LaurentPoly::exponent_stride() const {
    Exponent g = 0;
    for (const auto& t : terms_) g = std::gcd(g, t.first < 0 ? -t.first : t.first);
    return g;
}

double LaurentPoly::evaluate(double rho) const {
    double acc = 0.0;
    for (const auto& [e, c] : terms_) acc += c.get_d() * std::pow(rho, static_cast<double>(e));
    return acc;
}

Rational LaurentPoly::evaluate(const Rational& rho) const {
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        Rational base = e >= 0 ? rho : Rational(1 / rho);
        Rational power = 1;
        for (Exponent k = 0; k < (e >= 0 ? e : -e); ++k) power *= base;
        acc += c * power;
    }
    return acc;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << "*";
        os << "rho";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

}  // namespace nullwave
