#include "nullwave/algebra/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace nullwave {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    Rational out;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw std::invalid_argument("malformed rational: " + std::string(text));
        Integer d(std::string(den), 10);
        if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
        out = Rational(Integer(std::string(num), 10), d);
        out.canonicalize();
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto whole = s.substr(0, dot);
        auto frac = s.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
            (whole.empty() && frac.empty()))
            throw std::invalid_argument("malformed decimal: " + std::string(text));
        Integer scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Integer digits(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
        out = Rational(digits, scale);
        out.canonicalize();
    } else {
        if (!all_digits(s)) throw std::invalid_argument("malformed rational: " + std::string(text));
        out = Rational(Integer(std::string(s), 10));
    }
    return negative ? Rational(-out) : out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace nullwave
