#include "nullwave/ricci/formal_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace nullwave {

RawFactor RawFactor::field(int slot, int a, int b, std::vector<int> derivs) {
    RawFactor f{Kind::Field, slot, {a, b}};
    f.idx.insert(f.idx.end(), derivs.begin(), derivs.end());
    return f;
}

int RawMonomial::field_count() const {
    return static_cast<int>(std::count_if(factors.begin(), factors.end(),
                                          [](const RawFactor& f) { return f.kind == RawFactor::Kind::Field; }));
}

namespace {

std::string index_name(int id, int free_count) {
    static const char* kFree[] = {"mu", "nu", "lam", "al", "be"};
    if (id < free_count && id < 5) return kFree[id];
    return "i" + std::to_string(id);
}

}  // namespace

std::string RawMonomial::to_string(int free_count) const {
    std::ostringstream os;
    os << coef.get_str();
    for (const auto& f : factors) {
        os << " ";
        auto name = [&](std::size_t k) { return index_name(f.idx[k], free_count); };
        switch (f.kind) {
            case RawFactor::Kind::InverseMetric: os << "h^{" << name(0) << " " << name(1) << "}"; break;
            case RawFactor::Kind::Metric: os << "h_{" << name(0) << " " << name(1) << "}"; break;
            case RawFactor::Kind::Field:
                os << "u";
                if (f.slot >= 0) os << f.slot + 1;
                os << "_{" << name(0) << " " << name(1);
                if (f.idx.size() > 2) {
                    os << ",";
                    for (std::size_t k = 2; k < f.idx.size(); ++k) os << (k > 2 ? " " : "") << name(k);
                }
                os << "}";
                break;
        }
    }
    return os.str();
}

RawExpr multiply(const RawExpr& a, const RawExpr& b, int max_fields) {
    RawExpr out;
    for (const auto& x : a) {
        int fx = x.field_count();
        for (const auto& y : b) {
            if (max_fields >= 0 && fx + y.field_count() > max_fields) continue;
            RawMonomial m;
            m.coef = x.coef * y.coef;
            m.factors = x.factors;
            m.factors.insert(m.factors.end(), y.factors.begin(), y.factors.end());
            out.push_back(std::move(m));
        }
    }
    return out;
}

RawExpr scale(RawExpr a, const Rational& c) {
    for (auto& m : a) m.coef *= c;
    return a;
}

RawExpr concat(RawExpr a, const RawExpr& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

RawExpr with_field_count(const RawExpr& a, int fields) {
    RawExpr out;
    for (const auto& m : a)
        if (m.field_count() == fields) out.push_back(m);
    return out;
}

std::vector<int> MonomialKey::derivative_counts(int arity) const {
    std::vector<int> counts(static_cast<std::size_t>(arity), 0);
    auto note = [&](const PortRef& p) {
        if (p.derivative) ++counts.at(p.slot);
    };
    for (const auto& [a, b] : edges) {
        note(a);
        note(b);
    }
    for (const auto& p : free) note(p);
    return counts;
}

int MonomialKey::total_derivatives() const {
    int n = 0;
    for (const auto& [a, b] : edges) n += a.derivative + b.derivative;
    for (const auto& p : free) n += p.derivative;
    return n;
}

namespace {

struct Socket {
    std::size_t factor;
    std::size_t pos;
};

[[noreturn]] void malformed(const RawMonomial& m, int free_count, const std::string& why) {
    throw std::invalid_argument("malformed monomial [" + m.to_string(free_count) + "]: " + why);
}

void rename(std::vector<RawFactor>& factors, int from, int to) {
    for (auto& f : factors)
        for (auto& i : f.idx)
            if (i == from) i = to;
}

// Contracts h_{ab} h^{bc} -> delta_a^c until no lower metric remains.
std::vector<RawFactor> contract_metrics(const RawMonomial& m, int free_count) {
    std::vector<RawFactor> fs = m.factors;
    for (;;) {
        auto lower = std::find_if(fs.begin(), fs.end(), [](const RawFactor& f) { return f.kind == RawFactor::Kind::Metric; });
        if (lower == fs.end()) return fs;
        bool done = false;
        for (std::size_t side = 0; side < 2 && !done; ++side) {
            int shared = lower->idx[side];
            int other = lower->idx[1 - side];
            for (auto it = fs.begin(); it != fs.end(); ++it) {
                if (it == lower || it->kind != RawFactor::Kind::InverseMetric) continue;
                auto pos = std::find(it->idx.begin(), it->idx.end(), shared);
                if (pos == it->idx.end()) continue;
                int far = it->idx[pos == it->idx.begin() ? 1 : 0];
                auto first = std::min(it, lower);
                auto second = std::max(it, lower);
                fs.erase(second);
                fs.erase(first);
                if (far < free_count && other < free_count) malformed(m, free_count, "free indices contracted together");
                if (far < free_count) rename(fs, other, far);
                else rename(fs, far, other);
                done = true;
                break;
            }
        }
        if (!done) malformed(m, free_count, "lower metric not contracted with an inverse metric");
    }
}

}  // namespace

MonomialKey canonical_key(const RawMonomial& m, int free_count) {
    std::vector<RawFactor> fs = contract_metrics(m, free_count);
    std::unordered_map<int, std::vector<Socket>> where;
    for (std::size_t f = 0; f < fs.size(); ++f) {
        if (fs[f].kind == RawFactor::Kind::Field && fs[f].slot < 0) malformed(m, free_count, "unassigned field slot");
        for (std::size_t p = 0; p < fs[f].idx.size(); ++p) where[fs[f].idx[p]].push_back({f, p});
    }
    auto port_of = [&](const Socket& s) {
        const RawFactor& f = fs[s.factor];
        if (f.kind != RawFactor::Kind::Field) malformed(m, free_count, "inverse metrics contracted together");
        return PortRef{static_cast<std::uint8_t>(f.slot), static_cast<std::uint8_t>(s.pos >= 2 ? 1 : 0)};
    };
    MonomialKey key;
    key.free.resize(static_cast<std::size_t>(free_count));
    for (int i = 0; i < free_count; ++i) {
        auto it = where.find(i);
        if (it == where.end() || it->second.size() != 1) malformed(m, free_count, "free index must occur once");
        key.free[static_cast<std::size_t>(i)] = port_of(it->second.front());
    }
    for (const auto& [id, sockets] : where) {
        if (id < free_count) continue;
        if (sockets.size() != 2) malformed(m, free_count, "index " + std::to_string(id) + " does not occur twice");
        bool a_metric = fs[sockets[0].factor].kind == RawFactor::Kind::InverseMetric;
        bool b_metric = fs[sockets[1].factor].kind == RawFactor::Kind::InverseMetric;
        if (!a_metric && !b_metric) malformed(m, free_count, "field indices contracted without a metric");
    }
    for (std::size_t fi = 0; fi < fs.size(); ++fi) {
        const RawFactor& f = fs[fi];
        if (f.kind != RawFactor::Kind::InverseMetric) continue;
        PortRef ends[2];
        for (std::size_t side = 0; side < 2; ++side) {
            int id = f.idx[side];
            if (id < free_count) malformed(m, free_count, "raised free index");
            const auto& sockets = where.at(id);
            bool first_is_self = sockets[0].factor == fi && sockets[0].pos == side;
            ends[side] = port_of(first_is_self ? sockets[1] : sockets[0]);
        }
        key.edges.emplace_back(std::min(ends[0], ends[1]), std::max(ends[0], ends[1]));
    }
    std::sort(key.edges.begin(), key.edges.end());
    return key;
}

FormalTensorPoly FormalTensorPoly::from_raw(int arity, int free_count, const RawExpr& expr, bool symmetrize_pair) {
    FormalTensorPoly out(arity, free_count);
    const Rational half(1, 2);
    for (const auto& m : expr) {
        if (sgn(m.coef) == 0) continue;
        MonomialKey k = canonical_key(m, free_count);
        for (const auto& [a, b] : k.edges)
            if (a.slot >= arity || b.slot >= arity) throw std::invalid_argument("slot outside form arity");
        if (symmetrize_pair && free_count >= 2) {
            MonomialKey swapped = k;
            std::swap(swapped.free[0], swapped.free[1]);
            out.add(k, m.coef * half);
            out.add(swapped, m.coef * half);
        } else {
            out.add(k, m.coef);
        }
    }
    return out;
}

void FormalTensorPoly::add(const MonomialKey& key, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

FormalTensorPoly& FormalTensorPoly::operator+=(const FormalTensorPoly& o) {
    if (o.arity_ != arity_ || o.free_count_ != free_count_) throw std::invalid_argument("adding forms of different shape");
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

FormalTensorPoly FormalTensorPoly::scaled(const Rational& c) const {
    FormalTensorPoly out(arity_, free_count_);
    if (sgn(c) == 0) return out;
    for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
    return out;
}

FormalTensorPoly FormalTensorPoly::relabeled(const std::vector<int>& perm) const {
    FormalTensorPoly out(arity_, free_count_);
    auto map = [&](PortRef p) {
        p.slot = static_cast<std::uint8_t>(perm.at(p.slot));
        return p;
    };
    for (const auto& [k, c] : terms_) {
        MonomialKey nk;
        for (const auto& [a, b] : k.edges) {
            PortRef x = map(a);
            PortRef y = map(b);
            nk.edges.emplace_back(std::min(x, y), std::max(x, y));
        }
        std::sort(nk.edges.begin(), nk.edges.end());
        for (const auto& p : k.free) nk.free.push_back(map(p));
        out.add(nk, c);
    }
    return out;
}

FormalTensorPoly FormalTensorPoly::symmetrized_over(const std::vector<int>& slots) const {
    std::vector<int> order = slots;
    std::sort(order.begin(), order.end());
    FormalTensorPoly out(arity_, free_count_);
    long count = 0;
    std::vector<int> image = order;
    do {
        std::vector<int> perm(static_cast<std::size_t>(arity_));
        std::iota(perm.begin(), perm.end(), 0);
        for (std::size_t i = 0; i < order.size(); ++i) perm[static_cast<std::size_t>(order[i])] = image[i];
        out += relabeled(perm);
        ++count;
    } while (std::next_permutation(image.begin(), image.end()));
    return out.scaled(Rational(1, count));
}

namespace {

std::string port_code(const PortRef& p) {
    return std::to_string(p.slot + 1) + (p.derivative ? "d" : "u");
}

}  // namespace

std::string FormalTensorPoly::to_string(const std::string& field_name) const {
    static const char* kFree[] = {"mu", "nu", "lam", "al", "be"};
    std::ostringstream os;
    if (terms_.empty()) return "0";
    for (const auto& [k, c] : terms_) {
        // Name the two ends of every inverse-metric edge and collect each slot's ports.
        std::vector<std::vector<std::string>> tensor_ports(static_cast<std::size_t>(arity_));
        std::vector<std::vector<std::string>> deriv_ports(static_cast<std::size_t>(arity_));
        auto attach = [&](const PortRef& p, const std::string& name) {
            (p.derivative ? deriv_ports : tensor_ports)[p.slot].push_back(name);
        };
        for (std::size_t f = 0; f < k.free.size(); ++f)
            attach(k.free[f], f < 5 ? kFree[f] : "f" + std::to_string(f));
        std::ostringstream metrics;
        char letter = 'a';
        for (const auto& [x, y] : k.edges) {
            std::string n1(1, letter++);
            std::string n2(1, letter++);
            if (letter > 'z') letter = 'a';
            metrics << " h^{" << n1 << n2 << "}";
            attach(x, n1);
            attach(y, n2);
        }
        os << (sgn(c) < 0 ? "- " : "+ ") << Rational(abs(c)).get_str() << metrics.str();
        for (int s = 0; s < arity_; ++s) {
            auto& tp = tensor_ports[static_cast<std::size_t>(s)];
            auto& dp = deriv_ports[static_cast<std::size_t>(s)];
            os << " ";
            for (const auto& n : dp) os << "d_" << n << " ";
            os << field_name << s + 1 << "_{";
            for (std::size_t i = 0; i < tp.size(); ++i) os << (i ? " " : "") << tp[i];
            os << "}";
        }
        os << "\n";
    }
    return os.str();
}

std::vector<std::string> FormalTensorPoly::to_machine_lines() const {
    std::vector<std::string> lines;
    for (const auto& [k, c] : terms_) {
        std::ostringstream os;
        os << c.get_str() << "|";
        for (std::size_t i = 0; i < k.edges.size(); ++i)
            os << (i ? ";" : "") << port_code(k.edges[i].first) << "-" << port_code(k.edges[i].second);
        os << "|";
        for (std::size_t i = 0; i < k.free.size(); ++i) os << (i ? "," : "") << port_code(k.free[i]);
        lines.push_back(os.str());
    }
    return lines;
}

}  // namespace nullwave
