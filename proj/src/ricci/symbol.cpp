#include "nullwave/ricci/symbol.hpp"

#include <stdexcept>

namespace nullwave {

namespace {

// One port instance: its wave slot and whether it is a derivative port.
struct Instance {
    int slot = 0;
    bool derivative = false;
};

// What a port instance is joined to: another instance through an inverse
// metric, or a free index directly.
struct Link {
    bool to_free = false;
    int target = -1;
};

}  // namespace

CompiledForm::CompiledForm(const FormalTensorPoly& form) : arity_(form.arity()) {
    if (form.free_count() != 2) throw std::invalid_argument("symbol evaluation needs exactly two free indices");
    bool first = true;
    for (const auto& [key, coef] : form.terms()) {
        int total = key.total_derivatives();
        if (first) derivatives_ = total;
        else if (total != derivatives_) throw std::invalid_argument("form mixes derivative totals");
        first = false;

        // Lay out instances: two tensor ports per slot, then derivative ports.
        std::vector<int> dcount = key.derivative_counts(arity_);
        std::vector<Instance> inst;
        std::vector<int> tensor_base(static_cast<std::size_t>(arity_));
        std::vector<int> deriv_base(static_cast<std::size_t>(arity_));
        for (int s = 0; s < arity_; ++s) {
            tensor_base[static_cast<std::size_t>(s)] = static_cast<int>(inst.size());
            inst.push_back({s, false});
            inst.push_back({s, false});
        }
        for (int s = 0; s < arity_; ++s) {
            deriv_base[static_cast<std::size_t>(s)] = static_cast<int>(inst.size());
            for (int d = 0; d < dcount[static_cast<std::size_t>(s)]; ++d) inst.push_back({s, true});
        }
        std::vector<int> used(static_cast<std::size_t>(arity_) * 2, 0);
        auto take = [&](const PortRef& p) {
            std::size_t cls = static_cast<std::size_t>(p.slot) * 2 + p.derivative;
            int base = p.derivative ? deriv_base[p.slot] : tensor_base[p.slot];
            int limit = p.derivative ? dcount[p.slot] : 2;
            if (used[cls] >= limit) throw std::invalid_argument("port class used too often");
            return base + used[cls]++;
        };
        std::vector<Link> link(inst.size());
        std::vector<int> free_at(key.free.size());
        for (const auto& [x, y] : key.edges) {
            int a = take(x);
            int b = take(y);
            link[static_cast<std::size_t>(a)] = {false, b};
            link[static_cast<std::size_t>(b)] = {false, a};
        }
        for (std::size_t f = 0; f < key.free.size(); ++f) {
            int a = take(key.free[f]);
            link[static_cast<std::size_t>(a)] = {true, static_cast<int>(f)};
            free_at[f] = a;
        }
        for (int s = 0; s < arity_; ++s)
            if (used[static_cast<std::size_t>(s) * 2] != 2) throw std::invalid_argument("amplitude port left open");

        auto partner_port = [&](int i) { return (i % 2 == 0) ? i + 1 : i - 1; };
        std::vector<bool> visited(inst.size(), false);
        Term term;
        term.coef = coef;

        // Walks from a port instance that is entered from outside until a
        // covector or free index closes the chain.
        auto walk = [&](int entry, Chain& chain) {
            int cur = entry;
            while (true) {
                visited[static_cast<std::size_t>(cur)] = true;
                const Instance& in = inst[static_cast<std::size_t>(cur)];
                if (in.derivative) {
                    chain.last = {EndKind::Covector, in.slot};
                    return;
                }
                chain.amplitudes.push_back(in.slot);
                int out = partner_port(cur);
                visited[static_cast<std::size_t>(out)] = true;
                const Link& l = link[static_cast<std::size_t>(out)];
                if (l.to_free) {
                    chain.last = {EndKind::Free, l.target};
                    return;
                }
                cur = l.target;
            }
        };

        std::vector<Chain> chains;
        auto start_from = [&](int instance, End end) {
            Chain c;
            c.first = end;
            visited[static_cast<std::size_t>(instance)] = true;
            const Link& l = link[static_cast<std::size_t>(instance)];
            if (end.kind == EndKind::Free) {
                walk(instance, c);
            } else if (l.to_free) {
                c.last = {EndKind::Free, l.target};
            } else {
                walk(l.target, c);
            }
            chains.push_back(std::move(c));
        };
        // Covector ends first so that mixed chains are oriented covector -> free.
        for (std::size_t i = 0; i < inst.size(); ++i)
            if (inst[i].derivative && !visited[i]) start_from(static_cast<int>(i), {EndKind::Covector, inst[i].slot});
        for (std::size_t f = 0; f < free_at.size(); ++f) {
            int i = free_at[f];
            if (!visited[static_cast<std::size_t>(i)]) start_from(i, {EndKind::Free, static_cast<int>(f)});
        }
        for (int s = 0; s < arity_; ++s) {
            int i = tensor_base[static_cast<std::size_t>(s)];
            if (visited[static_cast<std::size_t>(i)]) continue;
            Chain c;
            c.cycle = true;
            int cur = i;
            do {
                visited[static_cast<std::size_t>(cur)] = true;
                c.amplitudes.push_back(inst[static_cast<std::size_t>(cur)].slot);
                int out = partner_port(cur);
                visited[static_cast<std::size_t>(out)] = true;
                cur = link[static_cast<std::size_t>(out)].target;
            } while (cur != i);
            chains.push_back(std::move(c));
        }
        term.chains = std::move(chains);
        terms_.push_back(std::move(term));
    }
}

namespace {

template <class T>
using Mat = CompiledForm::Matrix<T>;
template <class T>
using Vec = CompiledForm::Vector<T>;

template <class T>
Vec<T> mat_vec(const Mat<T>& m, const Vec<T>& v) {
    Vec<T> out{};
    for (int i = 0; i < 4; ++i) {
        T acc{};
        for (int j = 0; j < 4; ++j) {
            const T& e = m[static_cast<std::size_t>(4 * i + j)];
            if (!e.is_zero() && !v[static_cast<std::size_t>(j)].is_zero()) acc += e * v[static_cast<std::size_t>(j)];
        }
        out[static_cast<std::size_t>(i)] = std::move(acc);
    }
    return out;
}

template <class T>
Mat<T> mat_mul(const Mat<T>& a, const Mat<T>& b) {
    Mat<T> out{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            const T& e = a[static_cast<std::size_t>(4 * i + k)];
            if (e.is_zero()) continue;
            for (int j = 0; j < 4; ++j) {
                const T& f = b[static_cast<std::size_t>(4 * k + j)];
                if (!f.is_zero()) out[static_cast<std::size_t>(4 * i + j)] += e * f;
            }
        }
    return out;
}

template <class T>
T dot(const Vec<T>& a, const Vec<T>& b) {
    T acc{};
    for (std::size_t i = 0; i < 4; ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
    return acc;
}

}  // namespace

template <class T>
CompiledForm::Matrix<T> CompiledForm::contract(const Matrix<T>& hinv, const std::vector<const Matrix<T>*>& amp,
                                               const std::vector<const Vector<T>*>& xi) const {
    if (static_cast<int>(amp.size()) != arity_ || static_cast<int>(xi.size()) != arity_)
        throw std::invalid_argument("slot count does not match form arity");
    Matrix<T> result{};
    for (const Term& term : terms_) {
        T scalar(term.coef);
        Matrix<T> tensor{};
        bool have_matrix = false;
        Vector<T> vec[2]{};
        bool have_vec[2] = {false, false};
        for (const Chain& c : term.chains) {
            if (c.cycle) {
                Matrix<T> m = mat_mul(hinv, *amp[static_cast<std::size_t>(c.amplitudes[0])]);
                for (std::size_t i = 1; i < c.amplitudes.size(); ++i)
                    m = mat_mul(m, mat_mul(hinv, *amp[static_cast<std::size_t>(c.amplitudes[i])]));
                T tr{};
                for (int i = 0; i < 4; ++i) tr += m[static_cast<std::size_t>(5 * i)];
                scalar *= tr;
                continue;
            }
            if (c.first.kind == EndKind::Covector) {
                Vector<T> v = *xi[static_cast<std::size_t>(c.first.id)];
                for (int s : c.amplitudes) v = mat_vec(*amp[static_cast<std::size_t>(s)], mat_vec(hinv, v));
                if (c.last.kind == EndKind::Covector) {
                    scalar *= dot(*xi[static_cast<std::size_t>(c.last.id)], mat_vec(hinv, v));
                } else {
                    vec[c.last.id] = std::move(v);
                    have_vec[c.last.id] = true;
                }
                continue;
            }
            // Free to free through at least one amplitude.
            Matrix<T> m = *amp[static_cast<std::size_t>(c.amplitudes[0])];
            for (std::size_t i = 1; i < c.amplitudes.size(); ++i)
                m = mat_mul(m, mat_mul(hinv, *amp[static_cast<std::size_t>(c.amplitudes[i])]));
            bool flip = c.first.id == 1;
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    tensor[static_cast<std::size_t>(4 * i + j)] = flip ? m[static_cast<std::size_t>(4 * j + i)] : m[static_cast<std::size_t>(4 * i + j)];
            have_matrix = true;
        }
        if (scalar.is_zero()) continue;
        if (!have_matrix) {
            if (!have_vec[0] || !have_vec[1]) throw std::logic_error("free index without a chain");
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j)
                    if (!vec[0][i].is_zero() && !vec[1][j].is_zero()) tensor[4 * i + j] = vec[0][i] * vec[1][j];
        }
        for (std::size_t i = 0; i < 16; ++i)
            if (!tensor[i].is_zero()) result[i] += scalar * tensor[i];
    }
    return result;
}

template CompiledForm::Matrix<LaurentPoly> CompiledForm::contract(const Matrix<LaurentPoly>&,
                                                                  const std::vector<const Matrix<LaurentPoly>*>&,
                                                                  const std::vector<const Vector<LaurentPoly>*>&) const;
template CompiledForm::Matrix<RhoRational> CompiledForm::contract(const Matrix<RhoRational>&,
                                                                  const std::vector<const Matrix<RhoRational>*>&,
                                                                  const std::vector<const Vector<RhoRational>*>&) const;

namespace {

template <class T, class Convert>
FormSymbol evaluate_as(const CompiledForm& form, const std::vector<SlotSymbol>& slots, const Metric4& metric,
                       Convert convert) {
    using M = CompiledForm::Matrix<T>;
    using V = CompiledForm::Vector<T>;
    M hinv;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) hinv[static_cast<std::size_t>(4 * i + j)] = convert(metric.inverse()(i, j));
    std::vector<M> amps(slots.size());
    std::vector<V> covs(slots.size());
    std::vector<const M*> amp_ptrs;
    std::vector<const V*> cov_ptrs;
    for (std::size_t s = 0; s < slots.size(); ++s) {
        for (int i = 0; i < 4; ++i) {
            covs[s][static_cast<std::size_t>(i)] = convert(slots[s].covector[i]);
            for (int j = 0; j < 4; ++j) amps[s][static_cast<std::size_t>(4 * i + j)] = convert(slots[s].matrix(i, j));
        }
        amp_ptrs.push_back(&amps[s]);
        cov_ptrs.push_back(&covs[s]);
    }
    M out = form.contract<T>(hinv, amp_ptrs, cov_ptrs);
    Mat4 result;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) result(i, j) = RhoRational(out[static_cast<std::size_t>(4 * i + j)]);
    return {Sym2T(result), form.derivative_count()};
}

}  // namespace

FormSymbol symbol_of_form(const CompiledForm& form, const std::vector<SlotSymbol>& slots, const Metric4& metric) {
    if (static_cast<int>(slots.size()) != form.arity())
        throw std::invalid_argument("form of arity " + std::to_string(form.arity()) + " given " +
                                    std::to_string(slots.size()) + " slot symbols");
    bool laurent = true;
    auto check = [&](const RhoRational& x) { laurent = laurent && x.is_polynomial(); };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) check(metric.inverse()(i, j));
    for (const auto& s : slots)
        for (int i = 0; i < 4; ++i) {
            check(s.covector[i]);
            for (int j = 0; j < 4; ++j) check(s.matrix(i, j));
        }
    if (laurent)
        return evaluate_as<LaurentPoly>(form, slots, metric, [](const RhoRational& x) { return x.as_laurent(); });
    return evaluate_as<RhoRational>(form, slots, metric, [](const RhoRational& x) { return x; });
}

FormSymbol symbol_of_form(const FormalTensorPoly& form, const std::vector<SlotSymbol>& slots, const Metric4& metric) {
    return symbol_of_form(CompiledForm(form), slots, metric);
}

}  // namespace nullwave
