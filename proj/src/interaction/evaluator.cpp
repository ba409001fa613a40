#include "nullwave/interaction/evaluator.hpp"

#include "nullwave/ricci/symbol.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace nullwave {

Sym2T SymbolValue::realized() const {
    if (i_power % 2 != 0) throw std::logic_error("odd power of the imaginary unit has no real realization");
    return (i_power % 4 == 0) ? matrix : RhoRational(-1) * matrix;
}

namespace {

std::string describe(const std::vector<int>& waves) {
    std::string s;
    for (int w : waves) s += (s.empty() ? "zeta" : " + zeta") + std::to_string(w);
    return s;
}

}  // namespace

CharacteristicDenominator::CharacteristicDenominator(std::vector<int> waves, const std::string& term)
    : std::runtime_error("characteristic denominator: |" + describe(waves) + "|^2 = 0 in " + term),
      waves_(std::move(waves)) {}

namespace {

// Value of a subterm as an exact scale times a matrix over the scalar type T.
template <class T>
struct Partial {
    RhoRational scale{1};
    CompiledForm::Matrix<T> amplitude{};
    CompiledForm::Vector<T> covector{};
    CoVec4 exact_covector;
    int i_power = 0;
    int prefactor = 0;
};

struct ImplBase {
    virtual ~ImplBase() = default;
    virtual SymbolValue eval(const TermNode& t) = 0;
    virtual const NullConfig& config() const = 0;
};

template <class T, class Convert>
class TypedImpl final : public ImplBase {
public:
    TypedImpl(const NullConfig& config, const std::array<Sym2T, 4>& amplitudes, Convert convert)
        : config_(config), convert_(convert) {
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) hinv_[static_cast<std::size_t>(4 * i + j)] = convert_(config.metric().inverse()(i, j));
        for (std::size_t w = 0; w < 4; ++w) {
            Partial<T> p;
            p.exact_covector = config.zeta(static_cast<int>(w) + 1);
            for (int i = 0; i < 4; ++i) {
                p.covector[static_cast<std::size_t>(i)] = convert_(p.exact_covector[i]);
                for (int j = 0; j < 4; ++j) p.amplitude[static_cast<std::size_t>(4 * i + j)] = convert_(amplitudes[w](i, j));
            }
            leaves_[w] = std::move(p);
        }
    }

    const NullConfig& config() const override { return config_; }

    SymbolValue eval(const TermNode& t) override {
        const Partial<T>& p = partial(t);
        Mat4 m;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                const T& e = p.amplitude[static_cast<std::size_t>(4 * i + j)];
                if (!e.is_zero()) m(i, j) = p.scale * RhoRational(e);
            }
        SymbolValue out;
        out.matrix = Sym2T(m);
        out.total_covector = p.exact_covector;
        out.i_power = p.i_power;
        out.prefactor_2pi = p.prefactor;
        return out;
    }

private:
    // Semilinear forms are symmetric in their slots, so their children are
    // keyed in sorted order.
    static std::string key_of(const TermNode& t) {
        std::string k;
        if (t.kind == TermNode::Kind::Leaf) {
            k = "v" + std::to_string(t.wave);
        } else if (t.kind == TermNode::Kind::Inverse) {
            k = "Q(" + key_of(*t.children.front()) + ")";
        } else {
            std::vector<std::string> parts;
            for (const auto& c : t.children) parts.push_back(key_of(*c));
            if (t.form.kind == FormKind::Semilinear) std::sort(parts.begin(), parts.end());
            k = to_string(t.form) + "(";
            for (std::size_t i = 0; i < parts.size(); ++i) k += (i ? "," : "") + parts[i];
            k += ")";
        }
        return k;
    }

    const CompiledForm& compiled(const FormKey& key) {
        auto it = forms_.find(key);
        if (it == forms_.end()) it = forms_.emplace(key, CompiledForm(FormFamily::instance().at(key))).first;
        return it->second;
    }

    const Partial<T>& partial(const TermNode& t) {
        if (t.kind == TermNode::Kind::Leaf) return leaves_.at(static_cast<std::size_t>(t.wave - 1));
        const std::string key = key_of(t);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        Partial<T> out;
        if (t.kind == TermNode::Kind::Inverse) {
            const Partial<T>& c = partial(*t.children.front());
            RhoRational norm = norm_sq(config_.metric(), c.exact_covector);
            if (norm.is_zero()) {
                std::vector<int> waves;
                for (int w = 1; w <= 4; ++w)
                    if (t.wave_mask() & (1u << (w - 1))) waves.push_back(w);
                throw CharacteristicDenominator(waves, t.to_string());
            }
            out = c;
            out.scale = c.scale / norm;
        } else {
            std::vector<const CompiledForm::Matrix<T>*> amps;
            std::vector<const CompiledForm::Vector<T>*> covs;
            out.scale = 1;
            for (const auto& child : t.children) {
                const Partial<T>& c = partial(*child);
                amps.push_back(&c.amplitude);
                covs.push_back(&c.covector);
                out.scale *= c.scale;
                out.exact_covector = out.exact_covector + c.exact_covector;
                out.i_power += c.i_power;
            }
            const CompiledForm& f = compiled(t.form);
            out.amplitude = f.contract<T>(hinv_, amps, covs);
            for (int i = 0; i < 4; ++i) out.covector[static_cast<std::size_t>(i)] = convert_(out.exact_covector[i]);
            out.i_power += f.derivative_count();
            out.prefactor = 1;
        }
        return cache_.emplace(key, std::move(out)).first->second;
    }

    NullConfig config_;
    Convert convert_;
    CompiledForm::Matrix<T> hinv_{};
    std::array<Partial<T>, 4> leaves_;
    std::map<FormKey, CompiledForm> forms_;
    std::map<std::string, Partial<T>> cache_;
};

template <class T, class Convert>
std::unique_ptr<ImplBase> make_impl(const NullConfig& c, const std::array<Sym2T, 4>& a, Convert convert) {
    return std::make_unique<TypedImpl<T, Convert>>(c, a, convert);
}

}  // namespace

struct InteractionEvaluator::Impl {
    std::unique_ptr<ImplBase> typed;
};

InteractionEvaluator::InteractionEvaluator(const NullConfig& config, std::optional<std::array<Sym2T, 4>> amplitudes)
    : impl_(std::make_unique<Impl>()) {
    std::array<Sym2T, 4> amps;
    for (int i = 0; i < 4; ++i) amps[static_cast<std::size_t>(i)] = amplitudes ? (*amplitudes)[static_cast<std::size_t>(i)] : config.polarization(i + 1);
    bool laurent = true;
    auto check = [&](const RhoRational& x) { laurent = laurent && x.is_polynomial(); };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            check(config.metric().inverse()(i, j));
            for (const auto& a : amps) check(a(i, j));
        }
    for (const auto& z : config.zetas())
        for (int i = 0; i < 4; ++i) check(z[i]);
    if (laurent)
        impl_->typed = make_impl<LaurentPoly>(config, amps, [](const RhoRational& x) { return x.as_laurent(); });
    else
        impl_->typed = make_impl<RhoRational>(config, amps, [](const RhoRational& x) { return x; });
}

InteractionEvaluator::~InteractionEvaluator() = default;
InteractionEvaluator::InteractionEvaluator(InteractionEvaluator&&) noexcept = default;
InteractionEvaluator& InteractionEvaluator::operator=(InteractionEvaluator&&) noexcept = default;

const NullConfig& InteractionEvaluator::config() const { return impl_->typed->config(); }

SymbolValue InteractionEvaluator::eval(const TermNode& tree) { return impl_->typed->eval(tree); }

SymbolValue InteractionEvaluator::eval(const InteractionTerm& term) {
    SymbolValue v = eval(*term.tree);
    if (term.sign < 0) v.matrix = RhoRational(-1) * v.matrix;
    return v;
}

SymbolValue eval_term(const TermNode& tree, const NullConfig& config) {
    InteractionEvaluator ev(config);
    return ev.eval(tree);
}

Mat4 pair_basis_coordinates(const Sym2T& m, const std::array<CoVec4, 4>& z) {
    // m = Z^T C Z with the rows of Z the covectors, so C = Z^-T m Z^-1.
    Mat4 rows;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) rows(i, j) = z[static_cast<std::size_t>(i)][j];
    Mat4 inv = invert(rows);
    Mat4 c = inv.transpose() * m.matrix() * inv;
    return c;
}

SymbolValue sum_realized(const std::vector<SymbolValue>& values) {
    SymbolValue out;
    for (const auto& v : values) {
        out.matrix = out.matrix + v.realized();
        out.total_covector = v.total_covector;
        out.prefactor_2pi = std::max(out.prefactor_2pi, v.prefactor_2pi);
    }
    return out;
}

}  // namespace nullwave
