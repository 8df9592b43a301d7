#pragma once

#include <map>

namespace qph {

/// Finite linear combination of basis symbols with exact scalar coefficients.
/// Canonical form: zero coefficients are never stored.
template <typename Basis, typename Scalar>
class Combination {
   public:
    using term_map = std::map<Basis, Scalar>;

    Combination() = default;
    static Combination single(const Basis& b, Scalar c) {
        Combination r;
        r.add(b, std::move(c));
        return r;
    }

    bool is_zero() const { return t_.empty(); }
    size_t term_count() const { return t_.size(); }
    const term_map& terms() const { return t_; }

    Scalar coefficient(const Basis& b) const {
        auto it = t_.find(b);
        return it == t_.end() ? Scalar(0) : it->second;
    }

    void add(const Basis& b, const Scalar& c) {
        if (is_zero_scalar(c)) return;
        auto [it, inserted] = t_.emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (is_zero_scalar(it->second)) t_.erase(it);
        }
    }

    Combination& operator+=(const Combination& o) {
        for (const auto& [b, c] : o.t_) add(b, c);
        return *this;
    }
    Combination& operator-=(const Combination& o) {
        for (const auto& [b, c] : o.t_) add(b, Scalar(0) - c);
        return *this;
    }
    friend Combination operator+(Combination a, const Combination& b) { return a += b; }
    friend Combination operator-(Combination a, const Combination& b) { return a -= b; }

    template <typename S2>
    friend Combination operator*(const S2& c, const Combination& x) {
        Combination r;
        for (const auto& [b, v] : x.t_) r.add(b, Scalar(c) * v);
        return r;
    }

    bool operator==(const Combination&) const = default;

   private:
    static bool is_zero_scalar(const Scalar& s) {
        using qph::is_zero;
        return is_zero(s);
    }
    term_map t_;
};

/// Extends a basis-level map linearly: f(b) must return a Combination whose
/// scalar type multiplies with this combination's coefficients.
template <typename B1, typename S, typename F>
auto extend_linearly(const Combination<B1, S>& x, F&& f) {
    using Out = decltype(f(std::declval<const B1&>()));
    using B2 = typename Out::term_map::key_type;
    Combination<B2, S> r;
    for (const auto& [b, c] : x.terms())
        for (const auto& [b2, w] : f(b).terms()) r.add(b2, c * S(w));
    return r;
}

}  // namespace qph
