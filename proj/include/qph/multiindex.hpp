#pragma once

#include <compare>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qph {

/// Exponent vector in Z^n. Used as the common grading of every complex:
/// chain multidegrees live in N^n, cochain degrees in Z^n.
struct SignedDegree {
    std::vector<int> e;

    SignedDegree() = default;
    explicit SignedDegree(std::vector<int> v) : e(std::move(v)) {}
    SignedDegree(std::initializer_list<int> v) : e(v) {}

    int size() const { return static_cast<int>(e.size()); }
    int operator[](int i) const { return e[static_cast<size_t>(i)]; }
    int& operator[](int i) { return e[static_cast<size_t>(i)]; }

    /// Sum of absolute values of the entries.
    int abs_total() const {
        int s = 0;
        for (int v : e) s += std::abs(v);
        return s;
    }

    bool all_nonnegative() const {
        for (int v : e)
            if (v < 0) return false;
        return true;
    }

    friend SignedDegree operator+(const SignedDegree& a, const SignedDegree& b) {
        SignedDegree r = a;
        for (int i = 0; i < r.size(); ++i) r[i] += b[i];
        return r;
    }
    friend SignedDegree operator-(const SignedDegree& a, const SignedDegree& b) {
        SignedDegree r = a;
        for (int i = 0; i < r.size(); ++i) r[i] -= b[i];
        return r;
    }

    auto operator<=>(const SignedDegree&) const = default;
};

/// Exponent vector in N^n; subtraction is defined only when the result stays
/// componentwise non-negative.
struct MultiIndex {
    std::vector<int> e;

    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> v) : e(std::move(v)) { check(); }
    MultiIndex(std::initializer_list<int> v) : e(v) { check(); }
    static MultiIndex zeros(int n) { return MultiIndex(std::vector<int>(static_cast<size_t>(n), 0)); }
    static MultiIndex unit(int n, int i) {
        MultiIndex m = zeros(n);
        m[i] = 1;
        return m;
    }

    int size() const { return static_cast<int>(e.size()); }
    int operator[](int i) const { return e[static_cast<size_t>(i)]; }
    int& operator[](int i) { return e[static_cast<size_t>(i)]; }

    /// Total degree |alpha|.
    int total() const { return std::accumulate(e.begin(), e.end(), 0); }

    bool is_zero_vec() const {
        for (int v : e)
            if (v != 0) return false;
        return true;
    }

    /// Componentwise alpha <= beta.
    bool leq(const MultiIndex& o) const {
        for (int i = 0; i < size(); ++i)
            if (e[static_cast<size_t>(i)] > o[i]) return false;
        return true;
    }

    friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
        MultiIndex r = a;
        for (int i = 0; i < r.size(); ++i) r[i] += b[i];
        return r;
    }
    /// Throws std::domain_error if any component would go negative.
    friend MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
        MultiIndex r = a;
        for (int i = 0; i < r.size(); ++i) {
            r[i] -= b[i];
            if (r[i] < 0) throw std::domain_error("MultiIndex subtraction went negative");
        }
        return r;
    }

    SignedDegree signed_degree() const { return SignedDegree(e); }

    auto operator<=>(const MultiIndex&) const = default;

   private:
    void check() const {
        for (int v : e)
            if (v < 0) throw std::domain_error("MultiIndex entries must be non-negative");
    }
};

inline std::string to_string(const SignedDegree& d) {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < d.size(); ++i) {
        if (i) os << ',';
        os << d[i];
    }
    os << ')';
    return os.str();
}

inline std::string to_string(const MultiIndex& m) { return to_string(m.signed_degree()); }

/// All alpha in N^n with |alpha| <= bound, in graded lexicographic order.
std::vector<MultiIndex> multi_indices_up_to(int n, int bound);

/// All strictly increasing k-tuples from {0,..,n-1}, lexicographic.
std::vector<std::vector<int>> increasing_tuples(int n, int k);

/// 0/1 indicator vector of an increasing tuple.
MultiIndex indicator(int n, const std::vector<int>& tuple);

}  // namespace qph
