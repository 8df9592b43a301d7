#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qph/multiindex.hpp"

namespace qph {

/// Integer skew-symmetric matrix A = (a_ij). It defines both the quantum
/// parameters q_ij = q^{a_ij} and the Poisson bracket {X_i,X_j} = a_ij X_i X_j.
/// Invariants: a_ii = 0, a_ij = -a_ji. Construct through validate_skew.
class SkewMatrix {
   public:
    int n() const { return n_; }
    int operator()(int i, int j) const { return a_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    const std::vector<std::vector<int>>& entries() const { return a_; }

    /// sum_j a_ij (rho_j - 1). Zero for all i with rho_i != 0 exactly when rho
    /// lies in the set C = C^sigma(Q); the value drives every differential.
    int defect(const MultiIndex& rho, int i) const {
        int s = 0;
        for (int j = 0; j < n_; ++j) s += (*this)(i, j) * (rho[j] - 1);
        return s;
    }

    friend SkewMatrix validate_skew(const std::vector<std::vector<int>>& raw);

   private:
    SkewMatrix(int n, std::vector<std::vector<int>> a) : n_(n), a_(std::move(a)) {}
    int n_ = 0;
    std::vector<std::vector<int>> a_;
};

/// Validates a raw integer grid as a skew-symmetric matrix.
/// Throws std::invalid_argument naming the offending entry otherwise.
SkewMatrix validate_skew(const std::vector<std::vector<int>>& raw);

}  // namespace qph
