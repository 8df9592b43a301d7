#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "qph/combination.hpp"
#include "qph/multiindex.hpp"
#include "qph/rational.hpp"
#include "qph/skew_matrix.hpp"

namespace qph {

/// Element of R = Q[X_1..X_n] (and of the Poisson module M, which is R as a
/// vector space): finitely supported map monomial exponent -> coefficient.
using Poly = Combination<MultiIndex, Rational>;

Poly poly_monomial(const MultiIndex& alpha, const Rational& c = Rational(1));
Poly poly_mul(const Poly& f, const Poly& g);
/// Formal partial derivative d/dX_i.
Poly poly_partial(const Poly& f, int i);

/// Basis symbol X^alpha dX^beta of the Poisson chain complex M (x) Omega^k;
/// beta is a 0/1 vector and |beta| = k.
struct PChainBasis {
    MultiIndex alpha;
    MultiIndex beta;  // componentwise <= 1
    auto operator<=>(const PChainBasis&) const = default;
};

using PChain = Combination<PChainBasis, Rational>;

/// Skew multiderivation P in chi^k(R), stored by its values on increasing
/// generator tuples: wedge S (0-based) -> P(X_{s_1},..,X_{s_k}). A skew
/// k-derivation of a polynomial algebra is determined by these values.
struct PCochain {
    int arity = 0;
    std::map<std::vector<int>, Poly> values;  // no zero polynomials stored

    static PCochain zero(int k) { return PCochain{k, {}}; }
    void add(const std::vector<int>& wedge, const Poly& p) {
        if (p.is_zero()) return;
        auto [it, inserted] = values.emplace(wedge, p);
        if (!inserted) {
            it->second += p;
            if (it->second.is_zero()) values.erase(it);
        }
    }
    Poly value(const std::vector<int>& wedge) const {
        auto it = values.find(wedge);
        return it == values.end() ? Poly() : it->second;
    }
    bool is_zero() const { return values.empty(); }
    bool operator==(const PCochain&) const = default;
};

/// Poisson bracket {X^u, X^v} = (sum_{i,j} u_i a_ij v_j) X^{u+v}, extended
/// bilinearly. Antisymmetric, Jacobi, Leibniz in each slot.
Poly bracket(const SkewMatrix& A, const Poly& f, const Poly& g);

/// External bracket of the Poisson module M:
/// {X^a, X_i}_M = -sum_j a_ij (a_j - 1) X^{a+e_i}, extended to arbitrary
/// second argument by {x, fg}_M = {x,f}_M g + {x,g}_M f and bilinearly.
Poly module_bracket(const SkewMatrix& A, const Poly& m, const Poly& f);

/// Omega(alpha, beta, i) = (-1)^{sum_{j<i} beta_j} sum_j a_ij (a_j+b_j-1):
/// the (1-q)-semiclassical limit of omega_q whenever beta_i = 1.
Rational omega_semiclassical(const SkewMatrix& A, const MultiIndex& alpha, const MultiIndex& beta,
                             int i);

/// Boundary of the Poisson chain complex, the coordinate form of
/// sum_i (-1)^{i+1} {m, a_i}_M (x) ... + sum_{i<j} (-1)^{i+j} m (x) d{a_i,a_j} ^ ...
/// on the basis X^alpha dX^beta:
///   b(X^a dX^b) = sum_i delta_{1,b_i} (-1)^{sum_{j<i} b_j}
///                 (sum_j a_ij (1 - a_j - b_j)) X^{a+e_i} dX^{b-e_i}.
/// Lowers |beta| by one and preserves alpha + beta. The coefficient is
/// -omega_semiclassical: the per-monomial expansion of the defining two-sum
/// formula fixes this sign, and the dagger square below holds with it.
PChain poisson_boundary(const SkewMatrix& A, const PChainBasis& b);
PChain poisson_boundary(const SkewMatrix& A, const PChain& c);

/// The defining two-sum boundary on m (x) da_1 ^ ... ^ da_k for arbitrary
/// polynomial arguments, expanded into coordinates via d f = sum_i (df/dX_i) dX_i.
/// Agrees with poisson_boundary when the arguments are coordinate variables.
PChain boundary_general(const SkewMatrix& A, const Poly& m, const std::vector<Poly>& args);

/// Membership in C: for every i, rho_i = 0 or sum_j a_ij (rho_j - 1) = 0.
/// Agrees pointwise with in_c_sigma.
bool in_c(const SkewMatrix& A, const MultiIndex& rho);

/// Semiclassical homotopy h(X^a dX^b) =
///   (1/||a+b||) sum_i w(a,b,i) X^{a-e_i} dX^{b+e_i},
/// where w(a,b,i) inverts the boundary coefficient at (a-e_i, b+e_i, i) and
/// vanishes in the same cases as the quantum homotopy. Satisfies
/// bh + hb = id on every multidegree component off C.
PChain homotopy_p(const SkewMatrix& A, const PChainBasis& b);
PChain homotopy_p(const SkewMatrix& A, const PChain& c);

/// All (alpha, beta) with |beta| = k, alpha+beta in C, |alpha+beta| <= bound:
/// a basis of HP_k(R, M) up to the total-degree bound.
std::vector<PChainBasis> hp_basis(const SkewMatrix& A, int k, int bound);

/// Evaluates a skew multiderivation on polynomial arguments (multilinear,
/// skew, Leibniz in each slot). Throws std::invalid_argument on arity mismatch.
Poly eval_multiderivation(const PCochain& P, const std::vector<Poly>& args);

/// Poisson coboundary: (dP)(f_0,..,f_k) = sum_i (-1)^i {f_i, P(..hat i..)}
///   + sum_{i<j} (-1)^{i+j} P({f_i,f_j}, ..hat i..hat j..),
/// evaluated on increasing generator tuples. Preserves the signed degree
/// alpha - chi_S of coordinate terms.
PCochain poisson_coboundary(const SkewMatrix& A, const PCochain& P);

/// Volume-form contraction chi^k -> M (x) Omega^{n-k}:
/// dagger(P) = sum over k-subsets S of eps(S, complement) P(S) dX^{complement}.
PChain dagger(const SkewMatrix& A, const PCochain& P);

/// All (alpha, beta) with |beta| = n-k, alpha+beta in C, |alpha+beta| <= bound:
/// duality-side representatives of HP^k(R) under dagger.
std::vector<PChainBasis> hp_cohomology_basis(const SkewMatrix& A, int k, int bound);

/// Sign of the (k, n-k) shuffle putting S first: the permutation
/// (s_1..s_k j_1..j_{n-k}) of (1..n).
int shuffle_sign(int n, const std::vector<int>& wedge);

std::string to_string(const Poly& f);
std::string to_string(const PChainBasis& b);
std::string to_string(const PChain& c);

}  // namespace qph
