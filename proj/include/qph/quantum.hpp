#pragma once

#include <compare>
#include <string>
#include <vector>

#include "qph/combination.hpp"
#include "qph/laurent.hpp"
#include "qph/multiindex.hpp"
#include "qph/qfraction.hpp"
#include "qph/skew_matrix.hpp"

namespace qph {

/// Basis symbol v^alpha (x) v^gamma of the twisted Koszul chain complex
/// K^sigma(S_QV); gamma is a 0/1 vector and |gamma| is the homological index.
struct QChainBasis {
    MultiIndex alpha;
    MultiIndex gamma;  // componentwise <= 1
    auto operator<=>(const QChainBasis&) const = default;
};

/// Coordinate symbol shared by the two cochain complexes: the functional
/// supported on the wedge v_S with value v^alpha (in (L, D)), equivalently
/// v^alpha (x) (v_S)' (in the Delta-complex). Indices in `wedge` are 0-based
/// and strictly increasing; |S| is the cohomological index.
struct QCochainBasis {
    std::vector<int> wedge;
    MultiIndex alpha;
    auto operator<=>(const QCochainBasis&) const = default;
};

using QChain = Combination<QChainBasis, LaurentPoly>;
using QChainFrac = Combination<QChainBasis, QFrac>;
using QCochain = Combination<QCochainBasis, LaurentPoly>;

/// Exponents e with sigma(v_i) = q^{e_i} v_i for the canonical scaling
/// automorphism, i.e. p_i = prod_j q_{j,i} = q^{e_i} with e_i = sum_j a_ji.
std::vector<int> scaling_exponents(const SkewMatrix& A);

/// Coefficient Omega_Q(alpha, gamma; i) of the twisted Koszul differential:
/// zero when gamma_i = 0, otherwise
///   (-1)^{sum_{k<i} gamma_k} (prod_{k<i} q_{k,i}^{gamma_k})
///   (prod_{k>i} q_{k,i}^{alpha_k}) (1 - p_i prod_k q_{i,k}^{alpha_k+gamma_k}).
/// i is 0-based; throws std::out_of_range on a bad index.
LaurentPoly omega_q(const SkewMatrix& A, const MultiIndex& alpha, const MultiIndex& gamma, int i);

/// d(v^a (x) v^g) = sum_i Omega_Q(a,g;i) v^{a+e_i} (x) v^{g-e_i}.
/// Lowers |gamma| by one and preserves the multidegree alpha + gamma.
QChain koszul_d(const SkewMatrix& A, const QChainBasis& b);

template <typename S>
Combination<QChainBasis, S> koszul_d(const SkewMatrix& A, const Combination<QChainBasis, S>& c) {
    return extend_linearly(c, [&](const QChainBasis& b) { return koszul_d(A, b); });
}

/// Membership in C^sigma(Q): for every i, rho_i = 0 or
/// sum_j a_ij (rho_j - 1) = 0. Off this set the graded subcomplex is acyclic.
bool in_c_sigma(const SkewMatrix& A, const MultiIndex& rho);

/// ||rho||: the number of k with rho_k != 0 and sum_j a_kj (rho_j - 1) != 0.
int norm_bars(const SkewMatrix& A, const MultiIndex& rho);

/// Homotopy h_Q(v^a (x) v^b) =
///   (1/||a+b||) sum_i omega_q(a,b,i) v^{a-e_i} (x) v^{b+e_i},
/// with coefficient Omega_Q(a-e_i, b+e_i, i)^{-1} and vanishing cases
/// a+b in C^sigma, b_i = 1, a_i = 0, and Omega_Q(a-e_i, b+e_i, i) = 0.
/// Satisfies d h_Q + h_Q d = id on every multidegree component off C^sigma.
QChainFrac homotopy_q(const SkewMatrix& A, const QChainBasis& b);

QChainFrac homotopy_q(const SkewMatrix& A, const QChainFrac& c);

/// All (alpha, gamma) with |gamma| = k, alpha+gamma in C^sigma(Q) and
/// |alpha+gamma| <= bound: a basis of twisted Hochschild homology in
/// homological degree k, up to the total-degree bound.
std::vector<QChainBasis> twisted_hh_basis(const SkewMatrix& A, int k, int bound);

/// Theta coefficient of the wedge-complement pairing: for S = {i_1<...<i_k}
/// (0-based), Theta(S) = prod_{i in S} prod_{k<i, k not in S} (-q_{i,k}),
/// a signed power of q. Throws std::invalid_argument on a tuple that is not
/// strictly increasing or out of range.
LaurentPoly theta(const SkewMatrix& A, const std::vector<int>& tuple);

/// Differential of (L, D): D(phi)(v_{i_1}^...^v_{i_{k+1}}) =
///   sum_t (-1)^{t-1} ((prod_{s<t} q_{i_s,i_t}) v_{i_t} phi(...^hat...)
///                    - (prod_{s>t} q_{i_t,i_s}) phi(...^hat...) v_{i_t}).
/// Raises |S| by one and preserves the signed degree alpha - chi_S.
QCochain cochain_D(const SkewMatrix& A, const QCochainBasis& b);
QCochain cochain_D(const SkewMatrix& A, const QCochain& c);

/// Differential of the dual complex (U (x) (Lambda)', Delta):
///   Delta(a (x) (v_S)') = Theta(S)^{-1} sum_k (-1)^{k-1}
///     ((prod_{s<k} q_{j_s,j_k}) a v_{j_k} - (prod_{s>k} q_{j_k,j_s}) p_{j_k} v_{j_k} a)
///     (x) Theta(S u {j_k}) (v_{S u {j_k}})',
/// where {j_1<...<j_{n-|S|}} is the complement of S.
QCochain delta_dual(const SkewMatrix& A, const QCochainBasis& b);
QCochain delta_dual(const SkewMatrix& A, const QCochain& c);

/// The isomorphism a (x) (v_S)' -> (v_S -> a) of Eq-level bookkeeping; the
/// chosen coordinates make it the identity on (S, alpha) pairs. It is kept as
/// a named operation so that the sign relation
///   phi3(Delta c) = (-1)^{|S|+1} D(phi3 c)
/// can be stated and checked literally.
inline QCochain phi3(const QCochain& c) { return c; }
inline QCochain phi3_inverse(const QCochain& c) { return c; }

std::string to_string(const QChainBasis& b);
std::string to_string(const QCochainBasis& b);

}  // namespace qph
