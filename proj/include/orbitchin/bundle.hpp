#pragma once

#include <vector>

#include "orbitchin/curve.hpp"
#include "orbitchin/rational.hpp"

namespace orbitchin {

/// Numerical K-class of an orbifold bundle: rank, rational degree, and at
/// each stacky point the isotypic multiplicity vector (m_{k,0},...,
/// m_{k,r_k-1}) of the stabilizer representation on the fiber.
///
/// Invariants enforced at construction (std::invalid_argument otherwise):
///   - sum_j m_{k,j} = rank at every stacky point (the decomposition
///     exhausts the fiber);
///   - degree - sum_k age_k is an integer (it is the degree of the coarse
///     pushforward; classes violating this come from no actual bundle, so
///     they are rejected rather than repaired).
class BundleClass {
public:
    BundleClass(CurveSignature curve, long long rank, Rational degree,
                std::vector<std::vector<long long>> mult);

    const CurveSignature& curve() const { return curve_; }
    long long rank() const { return rank_; }
    const Rational& degree() const { return degree_; }
    const std::vector<std::vector<long long>>& mult() const { return mult_; }
    const std::vector<long long>& mult_at(std::size_t k) const { return mult_.at(k); }

    friend bool operator==(const BundleClass&, const BundleClass&) = default;

private:
    CurveSignature curve_;
    long long rank_;
    Rational degree_;
    std::vector<std::vector<long long>> mult_;
};

/// age_k(E) = sum_j (j/r_k) m_{k,j}, the age of the stabilizer
/// representation at the k-th stacky point.
Rational age(const BundleClass& e, std::size_t k);

/// Sum of the ages over all stacky points.
Rational total_age(const BundleClass& e);

/// Orbifold Riemann-Roch: chi(E) = rk(E)(1 - g) + deg(E) - sum_k age_k(E).
/// Always an integer by the class invariant.
long long euler_char(const BundleClass& e);

/// Rank and coarse degree of pi_*E: (rk(E), deg(E) - sum_k age_k(E)).
struct PushforwardClass {
    long long rank;
    long long degree;

    friend bool operator==(const PushforwardClass&, const PushforwardClass&) = default;
};

PushforwardClass pushforward_class(const BundleClass& e);

/// Tensor product of numerical classes: ranks multiply, degrees follow the
/// product rule n_a deg(b) + n_b deg(a), and the multiplicity vectors
/// convolve cyclically at each point (x^i x^j = x^{i+j mod r_k}).
BundleClass tensor(const BundleClass& a, const BundleClass& b);

/// Dual class: same rank, negated degree, index-reversed multiplicities
/// (m'_{k,j} = m_{k,(r_k - j) mod r_k}).  An involution.
BundleClass dual(const BundleClass& a);

/// Rank-1 class of a Picard component: degree = total degree of L,
/// multiplicity the indicator of L's index at each point.
BundleClass line_class(const PicClass& L);

/// Twist by a line bundle: tensor(a, line_class(L)); multiplicities shift
/// cyclically by L's index.
BundleClass tensor_line(const BundleClass& a, const PicClass& L);

/// Numerical direct sum: ranks, degrees and multiplicities add.
BundleClass direct_sum(const BundleClass& a, const BundleClass& b);

/// A polarization: the numerical class of a generating sheaf plus the degree
/// of the ample line bundle O_X(1) on the coarse curve.
class Polarization {
public:
    Polarization(BundleClass generating, long long ample_degree);

    const BundleClass& generating() const { return generating_; }
    long long ample_degree() const { return ample_degree_; }

private:
    BundleClass generating_;
    long long ample_degree_;
};

/// The canonical polarization: generating sheaf E_u = (+)_k (+)_j
/// O((j/r_k) p_k) (rank sum r_k), or the trivial line class when the curve
/// has no stacky points; ample degree 1 unless overridden.
Polarization canonical_polarization(const CurveSignature& sig, long long ample_degree = 1);

/// The modified Hilbert polynomial P_E(m) = chi(pi_*(E tensor G^dual)
/// tensor O_X(m)) of a class against a polarization with generating sheaf G,
/// stored by its two coefficients: P(m) = leading * m + constant.
struct ModifiedHilbert {
    Rational leading;   ///< rk(E) rk(G) deg O_X(1)
    Rational constant;  ///< chi(E tensor G^dual)

    friend bool operator==(const ModifiedHilbert&, const ModifiedHilbert&) = default;
};

ModifiedHilbert modified_hilbert(const BundleClass& e, const Polarization& pol);

/// Modified slope: constant / leading coefficient of the modified Hilbert
/// polynomial.
Rational modified_slope(const BundleClass& e, const Polarization& pol);

/// beta-invariant of `sub` with respect to `total`:
///   beta = leading(total) * constant(sub) - constant(total) * leading(sub).
/// The sign is fixed so that beta(sub) <= 0 iff mu(sub) <= mu(total); a
/// Higgs bundle is semistable iff beta <= 0 on every invariant subsheaf.
Rational beta(const BundleClass& total, const BundleClass& sub, const Polarization& pol);

/// The parabolic data of the coarse pushforward pi_*E: weights
/// alpha_{k,0} = 0 and alpha_{k,j} = (sum_{h=1}^j n_{k,h}) / rk(G) read off
/// the generating sheaf's multiplicities n, the parabolic degree
/// deg pi_*E + sum_{k,j} alpha_{k,j} m_{k,j}, and its slope par_deg / rk(E).
struct ParabolicData {
    std::vector<std::vector<Rational>> weights;
    Rational par_degree;
    Rational par_slope;
};

ParabolicData parabolic_data(const BundleClass& e, const Polarization& pol);

/// A generic rational parabolic weight exists iff the coarse pushforward
/// degree d and all multiplicities m_{k,j} have greatest common divisor 1.
bool generic_weight_exists(const BundleClass& e);

/// The balanced class of a given rank and coarse pushforward degree: at each
/// stacky point write rank = a r_k + b and give b character slots the value
/// ceil(rank/r_k) and the rest floor(rank/r_k); the larger slots occupy the
/// lowest indices 0..b-1 (a canonical tie-break; every dimension formula
/// depends only on the multiset).  The rational degree is d + sum_k age_k.
/// This is the isotypic pattern of the pushforward of a line bundle from a
/// generic smooth spectral curve.
BundleClass balanced_class(const CurveSignature& sig, long long rank, long long coarse_degree);

}  // namespace orbitchin
