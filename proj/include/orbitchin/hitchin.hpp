#pragma once

#include <optional>
#include <string>

#include "orbitchin/bundle.hpp"
#include "orbitchin/curve.hpp"
#include "orbitchin/spectral.hpp"

namespace orbitchin {

/// Dimension of the moduli space of GL-Higgs bundles with the numerical
/// class e on a hyperbolic curve:
///   r^2 (2g - 2) + 2 + sum_i (r^2 - sum_k m_{i,k}^2).
long long moduli_dim_gl(const BundleClass& e);

/// Dimension of the SL (fixed-determinant) moduli space:
///   r^2 (2g - 2) + 2 - 2g + sum_i (r^2 - sum_k m_{i,k}^2),
/// always moduli_dim_gl - 2g.
long long moduli_dim_sl(const BundleClass& e);

/// Order of the group of r-torsion points of the coarse Jacobian: r^{2g}.
/// The PGL moduli space is the quotient of the SL one by this group.
long long gamma0_order(long long genus, long long r);

/// All dimension data of the rank-r, pushforward-degree-d moduli problem,
/// computed for the balanced class (the class of pushforwards of line
/// bundles from a generic smooth spectral curve).
struct DimensionReport {
    long long moduli_gl;
    long long moduli_sl;    ///< = moduli_gl - 2g
    long long base_gl;      ///< sum_{i=1}^r h^0(K^i)
    long long base_sl;      ///< = base_gl - g
    long long fiber_gl;     ///< Jacobian dimension = spectral genus
    long long fiber_sl;     ///< Prym dimension = spectral genus - g
    long long gamma0_order; ///< r^{2g}

    friend bool operator==(const DimensionReport&, const DimensionReport&) = default;
};

DimensionReport dimension_report(const CurveSignature& sig, long long r, long long d);

/// The integrable-system identity: base + fiber = moduli, for both the GL
/// and the SL side, for the balanced class of rank r and pushforward
/// degree d.
bool integrable_check(const CurveSignature& sig, long long r, long long d);

/// Mirror-eligibility outcome, keyed by the traceless spectral verdict.
enum class SyzOutcome {
    MirrorPartners,    ///< generic spectral curve integral and smooth
    SingularSpectral,  ///< integral but singular: duality not certified
    IntegralityFails,  ///< the integrality condition blocks the construction
    NotCovered,        ///< outside the classification
};

std::string to_string(SyzOutcome outcome);

/// Mirror-eligibility verdict.  The torsor component of the SL fiber is
/// informational: its coarse degree chi(e) + g_a - 1 is determined by the
/// numerics, while the fractional indices depend on a twisting choice and
/// are normalized to zero here.
struct SyzVerdict {
    SyzOutcome outcome;
    int branch;
    std::string fired_condition;
    DimensionReport dims;
    bool generic_weight;
    SpectralVerdict spectral;  ///< the underlying traceless verdict
    std::optional<CurveSignature> spectral_signature;  ///< when integral and smooth
    std::optional<PicClass> fiber_torsor;              ///< ditto; indices normalized
};

/// Decide mirror eligibility at rank r and pushforward degree d: classify
/// the traceless spectral curve, attach the dimension report and the
/// generic-weight test for the balanced class, and (when the spectral curve
/// is integral and smooth) the spectral signature and fiber torsor
/// component.
SyzVerdict syz_check(const CurveSignature& sig, long long r, long long d);

}  // namespace orbitchin
