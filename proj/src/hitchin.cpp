#include "orbitchin/hitchin.hpp"

#include <cassert>
#include <limits>
#include <stdexcept>

namespace orbitchin {

namespace {

void require_hyperbolic(const CurveSignature& sig) {
    if (!is_hyperbolic(sig)) {
        throw std::domain_error("curve is not hyperbolic: canonical degree is not positive");
    }
}

// sum over stacky points of r^2 - sum_k m_k^2, the drop in the moduli
// dimension caused by each reduced stabilizer.
long long reduction_sum(const BundleClass& e) {
    const long long r2 = e.rank() * e.rank();
    long long sum = 0;
    for (std::size_t k = 0; k < e.curve().point_count(); ++k) {
        long long squares = 0;
        for (long long m : e.mult_at(k)) {
            squares += m * m;
        }
        sum += r2 - squares;
    }
    return sum;
}

}  // namespace

long long moduli_dim_gl(const BundleClass& e) {
    require_hyperbolic(e.curve());
    const long long r = e.rank();
    const long long g = e.curve().genus();
    return r * r * (2 * g - 2) + 2 + reduction_sum(e);
}

long long moduli_dim_sl(const BundleClass& e) {
    require_hyperbolic(e.curve());
    const long long r = e.rank();
    const long long g = e.curve().genus();
    const long long dim = r * r * (2 * g - 2) + 2 - 2 * g + reduction_sum(e);
    assert(dim == moduli_dim_gl(e) - 2 * g);
    return dim;
}

long long gamma0_order(long long genus, long long r) {
    if (genus < 0) {
        throw std::invalid_argument("torsion order: genus must be nonnegative");
    }
    if (r < 1) {
        throw std::domain_error("torsion order: rank must be at least 1");
    }
    long long order = 1;
    for (long long i = 0; i < 2 * genus; ++i) {
        if (order > std::numeric_limits<long long>::max() / r) {
            throw std::overflow_error("torsion order exceeds 64-bit range");
        }
        order *= r;
    }
    return order;
}

DimensionReport dimension_report(const CurveSignature& sig, long long r, long long d) {
    require_hyperbolic(sig);
    if (r < 1) {
        throw std::domain_error("dimension report: rank must be at least 1");
    }
    const BundleClass e = balanced_class(sig, r, d);
    DimensionReport rep;
    rep.moduli_gl = moduli_dim_gl(e);
    rep.moduli_sl = moduli_dim_sl(e);
    const BaseDims base = hitchin_base_dims(sig, r);
    rep.base_gl = base.gl;
    rep.base_sl = base.sl;
    rep.fiber_gl = spectral_genus(sig, r);
    rep.fiber_sl = rep.fiber_gl - sig.genus();
    rep.gamma0_order = gamma0_order(sig.genus(), r);
    // The SL quantities come from formulas independent of their GL
    // counterparts wherever one exists; the fixed offsets are invariants
    // of the construction, so double-check them.
    assert(rep.moduli_sl == rep.moduli_gl - 2 * sig.genus());
    assert(rep.base_sl == rep.base_gl - sig.genus());
    assert(rep.fiber_sl == rep.fiber_gl - sig.genus());
    return rep;
}

bool integrable_check(const CurveSignature& sig, long long r, long long d) {
    const DimensionReport rep = dimension_report(sig, r, d);
    return rep.base_gl + rep.fiber_gl == rep.moduli_gl &&
           rep.base_sl + rep.fiber_sl == rep.moduli_sl;
}

std::string to_string(SyzOutcome outcome) {
    switch (outcome) {
        case SyzOutcome::MirrorPartners:
            return "MirrorPartners";
        case SyzOutcome::SingularSpectral:
            return "SingularSpectral";
        case SyzOutcome::IntegralityFails:
            return "IntegralityFails";
        case SyzOutcome::NotCovered:
            return "NotCovered";
    }
    return "?";
}

SyzVerdict syz_check(const CurveSignature& sig, long long r, long long d) {
    SyzVerdict v;
    v.spectral = classify_spectral(sig, r, /*traceless=*/true);
    switch (v.spectral.outcome) {
        case SpectralOutcome::IntegralSmooth:
            v.outcome = SyzOutcome::MirrorPartners;
            break;
        case SpectralOutcome::IntegralSingular:
            v.outcome = SyzOutcome::SingularSpectral;
            break;
        case SpectralOutcome::IntegralityConditionFails:
            v.outcome = SyzOutcome::IntegralityFails;
            break;
        case SpectralOutcome::NotCovered:
            v.outcome = SyzOutcome::NotCovered;
            break;
    }
    v.branch = v.spectral.branch;
    v.fired_condition = v.spectral.fired_condition;
    v.dims = dimension_report(sig, r, d);
    v.generic_weight = generic_weight_exists(balanced_class(sig, r, d));
    if (v.outcome == SyzOutcome::MirrorPartners) {
        // Mirror eligibility presupposes the torus fibration, so the
        // dimension identity must hold; a failure here is a logic error,
        // not a property of the input.
        if (!integrable_check(sig, r, d)) {
            throw std::logic_error(
                "syz check: dimension identity failed for a mirror-eligible signature");
        }
        v.spectral_signature = spectral_stacky_signature(sig, r);
        const long long chi = euler_char(balanced_class(sig, r, d));
        v.fiber_torsor = PicClass(
            *v.spectral_signature, chi + v.dims.fiber_gl - 1,
            std::vector<long long>(v.spectral_signature->point_count(), 0));
    }
    return v;
}

}  // namespace orbitchin
