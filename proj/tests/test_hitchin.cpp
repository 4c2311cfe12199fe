#include "orbitchin/hitchin.hpp"

#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "orbitchin/bundle.hpp"
#include "orbitchin/curve.hpp"

using namespace orbitchin;

namespace {

const CurveSignature kOrbifold = make_signature(0, {3, 2, 2, 2, 2});

}  // namespace

TEST_CASE("moduli dimensions from the multiplicity table") {
    const BundleClass e(kOrbifold, 3, Rational(9, 2),
                        {{1, 1, 1}, {1, 2}, {2, 1}, {2, 1}, {2, 1}});
    CHECK(moduli_dim_gl(e) == 6);  // -18 + 2 + (6 + 4 + 4 + 4 + 4)
    CHECK(moduli_dim_sl(e) == 6);

    // rank 1: the Jacobian times the differentials
    const BundleClass line(CurveSignature(3, {}), 1, Rational(0), {});
    CHECK(moduli_dim_gl(line) == 6);  // 2g
    CHECK(moduli_dim_sl(line) == 0);

    // classical rank-2 genus-2 count
    const auto smooth = CurveSignature(2, {});
    const BundleClass rank2(smooth, 2, Rational(1), {});
    CHECK(moduli_dim_gl(rank2) == 10);
    CHECK(moduli_dim_sl(rank2) == 6);

    const BundleClass flat(CurveSignature(1, {}), 2, Rational(0), {});
    CHECK_THROWS_AS(moduli_dim_gl(flat), std::domain_error);
}

TEST_CASE("torsion order of the coarse jacobian") {
    CHECK(gamma0_order(0, 3) == 1);
    CHECK(gamma0_order(1, 2) == 4);
    // (Z/3)^4 torsion points on a two-dimensional Jacobian
    CHECK(gamma0_order(2, 3) == 81);
    CHECK(gamma0_order(3, 1) == 1);
    CHECK_THROWS_AS(gamma0_order(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(gamma0_order(1, 0), std::domain_error);
    CHECK_THROWS_AS(gamma0_order(40, 10), std::overflow_error);
}

TEST_CASE("dimension report ties moduli, base and fiber together") {
    const auto rep = dimension_report(kOrbifold, 3, 1);
    CHECK(rep.moduli_gl == 6);
    CHECK(rep.moduli_sl == 6);
    CHECK(rep.base_gl == 3);
    CHECK(rep.base_sl == 3);
    CHECK(rep.fiber_gl == 3);
    CHECK(rep.fiber_sl == 3);
    CHECK(rep.gamma0_order == 1);

    const auto line = dimension_report(make_signature(1, {5}), 1, 0);
    CHECK(line.moduli_gl == 2);
    CHECK(line.base_gl == 1);
    CHECK(line.fiber_gl == 1);
    CHECK(line.moduli_sl == 0);
    CHECK(line.gamma0_order == 1);

    const auto smooth = dimension_report(CurveSignature(2, {}), 2, 1);
    CHECK(smooth.moduli_gl == 10);
    CHECK(smooth.base_gl == 5);
    CHECK(smooth.fiber_gl == 5);
    CHECK(smooth.moduli_sl == 6);
    CHECK(smooth.base_sl == 3);
    CHECK(smooth.fiber_sl == 3);
    CHECK(smooth.gamma0_order == 16);

    CHECK_THROWS_AS(dimension_report(kOrbifold, 0, 0), std::domain_error);
    CHECK_THROWS_AS(dimension_report(make_signature(0, {2, 2}), 2, 0),
                    std::domain_error);
}

TEST_CASE("the dimension identity holds on sample signatures") {
    CHECK(integrable_check(kOrbifold, 3, 1));
    CHECK(integrable_check(make_signature(1, {5}), 1, 0));
    CHECK(integrable_check(CurveSignature(2, {}), 2, 1));
    CHECK(integrable_check(make_signature(1, {2, 2}), 2, 0));
    CHECK(integrable_check(make_signature(3, {7}), 5, 2));
}

TEST_CASE("mirror verdicts by spectral type") {
    const auto good = syz_check(kOrbifold, 3, 1);
    CHECK(good.outcome == SyzOutcome::MirrorPartners);
    CHECK(good.branch == 1);
    CHECK(good.fired_condition == "1.iv");
    CHECK(good.generic_weight);
    CHECK(good.dims.moduli_sl == 6);
    CHECK(good.spectral.outcome == SpectralOutcome::IntegralSmooth);
    CHECK(good.spectral.traceless);
    REQUIRE(good.spectral_signature.has_value());
    CHECK(good.spectral_signature->genus() == 3);
    CHECK(good.spectral_signature->point_count() == 4);
    REQUIRE(good.fiber_torsor.has_value());
    // chi of the balanced class is 4, so the torsor sits in coarse degree 6
    CHECK(good.fiber_torsor->coarse_degree() == 6);
    CHECK(good.fiber_torsor->indices() == std::vector<long long>{0, 0, 0, 0});

    const auto singular = syz_check(make_signature(0, {4, 2, 2, 2}), 6, 1);
    CHECK(singular.outcome == SyzOutcome::SingularSpectral);
    CHECK(singular.branch == 3);
    CHECK_FALSE(singular.spectral_signature.has_value());

    const auto blocked = syz_check(make_signature(1, {5}), 2, 0);
    CHECK(blocked.outcome == SyzOutcome::IntegralityFails);
    CHECK(blocked.fired_condition == "3.ii:integrality");

    const auto uncovered = syz_check(make_signature(1, {2}), 2, 0);
    CHECK(uncovered.outcome == SyzOutcome::NotCovered);
    CHECK(uncovered.fired_condition == "none");

    CHECK_THROWS_AS(syz_check(kOrbifold, 1, 0), std::domain_error);
    CHECK_THROWS_AS(syz_check(make_signature(0, {2, 3, 6}), 2, 0), std::domain_error);
}

TEST_CASE("verdict names render stably") {
    CHECK(to_string(SyzOutcome::MirrorPartners) == "MirrorPartners");
    CHECK(to_string(SyzOutcome::SingularSpectral) == "SingularSpectral");
    CHECK(to_string(SyzOutcome::IntegralityFails) == "IntegralityFails");
    CHECK(to_string(SyzOutcome::NotCovered) == "NotCovered");
}
