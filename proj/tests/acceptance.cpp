// Acceptance gate: one check block per release criterion, each reporting a
// single [PASS]/[FAIL] line.  All arithmetic is exact; any mismatch aborts
// with nonzero status.  Runs in well under a second.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "orbitchin/bundle.hpp"
#include "orbitchin/curve.hpp"
#include "orbitchin/hitchin.hpp"
#include "orbitchin/local_model.hpp"
#include "orbitchin/rational.hpp"
#include "orbitchin/spectral.hpp"

namespace {

using namespace orbitchin;

int g_criterion = 0;
const char* g_label = "";

// Always-on requirement: never compiled out in Release.
#define REQUIRE(cond, msg)                                                     \
    do {                                                                       \
        if (!(cond)) {                                                         \
            std::cerr << "[FAIL] criterion " << g_criterion << " (" << g_label \
                      << ") at " << __FILE__ << ":" << __LINE__ << ": " << msg \
                      << "\n";                                                 \
            std::exit(1);                                                      \
        }                                                                      \
    } while (0)

void begin(int criterion, const char* label) {
    g_criterion = criterion;
    g_label = label;
}

void pass() {
    std::cout << "[PASS] criterion " << g_criterion << ": " << g_label << "\n";
}

// ---------------------------------------------------------------------------
// randomized-input helpers (fixed seed, modulo draws for stable streams)

long long draw(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

CurveSignature random_signature(std::mt19937_64& rng, long long max_genus,
                                long long max_points, long long max_order,
                                long long min_points = 0) {
    const long long g = draw(rng, 0, max_genus);
    const long long m = draw(rng, min_points, max_points);
    std::vector<long long> orders;
    for (long long i = 0; i < m; ++i) {
        orders.push_back(draw(rng, 2, max_order));
    }
    return make_signature(g, orders);
}

CurveSignature random_hyperbolic(std::mt19937_64& rng) {
    for (;;) {
        const auto sig = random_signature(rng, 4, 6, 12);
        if (is_hyperbolic(sig)) {
            return sig;
        }
    }
}

// a valid random class: multiplicities distributed freely, degree adjusted
// so the pushforward degree is a whole number
BundleClass random_class(std::mt19937_64& rng, const CurveSignature& sig) {
    const long long rank = draw(rng, 1, 8);
    std::vector<std::vector<long long>> mult;
    Rational ages;
    for (std::size_t k = 0; k < sig.point_count(); ++k) {
        const long long r = sig.order(k);
        std::vector<long long> m(static_cast<std::size_t>(r), 0);
        for (long long unit = 0; unit < rank; ++unit) {
            m[static_cast<std::size_t>(draw(rng, 0, r - 1))] += 1;
        }
        for (long long j = 0; j < r; ++j) {
            ages += Rational(j * m[static_cast<std::size_t>(j)], r);
        }
        mult.push_back(std::move(m));
    }
    const Rational degree = ages + Rational(draw(rng, -10, 10));
    return BundleClass(sig, rank, degree, std::move(mult));
}

// every multiset of orders (2..max_order) with at most max_points entries
std::vector<std::vector<long long>> order_multisets(long long max_points,
                                                    long long max_order) {
    std::vector<std::vector<long long>> out = {{}};
    std::vector<std::vector<long long>> frontier = {{}};
    for (long long size = 1; size <= max_points; ++size) {
        std::vector<std::vector<long long>> next;
        for (const auto& base : frontier) {
            const long long lo = base.empty() ? 2 : base.back();
            for (long long r = lo; r <= max_order; ++r) {
                auto ext = base;
                ext.push_back(r);
                out.push_back(ext);
                next.push_back(std::move(ext));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

// ---------------------------------------------------------------------------

void criterion_1_elliptic_golden() {
    begin(1, "elliptic curve with one order-5 point");
    const auto sig = make_signature(1, {5});
    REQUIRE(canonical_degree(sig) == Rational(4, 5), "canonical degree 4/5");
    REQUIRE(pushforward_K_power(sig, 1) == 0, "deg of pushed K");
    REQUIRE(pushforward_K_power(sig, 2) == 1, "deg of pushed K^2");
    REQUIRE(h0_K_power(sig, 1) == 1, "h0(K)");
    REQUIRE(h0_K_power(sig, 2) == 1, "h0(K^2)");
    const auto v = classify_spectral(sig, 2, false);
    REQUIRE(v.outcome == SpectralOutcome::IntegralityConditionFails,
            "rank-2 verdict IntegralityConditionFails");
    pass();
}

void criterion_2_singular_golden() {
    begin(2, "projective line with orders (4,2,2,2)");
    const auto sig = make_signature(0, {4, 2, 2, 2});
    REQUIRE(canonical_degree(sig) == Rational(1, 4), "canonical degree 1/4");
    const std::vector<long long> expected = {-2, 0, -1, 1, -1, 1};
    for (long long j = 1; j <= 6; ++j) {
        REQUIRE(pushforward_K_power(sig, j) == expected[static_cast<std::size_t>(j - 1)],
                "pushforward degree at power " << j);
    }
    const auto v = classify_spectral(sig, 6, false);
    REQUIRE(v.outcome == SpectralOutcome::IntegralSingular, "rank-6 verdict IntegralSingular");
    REQUIRE(v.branch == 3, "decided in branch 3");
    pass();
}

void criterion_3_mirror_golden() {
    begin(3, "projective line with orders (3,2,2,2,2)");
    const auto sig = make_signature(0, {3, 2, 2, 2, 2});
    REQUIRE(canonical_degree(sig) == Rational(2, 3), "canonical degree 2/3");
    REQUIRE(pushforward_K_power(sig, 1) == -2, "deg of pushed K");
    REQUIRE(pushforward_K_power(sig, 2) == 1, "deg of pushed K^2");
    REQUIRE(pushforward_K_power(sig, 3) == 0, "deg of pushed K^3");
    REQUIRE(h0_K_power(sig, 1) == 0, "h0(K)");
    REQUIRE(h0_K_power(sig, 2) == 2, "h0(K^2)");
    REQUIRE(h0_K_power(sig, 3) == 1, "h0(K^3)");
    REQUIRE(spectral_genus(sig, 3) == 3, "spectral genus");

    const auto spectral_sig = spectral_stacky_signature(sig, 3);
    REQUIRE(spectral_sig.genus() == 3, "spectral signature genus");
    REQUIRE(spectral_sig.point_count() == 4, "spectral signature point count");
    for (std::size_t k = 0; k < spectral_sig.point_count(); ++k) {
        REQUIRE(spectral_sig.order(k) == 2, "spectral signature orders");
    }

    const auto rep = dimension_report(sig, 3, 1);
    REQUIRE(rep.moduli_gl == 6, "moduli dimension (general linear)");
    REQUIRE(rep.moduli_sl == 6, "moduli dimension (special linear)");
    REQUIRE(rep.base_sl == 3, "traceless base dimension");
    REQUIRE(rep.fiber_sl == 3, "Prym dimension");

    const auto v = syz_check(sig, 3, 1);
    REQUIRE(v.outcome == SyzOutcome::MirrorPartners, "mirror verdict");

    const BundleClass table(sig, 3, Rational(9, 2),
                            {{1, 1, 1}, {1, 2}, {2, 1}, {2, 1}, {2, 1}});
    REQUIRE(moduli_dim_gl(table) == 6, "moduli dimension from the multiplicity table");
    REQUIRE(moduli_dim_sl(table) == 6, "traceless moduli dimension from the table");
    REQUIRE(generic_weight_exists(table), "generic weight for the multiplicity table");
    pass();
}

void criterion_4_integrable_identity() {
    begin(4, "dimension identity on randomized signatures");
    std::mt19937_64 rng(0x0b5e55ed);
    for (int trial = 0; trial < 500; ++trial) {
        const auto sig = random_hyperbolic(rng);
        const long long r = draw(rng, 2, 10);
        const long long d = draw(rng, -6, 6);
        REQUIRE(integrable_check(sig, r, d),
                "base+fiber=moduli for genus " << sig.genus() << " at rank " << r);

        // per-point reduction, right side summed with the floor identity
        const auto e = balanced_class(sig, r, d);
        for (std::size_t k = 0; k < sig.point_count(); ++k) {
            const long long rk = sig.order(k);
            long long squares = 0;
            for (long long m : e.mult_at(k)) {
                squares += m * m;
            }
            long long htilde_sum = 0;
            for (long long i = 2; i <= r; ++i) {
                htilde_sum += (i * (rk - 1)) / rk;
            }
            REQUIRE(r * r - squares == 2 * htilde_sum,
                    "per-point reduction at order " << rk << ", rank " << r);
        }
    }
    pass();
}

void criterion_5_pushforward_two_routes() {
    begin(5, "pushforward degree: ceiling route against divisor route");
    for (const auto& orders : order_multisets(5, 10)) {
        for (long long g = 0; g <= 3; ++g) {
            const auto sig = make_signature(g, orders);
            const auto K = canonical_divisor(sig, "q");
            for (long long j = 0; j <= 20; ++j) {
                const auto down = pushforward_divisor(divisor_scale(K, j));
                const Rational floor_route = divisor_degree(down);
                REQUIRE(floor_route.is_integer(), "coarse degree is integral");
                REQUIRE(floor_route.numerator() == pushforward_K_power(sig, j),
                        "routes disagree at genus " << g << ", power " << j);
            }
        }
    }
    pass();
}

void criterion_6_spectral_genus_two_routes() {
    begin(6, "spectral genus: section count against Euler characteristic");
    for (const auto& orders : order_multisets(5, 10)) {
        for (long long g = 0; g <= 3; ++g) {
            const auto sig = make_signature(g, orders);
            if (!is_hyperbolic(sig)) {
                continue;
            }
            // chi(O of the rank-r spectral curve) = sum chi(K^{-i}), i = 0..r-1
            const auto K = canonical_divisor(sig, "q");
            long long chi_total = 0;
            for (long long r = 1; r <= 10; ++r) {
                chi_total += euler_char(line_class(pic_class(divisor_scale(K, 1 - r))));
                REQUIRE(spectral_genus(sig, r) == 1 - chi_total,
                        "routes disagree at genus " << g << ", rank " << r);
            }
        }
    }
    pass();
}

void criterion_7_class_integrality() {
    begin(7, "Euler characteristic and pushforward integrality");
    std::mt19937_64 rng(0xc1a55e5);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto sig = random_signature(rng, 4, 5, 9);
        const auto e = random_class(rng, sig);
        const auto push = pushforward_class(e);
        REQUIRE(Rational(push.degree) == e.degree() - total_age(e),
                "pushforward degree is the degree minus the total age");
        REQUIRE(euler_char(e) == e.rank() * (1 - sig.genus()) + push.degree,
                "chi = rank * chi(O) + coarse degree");
    }

    for (int trial = 0; trial < 100; ++trial) {
        const auto sig = random_signature(rng, 4, 5, 9, /*min_points=*/1);
        const auto e = random_class(rng, sig);
        auto mult = e.mult();
        bool threw = false;
        try {
            switch (trial % 4) {
                case 0: {  // fractional pushforward degree
                    BundleClass bad(sig, e.rank(), e.degree() + Rational(1, 2), mult);
                    break;
                }
                case 1: {  // multiplicities no longer sum to the rank
                    mult[0][0] += 1;
                    BundleClass bad(sig, e.rank(), e.degree(), mult);
                    break;
                }
                case 2: {  // negative multiplicity with the sum preserved
                    mult[0][0] = -1;
                    mult[0][1] += e.mult_at(0)[0] + 1;
                    BundleClass bad(sig, e.rank(), e.degree(), mult);
                    break;
                }
                default: {  // one multiplicity vector too few
                    mult.pop_back();
                    BundleClass bad(sig, e.rank(), e.degree(), mult);
                    break;
                }
            }
        } catch (const std::invalid_argument&) {
            threw = true;
        }
        REQUIRE(threw, "constructor accepted invalid data (variant " << trial % 4 << ")");
    }
    pass();
}

void criterion_8_slope_affine_relation() {
    begin(8, "affine relation between modified and parabolic slopes");
    std::mt19937_64 rng(0x51095);
    for (int curve = 0; curve < 20; ++curve) {
        const auto sig = random_signature(rng, 3, 5, 9);
        const long long ample = draw(rng, 1, 3);
        const auto pol = canonical_polarization(sig, ample);
        bool have_gap = false;
        Rational gap;
        for (int trial = 0; trial < 100; ++trial) {
            const auto e = random_class(rng, sig);
            const Rational g = modified_slope(e, pol) -
                               parabolic_data(e, pol).par_slope / Rational(ample);
            if (!have_gap) {
                gap = g;
                have_gap = true;
            } else {
                REQUIRE(g == gap, "slope gap drifted on curve " << curve);
            }
        }
    }
    pass();
}

void criterion_9_beta_identities() {
    begin(9, "beta identities");
    std::mt19937_64 rng(0xbe7a);
    for (int trial = 0; trial < 500; ++trial) {
        const auto sig = random_signature(rng, 3, 5, 9);
        const auto pol = canonical_polarization(sig, draw(rng, 1, 3));
        const auto a = random_class(rng, sig);
        const auto b = random_class(rng, sig);
        const auto c = random_class(rng, sig);
        const auto total = direct_sum(direct_sum(a, b), c);

        REQUIRE(beta(total, total, pol).is_zero(), "beta of a class against itself");
        REQUIRE(beta(total, direct_sum(a, b), pol) ==
                    beta(total, a, pol) + beta(total, b, pol),
                "beta additive over direct sums");
        const bool nonpositive = beta(total, a, pol) <= Rational(0);
        const bool slope_le = modified_slope(a, pol) <= modified_slope(total, pol);
        REQUIRE(nonpositive == slope_le, "sign of beta against the slope comparison");
    }
    pass();
}

void criterion_10_local_model_machine_check() {
    begin(10, "local classification over all types up to rank 12");
    long long checked = 0;
    for (long long order = 2; order <= 6; ++order) {
        // every ordered tuple of positive multiplicities, total <= 12,
        // at most `order` entries
        std::vector<std::vector<long long>> stack = {{}};
        while (!stack.empty()) {
            const auto cur = stack.back();
            stack.pop_back();
            long long total = 0;
            for (long long m : cur) {
                total += m;
            }
            if (!cur.empty()) {
                const LocalType t(order, cur);
                LocalVerdict v{LocalCase::A, {}, {}};
                try {
                    v = classify_local(t);
                } catch (const FalsificationError& e) {
                    REQUIRE(false, e.what());
                }
                ++checked;

                // transpose oracle: build the Young diagram, transpose it
                // literally, and compare with the reported conjugate
                auto sorted = cur;
                std::sort(sorted.begin(), sorted.end(), std::greater<>());
                const auto width = static_cast<std::size_t>(sorted[0]);
                std::vector<std::vector<bool>> grid(sorted.size(),
                                                    std::vector<bool>(width, false));
                for (std::size_t row = 0; row < sorted.size(); ++row) {
                    for (std::size_t col = 0;
                         col < static_cast<std::size_t>(sorted[row]); ++col) {
                        grid[row][col] = true;
                    }
                }
                std::vector<long long> transposed;
                for (std::size_t col = 0; col < width; ++col) {
                    long long height = 0;
                    for (std::size_t row = 0; row < grid.size(); ++row) {
                        if (grid[row][col]) {
                            ++height;
                        }
                    }
                    transposed.push_back(height);
                }
                std::reverse(transposed.begin(), transposed.end());
                REQUIRE(v.conjugate == transposed,
                        "conjugate disagrees with the transposed diagram");
            }
            if (static_cast<long long>(cur.size()) < order) {
                for (long long next = 1; total + next <= 12; ++next) {
                    auto ext = cur;
                    ext.push_back(next);
                    stack.push_back(std::move(ext));
                }
            }
        }
    }
    REQUIRE(checked > 1000, "enumeration visited too few types");
    pass();
}

}  // namespace

int main() {
    criterion_1_elliptic_golden();
    criterion_2_singular_golden();
    criterion_3_mirror_golden();
    criterion_4_integrable_identity();
    criterion_5_pushforward_two_routes();
    criterion_6_spectral_genus_two_routes();
    criterion_7_class_integrality();
    criterion_8_slope_affine_relation();
    criterion_9_beta_identities();
    criterion_10_local_model_machine_check();
    std::cout << "acceptance: 10/10 criteria passed\n";
    return 0;
}
