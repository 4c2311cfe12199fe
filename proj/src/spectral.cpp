#include "orbitchin/spectral.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace orbitchin {

namespace {

void require_hyperbolic(const CurveSignature& sig) {
    if (!is_hyperbolic(sig)) {
        throw std::domain_error("curve is not hyperbolic: canonical degree is not positive");
    }
}

}  // namespace

CoeffTable::CoeffTable(CurveSignature curve, long long max_power)
    : curve_(std::move(curve)), max_power_(max_power) {
    if (max_power_ < 1) {
        throw std::invalid_argument("coefficient table: max power must be at least 1");
    }
    rows_.reserve(static_cast<std::size_t>(max_power_));
    for (long long j = 1; j <= max_power_; ++j) {
        std::vector<CoeffEntry> row;
        row.reserve(curve_.point_count());
        for (std::size_t k = 0; k < curve_.point_count(); ++k) {
            const long long r = curve_.order(k);
            const long long h = (j + r - 1) / r;  // ceil(j / r)
            row.push_back(CoeffEntry{h, j - h, h * r - j});
        }
        rows_.push_back(std::move(row));
    }
}

const CoeffEntry& CoeffTable::entry(long long j, std::size_t k) const {
    if (j < 1 || j > max_power_) {
        throw std::invalid_argument("coefficient table: power out of range");
    }
    return rows_.at(static_cast<std::size_t>(j - 1)).at(k);
}

long long CoeffTable::sum_htilde(long long j) const {
    if (j < 1 || j > max_power_) {
        throw std::invalid_argument("coefficient table: power out of range");
    }
    long long sum = 0;
    for (const CoeffEntry& e : rows_[static_cast<std::size_t>(j - 1)]) {
        sum += e.htilde;
    }
    return sum;
}

CoeffTable coeff_table(const CurveSignature& sig, long long max_power) {
    return CoeffTable(sig, max_power);
}

long long pushforward_K_power(const CurveSignature& sig, long long j) {
    if (j < 0) {
        throw std::invalid_argument("pushforward degree: power must be nonnegative");
    }
    long long deg = (2 * sig.genus() - 2) * j;
    for (std::size_t k = 0; k < sig.point_count(); ++k) {
        const long long r = sig.order(k);
        deg += j - (j + r - 1) / r;
    }
    return deg;
}

long long h0_K_power(const CurveSignature& sig, long long j) {
    if (j < 0) {
        throw std::invalid_argument("h0: power must be nonnegative");
    }
    require_hyperbolic(sig);
    if (j == 0) {
        return 1;
    }
    if (j == 1) {
        return sig.genus();
    }
    const long long g = sig.genus();
    const long long d = pushforward_K_power(sig, j);
    if (g == 0) {
        return std::max(0LL, d + 1);
    }
    // For j >= 2 on a hyperbolic curve the pushforward degree always clears
    // 2g - 2, so the correction term of Riemann-Roch vanishes.
    assert(d > 2 * g - 2);
    return d - g + 1;
}

BaseDims hitchin_base_dims(const CurveSignature& sig, long long r) {
    require_hyperbolic(sig);
    if (r < 1) {
        throw std::domain_error("base dimensions: rank must be at least 1");
    }
    BaseDims dims{0, 0};
    for (long long i = 1; i <= r; ++i) {
        const long long h = h0_K_power(sig, i);
        dims.gl += h;
        if (i >= 2) {
            dims.sl += h;
        }
    }
    return dims;
}

long long spectral_genus(const CurveSignature& sig, long long r) {
    require_hyperbolic(sig);
    if (r < 1) {
        throw std::domain_error("spectral genus: rank must be at least 1");
    }
    long long genus = 0;
    for (long long i = 1; i <= r; ++i) {
        genus += h0_K_power(sig, i);
    }
    return genus;
}

CurveSignature spectral_stacky_signature(const CurveSignature& sig, long long r) {
    const SpectralVerdict verdict = classify_spectral(sig, r, /*traceless=*/false);
    if (verdict.outcome != SpectralOutcome::IntegralSmooth) {
        throw std::domain_error(
            "spectral stacky signature: generic spectral curve is not integral and smooth "
            "(verdict " + to_string(verdict.outcome) + ")");
    }
    std::vector<StackyPoint> points;
    for (std::size_t k = 0; k < sig.point_count(); ++k) {
        if (r % sig.order(k) != 0) {
            points.push_back(StackyPoint{sig.label(k), sig.order(k)});
        }
    }
    return CurveSignature(spectral_genus(sig, r), std::move(points));
}

bool integrality_condition(const CurveSignature& sig, long long r, bool traceless) {
    require_hyperbolic(sig);
    if (r < 1) {
        throw std::domain_error("integrality condition: rank must be at least 1");
    }
    if (h0_K_power(sig, r) == 0) {
        return false;
    }
    for (long long k = traceless ? 2 : 1; k <= r; ++k) {
        if (h0_K_power(sig, k) >= 2) {
            return true;
        }
    }
    return false;
}

std::string to_string(SpectralOutcome outcome) {
    switch (outcome) {
        case SpectralOutcome::IntegralSmooth:
            return "IntegralSmooth";
        case SpectralOutcome::IntegralSingular:
            return "IntegralSingular";
        case SpectralOutcome::IntegralityConditionFails:
            return "IntegralityConditionFails";
        case SpectralOutcome::NotCovered:
            return "NotCovered";
    }
    return "?";
}

SpectralVerdict classify_spectral(const CurveSignature& sig, long long r, bool traceless) {
    require_hyperbolic(sig);
    if (r < 2) {
        throw std::domain_error("classification: rank must be at least 2");
    }

    const CoeffTable table(sig, r);
    SpectralVerdict v;
    v.traceless = traceless;
    v.rank = r;
    for (std::size_t k = 0; k < sig.point_count(); ++k) {
        v.q_r.push_back(table.entry(r, k).q);
        v.q_r_minus_1.push_back(table.entry(r - 1, k).q);
    }
    v.sum_htilde_r = table.sum_htilde(r);
    v.sum_htilde_r_minus_1 = table.sum_htilde(r - 1);
    v.integrality = integrality_condition(sig, r, traceless);

    const bool small_remainders =
        std::all_of(v.q_r.begin(), v.q_r.end(), [](long long q) { return q <= 1; });
    bool tame = true;  // every point with q_r >= 2 has q_{r-1} = 0
    for (std::size_t k = 0; k < v.q_r.size(); ++k) {
        if (v.q_r[k] >= 2 && v.q_r_minus_1[k] != 0) {
            tame = false;
        }
    }
    v.branch = small_remainders ? 1 : (tame ? 2 : 3);

    const long long g = sig.genus();
    auto smooth = [&](const char* id) {
        v.outcome = SpectralOutcome::IntegralSmooth;
        v.fired_condition = id;
    };
    auto singular = [&](const char* id) {
        v.outcome = SpectralOutcome::IntegralSingular;
        v.fired_condition = id;
    };
    auto integrality_blocked = [&](const char* id) {
        v.outcome = SpectralOutcome::IntegralityConditionFails;
        v.fired_condition = std::string(id) + ":integrality";
    };
    auto not_covered = [&] {
        v.outcome = SpectralOutcome::NotCovered;
        v.fired_condition = "none";
    };

    if (v.branch == 1) {
        if (g >= 2) {
            smooth("1.i");
        } else if (g == 1) {
            v.sum_htilde_r >= 2 ? smooth("1.ii") : not_covered();
        } else if (v.sum_htilde_r >= 2 * r + 1) {
            smooth("1.iii");
        } else if (v.sum_htilde_r >= 2 * r) {
            v.integrality ? smooth("1.iv") : integrality_blocked("1.iv");
        } else {
            not_covered();
        }
    } else if (v.branch == 2) {
        if (g >= 2) {
            smooth("2.i");
        } else if (g == 1) {
            v.sum_htilde_r_minus_1 >= 2 ? smooth("2.ii") : not_covered();
        } else if (v.sum_htilde_r_minus_1 >= 2 * r - 2) {
            v.integrality ? smooth("2.iii") : integrality_blocked("2.iii");
        } else {
            not_covered();
        }
    } else {
        // Branch 3 has no uncovered corner: genus >= 2 is unconditional and
        // below that only the integrality condition separates the outcomes.
        if (g >= 2) {
            singular("3.i");
        } else if (g == 1) {
            v.integrality ? singular("3.ii") : integrality_blocked("3.ii");
        } else {
            v.integrality ? singular("3.iv") : integrality_blocked("3.iv");
        }
    }
    return v;
}

std::vector<long long> coarse_spectral_cover_degrees(const CurveSignature& sig, long long r) {
    if (r < 2) {
        throw std::domain_error("coarse spectral cover: rank must be at least 2");
    }
    for (std::size_t k = 0; k < sig.point_count(); ++k) {
        if (r > sig.order(k)) {
            throw std::domain_error("coarse spectral cover: rank exceeds the order at " +
                                    sig.label(k));
        }
    }
    const long long g = sig.genus();
    const long long m = static_cast<long long>(sig.point_count());
    std::vector<long long> degrees;
    degrees.reserve(static_cast<std::size_t>(r));
    for (long long i = 1; i <= r; ++i) {
        degrees.push_back((2 * g - 2) * i + (i - 1) * m);
    }
    return degrees;
}

}  // namespace orbitchin
