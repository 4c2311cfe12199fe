#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "orbitchin/curve.hpp"

namespace orbitchin {

/// One cell of the pushforward coefficient table at power j and stacky
/// point k: h = ceil(j / r_k), q = h r_k - j (so 0 <= q < r_k), and
/// htilde = j - h, the contribution of p_k to deg pi_*(K^j).
struct CoeffEntry {
    long long h;
    long long htilde;
    long long q;

    friend bool operator==(const CoeffEntry&, const CoeffEntry&) = default;
};

/// The coefficient table of a signature up to a maximum power: row j
/// (1-based) holds one CoeffEntry per stacky point.
class CoeffTable {
public:
    CoeffTable(CurveSignature curve, long long max_power);

    const CurveSignature& curve() const { return curve_; }
    long long max_power() const { return max_power_; }

    /// Entry at power j (1 <= j <= max_power) and point index k.
    const CoeffEntry& entry(long long j, std::size_t k) const;

    /// sum_k htilde_{jk}, the total stacky correction at power j.
    long long sum_htilde(long long j) const;

private:
    CurveSignature curve_;
    long long max_power_;
    std::vector<std::vector<CoeffEntry>> rows_;
};

CoeffTable coeff_table(const CurveSignature& sig, long long max_power);

/// Degree of the coarse pushforward of the j-th canonical power:
/// deg pi_*(K^j) = (2g - 2) j + sum_k (j - ceil(j / r_k)).
long long pushforward_K_power(const CurveSignature& sig, long long j);

/// Dimension of the space of global sections of K^j on a hyperbolic curve:
/// 1 for j = 0, g for j = 1, and for j >= 2 the Riemann-Roch value of the
/// coarse pushforward degree d (max(0, d + 1) in genus 0, d - g + 1 above,
/// where d > 2g - 2 makes the correction term vanish).
long long h0_K_power(const CurveSignature& sig, long long j);

/// Dimensions of the spaces of characteristic coefficients for rank r:
/// gl = sum_{i=1}^{r} h^0(K^i) and sl = sum_{i=2}^{r} h^0(K^i) (the trace
/// coefficient dropped).
struct BaseDims {
    long long gl;
    long long sl;

    friend bool operator==(const BaseDims&, const BaseDims&) = default;
};

BaseDims hitchin_base_dims(const CurveSignature& sig, long long r);

/// Genus of the smooth spectral curve of a generic rank-r characteristic:
/// sum_{i=1}^{r} h^0(K^i).
long long spectral_genus(const CurveSignature& sig, long long r);

/// Signature of the generic rank-r spectral curve: genus spectral_genus, and
/// one stacky point of order r_k (same label) over each p_k with r_k not
/// dividing r.  Requires the full classification verdict IntegralSmooth;
/// throws std::domain_error otherwise.
CurveSignature spectral_stacky_signature(const CurveSignature& sig, long long r);

/// The integrality condition at rank r: h^0(K^k) >= 2 for some k in the
/// coefficient range (1..r full, 2..r traceless) and h^0(K^r) != 0.
bool integrality_condition(const CurveSignature& sig, long long r, bool traceless);

/// Outcome of the spectral classification at a given rank.
enum class SpectralOutcome {
    IntegralSmooth,             ///< generic spectral curve integral and smooth
    IntegralSingular,           ///< generic spectral curve integral but singular
    IntegralityConditionFails,  ///< covered case, but the integrality condition fails
    NotCovered,                 ///< outside the scope of the classification
};

std::string to_string(SpectralOutcome outcome);

/// Classification verdict, carrying the quantities the decision was read
/// off from: the remainder vectors q at powers r and r-1, the stacky
/// correction sums, and the integrality condition.
struct SpectralVerdict {
    SpectralOutcome outcome;
    int branch;                   ///< 1, 2 or 3
    std::string fired_condition;  ///< e.g. "1.iv", "3.ii:integrality", "none"
    bool traceless;
    long long rank;
    std::vector<long long> q_r;
    std::vector<long long> q_r_minus_1;
    long long sum_htilde_r;
    long long sum_htilde_r_minus_1;
    bool integrality;
};

/// Classify the generic rank-r spectral curve over a hyperbolic signature.
///
/// Branches on the remainders q_{rk} = r_k ceil(r / r_k) - r:
///   1. every q_{rk} is 0 or 1;
///   2. otherwise, but every point with q_{rk} >= 2 has q_{(r-1)k} = 0;
///   3. the rest.
/// Within branches 1-2 the verdict is IntegralSmooth when the genus and the
/// correction sum S = sum_k htilde clear the listed thresholds (genus >= 2
/// always; genus 1 needs S >= 2; genus 0 needs S >= 2r + 1, or S >= 2r with
/// the integrality condition, in branch 1, and S >= 2r - 2 with integrality
/// in branch 2).  Branch 3 yields IntegralSingular (genus >= 2 always,
/// genus <= 1 under the integrality condition).  When only the integrality
/// condition blocked a clause the outcome is IntegralityConditionFails;
/// anything else uncovered is NotCovered.
SpectralVerdict classify_spectral(const CurveSignature& sig, long long r, bool traceless);

/// Degrees of pi_*(K^i) for i = 1..r when r <= r_k at every stacky point:
/// (2g - 2) i + (i - 1) m with m the number of stacky points.  These are the
/// degrees of the line-bundle summands of the coarse spectral pushforward.
std::vector<long long> coarse_spectral_cover_degrees(const CurveSignature& sig, long long r);

}  // namespace orbitchin
