#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbitchin/rational.hpp"

namespace orbitchin {

/// A marked point of a stacky curve: a label and the order of its cyclic
/// stabilizer group (always >= 2; order-1 points are not stacky and are
/// simply absent from the signature).
struct StackyPoint {
    std::string label;
    long long order;

    friend bool operator==(const StackyPoint&, const StackyPoint&) = default;
};

/// The signature of a stacky curve: coarse genus g plus the ordered list of
/// stacky points with stabilizer orders (r_1, ..., r_m).  Every computation
/// in the library lives over one of these.  Immutable after construction.
class CurveSignature {
public:
    /// Throws std::invalid_argument if genus < 0, any order < 2, or the
    /// labels are empty/duplicated.
    CurveSignature(long long genus, std::vector<StackyPoint> points);

    long long genus() const { return genus_; }
    const std::vector<StackyPoint>& points() const { return points_; }
    std::size_t point_count() const { return points_.size(); }

    const std::string& label(std::size_t k) const { return points_.at(k).label; }
    long long order(std::size_t k) const { return points_.at(k).order; }

    /// Index of the stacky point with this label, if any.
    std::optional<std::size_t> find(const std::string& label) const;

    /// The coarse curve: same genus, no stacky points.
    CurveSignature coarse() const { return CurveSignature(genus_, {}); }

    friend bool operator==(const CurveSignature&, const CurveSignature&) = default;

private:
    long long genus_;
    std::vector<StackyPoint> points_;
};

/// Convenience factory applying the default labeling p1..pm.
CurveSignature make_signature(long long genus, const std::vector<long long>& orders);

/// deg K = 2g - 2 + sum_k (r_k - 1)/r_k, exactly.
Rational canonical_degree(const CurveSignature& sig);

/// A stacky curve is hyperbolic iff deg K > 0.
bool is_hyperbolic(const CurveSignature& sig);

/// A fractional Weil divisor: a finitely supported map label -> rational.
/// At a stacky point of order r_k the reduced denominator of the coefficient
/// must divide r_k; at any other label the coefficient must be an integer.
/// Zero coefficients are dropped on construction (canonical support).
class QDivisor {
public:
    QDivisor(CurveSignature curve, std::map<std::string, Rational> coeffs);

    const CurveSignature& curve() const { return curve_; }
    const std::map<std::string, Rational>& coeffs() const { return coeffs_; }

    /// Coefficient at a label (zero when the label is not in the support).
    Rational coeff(const std::string& label) const;

    /// Sum of all coefficients.
    Rational degree() const;

private:
    CurveSignature curve_;
    std::map<std::string, Rational> coeffs_;
};

/// Pointwise sum.  Throws std::invalid_argument on curve mismatch.
QDivisor divisor_add(const QDivisor& a, const QDivisor& b);

/// Pointwise integer multiple.
QDivisor divisor_scale(const QDivisor& a, long long c);

/// Sum of coefficients.
Rational divisor_degree(const QDivisor& a);

/// The canonical divisor (2g-2)q + sum_k ((r_k-1)/r_k) p_k.  The non-stacky
/// label q for the coarse part is supplied by the caller (the library never
/// invents point names); it must not collide with a stacky label.
QDivisor canonical_divisor(const CurveSignature& sig, const std::string& coarse_label);

/// A connected component of the Picard group: integer coarse degree d plus
/// the fractional index vector (i_1..i_m), 0 <= i_k <= r_k - 1.  A line
/// bundle L decomposes uniquely as pi^*W tensor O(sum (i_k/r_k) p_k) with
/// deg W = d; two line bundles lie on the same component iff these data
/// agree.
class PicClass {
public:
    PicClass(CurveSignature curve, long long coarse_degree, std::vector<long long> indices);

    const CurveSignature& curve() const { return curve_; }
    long long coarse_degree() const { return coarse_degree_; }
    const std::vector<long long>& indices() const { return indices_; }

    /// d + sum_k i_k/r_k; always equals the degree of any divisor in the class.
    Rational total_degree() const;

    friend bool operator==(const PicClass&, const PicClass&) = default;

private:
    CurveSignature curve_;
    long long coarse_degree_;
    std::vector<long long> indices_;
};

/// Normal form of the line bundle O(a): at each stacky point the coefficient
/// c splits as floor(c) + i_k/r_k with 0 <= i_k < r_k; the integer parts and
/// all non-stacky coefficients accumulate into the coarse degree d.
PicClass pic_class(const QDivisor& a);

/// Coarse pushforward pi_*: floor of the coefficient at each stacky point,
/// non-stacky coefficients pass through.  The result lives on the coarse
/// curve (same genus, no stacky points), keeping the original labels.
QDivisor pushforward_divisor(const QDivisor& a);

/// A finite cover f' between (the coarse spaces of) two stacky curves, with
/// just enough data for norm-map transport: its degree and the matching of
/// stacky points.  point_map sends a target stacky label to the at most one
/// source stacky point above it; absence means the fiber is non-stacky.
/// Representability forces the source order to divide the target order.
class CoverData {
public:
    CoverData(CurveSignature source, CurveSignature target, long long degree,
              std::map<std::string, std::string> point_map);

    const CurveSignature& source() const { return source_; }
    const CurveSignature& target() const { return target_; }
    long long degree() const { return degree_; }
    const std::map<std::string, std::string>& point_map() const { return point_map_; }

    /// Source stacky label matched above a target stacky label, if any.
    std::optional<std::string> source_for_target(const std::string& target_label) const;

    /// Target stacky label below a source stacky label, if any.
    std::optional<std::string> target_for_source(const std::string& source_label) const;

private:
    CurveSignature source_;
    CurveSignature target_;
    long long degree_;
    std::map<std::string, std::string> point_map_;
};

/// Norm-map pushforward of a divisor along the cover: the coefficient value
/// at a source point is preserved at its image ((1/|G_x|) x maps to
/// (|G_f'(x)|/|G_x|) (1/|G_f'(x)|) f'(x)); only the denominator bound
/// relaxes to the target order.  Non-stacky source labels pass through under
/// their own names.  A divisor supported on a source stacky point that the
/// cover does not match is rejected (std::domain_error): representability
/// makes such a point geometrically impossible.
QDivisor norm_pushforward(const CoverData& cover, const QDivisor& a);

/// Norm map on Picard components: Pic^{d,(i_1,...)} -> Pic^{d,(i~_1,...)}.
/// The coarse degree is preserved; a matched index scales by r~_k/r_k (an
/// integer since r_k | r~_k); unmatched target points receive index 0.
PicClass norm_component(const CoverData& cover, const PicClass& p);

}  // namespace orbitchin
