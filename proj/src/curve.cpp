#include "orbitchin/curve.hpp"

#include <set>
#include <stdexcept>
#include <utility>

namespace orbitchin {

CurveSignature::CurveSignature(long long genus, std::vector<StackyPoint> points)
    : genus_(genus), points_(std::move(points)) {
    if (genus_ < 0) throw std::invalid_argument("curve signature: negative genus");
    std::set<std::string> seen;
    for (const auto& p : points_) {
        if (p.label.empty())
            throw std::invalid_argument("curve signature: empty point label");
        if (p.order < 2)
            throw std::invalid_argument("curve signature: stacky order must be >= 2 at " +
                                        p.label);
        if (!seen.insert(p.label).second)
            throw std::invalid_argument("curve signature: duplicate label " + p.label);
    }
}

std::optional<std::size_t> CurveSignature::find(const std::string& label) const {
    for (std::size_t k = 0; k < points_.size(); ++k)
        if (points_[k].label == label) return k;
    return std::nullopt;
}

CurveSignature make_signature(long long genus, const std::vector<long long>& orders) {
    std::vector<StackyPoint> pts;
    pts.reserve(orders.size());
    for (std::size_t k = 0; k < orders.size(); ++k)
        pts.push_back({"p" + std::to_string(k + 1), orders[k]});
    return CurveSignature(genus, std::move(pts));
}

Rational canonical_degree(const CurveSignature& sig) {
    Rational d(2 * sig.genus() - 2);
    for (const auto& p : sig.points()) d += Rational(p.order - 1, p.order);
    return d;
}

bool is_hyperbolic(const CurveSignature& sig) {
    return canonical_degree(sig).sign() > 0;
}

QDivisor::QDivisor(CurveSignature curve, std::map<std::string, Rational> coeffs)
    : curve_(std::move(curve)), coeffs_(std::move(coeffs)) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second.is_zero()) {
            it = coeffs_.erase(it);
            continue;
        }
        if (auto k = curve_.find(it->first)) {
            if (curve_.order(*k) % it->second.denominator() != 0)
                throw std::invalid_argument(
                    "divisor: denominator of coefficient at " + it->first +
                    " does not divide the stacky order");
        } else if (!it->second.is_integer()) {
            throw std::invalid_argument("divisor: fractional coefficient at non-stacky label " +
                                        it->first);
        }
        ++it;
    }
}

Rational QDivisor::coeff(const std::string& label) const {
    auto it = coeffs_.find(label);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational QDivisor::degree() const {
    Rational d(0);
    for (const auto& [label, c] : coeffs_) d += c;
    return d;
}

QDivisor divisor_add(const QDivisor& a, const QDivisor& b) {
    if (!(a.curve() == b.curve()))
        throw std::invalid_argument("divisor_add: divisors live on different curves");
    std::map<std::string, Rational> coeffs = a.coeffs();
    for (const auto& [label, c] : b.coeffs()) {
        auto [it, inserted] = coeffs.emplace(label, c);
        if (!inserted) it->second += c;
    }
    return QDivisor(a.curve(), std::move(coeffs));
}

QDivisor divisor_scale(const QDivisor& a, long long c) {
    std::map<std::string, Rational> coeffs;
    for (const auto& [label, v] : a.coeffs()) coeffs.emplace(label, v * Rational(c));
    return QDivisor(a.curve(), std::move(coeffs));
}

Rational divisor_degree(const QDivisor& a) { return a.degree(); }

QDivisor canonical_divisor(const CurveSignature& sig, const std::string& coarse_label) {
    if (sig.find(coarse_label))
        throw std::invalid_argument("canonical_divisor: coarse label " + coarse_label +
                                    " collides with a stacky point");
    std::map<std::string, Rational> coeffs;
    coeffs.emplace(coarse_label, Rational(2 * sig.genus() - 2));
    for (const auto& p : sig.points())
        coeffs.emplace(p.label, Rational(p.order - 1, p.order));
    return QDivisor(sig, std::move(coeffs));
}

PicClass::PicClass(CurveSignature curve, long long coarse_degree,
                   std::vector<long long> indices)
    : curve_(std::move(curve)),
      coarse_degree_(coarse_degree),
      indices_(std::move(indices)) {
    if (indices_.size() != curve_.point_count())
        throw std::invalid_argument("pic class: one index per stacky point required");
    for (std::size_t k = 0; k < indices_.size(); ++k)
        if (indices_[k] < 0 || indices_[k] >= curve_.order(k))
            throw std::invalid_argument("pic class: index out of range [0, r_k) at " +
                                        curve_.label(k));
}

Rational PicClass::total_degree() const {
    Rational d(coarse_degree_);
    for (std::size_t k = 0; k < indices_.size(); ++k)
        d += Rational(indices_[k], curve_.order(k));
    return d;
}

PicClass pic_class(const QDivisor& a) {
    const CurveSignature& sig = a.curve();
    long long d = 0;
    std::vector<long long> indices(sig.point_count(), 0);
    for (const auto& [label, c] : a.coeffs()) {
        if (auto k = sig.find(label)) {
            d += c.floor();
            Rational f = c.frac();  // i_k / r_k with denominator dividing r_k
            indices[*k] = f.numerator() * (sig.order(*k) / f.denominator());
        } else {
            d += c.numerator();  // integral by the divisor invariant
        }
    }
    return PicClass(sig, d, std::move(indices));
}

QDivisor pushforward_divisor(const QDivisor& a) {
    std::map<std::string, Rational> coeffs;
    for (const auto& [label, c] : a.coeffs())
        coeffs.emplace(label, a.curve().find(label) ? Rational(c.floor()) : c);
    return QDivisor(a.curve().coarse(), std::move(coeffs));
}

CoverData::CoverData(CurveSignature source, CurveSignature target, long long degree,
                     std::map<std::string, std::string> point_map)
    : source_(std::move(source)),
      target_(std::move(target)),
      degree_(degree),
      point_map_(std::move(point_map)) {
    if (degree_ < 1) throw std::invalid_argument("cover: degree must be >= 1");
    std::set<std::string> used_sources;
    for (const auto& [t, s] : point_map_) {
        auto kt = target_.find(t);
        if (!kt)
            throw std::invalid_argument("cover: " + t + " is not a stacky point of the target");
        auto ks = source_.find(s);
        if (!ks)
            throw std::invalid_argument("cover: " + s + " is not a stacky point of the source");
        if (!used_sources.insert(s).second)
            throw std::invalid_argument("cover: source point " + s +
                                        " matched to two target points");
        if (target_.order(*kt) % source_.order(*ks) != 0)
            throw std::invalid_argument("cover: order of " + s +
                                        " does not divide the order of " + t);
    }
}

std::optional<std::string> CoverData::source_for_target(const std::string& target_label) const {
    auto it = point_map_.find(target_label);
    if (it == point_map_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::string> CoverData::target_for_source(const std::string& source_label) const {
    for (const auto& [t, s] : point_map_)
        if (s == source_label) return t;
    return std::nullopt;
}

QDivisor norm_pushforward(const CoverData& cover, const QDivisor& a) {
    if (!(a.curve() == cover.source()))
        throw std::invalid_argument("norm_pushforward: divisor does not live on the cover source");
    std::map<std::string, Rational> coeffs;
    for (const auto& [label, c] : a.coeffs()) {
        std::string image = label;
        if (a.curve().find(label)) {
            auto t = cover.target_for_source(label);
            if (!t)
                throw std::domain_error("norm_pushforward: stacky point " + label +
                                        " is not matched by the cover");
            image = *t;
        }
        auto [it, inserted] = coeffs.emplace(image, c);
        if (!inserted) it->second += c;
    }
    return QDivisor(cover.target(), std::move(coeffs));
}

PicClass norm_component(const CoverData& cover, const PicClass& p) {
    if (!(p.curve() == cover.source()))
        throw std::invalid_argument("norm_component: class does not live on the cover source");
    const CurveSignature& tgt = cover.target();
    std::vector<long long> indices(tgt.point_count(), 0);
    for (std::size_t kt = 0; kt < tgt.point_count(); ++kt) {
        auto s = cover.source_for_target(tgt.label(kt));
        if (!s) continue;
        std::size_t ks = *cover.source().find(*s);
        indices[kt] = p.indices()[ks] * (tgt.order(kt) / cover.source().order(ks));
    }
    return PicClass(tgt, p.coarse_degree(), std::move(indices));
}

}  // namespace orbitchin
