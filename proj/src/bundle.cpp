#include "orbitchin/bundle.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace orbitchin {

namespace {

void require_same_curve(const CurveSignature& a, const CurveSignature& b, const char* what) {
    if (!(a == b)) {
        throw std::invalid_argument(std::string(what) + ": classes live on different curves");
    }
}

}  // namespace

BundleClass::BundleClass(CurveSignature curve, long long rank, Rational degree,
                         std::vector<std::vector<long long>> mult)
    : curve_(std::move(curve)), rank_(rank), degree_(degree), mult_(std::move(mult)) {
    if (rank_ < 1) {
        throw std::invalid_argument("bundle class: rank must be at least 1");
    }
    if (mult_.size() != curve_.point_count()) {
        throw std::invalid_argument(
            "bundle class: need one multiplicity vector per stacky point");
    }
    for (std::size_t k = 0; k < mult_.size(); ++k) {
        const auto r = curve_.order(k);
        if (mult_[k].size() != static_cast<std::size_t>(r)) {
            throw std::invalid_argument("bundle class: multiplicity vector at " +
                                        curve_.label(k) + " must have length " +
                                        std::to_string(r));
        }
        long long total = 0;
        for (long long m : mult_[k]) {
            if (m < 0) {
                throw std::invalid_argument("bundle class: multiplicities must be nonnegative");
            }
            total += m;
        }
        if (total != rank_) {
            throw std::invalid_argument("bundle class: multiplicities at " + curve_.label(k) +
                                        " sum to " + std::to_string(total) + ", expected rank " +
                                        std::to_string(rank_));
        }
    }
    if (!(degree_ - total_age(*this)).is_integer()) {
        throw std::invalid_argument(
            "bundle class: degree minus total age must be an integer");
    }
}

Rational age(const BundleClass& e, std::size_t k) {
    const auto r = e.curve().order(k);
    const auto& m = e.mult_at(k);
    Rational sum;
    for (long long j = 0; j < r; ++j) {
        sum += Rational(j * m[static_cast<std::size_t>(j)], r);
    }
    return sum;
}

Rational total_age(const BundleClass& e) {
    Rational sum;
    for (std::size_t k = 0; k < e.curve().point_count(); ++k) {
        sum += age(e, k);
    }
    return sum;
}

long long euler_char(const BundleClass& e) {
    const Rational chi =
        Rational(e.rank() * (1 - e.curve().genus())) + e.degree() - total_age(e);
    // Integrality is part of the class invariant, so chi is a whole number.
    return chi.numerator();
}

PushforwardClass pushforward_class(const BundleClass& e) {
    const Rational d = e.degree() - total_age(e);
    return PushforwardClass{e.rank(), d.numerator()};
}

BundleClass tensor(const BundleClass& a, const BundleClass& b) {
    require_same_curve(a.curve(), b.curve(), "tensor");
    const long long rank = a.rank() * b.rank();
    const Rational degree =
        Rational(a.rank()) * b.degree() + Rational(b.rank()) * a.degree();
    std::vector<std::vector<long long>> mult;
    mult.reserve(a.curve().point_count());
    for (std::size_t k = 0; k < a.curve().point_count(); ++k) {
        const auto r = static_cast<std::size_t>(a.curve().order(k));
        std::vector<long long> conv(r, 0);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j) {
                conv[(i + j) % r] += a.mult_at(k)[i] * b.mult_at(k)[j];
            }
        }
        mult.push_back(std::move(conv));
    }
    return BundleClass(a.curve(), rank, degree, std::move(mult));
}

BundleClass dual(const BundleClass& a) {
    std::vector<std::vector<long long>> mult;
    mult.reserve(a.curve().point_count());
    for (std::size_t k = 0; k < a.curve().point_count(); ++k) {
        const auto r = static_cast<std::size_t>(a.curve().order(k));
        std::vector<long long> rev(r, 0);
        for (std::size_t j = 0; j < r; ++j) {
            rev[(r - j) % r] = a.mult_at(k)[j];
        }
        mult.push_back(std::move(rev));
    }
    return BundleClass(a.curve(), a.rank(), -a.degree(), std::move(mult));
}

BundleClass line_class(const PicClass& L) {
    std::vector<std::vector<long long>> mult;
    mult.reserve(L.curve().point_count());
    for (std::size_t k = 0; k < L.curve().point_count(); ++k) {
        std::vector<long long> m(static_cast<std::size_t>(L.curve().order(k)), 0);
        m[static_cast<std::size_t>(L.indices()[k])] = 1;
        mult.push_back(std::move(m));
    }
    return BundleClass(L.curve(), 1, L.total_degree(), std::move(mult));
}

BundleClass tensor_line(const BundleClass& a, const PicClass& L) {
    return tensor(a, line_class(L));
}

BundleClass direct_sum(const BundleClass& a, const BundleClass& b) {
    require_same_curve(a.curve(), b.curve(), "direct sum");
    std::vector<std::vector<long long>> mult;
    mult.reserve(a.curve().point_count());
    for (std::size_t k = 0; k < a.curve().point_count(); ++k) {
        const auto r = static_cast<std::size_t>(a.curve().order(k));
        std::vector<long long> m(r, 0);
        for (std::size_t j = 0; j < r; ++j) {
            m[j] = a.mult_at(k)[j] + b.mult_at(k)[j];
        }
        mult.push_back(std::move(m));
    }
    return BundleClass(a.curve(), a.rank() + b.rank(), a.degree() + b.degree(),
                       std::move(mult));
}

Polarization::Polarization(BundleClass generating, long long ample_degree)
    : generating_(std::move(generating)), ample_degree_(ample_degree) {
    if (ample_degree_ < 1) {
        throw std::invalid_argument("polarization: ample degree must be at least 1");
    }
}

Polarization canonical_polarization(const CurveSignature& sig, long long ample_degree) {
    if (sig.point_count() == 0) {
        // No stacky structure: the structure sheaf already generates.
        return Polarization(BundleClass(sig, 1, Rational(0), {}), ample_degree);
    }
    long long total_rank = 0;
    for (std::size_t k = 0; k < sig.point_count(); ++k) {
        total_rank += sig.order(k);
    }
    Rational degree;
    std::vector<std::vector<long long>> mult;
    mult.reserve(sig.point_count());
    for (std::size_t k = 0; k < sig.point_count(); ++k) {
        const auto r = sig.order(k);
        degree += Rational(r - 1, 2);
        // The r_k summands at p_k contribute one character each; every other
        // point's block of r_i summands is invariant here, so the trivial
        // character absorbs the rest.
        std::vector<long long> m(static_cast<std::size_t>(r), 1);
        m[0] = total_rank - r + 1;
        mult.push_back(std::move(m));
    }
    return Polarization(BundleClass(sig, total_rank, degree, std::move(mult)), ample_degree);
}

ModifiedHilbert modified_hilbert(const BundleClass& e, const Polarization& pol) {
    require_same_curve(e.curve(), pol.generating().curve(), "modified Hilbert polynomial");
    const Rational leading(e.rank() * pol.generating().rank() * pol.ample_degree());
    const Rational constant(euler_char(tensor(e, dual(pol.generating()))));
    return ModifiedHilbert{leading, constant};
}

Rational modified_slope(const BundleClass& e, const Polarization& pol) {
    const ModifiedHilbert p = modified_hilbert(e, pol);
    return p.constant / p.leading;
}

Rational beta(const BundleClass& total, const BundleClass& sub, const Polarization& pol) {
    require_same_curve(total.curve(), sub.curve(), "beta");
    if (sub.rank() > total.rank()) {
        throw std::invalid_argument("beta: subobject rank exceeds total rank");
    }
    const ModifiedHilbert pt = modified_hilbert(total, pol);
    const ModifiedHilbert ps = modified_hilbert(sub, pol);
    return pt.leading * ps.constant - pt.constant * ps.leading;
}

ParabolicData parabolic_data(const BundleClass& e, const Polarization& pol) {
    require_same_curve(e.curve(), pol.generating().curve(), "parabolic data");
    const auto& gen = pol.generating();
    std::vector<std::vector<Rational>> weights;
    weights.reserve(e.curve().point_count());
    Rational weighted;
    for (std::size_t k = 0; k < e.curve().point_count(); ++k) {
        const auto r = static_cast<std::size_t>(e.curve().order(k));
        std::vector<Rational> alpha(r);
        long long prefix = 0;
        for (std::size_t j = 1; j < r; ++j) {
            prefix += gen.mult_at(k)[j];
            alpha[j] = Rational(prefix, gen.rank());
        }
        for (std::size_t j = 0; j < r; ++j) {
            weighted += alpha[j] * Rational(e.mult_at(k)[j]);
        }
        weights.push_back(std::move(alpha));
    }
    const Rational par_degree = Rational(pushforward_class(e).degree) + weighted;
    return ParabolicData{std::move(weights), par_degree, par_degree / Rational(e.rank())};
}

bool generic_weight_exists(const BundleClass& e) {
    long long g = std::llabs(pushforward_class(e).degree);
    for (std::size_t k = 0; k < e.curve().point_count(); ++k) {
        for (long long m : e.mult_at(k)) {
            g = std::gcd(g, m);
        }
    }
    return g == 1;
}

BundleClass balanced_class(const CurveSignature& sig, long long rank, long long coarse_degree) {
    if (rank < 1) {
        throw std::invalid_argument("balanced class: rank must be at least 1");
    }
    Rational degree(coarse_degree);
    std::vector<std::vector<long long>> mult;
    mult.reserve(sig.point_count());
    for (std::size_t k = 0; k < sig.point_count(); ++k) {
        const auto r = sig.order(k);
        const long long a = rank / r;
        const long long b = rank % r;
        std::vector<long long> m(static_cast<std::size_t>(r), a);
        for (long long j = 0; j < b; ++j) {
            m[static_cast<std::size_t>(j)] += 1;
            degree += Rational(j, r);
        }
        for (long long j = 0; j < r; ++j) {
            degree += Rational(j * a, r);
        }
        mult.push_back(std::move(m));
    }
    return BundleClass(sig, rank, degree, std::move(mult));
}

}  // namespace orbitchin
