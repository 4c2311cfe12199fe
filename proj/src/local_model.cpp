#include "orbitchin/local_model.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace orbitchin {

namespace {

long long count_equal(const std::vector<long long>& mults, long long value) {
    return std::count(mults.begin(), mults.end(), value);
}

[[noreturn]] void falsified(const std::string& tag, const std::string& claim) {
    throw FalsificationError("local classification: case " + tag + " violates: " + claim);
}

void check(bool ok, const std::string& tag, const std::string& claim) {
    if (!ok) {
        falsified(tag, claim);
    }
}

}  // namespace

LocalType::LocalType(long long order, std::vector<long long> mults)
    : order_(order), mults_(std::move(mults)) {
    if (order_ < 2) {
        throw std::invalid_argument("local type: order must be at least 2");
    }
    if (mults_.empty()) {
        throw std::invalid_argument("local type: at least one multiplicity required");
    }
    for (long long m : mults_) {
        if (m < 1) {
            throw std::invalid_argument("local type: multiplicities must be positive");
        }
    }
    if (static_cast<long long>(mults_.size()) > order_) {
        throw std::invalid_argument(
            "local type: cannot have more distinct eigenvalues than the order");
    }
}

long long LocalType::rank() const {
    return std::accumulate(mults_.begin(), mults_.end(), 0LL);
}

long long LocalType::max_mult() const {
    return *std::max_element(mults_.begin(), mults_.end());
}

std::vector<long long> conjugate_partition(const LocalType& t) {
    const long long max = t.max_mult();
    std::vector<long long> conj;
    conj.reserve(static_cast<std::size_t>(max));
    for (long long i = 1; i <= max; ++i) {
        const long long threshold = max - i + 1;
        conj.push_back(std::count_if(t.mults().begin(), t.mults().end(),
                                     [threshold](long long m) { return m >= threshold; }));
    }
    return conj;
}

GenericOrders generic_orders(const LocalType& t) {
    const std::vector<long long> conj = conjugate_partition(t);
    const long long max = static_cast<long long>(conj.size());
    GenericOrders orders;
    // Coarse chart: the value v occupies the block of length k_{max-v+1},
    // lowest values first, so the orders weakly increase with the index.
    for (long long v = 1; v <= max; ++v) {
        const long long block = conj[static_cast<std::size_t>(max - v)];
        orders.coarse.insert(orders.coarse.end(), static_cast<std::size_t>(block), v);
    }
    // Orbifold chart: substituting t^{r_p} and clearing denominators turns
    // ord(a~_i) into r_p * ord(a~_i) - i.
    orders.orbifold.reserve(orders.coarse.size());
    for (std::size_t i = 0; i < orders.coarse.size(); ++i) {
        orders.orbifold.push_back(t.order() * orders.coarse[i] -
                                  static_cast<long long>(i + 1));
    }
    return orders;
}

std::string to_string(LocalCase c) {
    switch (c) {
        case LocalCase::A:
            return "A";
        case LocalCase::B1:
            return "B1";
        case LocalCase::B2:
            return "B2";
        case LocalCase::C1:
            return "C1";
        case LocalCase::C2:
            return "C2";
    }
    return "?";
}

LocalVerdict classify_local(const LocalType& t) {
    const long long r = t.order();
    const long long n = t.rank();
    const long long max = t.max_mult();
    const long long delta = r * max - n;
    const long long top = count_equal(t.mults(), max);
    const long long second = max >= 2 ? count_equal(t.mults(), max - 1) : 0;
    const long long count = static_cast<long long>(t.mults().size());

    LocalCase tag;
    if (delta == 0) {
        tag = LocalCase::A;
    } else if (delta == 1) {
        tag = max == 1 ? LocalCase::B1 : LocalCase::B2;
    } else {
        tag = top > 1 ? LocalCase::C1 : LocalCase::C2;
    }
    const std::string name = to_string(tag);

    const std::vector<long long> conj = conjugate_partition(t);
    const GenericOrders orders = generic_orders(t);
    const long long ord_last = orders.orbifold.back();

    switch (tag) {
        case LocalCase::A: {
            check(count == r, name, "eigenvalue count equals the order");
            check(top == count, name, "all multiplicities are equal");
            check(conj == std::vector<long long>(static_cast<std::size_t>(max), r), name,
                  "conjugate partition is constant equal to the order");
            check(ord_last == 0, name, "top coefficient has a nonzero constant term");
            break;
        }
        case LocalCase::B1: {
            check(count == n, name, "eigenvalues are simple");
            check(r == n + 1, name, "order exceeds the rank by one");
            check(conj == std::vector<long long>{n}, name, "conjugate partition is (n)");
            break;
        }
        case LocalCase::B2: {
            check(count == r, name, "eigenvalue count equals the order");
            check(n == count * max - 1, name, "rank is one below the rectangular count");
            check(top == r - 1, name, "all but one multiplicity attain the maximum");
            check(second == 1, name, "exactly one multiplicity is one below the maximum");
            std::vector<long long> expected(static_cast<std::size_t>(max), r);
            expected[0] = r - 1;
            check(conj == expected, name, "conjugate partition is (r-1, r, ..., r)");
            break;
        }
        case LocalCase::C1: {
            check(ord_last > 1, name, "top coefficient vanishes to order at least 2");
            if (n >= 2) {
                check(orders.orbifold[static_cast<std::size_t>(n - 2)] > 2, name,
                      "subtop coefficient vanishes to order at least 3");
            }
            break;
        }
        case LocalCase::C2: {
            check(ord_last > 1, name, "top coefficient vanishes to order at least 2");
            if (n >= 2) {
                const bool subtop_unit =
                    orders.orbifold[static_cast<std::size_t>(n - 2)] == 0;
                const bool profile = count == r && top == 1 && second == r - 1;
                check(subtop_unit == profile, name,
                      "subtop coefficient is a unit exactly for the near-rectangular "
                      "profile");
            }
            break;
        }
    }

    return LocalVerdict{tag, conj, orders};
}

}  // namespace orbitchin
