#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace orbitchin {

/// The local datum at a stacky point of order r_p: the multiplicities
/// m_1, ..., m_{m_p} of the distinct eigenvalues of a generic local
/// endomorphism.  Order does not matter (all derived quantities depend on
/// the multiset); the number of eigenvalues may not exceed r_p.
class LocalType {
public:
    LocalType(long long order, std::vector<long long> mults);

    long long order() const { return order_; }
    const std::vector<long long>& mults() const { return mults_; }

    /// n = sum of the multiplicities (the local rank).
    long long rank() const;

    /// The largest multiplicity.
    long long max_mult() const;

    friend bool operator==(const LocalType&, const LocalType&) = default;

private:
    long long order_;
    std::vector<long long> mults_;
};

/// Conjugate partition of the multiplicity multiset, indexed from the top:
/// k_i = card{ j : m_j >= max - i + 1 } for i = 1..max.  Weakly increasing,
/// summing to the local rank.
std::vector<long long> conjugate_partition(const LocalType& t);

/// Generic vanishing orders of the characteristic coefficients.
struct GenericOrders {
    /// ord(a~_i) on the coarse chart, i = 1..n: the value v is taken on a
    /// block of k_{max - v + 1} consecutive indices, v = 1..max.
    std::vector<long long> coarse;
    /// ord(a_i) on the orbifold chart: r_p * ord(a~_i) - i.
    std::vector<long long> orbifold;

    friend bool operator==(const GenericOrders&, const GenericOrders&) = default;
};

GenericOrders generic_orders(const LocalType& t);

/// The five cases of the local classification, separated by the defect
/// delta = r_p * max - n and the multiplicity profile at the top.
enum class LocalCase {
    A,   ///< delta = 0
    B1,  ///< delta = 1, all multiplicities equal 1
    B2,  ///< delta = 1, max multiplicity > 1
    C1,  ///< delta > 1, the top multiplicity repeats
    C2,  ///< delta > 1, the top multiplicity is unique
};

std::string to_string(LocalCase c);

/// Raised when a computed quantity contradicts one of the classification's
/// stated consequences.  This cannot happen for valid inputs; it exists so
/// the exhaustive machine check fails loudly instead of silently.
class FalsificationError : public std::logic_error {
public:
    explicit FalsificationError(const std::string& what) : std::logic_error(what) {}
};

struct LocalVerdict {
    LocalCase tag;
    std::vector<long long> conjugate;
    GenericOrders orders;
};

/// Determine the case of a local type and verify every consequence the
/// classification asserts for it (multiplicity profile, conjugate-partition
/// shape, vanishing orders of the top coefficients).  Throws
/// FalsificationError if any consequence fails to hold.
LocalVerdict classify_local(const LocalType& t);

}  // namespace orbitchin
