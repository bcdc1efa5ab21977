#pragma once

#include "ohmnet/rational.hpp"

#include <vector>

namespace ohmnet {

/// Linear homogeneous recurrence with constant coefficients,
///   G_n = c_1 G_{n-1} + ... + c_d G_{n-d},
/// anchored by d or more consecutive values starting at base_index.
/// Extra initial values are checked against the recursion at
/// construction; an inconsistent list is rejected loudly.
class RecurrenceSpec {
public:
    RecurrenceSpec(std::vector<Rational> coefficients,
                   long base_index,
                   std::vector<Rational> initial_values);

    int order() const { return static_cast<int>(coefficients_.size()); }
    const std::vector<Rational>& coefficients() const { return coefficients_; }
    long base_index() const { return base_index_; }
    const std::vector<Rational>& initial_values() const { return initial_values_; }

    // Exact term G_n for any integer n; backward extension needs c_d != 0
    // (DomainError otherwise). Far indices go through companion-matrix
    // powering, near ones through plain iteration.
    Rational eval(long n) const;

private:
    std::vector<Rational> coefficients_;
    long base_index_;
    std::vector<Rational> initial_values_;
};

// F_1 = F_2 = 1, extended to negative indices by the recursion.
BigInt fib(long n);
// L_0 = 2, L_1 = 1.
BigInt lucas(long n);
// H_0 = 0, H_1 = 1, H_n = 4 H_{n-1} - H_{n-2}.
BigInt ladder_h(long n);

struct RecurrenceVerdict {
    bool holds;
    // When holds: smallest index from which every available window
    // satisfies the recursion. Otherwise: first violating index.
    long index;
};

// Checks an indexed value sequence against recursion coefficients.
// Throws DomainError when fewer than order+1 values are supplied.
RecurrenceVerdict verify_recurrence(const std::vector<Rational>& values,
                                    long base_index,
                                    const std::vector<Rational>& coefficients);

} // namespace ohmnet
