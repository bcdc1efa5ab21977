#include "ohmnet/recurrence.hpp"

#include "ohmnet/errors.hpp"
#include "ohmnet/matrix.hpp"

#include <cstdlib>
#include <utility>

namespace ohmnet {

namespace {

// Above this distance from the anchored values, terms are computed by
// companion-matrix powering instead of stepping.
constexpr long kPoweringThreshold = 1000;

RatMatrix companion_power(const std::vector<Rational>& coeffs, unsigned long e) {
    std::size_t d = coeffs.size();
    RatMatrix c(d, d);
    for (std::size_t j = 0; j < d; ++j) c(0, j) = coeffs[j];
    for (std::size_t i = 1; i < d; ++i) c(i, i - 1) = 1;

    RatMatrix result = RatMatrix::identity(d);
    while (e > 0) {
        if (e & 1UL) result = result * c;
        c = c * c;
        e >>= 1UL;
    }
    return result;
}

// G_{anchor + offset} from state (G_anchor, G_{anchor-1}, ..).
Rational advance(const std::vector<Rational>& coeffs,
                 std::vector<Rational> state,
                 long offset) {
    std::size_t d = coeffs.size();
    if (offset <= kPoweringThreshold) {
        for (long s = 0; s < offset; ++s) {
            Rational next(0);
            for (std::size_t i = 0; i < d; ++i) next += coeffs[i] * state[i];
            for (std::size_t i = d - 1; i > 0; --i) state[i] = state[i - 1];
            state[0] = next;
        }
        return state[0];
    }
    RatMatrix p = companion_power(coeffs, static_cast<unsigned long>(offset));
    Rational out(0);
    for (std::size_t j = 0; j < d; ++j) out += p(0, j) * state[j];
    return out;
}

} // namespace

RecurrenceSpec::RecurrenceSpec(std::vector<Rational> coefficients,
                               long base_index,
                               std::vector<Rational> initial_values)
    : coefficients_(std::move(coefficients)),
      base_index_(base_index),
      initial_values_(std::move(initial_values)) {
    if (coefficients_.empty()) throw DomainError("recurrence needs at least one coefficient");
    std::size_t d = coefficients_.size();
    if (initial_values_.size() < d) {
        throw DomainError("recurrence of order " + std::to_string(d) + " needs " +
                          std::to_string(d) + " initial values, got " +
                          std::to_string(initial_values_.size()));
    }
    // Over-determined initial lists must satisfy the recursion exactly.
    for (std::size_t t = d; t < initial_values_.size(); ++t) {
        Rational expect(0);
        for (std::size_t i = 0; i < d; ++i) expect += coefficients_[i] * initial_values_[t - 1 - i];
        if (expect != initial_values_[t]) {
            throw DomainError("inconsistent initial value at index " +
                              std::to_string(base_index_ + static_cast<long>(t)));
        }
    }
}

Rational RecurrenceSpec::eval(long n) const {
    long lo = base_index_;
    long hi = base_index_ + static_cast<long>(initial_values_.size()) - 1;
    if (n >= lo && n <= hi) {
        return initial_values_[static_cast<std::size_t>(n - lo)];
    }

    std::size_t d = coefficients_.size();
    if (n > hi) {
        // state anchored at the newest initial values
        std::vector<Rational> state(d);
        for (std::size_t i = 0; i < d; ++i) {
            state[i] = initial_values_[initial_values_.size() - 1 - i];
        }
        return advance(coefficients_, std::move(state), n - hi);
    }

    // Backward: G_{t-d} = (G_t - c_1 G_{t-1} - ... - c_{d-1} G_{t-d+1}) / c_d,
    // rewritten as a forward recurrence on the reversed sequence.
    const Rational& cd = coefficients_[d - 1];
    if (cd == 0) {
        throw DomainError("backward extension requires a nonzero trailing coefficient");
    }
    std::vector<Rational> back_coeffs(d);
    for (std::size_t j = 0; j + 1 < d; ++j) back_coeffs[j] = -coefficients_[d - 2 - j] / cd;
    back_coeffs[d - 1] = Rational(1) / cd;

    // B_m = G_{anchor - m} with anchor at the top of the oldest d initials;
    // state (B_{d-1}, ..., B_0) is the initial block read in reverse.
    long anchor = lo + static_cast<long>(d) - 1;
    std::vector<Rational> state(d);
    for (std::size_t i = 0; i < d; ++i) state[i] = initial_values_[i];
    return advance(back_coeffs, std::move(state), (anchor - n) - (static_cast<long>(d) - 1));
}

BigInt fib(long n) {
    if (n < 0) {
        BigInt f = fib(-n);
        return (-n) % 2 == 0 ? BigInt(-f) : f;
    }
    // fast doubling: F(2k) = F(k) (2 F(k+1) - F(k)), F(2k+1) = F(k)^2 + F(k+1)^2
    BigInt a = 0, b = 1; // F(k), F(k+1), k = 0
    for (int bit = 62; bit >= 0; --bit) {
        BigInt c = a * (2 * b - a);
        BigInt d = a * a + b * b;
        if ((n >> bit) & 1L) {
            a = d;
            b = c + d;
        } else {
            a = c;
            b = d;
        }
    }
    return a;
}

BigInt lucas(long n) {
    return fib(n - 1) + fib(n + 1);
}

BigInt ladder_h(long n) {
    static const RecurrenceSpec h({Rational(4), Rational(-1)}, 0, {Rational(0), Rational(1)});
    Rational v = h.eval(n);
    return v.get_num(); // integer by construction
}

RecurrenceVerdict verify_recurrence(const std::vector<Rational>& values,
                                    long base_index,
                                    const std::vector<Rational>& coefficients) {
    std::size_t d = coefficients.size();
    if (d == 0) throw DomainError("empty coefficient list");
    if (values.size() < d + 1) {
        throw DomainError("need more values than the recursion order to verify");
    }
    long first_violation = 0;
    long last_violation = 0;
    bool any_violation = false;
    for (std::size_t t = d; t < values.size(); ++t) {
        Rational expect(0);
        for (std::size_t i = 0; i < d; ++i) expect += coefficients[i] * values[t - 1 - i];
        if (expect != values[t]) {
            long idx = base_index + static_cast<long>(t);
            if (!any_violation) first_violation = idx;
            last_violation = idx;
            any_violation = true;
        }
    }
    if (!any_violation) return {true, base_index};
    long last_t = base_index + static_cast<long>(values.size()) - 1;
    if (last_violation == last_t) {
        return {false, first_violation};
    }
    // windows drawn entirely after the last violation all hold
    return {true, last_violation - static_cast<long>(d) + 1};
}

} // namespace ohmnet
