#pragma once

#include "ohmnet/families.hpp"
#include "ohmnet/rational.hpp"
#include "ohmnet/recurrence.hpp"

#include <vector>

namespace ohmnet {

// Per-family closed resistance formulas. Covered pairs: path (1,n);
// linear 2-tree (1,n); ladder end rung (1,2) or (2m-1,2m); fan and wheel
// (i,k) with hub k. Anything else raises UnsupportedPairError directing
// callers to the general methods.
//
// The ladder formula matches the end-rung pair, not the diagonal
// (1,2m): at m=2 it yields 3/4 (diagonal resistance is 1), at m=3 it
// yields 11/15 (diagonal is 7/5). The evaluator is bound to the pair it
// validates against.
Rational closed_form(const FamilySpec& spec, int i, int j);

// Same values assembled purely from recurrence evaluations (path,
// linear 2-tree, ladder, fan, wheel). Equals closed_form exactly.
Rational recursion_form(const FamilySpec& spec, int i, int j);

struct Linear3TreeReport {
    long n_start = 4;
    // N_n = det(L minus rows/cols {1,n}), D_n = det(L minus {n}),
    // for n = n_start..n_max
    std::vector<BigInt> numerators;
    std::vector<BigInt> denominators;
    RecurrenceVerdict deg5;  // denominator sequence vs (5,-3,3,-5,1)
    RecurrenceVerdict deg14; // numerator sequence vs the degree-14 coefficients
    // empirically discovered initial blocks at the verdict indices
    std::vector<BigInt> deg5_initials;
    std::vector<BigInt> deg14_initials;
};

extern const std::vector<Rational> kLinear3TreeDenCoeffs; // degree 5
extern const std::vector<Rational> kLinear3TreeNumCoeffs; // degree 14

// Exact corner-to-corner determinant sequences of the straight linear
// 3-tree, checked against the degree-5 and degree-14 recursions above.
// n_max >= 10.
Linear3TreeReport linear3tree_sequences(long n_max);

struct DeltaRow {
    long n;
    Rational delta;   // r(1,n+1) - r(1,n)
    Rational abs_err; // |delta - target|
};

// Exact scan of the corner-resistance increments of the straight linear
// 3-tree against a limit target (default 1/14). Determinants carry the
// sequences to n = 60; beyond that the recursions, verified against the
// determinant range first, extend them cheaply.
std::vector<DeltaRow> conjecture_delta_scan(long n_max,
                                            const Rational& target = Rational(1, 14));

} // namespace ohmnet
