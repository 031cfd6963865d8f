#pragma once

#include <string>
#include <vector>

#include "tca/dims.hpp"
#include "tca/group.hpp"

namespace tca {

/// N -> f(N) growth table for one of the example families. f is
/// weakly increasing and f(0) = 1 (the unit contributes length 1).
struct GrowthTable {
    std::string family;
    int characteristic = 0;
    std::vector<Int> values;  // values[N] = f(N), N = 0..max
    bool lower_bound_only = false;  // char-p tables certified only as lower bounds
    std::string note;

    int max_n() const { return static_cast<int>(values.size()) - 1; }
};

/// Log-log least-squares slope over an explicit window.
struct SlopeEstimate {
    int n_lo = 0, n_hi = 0;
    double slope = 0.0;
    double residual = 0.0;  // root mean squared residual of the fit
};

/// f(N) = sum over |lambda| <= N with at most m parts of
/// schur_dim(lambda, m) * len(lambda). Characteristic 0 uses length 1
/// everywhere. Characteristic p is accepted for m <= 2 only; shapes
/// the oracle cannot evaluate fall back to length 1 and the table is
/// flagged as a lower bound.
GrowthTable gk_free_tca(int m, const FieldSpec& field, int N, const LengthOracle& lengths);
GrowthTable gk_free_tca(int m, const FieldSpec& field, int N);

/// f(N) = sum_{i <= N} p(i) via the partition-function recurrence.
/// In characteristic p the same table is a certified lower bound.
GrowthTable gk_sym_triv2(int N, const FieldSpec& field = FieldSpec::rational());

/// f(N) = 1 + sum_{2m <= N} len(S_{(2^m)}): length 1 per even degree
/// in characteristic 0, the two-row estimate floored at 1 in
/// characteristic p (via len(S_{(2^m)}) = len(S_{(m,m)})).
GrowthTable gk_sl2_invariants(const FieldSpec& field, int N);

SlopeEstimate estimate_slope(const GrowthTable& table, int n_lo, int n_hi);

}  // namespace tca
