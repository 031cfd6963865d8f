#include "tca/growth.hpp"

#include <cmath>
#include <stdexcept>

namespace tca {

namespace {

double log_of(const Int& v) {
    signed long exp;
    double d = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log(d) + static_cast<double>(exp) * std::log(2.0);
}

int characteristic_of(const FieldSpec& field) {
    return field.kind == FieldSpec::Kind::rational ? 0 : static_cast<int>(field.p);
}

}  // namespace

GrowthTable gk_free_tca(int m, const FieldSpec& field, int N, const LengthOracle& lengths) {
    if (m < 1 || N < 1) throw std::invalid_argument("gk_free_tca: need m >= 1 and N >= 1");
    const int characteristic = characteristic_of(field);
    if (characteristic > 0 && m > 2)
        throw std::invalid_argument(
            "gk_free_tca: no length oracle covers shapes with more than two rows; "
            "characteristic p is supported only for m <= 2");
    GrowthTable table;
    table.family = "free_tca_rank_" + std::to_string(m);
    table.characteristic = characteristic;
    table.values.assign(N + 1, Int(0));
    // per-degree increments; running sum gives f
    std::vector<Int> increment(N + 1, Int(0));
    increment[0] = 1;  // empty partition: the unit
    for (int d = 1; d <= N; ++d) {
        for (const Partition& lambda : enumerate_partitions(d, m)) {
            Int len(1);
            if (characteristic > 0) {
                auto evaluated = lengths.evaluate(lambda);
                if (evaluated)
                    len = *evaluated;
                else
                    table.lower_bound_only = true;  // unknown length counted as 1
            }
            increment[d] += schur_dim(lambda, m) * len;
        }
    }
    Int running = 0;
    for (int d = 0; d <= N; ++d) {
        running += increment[d];
        table.values[d] = running;
    }
    if (table.lower_bound_only)
        table.note = "unsupported shapes counted with length 1; table is a certified lower bound";
    return table;
}

GrowthTable gk_free_tca(int m, const FieldSpec& field, int N) {
    const int characteristic = characteristic_of(field);
    return gk_free_tca(m, field, N,
                       characteristic == 0 ? char_zero_lengths()
                                           : two_row_estimate_lengths(characteristic));
}

GrowthTable gk_sym_triv2(int N, const FieldSpec& field) {
    if (N < 0 || N > 10000)
        throw std::invalid_argument("gk_sym_triv2: refusing N outside 0..10000");
    GrowthTable table;
    table.family = "sym_triv2";
    table.characteristic = characteristic_of(field);
    const std::vector<Int> p = partition_counts(N);
    table.values.resize(N + 1);
    Int running = 0;
    for (int n = 0; n <= N; ++n) {
        running += p[n];
        table.values[n] = running;
    }
    if (table.characteristic > 0) {
        table.lower_bound_only = true;
        table.note = "lengths >= 1, so the characteristic-0 table bounds f from below";
    }
    return table;
}

GrowthTable gk_sl2_invariants(const FieldSpec& field, int N) {
    if (N < 0) throw std::invalid_argument("gk_sl2_invariants: need N >= 0");
    GrowthTable table;
    table.family = "sl2_invariants";
    table.characteristic = characteristic_of(field);
    table.values.resize(N + 1);
    Int running = 1;  // the unit
    table.values[0] = running;
    for (int n = 1; n <= N; ++n) {
        if (n % 2 == 0) {
            const int m = n / 2;
            Int len(1);
            if (table.characteristic > 0)
                len = std::max(1, two_row_length_estimate(m, table.characteristic));
            running += len;
        }
        table.values[n] = running;
    }
    if (table.characteristic > 0)
        table.note = "two-row length estimate floored at 1 per filtration piece";
    return table;
}

SlopeEstimate estimate_slope(const GrowthTable& table, int n_lo, int n_hi) {
    if (n_lo < 1 || n_hi > table.max_n() || n_lo >= n_hi)
        throw std::invalid_argument("estimate_slope: window out of table range");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const int count = n_hi - n_lo + 1;
    for (int n = n_lo; n <= n_hi; ++n) {
        if (table.values[n] <= 0)
            throw std::invalid_argument("estimate_slope: f must be positive on the window");
        const double x = std::log(static_cast<double>(n));
        const double y = log_of(table.values[n]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    SlopeEstimate est;
    est.n_lo = n_lo;
    est.n_hi = n_hi;
    est.slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
    const double intercept = (sy - est.slope * sx) / count;
    double ss = 0;
    for (int n = n_lo; n <= n_hi; ++n) {
        const double x = std::log(static_cast<double>(n));
        const double r = log_of(table.values[n]) - (est.slope * x + intercept);
        ss += r * r;
    }
    est.residual = std::sqrt(ss / count);
    return est;
}

}  // namespace tca
