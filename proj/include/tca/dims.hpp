#pragma once

#include <functional>
#include <optional>

#include "tca/partition.hpp"

namespace tca {

/// dim S_lambda(k^m) by the hook-content formula
/// prod_{(i,j)} (m + j - i) / hook(i,j); zero when lambda has more
/// than m rows.
Int schur_dim(const Partition& lambda, int m);

/// f^lambda = |lambda|! / prod(hooks); the empty partition counts as
/// the unit object with dimension 1.
Int specht_dim(const Partition& lambda);

/// Exhaustive count of standard Young tableaux. Guarded to |lambda| <= 12.
long syt_count_oracle(const Partition& lambda);

/// Exhaustive count of semistandard tableaux with entries in {1..m}.
/// Guarded to |lambda| <= 10, m <= 5.
long ssyt_count_oracle(const Partition& lambda, int m);

/// floor(log_p((n+1)/2)) computed in integer arithmetic: the largest
/// e >= 0 with 2*p^e <= n+1. This is the asymptotic two-row length
/// estimate, not an exact composition length.
int two_row_length_estimate(long n, long p);

/// Composition-length rule for Specht modules, pluggable so exact
/// modular evaluators can replace the default estimate later.
struct LengthOracle {
    int characteristic = 0;  // 0 or a prime
    std::function<std::optional<Int>(const Partition&)> evaluate;
};

/// Characteristic zero: every Specht module is simple, length 1.
LengthOracle char_zero_lengths();

/// Characteristic p: supports exactly the shapes (2^m) and (m,m),
/// via len(S_{(2^m)}) = len(S_{(m,m)}), returning the two-row
/// estimate floored at 1; every other shape reports unsupported.
LengthOracle two_row_estimate_lengths(long p);

}  // namespace tca
