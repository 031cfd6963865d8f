#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace tca {

using Int = mpz_class;
using Rat = mpq_class;

/// A partition: weakly decreasing sequence of positive integers.
/// Trailing zeros are never stored; the empty partition is {}.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    /// Parses "3,1" (or "" for the empty partition). Rejects
    /// non-decreasing or non-positive input instead of sorting it.
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int size() const;

    /// Part at 1-based index i; 0 beyond the last row.
    int part(int i) const;

    Partition conjugate() const;
    Partition doubled() const;
    bool is_p_restricted(int p) const;

    /// Hook lengths in row-major cell order; size equals size().
    std::vector<int> hook_lengths() const;

    /// Renders as "3,1"; empty partition renders as "".
    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// All partitions of n (with at most max_parts parts when given),
/// in lexicographically decreasing order.
std::vector<Partition> enumerate_partitions(int n, std::optional<int> max_parts = std::nullopt);

/// p(0..n_max) by the Euler pentagonal-number recurrence.
std::vector<Int> partition_counts(int n_max);

}  // namespace tca
