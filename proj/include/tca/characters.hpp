#pragma once

#include <map>
#include <vector>

#include "tca/partition.hpp"

namespace tca {

/// Basis monomial of T(W)_n: a sequence of letters in {1..m}.
struct Word {
    std::vector<int> letters;
    bool operator==(const Word&) const = default;
};

/// Permutation of {0..n-1} stored as images: sigma[i] = sigma(i).
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_inverse(const Perm& sigma);
Perm perm_compose(const Perm& sigma, const Perm& tau);  // sigma after tau

/// Place permutation sigma(w_1...w_n) = w_{sigma^{-1}(1)} ... : the
/// letter at position i of the output is the input letter at
/// sigma^{-1}(i). Left action: sn_act(st, w) = sn_act(s, sn_act(t, w)).
Word sn_act(const Perm& sigma, const Word& w);

/// Class function on S_n with exact rational values per cycle type.
struct SnCharacter {
    int n = 0;
    std::map<Partition, Rat> values;  // defined for every cycle type of n
};

/// n! / prod(i^{m_i} m_i!) for the cycle type rho.
Int cycle_type_class_size(const Partition& rho);

/// Irreducible character table of S_n via the Murnaghan-Nakayama
/// recursion on beta-numbers. Rows and columns are indexed by the
/// partitions of n in enumeration order. Guarded to n <= 10.
class CharacterTable {
public:
    explicit CharacterTable(int n);

    int degree() const { return n_; }
    const std::vector<Partition>& shapes() const { return shapes_; }

    /// chi^lambda(rho); both arguments must be partitions of n.
    long long value(const Partition& lambda, const Partition& rho) const;
    long long value_at(size_t row, size_t col) const { return values_[row][col]; }

private:
    int n_;
    std::vector<Partition> shapes_;
    std::map<Partition, size_t> index_;
    std::vector<std::vector<long long>> values_;
};

const CharacterTable& character_table(int n);  // memoized, n <= 10

/// chi^lambda(rho) for a single pair; no table guard beyond recursion depth.
long long murnaghan_nakayama(const Partition& lambda, const Partition& rho);

/// Character of the place-permutation action on W^{tensor n} for
/// dim W = m: value at rho is m^(number of parts of rho). n <= 10.
SnCharacter tensor_power_character(int m, int n);

/// Multiplicity of each Specht character in a class function, via the
/// class-weighted inner product with the character table. Asserts the
/// results are nonnegative integers.
std::map<Partition, Int> specht_multiplicities(const SnCharacter& chi);

/// Multiplicity of S^lambda in T(W)_n under the commuting S_n action;
/// equals schur_dim(lambda, m) by Schur-Weyl duality. n <= 8.
std::map<Partition, Int> schur_weyl_decompose(int m, int n);

}  // namespace tca
