#pragma once

#include "tca/characters.hpp"
#include "tca/group.hpp"

namespace tca {

inline constexpr size_t kFixedSpaceDimCap = 6561;

/// Basis of T(W)^G_n in the word basis (letters {1..m}, words ordered
/// lexicographically, index = sum letter_t * m^(n-1-t)). Exactly one
/// of the basis members is populated, matching the field kind.
struct InvariantSpace {
    int degree = 0;
    int m = 0;
    FieldSpec field;
    std::vector<std::vector<Rat>> rational_basis;
    std::vector<std::vector<long>> prime_basis;

    size_t dim() const {
        return field.kind == FieldSpec::Kind::rational ? rational_basis.size()
                                                       : prime_basis.size();
    }
};

/// dim T(W)^G_n for n = 0..N. Over the rationals this is the trace
/// average (1/|G|) sum_g tr(g)^n; over F_p with p not dividing |G| it
/// is the rank of the averaging projector on W^(tensor n). The
/// modular case p | |G| is refused (use fixed_space instead).
std::vector<Int> molien_dims(const MatrixGroup& group, int N);

/// S_n-character of T(W)^G_n: value at a cycle type rho is
/// (1/|G|) sum_g prod_{parts l of rho} tr(g^l), with its Specht
/// multiplicities. Rational field only; n <= 8.
std::pair<SnCharacter, std::map<Partition, Int>> equivariant_character(
    const MatrixGroup& group, int n);

/// Exact nullspace of the stacked maps (rho_n(g) - I) on the word
/// basis, where rho_n(g) acts letterwise. Any characteristic.
InvariantSpace fixed_space(const MatrixGroup& group, int n,
                           size_t dim_cap = kFixedSpaceDimCap);

/// Smallest S_n-stable subspace of T(W)^G_n containing all products
/// of lower-degree invariants: spans of concatenation products closed
/// under adjacent transpositions.
InvariantSpace product_span(const MatrixGroup& group, int n,
                            size_t dim_cap = kFixedSpaceDimCap);

/// dim(R^G_+/(R^G_+)^2)_n for n = 1..N: new tca generators per degree.
std::vector<long> new_generators_dims(const MatrixGroup& group, int N,
                                      size_t dim_cap = kFixedSpaceDimCap);

/// Whether the power sum x_1^n + ... + x_m^n lies outside the
/// S_n-stable span of products of lower-degree invariants.
bool power_sum_outside_products(const MatrixGroup& group, int n);

/// Verifies that the G-fixed multilinear component of Sym(W tensor k^n),
/// computed through the polynomial-ring model, has the same dimension
/// as fixed_space(group, n).
bool flat_weight_crosscheck(const MatrixGroup& group, int n,
                            size_t dim_cap = kFixedSpaceDimCap);

/// Index permutation of the degree-n word basis induced by swapping
/// letter positions t and t+1 (0-based t < n-1).
std::vector<size_t> transposition_index_map(int m, int n, int t);

}  // namespace tca
