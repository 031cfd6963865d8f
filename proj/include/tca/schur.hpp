#pragma once

#include <map>

#include "tca/partition.hpp"

namespace tca {

/// Sparse integer combination of Schur-basis symbols; the character of
/// a polynomial GL-representation. Negative coefficients are allowed
/// (virtual characters); consumers that need an actual representation
/// character assert nonnegativity themselves.
class SchurExpansion {
public:
    SchurExpansion() = default;

    static SchurExpansion basis(const Partition& lambda);

    Int coeff(const Partition& lambda) const;
    void add_term(const Partition& lambda, const Int& c);

    const std::map<Partition, Int>& terms() const { return terms_; }
    bool nonnegative() const;

    SchurExpansion& operator+=(const SchurExpansion& other);
    friend SchurExpansion operator+(SchurExpansion a, const SchurExpansion& b) {
        a += b;
        return a;
    }
    bool operator==(const SchurExpansion&) const = default;

private:
    std::map<Partition, Int> terms_;  // never stores zero
};

/// Littlewood-Richardson coefficient c^lambda_{mu nu}, counted by
/// enumerating LR skew tableaux of shape lambda/mu with content nu.
long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// s_mu * s_nu = sum c^lambda_{mu nu} s_lambda. Guarded to |mu|+|nu| <= 16.
SchurExpansion lr_product(const Partition& mu, const Partition& nu);

/// Bilinear extension to full expansions.
SchurExpansion lr_product(const SchurExpansion& a, const SchurExpansion& b);

/// Degree-n component of the Schur functor applied to the object with
/// character x: sum over |lambda| = n of coeff(lambda) * f^lambda.
Int flat_weight_dim(const SchurExpansion& x, int n);

/// Dimension identity of the monoidality isomorphism:
/// flat_weight_dim(s_mu * s_nu, d+e) == C(d+e,d) * f^mu * f^nu.
bool monoidality_check(const Partition& mu, const Partition& nu);

}  // namespace tca
