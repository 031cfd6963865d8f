#include "tca/schur.hpp"

#include <stdexcept>

#include "tca/dims.hpp"

namespace tca {

SchurExpansion SchurExpansion::basis(const Partition& lambda) {
    SchurExpansion x;
    x.terms_[lambda] = 1;
    return x;
}

Int SchurExpansion::coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Int(0) : it->second;
}

void SchurExpansion::add_term(const Partition& lambda, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool SchurExpansion::nonnegative() const {
    for (const auto& [lambda, c] : terms_)
        if (c < 0) return false;
    return true;
}

SchurExpansion& SchurExpansion::operator+=(const SchurExpansion& other) {
    for (const auto& [lambda, c] : other.terms_) add_term(lambda, c);
    return *this;
}

namespace {

struct SkewCell {
    int row, col;  // 0-based
};

// Counts LR fillings of lambda/mu with content nu. Cells are visited
// in reverse reading order (rows top to bottom, each row right to
// left), so the lattice condition can be checked per placement.
long lr_fill(const std::vector<SkewCell>& cells, size_t idx,
             std::vector<std::vector<int>>& fill, std::vector<int>& used,
             const Partition& nu) {
    if (idx == cells.size()) return 1;
    const auto [r, c] = cells[idx];
    int hi = nu.rows();
    if (c + 1 < static_cast<int>(fill[r].size()) && fill[r][c + 1] != 0)
        hi = std::min(hi, fill[r][c + 1]);  // weakly increasing along the row
    long total = 0;
    for (int v = 1; v <= hi; ++v) {
        if (used[v] >= nu.part(v)) continue;
        if (v > 1 && used[v] >= used[v - 1]) continue;  // lattice word
        if (r > 0) {
            // 0 above means the cell sits inside mu: no constraint
            int above = fill[r - 1][c];
            if (above != 0 && above >= v) continue;  // strict down columns
        }
        fill[r][c] = v;
        ++used[v];
        total += lr_fill(cells, idx + 1, fill, used, nu);
        --used[v];
        fill[r][c] = 0;
    }
    return total;
}

}  // namespace

long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() != mu.size() + nu.size()) return 0;
    for (int i = 1; i <= mu.rows(); ++i)
        if (mu.part(i) > lambda.part(i)) return 0;  // mu not contained in lambda
    std::vector<SkewCell> cells;
    for (int r = 0; r < lambda.rows(); ++r)
        for (int c = lambda.part(r + 1) - 1; c >= mu.part(r + 1); --c)
            cells.push_back({r, c});
    std::vector<std::vector<int>> fill(lambda.rows());
    for (int r = 0; r < lambda.rows(); ++r) fill[r].assign(lambda.parts()[r], 0);
    // cells of mu never block the column-strictness check: mark them 0
    // and rely on fill[r-1][c] == 0 meaning "inside mu or not yet set";
    // with this visit order a cell above outside mu is always set first.
    std::vector<int> used(nu.rows() + 1, 0);
    return lr_fill(cells, 0, fill, used, nu);
}

SchurExpansion lr_product(const Partition& mu, const Partition& nu) {
    if (mu.size() + nu.size() > 16)
        throw std::invalid_argument("lr_product: refusing |mu| + |nu| > 16");
    SchurExpansion out;
    for (const Partition& lambda : enumerate_partitions(mu.size() + nu.size())) {
        long c = lr_coefficient(lambda, mu, nu);
        if (c) out.add_term(lambda, c);
    }
    return out;
}

SchurExpansion lr_product(const SchurExpansion& a, const SchurExpansion& b) {
    SchurExpansion out;
    for (const auto& [mu, cm] : a.terms()) {
        for (const auto& [nu, cn] : b.terms()) {
            SchurExpansion piece = lr_product(mu, nu);
            for (const auto& [lambda, c] : piece.terms())
                out.add_term(lambda, cm * cn * c);
        }
    }
    return out;
}

Int flat_weight_dim(const SchurExpansion& x, int n) {
    Int total = 0;
    for (const auto& [lambda, c] : x.terms())
        if (lambda.size() == n) total += c * specht_dim(lambda);
    return total;
}

bool monoidality_check(const Partition& mu, const Partition& nu) {
    const int d = mu.size(), e = nu.size();
    Int lhs = flat_weight_dim(lr_product(mu, nu), d + e);
    Int binom;
    mpz_bin_uiui(binom.get_mpz_t(), d + e, d);
    return lhs == binom * specht_dim(mu) * specht_dim(nu);
}

}  // namespace tca
