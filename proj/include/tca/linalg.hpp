#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace tca {

/// Field of rationals. Span rows are rescaled to coprime integer
/// entries with positive pivot, so elimination never accumulates
/// denominators.
struct RationalField {
    using Elem = mpq_class;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    bool is_zero(const Elem& a) const { return a == 0; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const { return Elem(1) / a; }
    Elem from_int(long v) const { return Elem(v); }

    void normalize_row(std::vector<Elem>& row) const {
        mpz_class num_gcd = 0, den_lcm = 1;
        for (const Elem& e : row) {
            if (e == 0) continue;
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), e.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), e.get_den().get_mpz_t());
        }
        if (num_gcd == 0) return;
        Elem scale(den_lcm, num_gcd);
        scale.canonicalize();
        // sign of the first nonzero entry becomes positive
        for (const Elem& e : row) {
            if (e != 0) {
                if (e * scale < 0) scale = -scale;
                break;
            }
        }
        for (Elem& e : row) {
            e *= scale;
            e.canonicalize();
        }
    }
};

/// Prime field F_p with canonical representatives 0..p-1.
struct PrimeField {
    long p;
    using Elem = long;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return ((a - b) % p + p) % p; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }
    Elem neg(Elem a) const { return (p - a) % p; }
    Elem inv(Elem a) const {
        // extended Euclid
        long t = 0, nt = 1, r = p, nr = a % p;
        while (nr != 0) {
            long q = r / nr;
            std::swap(t -= q * nt, nt);
            std::swap(r -= q * nr, nr);
        }
        if (r != 1) throw std::domain_error("PrimeField::inv: not invertible");
        return (t % p + p) % p;
    }
    Elem from_int(long v) const { return ((v % p) + p) % p; }

    void normalize_row(std::vector<Elem>& row) const {
        for (Elem e : row) {
            if (e != 0) {
                Elem s = inv(e);
                for (Elem& x : row) x = mul(x, s);
                return;
            }
        }
    }
};

template <class F>
using FVec = std::vector<typename F::Elem>;
template <class F>
using FMat = std::vector<FVec<F>>;

/// Incrementally maintained row space in echelon form (one row per
/// pivot column). insert() returns true when the vector enlarged the
/// span; reduce() returns the remainder of v against the span.
template <class F>
class LinSpan {
public:
    explicit LinSpan(F field, size_t ncols) : field_(field), ncols_(ncols) {}

    FVec<F> reduce(FVec<F> v) const {
        for (const auto& [pc, row] : rows_) {
            if (field_.is_zero(v[pc])) continue;
            // v -= (v[pc] / row[pc]) * row
            auto factor = field_.mul(v[pc], field_.inv(row[pc]));
            for (size_t j = pc; j < ncols_; ++j)
                v[j] = field_.sub(v[j], field_.mul(factor, row[j]));
        }
        return v;
    }

    bool insert(FVec<F> v) {
        v = reduce(std::move(v));
        for (size_t j = 0; j < ncols_; ++j) {
            if (!field_.is_zero(v[j])) {
                field_.normalize_row(v);
                rows_.emplace(j, std::move(v));
                return true;
            }
        }
        return false;
    }

    bool contains(FVec<F> v) const {
        v = reduce(std::move(v));
        for (const auto& e : v)
            if (!field_.is_zero(e)) return false;
        return true;
    }

    size_t dim() const { return rows_.size(); }
    size_t ncols() const { return ncols_; }

    /// Basis rows ordered by pivot column.
    FMat<F> basis() const {
        FMat<F> out;
        out.reserve(rows_.size());
        for (const auto& [pc, row] : rows_) out.push_back(row);
        return out;
    }

private:
    F field_;
    size_t ncols_;
    std::map<size_t, FVec<F>> rows_;
};

/// Nullspace basis of the matrix given by rows, one vector per free
/// column in ascending column order, each normalized.
template <class F>
FMat<F> nullspace(const F& field, const FMat<F>& rows, size_t ncols) {
    LinSpan<F> span(field, ncols);
    for (const auto& r : rows) span.insert(r);
    // full reduction: eliminate pivot columns from the other rows
    FMat<F> rref = span.basis();
    std::vector<size_t> pivots(rref.size());
    for (size_t i = 0; i < rref.size(); ++i) {
        size_t pc = 0;
        while (field.is_zero(rref[i][pc])) ++pc;
        pivots[i] = pc;
        auto scale = field.inv(rref[i][pc]);
        for (auto& e : rref[i]) e = field.mul(e, scale);
    }
    for (size_t i = 0; i < rref.size(); ++i)
        for (size_t k = 0; k < rref.size(); ++k) {
            if (k == i || field.is_zero(rref[k][pivots[i]])) continue;
            auto factor = rref[k][pivots[i]];
            for (size_t j = 0; j < ncols; ++j)
                rref[k][j] = field.sub(rref[k][j], field.mul(factor, rref[i][j]));
        }
    std::vector<bool> is_pivot(ncols, false);
    for (size_t pc : pivots) is_pivot[pc] = true;
    FMat<F> basis;
    for (size_t c = 0; c < ncols; ++c) {
        if (is_pivot[c]) continue;
        FVec<F> v(ncols, field.zero());
        v[c] = field.one();
        for (size_t i = 0; i < rref.size(); ++i)
            v[pivots[i]] = field.neg(rref[i][c]);
        field.normalize_row(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F>
FMat<F> mat_identity(const F& field, size_t n) {
    FMat<F> m(n, FVec<F>(n, field.zero()));
    for (size_t i = 0; i < n; ++i) m[i][i] = field.one();
    return m;
}

template <class F>
FMat<F> mat_mul(const F& field, const FMat<F>& a, const FMat<F>& b) {
    const size_t n = a.size(), k = b.size(), c = b[0].size();
    FMat<F> out(n, FVec<F>(c, field.zero()));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (field.is_zero(a[i][t])) continue;
            for (size_t j = 0; j < c; ++j)
                out[i][j] = field.add(out[i][j], field.mul(a[i][t], b[t][j]));
        }
    return out;
}

template <class F>
size_t mat_rank(const F& field, const FMat<F>& m, size_t ncols) {
    LinSpan<F> span(field, ncols);
    for (const auto& r : m) span.insert(r);
    return span.dim();
}

}  // namespace tca
