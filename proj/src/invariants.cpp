#include "tca/invariants.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>

namespace tca {

namespace {

size_t pow_size(int m, int n) {
    size_t d = 1;
    for (int i = 0; i < n; ++i) d *= static_cast<size_t>(m);
    return d;
}

void check_cap(int m, int n, size_t cap) {
    double d = std::pow(static_cast<double>(m), n);
    if (d > static_cast<double>(cap))
        throw std::invalid_argument("word space dimension m^n exceeds the configured cap");
}

// Letters of the word with the given basis index, big-endian.
void decode_word(size_t idx, int m, int n, std::vector<int>& letters) {
    letters.resize(n);
    for (int t = n - 1; t >= 0; --t) {
        letters[t] = static_cast<int>(idx % m);
        idx /= m;
    }
}

template <class F>
typename F::Elem trace(const F& field, const FMat<F>& g) {
    auto acc = field.zero();
    for (size_t i = 0; i < g.size(); ++i) acc = field.add(acc, g[i][i]);
    return acc;
}

// Row w' of rho_n(g): entry at w is prod_t g[w'_t][w_t].
template <class F>
FVec<F> kronecker_row(const F& field, const FMat<F>& g, int m, int n, size_t row_idx) {
    const size_t dim = pow_size(m, n);
    std::vector<int> wr, wc;
    decode_word(row_idx, m, n, wr);
    FVec<F> row(dim, field.zero());
    for (size_t c = 0; c < dim; ++c) {
        decode_word(c, m, n, wc);
        auto e = field.one();
        bool zero = false;
        for (int t = 0; t < n && !zero; ++t) {
            e = field.mul(e, g[wr[t]][wc[t]]);
            zero = field.is_zero(e);
        }
        row[c] = zero ? field.zero() : e;
    }
    return row;
}

template <class F>
FMat<F> fixed_space_basis(const F& field, const MatrixGroupT<F>& group, int n) {
    const size_t dim = pow_size(group.dim, n);
    FMat<F> rows;
    for (size_t e = 1; e < group.elements.size(); ++e) {  // skip identity
        const FMat<F>& g = group.elements[e];
        for (size_t r = 0; r < dim; ++r) {
            FVec<F> row = kronecker_row(field, g, group.dim, n, r);
            row[r] = field.sub(row[r], field.one());
            rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) {  // trivial group: everything is fixed
        FMat<F> basis;
        for (size_t i = 0; i < dim; ++i) {
            FVec<F> v(dim, field.zero());
            v[i] = field.one();
            basis.push_back(std::move(v));
        }
        return basis;
    }
    return nullspace(field, rows, dim);
}

template <class F>
FVec<F> concat_product(const F& field, const FVec<F>& a, const FVec<F>& b) {
    FVec<F> out(a.size() * b.size(), field.zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (field.is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (field.is_zero(b[j])) continue;
            out[i * b.size() + j] = field.mul(a[i], b[j]);
        }
    }
    return out;
}

template <class F>
FVec<F> permute_vec(const F& field, const FVec<F>& v, const std::vector<size_t>& map) {
    FVec<F> out(v.size(), field.zero());
    for (size_t i = 0; i < v.size(); ++i) out[map[i]] = v[i];
    return out;
}

// Products of lower-degree invariant bases, closed under adjacent
// transpositions until the span stabilizes.
template <class F>
LinSpan<F> product_span_impl(const F& field, const MatrixGroupT<F>& group, int n,
                             const std::vector<FMat<F>>& bases_by_degree) {
    const size_t dim = pow_size(group.dim, n);
    LinSpan<F> span(field, dim);
    std::deque<FVec<F>> worklist;
    for (int i = 1; i < n; ++i) {
        for (const auto& u : bases_by_degree[i]) {
            for (const auto& v : bases_by_degree[n - i]) {
                FVec<F> prod = concat_product(field, u, v);
                if (span.insert(prod)) worklist.push_back(std::move(prod));
            }
        }
    }
    std::vector<std::vector<size_t>> maps;
    for (int t = 0; t + 1 < n; ++t)
        maps.push_back(transposition_index_map(group.dim, n, t));
    const size_t iteration_cap = static_cast<size_t>(n) * dim + 1;
    size_t grows = 0;
    while (!worklist.empty()) {
        FVec<F> v = std::move(worklist.front());
        worklist.pop_front();
        for (const auto& map : maps) {
            FVec<F> moved = permute_vec(field, v, map);
            if (span.insert(moved)) {
                if (++grows > iteration_cap)
                    throw std::runtime_error("product_span: stability closure failed to stabilize");
                worklist.push_back(std::move(moved));
            }
        }
    }
    return span;
}

template <class F>
std::vector<FMat<F>> bases_up_to(const F& field, const MatrixGroupT<F>& group, int N,
                                 size_t dim_cap) {
    std::vector<FMat<F>> bases(N + 1);
    for (int i = 1; i <= N; ++i) {
        check_cap(group.dim, i, dim_cap);
        bases[i] = fixed_space_basis(field, group, i);
    }
    return bases;
}

// Expands g . monomial_w = prod_j (sum_t g[t][w_j] x_{t,j}) into the
// multilinear monomial basis: the polynomial-ring route.
template <class F>
void expand_action(const F& field, const FMat<F>& g, const std::vector<int>& w,
                   int pos, size_t idx_prefix, const typename F::Elem& coeff,
                   FVec<F>& out) {
    const int m = static_cast<int>(g.size());
    if (pos == static_cast<int>(w.size())) {
        out[idx_prefix] = field.add(out[idx_prefix], coeff);
        return;
    }
    for (int t = 0; t < m; ++t) {
        const auto& entry = g[t][w[pos]];
        if (field.is_zero(entry)) continue;
        expand_action(field, g, w, pos + 1, idx_prefix * m + t, field.mul(coeff, entry), out);
    }
}

template <class F>
size_t multilinear_fixed_dim(const F& field, const MatrixGroupT<F>& group, int n) {
    const size_t dim = pow_size(group.dim, n);
    FMat<F> rows;
    std::vector<int> w;
    for (size_t e = 1; e < group.elements.size(); ++e) {
        const FMat<F>& g = group.elements[e];
        // columns of (action - I), assembled monomial by monomial
        FMat<F> action(dim, FVec<F>(dim, field.zero()));
        for (size_t c = 0; c < dim; ++c) {
            decode_word(c, group.dim, n, w);
            FVec<F> col(dim, field.zero());
            expand_action(field, g, w, 0, 0, field.one(), col);
            for (size_t r = 0; r < dim; ++r) action[r][c] = col[r];
        }
        for (size_t r = 0; r < dim; ++r) {
            action[r][r] = field.sub(action[r][r], field.one());
            rows.push_back(action[r]);
        }
    }
    if (rows.empty()) return dim;
    return nullspace(field, rows, dim).size();
}

}  // namespace

std::vector<size_t> transposition_index_map(int m, int n, int t) {
    if (t < 0 || t + 1 >= n) throw std::invalid_argument("transposition_index_map: bad position");
    const size_t dim = pow_size(m, n);
    // strides of positions t and t+1 in the big-endian encoding
    size_t stride_hi = 1;
    for (int i = t + 2; i < n; ++i) stride_hi *= m;  // stride of position t+1
    const size_t stride_lo = stride_hi;
    const size_t stride_t = stride_hi * m;
    std::vector<size_t> map(dim);
    for (size_t idx = 0; idx < dim; ++idx) {
        const int a = static_cast<int>(idx / stride_t % m);
        const int b = static_cast<int>(idx / stride_lo % m);
        map[idx] = idx + (b - a) * static_cast<long>(stride_t) + (a - b) * static_cast<long>(stride_lo);
    }
    return map;
}

std::vector<Int> molien_dims(const MatrixGroup& group, int N) {
    std::vector<Int> dims(N + 1);
    dims[0] = 1;
    if (group.field().kind == FieldSpec::Kind::rational) {
        const auto& g = group.rational();
        RationalField field;
        std::vector<Rat> traces;
        for (const auto& el : g.elements) traces.push_back(trace(field, el));
        for (int n = 1; n <= N; ++n) {
            Rat acc = 0;
            for (auto& t : traces) {
                Rat p = 1;
                for (int i = 0; i < n; ++i) p *= t;
                acc += p;
            }
            acc /= Rat(static_cast<long>(g.elements.size()));
            acc.canonicalize();
            if (acc.get_den() != 1 || acc < 0)
                throw std::runtime_error("molien_dims: trace average is not a nonnegative integer");
            dims[n] = acc.get_num();
        }
        return dims;
    }
    const auto& g = group.prime();
    PrimeField field = g.field;
    if (g.elements.size() % field.p == 0)
        throw std::invalid_argument(
            "molien_dims: p divides the group order; use fixed_space for the modular case");
    const long inv_order = field.inv(field.from_int(static_cast<long>(g.elements.size())));
    for (int n = 1; n <= N; ++n) {
        check_cap(g.dim, n, kFixedSpaceDimCap);
        const size_t dim = pow_size(g.dim, n);
        // averaging projector: idempotent, so rank equals the fixed-space dimension
        FMat<PrimeField> proj(dim, FVec<PrimeField>(dim, 0));
        for (const auto& el : g.elements)
            for (size_t r = 0; r < dim; ++r) {
                FVec<PrimeField> row = kronecker_row(field, el, g.dim, n, r);
                for (size_t c = 0; c < dim; ++c)
                    proj[r][c] = field.add(proj[r][c], field.mul(inv_order, row[c]));
            }
        dims[n] = static_cast<long>(mat_rank(field, proj, dim));
    }
    return dims;
}

std::pair<SnCharacter, std::map<Partition, Int>> equivariant_character(
    const MatrixGroup& group, int n) {
    if (group.field().kind != FieldSpec::Kind::rational)
        throw std::invalid_argument(
            "equivariant_character: character-theoretic decomposition needs characteristic 0; "
            "use fixed_space over prime fields");
    if (n < 1 || n > 8)
        throw std::invalid_argument("equivariant_character: refusing n outside 1..8");
    const auto& g = group.rational();
    RationalField field;
    // trace(g^l) for every element, l = 1..n
    std::vector<std::vector<Rat>> power_traces;
    for (const auto& el : g.elements) {
        std::vector<Rat> tr(n + 1);
        FMat<RationalField> p = el;
        tr[1] = trace(field, p);
        for (int l = 2; l <= n; ++l) {
            p = mat_mul(field, p, el);
            tr[l] = trace(field, p);
        }
        power_traces.push_back(std::move(tr));
    }
    SnCharacter chi;
    chi.n = n;
    for (const Partition& rho : enumerate_partitions(n)) {
        Rat acc = 0;
        for (const auto& tr : power_traces) {
            Rat prod = 1;
            for (int part : rho.parts()) prod *= tr[part];
            acc += prod;
        }
        acc /= Rat(static_cast<long>(g.elements.size()));
        acc.canonicalize();
        chi.values[rho] = acc;
    }
    return {chi, specht_multiplicities(chi)};
}

InvariantSpace fixed_space(const MatrixGroup& group, int n, size_t dim_cap) {
    check_cap(group.dim(), n, dim_cap);
    InvariantSpace out;
    out.degree = n;
    out.m = group.dim();
    out.field = group.field();
    if (group.field().kind == FieldSpec::Kind::rational) {
        RationalField field;
        for (auto& v : fixed_space_basis(field, group.rational(), n))
            out.rational_basis.push_back(std::move(v));
    } else {
        PrimeField field = group.prime().field;
        for (auto& v : fixed_space_basis(field, group.prime(), n))
            out.prime_basis.push_back(std::move(v));
    }
    return out;
}

InvariantSpace product_span(const MatrixGroup& group, int n, size_t dim_cap) {
    InvariantSpace out;
    out.degree = n;
    out.m = group.dim();
    out.field = group.field();
    if (group.field().kind == FieldSpec::Kind::rational) {
        RationalField field;
        const auto& g = group.rational();
        auto bases = bases_up_to(field, g, n, dim_cap);
        for (auto& v : product_span_impl(field, g, n, bases).basis())
            out.rational_basis.push_back(std::move(v));
    } else {
        const auto& g = group.prime();
        PrimeField field = g.field;
        auto bases = bases_up_to(field, g, n, dim_cap);
        for (auto& v : product_span_impl(field, g, n, bases).basis())
            out.prime_basis.push_back(std::move(v));
    }
    return out;
}

std::vector<long> new_generators_dims(const MatrixGroup& group, int N, size_t dim_cap) {
    std::vector<long> result(N);
    auto run = [&](const auto& field, const auto& g) {
        auto bases = bases_up_to(field, g, N, dim_cap);
        for (int n = 1; n <= N; ++n) {
            auto span = product_span_impl(field, g, n, bases);
            result[n - 1] = static_cast<long>(bases[n].size() - span.dim());
        }
    };
    if (group.field().kind == FieldSpec::Kind::rational)
        run(RationalField{}, group.rational());
    else
        run(group.prime().field, group.prime());
    return result;
}

bool power_sum_outside_products(const MatrixGroup& group, int n) {
    const int m = group.dim();
    const size_t dim = pow_size(m, n);
    // indices of the constant words (i, i, ..., i)
    std::vector<size_t> constant_words;
    for (int i = 0; i < m; ++i) {
        size_t idx = 0;
        for (int t = 0; t < n; ++t) idx = idx * m + i;
        constant_words.push_back(idx);
    }
    auto run = [&](const auto& field, const auto& g) {
        auto bases = bases_up_to(field, g, n, kFixedSpaceDimCap);
        auto span = product_span_impl(field, g, n, bases);
        FVec<std::decay_t<decltype(field)>> v(dim, field.zero());
        for (size_t idx : constant_words) v[idx] = field.one();
        return !span.contains(v);
    };
    if (group.field().kind == FieldSpec::Kind::rational)
        return run(RationalField{}, group.rational());
    return run(group.prime().field, group.prime());
}

bool flat_weight_crosscheck(const MatrixGroup& group, int n, size_t dim_cap) {
    check_cap(group.dim(), n, dim_cap);
    size_t poly_dim, word_dim;
    if (group.field().kind == FieldSpec::Kind::rational) {
        RationalField field;
        poly_dim = multilinear_fixed_dim(field, group.rational(), n);
        word_dim = fixed_space_basis(field, group.rational(), n).size();
    } else {
        PrimeField field = group.prime().field;
        poly_dim = multilinear_fixed_dim(field, group.prime(), n);
        word_dim = fixed_space_basis(field, group.prime(), n).size();
    }
    return poly_dim == word_dim;
}

}  // namespace tca
