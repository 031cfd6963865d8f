#include "tca/dims.hpp"

#include <stdexcept>

namespace tca {

Int schur_dim(const Partition& lambda, int m) {
    if (lambda.rows() > m) return 0;
    Int num = 1, den = 1;
    const Partition conj = lambda.conjugate();
    for (int i = 1; i <= lambda.rows(); ++i) {
        for (int j = 1; j <= lambda.part(i); ++j) {
            num *= m + j - i;
            den *= lambda.part(i) - j + conj.part(j) - i + 1;
        }
    }
    // single exact division at the end keeps every intermediate integral
    Int q = num / den;
    return q;
}

Int specht_dim(const Partition& lambda) {
    if (lambda.empty()) return 1;  // unit object convention
    Int num;
    mpz_fac_ui(num.get_mpz_t(), lambda.size());
    Int den = 1;
    for (int h : lambda.hook_lengths()) den *= h;
    return num / den;
}

namespace {

// Places values step+1..n one at a time; a cell is addable when its
// row is shorter than the row above.
long syt_rec(const Partition& shape, std::vector<int>& filled, int remaining) {
    if (remaining == 0) return 1;
    long total = 0;
    for (int r = 0; r < shape.rows(); ++r) {
        if (filled[r] >= shape.parts()[r]) continue;
        if (r > 0 && filled[r] >= filled[r - 1]) continue;
        ++filled[r];
        total += syt_rec(shape, filled, remaining - 1);
        --filled[r];
    }
    return total;
}

long ssyt_rec(const Partition& shape, std::vector<std::vector<int>>& fill,
              int m, int r, int c) {
    if (r == shape.rows()) return 1;
    int nr = r, nc = c + 1;
    if (nc == shape.parts()[r]) { nr = r + 1; nc = 0; }
    int lo = 1;
    if (c > 0) lo = std::max(lo, fill[r][c - 1]);                 // rows weakly increase
    if (r > 0 && c < shape.parts()[r - 1]) lo = std::max(lo, fill[r - 1][c] + 1);  // columns strictly
    long total = 0;
    for (int v = lo; v <= m; ++v) {
        fill[r][c] = v;
        total += ssyt_rec(shape, fill, m, nr, nc);
    }
    return total;
}

}  // namespace

long syt_count_oracle(const Partition& lambda) {
    if (lambda.size() > 12)
        throw std::invalid_argument("syt_count_oracle: refusing |lambda| > 12");
    if (lambda.empty()) return 1;
    std::vector<int> filled(lambda.rows(), 0);
    return syt_rec(lambda, filled, lambda.size());
}

long ssyt_count_oracle(const Partition& lambda, int m) {
    if (lambda.size() > 10 || m > 5)
        throw std::invalid_argument("ssyt_count_oracle: refusing |lambda| > 10 or m > 5");
    if (lambda.empty()) return 1;
    if (m == 0) return 0;
    std::vector<std::vector<int>> fill(lambda.rows());
    for (int r = 0; r < lambda.rows(); ++r) fill[r].resize(lambda.parts()[r]);
    return ssyt_rec(lambda, fill, m, 0, 0);
}

int two_row_length_estimate(long n, long p) {
    if (n < 1 || p < 2)
        throw std::invalid_argument("two_row_length_estimate: need n >= 1, p >= 2");
    // largest e with 2 * p^e <= n + 1
    int e = 0;
    Int pk = p;
    while (2 * pk <= n + 1) {
        ++e;
        pk *= p;
    }
    return e;
}

LengthOracle char_zero_lengths() {
    LengthOracle oracle;
    oracle.characteristic = 0;
    oracle.evaluate = [](const Partition&) -> std::optional<Int> { return Int(1); };
    return oracle;
}

LengthOracle two_row_estimate_lengths(long p) {
    LengthOracle oracle;
    oracle.characteristic = static_cast<int>(p);
    oracle.evaluate = [p](const Partition& lambda) -> std::optional<Int> {
        const auto& parts = lambda.parts();
        bool all_twos = true;
        for (int pt : parts) all_twos &= (pt == 2);
        if (all_twos && !parts.empty())  // shape (2^m)
            return Int(std::max(1, two_row_length_estimate(parts.size(), p)));
        if (parts.size() == 2 && parts[0] == parts[1])  // shape (m,m)
            return Int(std::max(1, two_row_length_estimate(parts[0], p)));
        return std::nullopt;
    };
    return oracle;
}

}  // namespace tca
