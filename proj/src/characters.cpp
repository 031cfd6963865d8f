#include "tca/characters.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace tca {

Perm perm_identity(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

Perm perm_inverse(const Perm& sigma) {
    Perm inv(sigma.size());
    for (size_t i = 0; i < sigma.size(); ++i) inv[sigma[i]] = static_cast<int>(i);
    return inv;
}

Perm perm_compose(const Perm& sigma, const Perm& tau) {
    Perm out(sigma.size());
    for (size_t i = 0; i < sigma.size(); ++i) out[i] = sigma[tau[i]];
    return out;
}

Word sn_act(const Perm& sigma, const Word& w) {
    if (sigma.size() != w.letters.size())
        throw std::invalid_argument("sn_act: permutation degree != word degree");
    const Perm inv = perm_inverse(sigma);
    Word out;
    out.letters.resize(w.letters.size());
    for (size_t i = 0; i < w.letters.size(); ++i)
        out.letters[i] = w.letters[inv[i]];
    return out;
}

Int cycle_type_class_size(const Partition& rho) {
    Int num;
    mpz_fac_ui(num.get_mpz_t(), rho.size());
    Int den = 1;
    int run_value = 0, run_len = 0;
    auto flush = [&]() {
        for (int k = 1; k <= run_len; ++k) den *= k;  // m_i!
    };
    for (int part : rho.parts()) {
        if (part != run_value) {
            flush();
            run_value = part;
            run_len = 0;
        }
        ++run_len;
        den *= part;  // one factor of i per occurrence
    }
    flush();
    return num / den;
}

namespace {

// Beta-set of lambda padded to a fixed length L: {lambda_i + (L - i)}.
std::vector<int> beta_set(const Partition& lambda, int len) {
    std::vector<int> beta(len);
    for (int i = 1; i <= len; ++i) beta[i - 1] = lambda.part(i) + (len - i);
    return beta;
}

Partition from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const int len = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 1; i <= len; ++i) {
        int p = beta[i - 1] - (len - i);
        if (p > 0) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

long long mn_rec(const Partition& lambda, const std::vector<int>& rho, size_t k,
                 std::map<std::pair<Partition, size_t>, long long>& memo) {
    if (k == rho.size()) return lambda.empty() ? 1 : 0;
    auto key = std::make_pair(lambda, k);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int t = rho[k];
    const int len = lambda.rows() + 1;
    std::vector<int> beta = beta_set(lambda, len);
    long long total = 0;
    for (int i = 0; i < len; ++i) {
        const int b = beta[i];
        if (b < t) continue;
        const int target = b - t;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int crossings = 0;  // beta entries strictly between target and b
        for (int x : beta)
            if (x > target && x < b) ++crossings;
        std::vector<int> next = beta;
        next[i] = target;
        const long long sign = (crossings % 2 == 0) ? 1 : -1;
        total += sign * mn_rec(from_beta(next), rho, k + 1, memo);
    }
    memo[key] = total;
    return total;
}

}  // namespace

long long murnaghan_nakayama(const Partition& lambda, const Partition& rho) {
    if (lambda.size() != rho.size())
        throw std::invalid_argument("murnaghan_nakayama: |lambda| != |rho|");
    std::map<std::pair<Partition, size_t>, long long> memo;
    return mn_rec(lambda, rho.parts(), 0, memo);
}

CharacterTable::CharacterTable(int n) : n_(n) {
    if (n < 1 || n > 10)
        throw std::invalid_argument("character_table: refusing n outside 1..10");
    shapes_ = enumerate_partitions(n);
    for (size_t i = 0; i < shapes_.size(); ++i) index_[shapes_[i]] = i;
    values_.resize(shapes_.size());
    for (size_t r = 0; r < shapes_.size(); ++r) {
        values_[r].resize(shapes_.size());
        for (size_t c = 0; c < shapes_.size(); ++c)
            values_[r][c] = murnaghan_nakayama(shapes_[r], shapes_[c]);
    }
}

long long CharacterTable::value(const Partition& lambda, const Partition& rho) const {
    auto r = index_.find(lambda);
    auto c = index_.find(rho);
    if (r == index_.end() || c == index_.end())
        throw std::invalid_argument("character_table: partition is not of degree n");
    return values_[r->second][c->second];
}

const CharacterTable& character_table(int n) {
    static std::mutex mu;
    static std::map<int, CharacterTable> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, CharacterTable(n)).first;
    return it->second;
}

SnCharacter tensor_power_character(int m, int n) {
    if (n < 1 || n > 10)
        throw std::invalid_argument("tensor_power_character: refusing n outside 1..10");
    SnCharacter chi;
    chi.n = n;
    for (const Partition& rho : enumerate_partitions(n)) {
        Int v;
        mpz_ui_pow_ui(v.get_mpz_t(), m, rho.rows());
        chi.values[rho] = Rat(v);
    }
    return chi;
}

std::map<Partition, Int> specht_multiplicities(const SnCharacter& chi) {
    const CharacterTable& table = character_table(chi.n);
    Int fact;
    mpz_fac_ui(fact.get_mpz_t(), chi.n);
    std::map<Partition, Int> mult;
    for (const Partition& lambda : table.shapes()) {
        Rat acc = 0;
        for (const Partition& rho : table.shapes()) {
            auto it = chi.values.find(rho);
            if (it == chi.values.end())
                throw std::invalid_argument("specht_multiplicities: missing cycle type value");
            acc += Rat(cycle_type_class_size(rho)) *
                   Rat(static_cast<long>(table.value(lambda, rho))) * it->second;
        }
        acc /= Rat(fact);
        acc.canonicalize();
        if (acc.get_den() != 1 || acc < 0)
            throw std::runtime_error("specht_multiplicities: non-integral or negative multiplicity");
        mult[lambda] = acc.get_num();
    }
    return mult;
}

std::map<Partition, Int> schur_weyl_decompose(int m, int n) {
    if (n < 1 || n > 8)
        throw std::invalid_argument("schur_weyl_decompose: refusing n outside 1..8");
    if (m < 1) throw std::invalid_argument("schur_weyl_decompose: need m >= 1");
    return specht_multiplicities(tensor_power_character(m, n));
}

}  // namespace tca
