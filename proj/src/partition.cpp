#include "tca/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tca {

namespace {

void validate(const std::vector<int>& parts) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    validate(parts_);
}

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) {
    validate(parts_);
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    if (!text.empty()) {
        std::istringstream in(text);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            size_t pos = 0;
            int v;
            try {
                v = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("malformed partition string: " + text);
            }
            if (pos != tok.size())
                throw std::invalid_argument("malformed partition string: " + text);
            parts.push_back(v);
        }
        if (text.back() == ',')
            throw std::invalid_argument("malformed partition string: " + text);
    }
    return Partition(std::move(parts));
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    if (i < 1 || i > rows()) return 0;
    return parts_[i - 1];
}

Partition Partition::conjugate() const {
    std::vector<int> cols;
    if (!parts_.empty()) {
        cols.resize(parts_[0]);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++cols[j];
    }
    return Partition(std::move(cols));
}

Partition Partition::doubled() const {
    std::vector<int> d = parts_;
    for (int& p : d) p *= 2;
    return Partition(std::move(d));
}

bool Partition::is_p_restricted(int p) const {
    if (p == 0) return true;  // char 0: the Schur functor kills nothing
    for (size_t i = 0; i < parts_.size(); ++i) {
        int next = i + 1 < parts_.size() ? parts_[i + 1] : 0;
        if (parts_[i] - next >= p) return false;
    }
    return true;
}

std::vector<int> Partition::hook_lengths() const {
    const Partition conj = conjugate();
    std::vector<int> hooks;
    hooks.reserve(size());
    for (int i = 1; i <= rows(); ++i)
        for (int j = 1; j <= part(i); ++j)
            hooks.push_back(part(i) - j + conj.part(j) - i + 1);
    return hooks;
}

std::string Partition::to_string() const {
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

namespace {

void enumerate_rec(int remaining, int limit, int parts_left,
                   std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    if (parts_left == 0) return;
    for (int first = std::min(remaining, limit); first >= 1; --first) {
        // the tail needs at most parts_left-1 parts of size <= first
        if (static_cast<long>(first) * (parts_left - 1) < remaining - first) continue;
        prefix.push_back(first);
        enumerate_rec(remaining - first, first, parts_left - 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, std::optional<int> max_parts) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
    if (max_parts && *max_parts <= 0)
        throw std::invalid_argument("enumerate_partitions: max_parts must be positive");
    std::vector<Partition> out;
    std::vector<int> prefix;
    enumerate_rec(n, n, max_parts ? *max_parts : n, prefix, out);
    if (n == 0) return {Partition{}};
    return out;
}

std::vector<Int> partition_counts(int n_max) {
    std::vector<Int> p(n_max + 1);
    p[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        Int acc = 0;
        for (int k = 1;; ++k) {
            long g1 = static_cast<long>(k) * (3 * k - 1) / 2;
            long g2 = static_cast<long>(k) * (3 * k + 1) / 2;
            if (g1 > n && g2 > n) break;
            int sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= n) acc += sign * p[n - g1];
            if (g2 <= n) acc += sign * p[n - g2];
        }
        p[n] = acc;
    }
    return p;
}

}  // namespace tca
