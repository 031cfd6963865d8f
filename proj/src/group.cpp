#include "tca/group.hpp"

#include <cstdlib>
#include <deque>
#include <set>
#include <stdexcept>

namespace tca {

FieldSpec FieldSpec::prime(long p) {
    if (p < 2) throw std::invalid_argument("FieldSpec: p must be a prime >= 2");
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("FieldSpec: p is not prime");
    return {Kind::prime, p};
}

int MatrixGroup::dim() const {
    return std::visit([](const auto& g) { return g.dim; }, impl_);
}

size_t MatrixGroup::order() const {
    return std::visit([](const auto& g) { return g.elements.size(); }, impl_);
}

const MatrixGroupT<RationalField>& MatrixGroup::rational() const {
    return std::get<MatrixGroupT<RationalField>>(impl_);
}

const MatrixGroupT<PrimeField>& MatrixGroup::prime() const {
    return std::get<MatrixGroupT<PrimeField>>(impl_);
}

size_t default_group_cap() {
    if (const char* env = std::getenv("TCA_GROUP_CLOSURE_CAP")) {
        long v = std::atol(env);
        if (v > 0) return static_cast<size_t>(v);
    }
    return 10000;
}

namespace {

template <class F>
MatrixGroupT<F> close_impl(const F& field, int dim,
                           const std::vector<FMat<F>>& generators, size_t cap) {
    for (const auto& g : generators) {
        if (g.size() != static_cast<size_t>(dim))
            throw std::invalid_argument("close_group: generator size mismatch");
        for (const auto& row : g)
            if (row.size() != static_cast<size_t>(dim))
                throw std::invalid_argument("close_group: generator size mismatch");
        if (mat_rank(field, g, dim) != static_cast<size_t>(dim))
            throw std::invalid_argument("close_group: singular generator");
    }
    MatrixGroupT<F> group{field, dim, {}};
    std::set<FMat<F>> seen;
    std::deque<FMat<F>> frontier;
    const FMat<F> id = mat_identity(field, dim);
    group.elements.push_back(id);
    seen.insert(id);
    frontier.push_back(id);
    // products of generators exhaust the group: each generator has
    // finite order once the closure is finite, so inverses are powers
    while (!frontier.empty()) {
        FMat<F> cur = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& g : generators) {
            FMat<F> next = mat_mul(field, cur, g);
            if (seen.insert(next).second) {
                if (group.elements.size() >= cap)
                    throw std::runtime_error("close_group: group too large or infinite (cap exceeded)");
                group.elements.push_back(next);
                frontier.push_back(next);
            }
        }
    }
    return group;
}

}  // namespace

MatrixGroup close_group(const GroupInput& input, size_t cap) {
    if (cap == 0) cap = default_group_cap();
    if (input.dim <= 0) throw std::invalid_argument("close_group: matrix size must be positive");
    if (input.generators.empty())
        throw std::invalid_argument("close_group: at least one generator required");
    if (input.field.kind == FieldSpec::Kind::rational) {
        RationalField field;
        std::vector<FMat<RationalField>> gens;
        for (const auto& g : input.generators) {
            FMat<RationalField> m;
            for (const auto& row : g) m.emplace_back(row.begin(), row.end());
            gens.push_back(std::move(m));
        }
        return MatrixGroup(input.field, close_impl(field, input.dim, gens, cap));
    }
    PrimeField field{input.field.p};
    std::vector<FMat<PrimeField>> gens;
    for (const auto& g : input.generators) {
        FMat<PrimeField> m;
        for (const auto& row : g) {
            FVec<PrimeField> r;
            for (const Rat& e : row) {
                if (e.get_den() != 1)
                    throw std::invalid_argument(
                        "close_group: prime-field generators must have integer entries");
                r.push_back(field.from_int(mpz_class(e.get_num()).get_si()));
            }
            m.push_back(std::move(r));
        }
        gens.push_back(std::move(m));
    }
    return MatrixGroup(input.field, close_impl(field, input.dim, gens, cap));
}

}  // namespace tca
