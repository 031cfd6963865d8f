#pragma once

#include <string>
#include <variant>
#include <vector>

#include "tca/linalg.hpp"
#include "tca/partition.hpp"

namespace tca {

struct FieldSpec {
    enum class Kind { rational, prime };
    Kind kind = Kind::rational;
    long p = 0;  // set when kind == prime

    static FieldSpec rational() { return {Kind::rational, 0}; }
    static FieldSpec prime(long p);
    bool operator==(const FieldSpec&) const = default;
};

/// Generators as they arrive from a group file: exact rational entries
/// (integers for prime fields, reduced mod p on closure).
struct GroupInput {
    FieldSpec field;
    int dim = 0;
    std::vector<std::vector<std::vector<Rat>>> generators;
};

template <class F>
struct MatrixGroupT {
    F field;
    int dim = 0;
    std::vector<FMat<F>> elements;  // identity first, then BFS order
};

/// A finite group of invertible matrices over an exact field, stored
/// with its full closure in deterministic BFS order.
class MatrixGroup {
public:
    using Impl = std::variant<MatrixGroupT<RationalField>, MatrixGroupT<PrimeField>>;

    MatrixGroup(FieldSpec spec, Impl impl) : spec_(spec), impl_(std::move(impl)) {}

    const FieldSpec& field() const { return spec_; }
    int dim() const;
    size_t order() const;
    const Impl& impl() const { return impl_; }

    const MatrixGroupT<RationalField>& rational() const;
    const MatrixGroupT<PrimeField>& prime() const;

private:
    FieldSpec spec_;
    Impl impl_;
};

/// Breadth-first closure of the generators under multiplication.
/// Throws when a generator is singular or the closure exceeds cap.
/// The cap default can be overridden by TCA_GROUP_CLOSURE_CAP.
MatrixGroup close_group(const GroupInput& input, size_t cap = 0);

size_t default_group_cap();

}  // namespace tca
