#pragma once

#include <stdexcept>
#include <string>

namespace mlasym {

// Series algebra
struct DivisionBySingularSeries : std::domain_error {
    using std::domain_error::domain_error;
};
struct CompositionRequiresZeroConstantTerm : std::domain_error {
    using std::domain_error::domain_error;
};
struct NotRevertible : std::domain_error {
    using std::domain_error::domain_error;
};

// Special functions
struct GammaPole : std::domain_error {
    using std::domain_error::domain_error;
};

// Series summation / precision management
struct PrecisionBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TruncationOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exponentially small expansion
struct PoleTooCloseToSaddle : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TableOrderUnavailable : std::out_of_range {
    using std::out_of_range::out_of_range;
};
struct ThetaOutOfSector : std::domain_error {
    using std::domain_error::domain_error;
};

struct NonFiniteResult : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mlasym
