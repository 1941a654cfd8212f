#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "cubforge/exact_scalar.hpp"

namespace cubforge {

class SingularSystemError : public std::runtime_error {
public:
    SingularSystemError(std::string what, std::vector<int> dependent_columns)
        : std::runtime_error(std::move(what)),
          dependent_columns_(std::move(dependent_columns)) {}
    const std::vector<int>& dependent_columns() const { return dependent_columns_; }

private:
    std::vector<int> dependent_columns_;
};

class InconsistentSystemError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Solves M x = rhs exactly by fraction-free (Bareiss) elimination with
// deterministic pivoting: the pivot row is the first row with a nonzero
// entry in the column. M may have more rows than columns; the extra rows
// must be consistent or InconsistentSystemError is thrown. A rank-deficient
// column set raises SingularSystemError naming the dependent columns.
std::vector<ExactScalar> solve_linear_system(std::vector<std::vector<ExactScalar>> M,
                                             std::vector<ExactScalar> rhs);

}  // namespace cubforge
