#include "cubforge/linear_solver.hpp"

namespace cubforge {

std::vector<ExactScalar> solve_linear_system(std::vector<std::vector<ExactScalar>> M,
                                             std::vector<ExactScalar> rhs) {
    const std::size_t rows = M.size();
    if (rhs.size() != rows) throw std::invalid_argument("solve: rhs size mismatch");
    const std::size_t cols = rows == 0 ? 0 : M[0].size();
    for (const auto& row : M)
        if (row.size() != cols) throw std::invalid_argument("solve: ragged matrix");
    if (cols > rows)
        throw SingularSystemError("underdetermined system", {});

    // Augment and run one-step fraction-free elimination.
    for (std::size_t r = 0; r < rows; ++r) M[r].push_back(rhs[r]);

    ExactScalar prev_pivot(Rational(1));
    std::vector<std::size_t> pivot_row_of_col(cols);
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t pr = next_row;
        while (pr < rows && M[pr][c].is_zero()) ++pr;
        if (pr == rows) {
            std::vector<int> dep;
            dep.push_back(static_cast<int>(c));
            throw SingularSystemError(
                "singular system: column " + std::to_string(c) +
                    " is dependent on the preceding columns",
                dep);
        }
        if (pr != next_row) std::swap(M[pr], M[next_row]);
        const ExactScalar pivot = M[next_row][c];
        for (std::size_t r = next_row + 1; r < rows; ++r) {
            for (std::size_t j = c + 1; j <= cols; ++j)
                M[r][j] = (pivot * M[r][j] - M[r][c] * M[next_row][j]) / prev_pivot;
            M[r][c] = ExactScalar(Rational(0));
        }
        prev_pivot = pivot;
        pivot_row_of_col[c] = next_row;
        ++next_row;
    }

    // Extra rows must have been eliminated to 0 = 0.
    for (std::size_t r = next_row; r < rows; ++r) {
        if (!M[r][cols].is_zero())
            throw InconsistentSystemError("inconsistent system: residual " +
                                          M[r][cols].str() + " in row " +
                                          std::to_string(r));
    }

    // Back substitution on the triangular top block.
    std::vector<ExactScalar> x(cols, ExactScalar(Rational(0)));
    for (std::size_t c = cols; c-- > 0;) {
        const std::size_t r = pivot_row_of_col[c];
        ExactScalar v = M[r][cols];
        for (std::size_t j = c + 1; j < cols; ++j) v -= M[r][j] * x[j];
        x[c] = v / M[r][c];
    }
    return x;
}

}  // namespace cubforge
