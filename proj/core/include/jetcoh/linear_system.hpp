#pragma once

#include "jetcoh/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace jetcoh {

struct LinearSolution {
    bool consistent = false;
    std::size_t rank = 0;
    /// Free variables set to zero. Empty when inconsistent.
    std::vector<Rational> particular;
    /// One basis vector per free variable (value 1 there, 0 at the other free ones).
    std::vector<std::vector<Rational>> nullspace;
    std::vector<std::size_t> free_columns;
};

/// Exact sparse Gaussian elimination over ℚ. Rows are reduced as they arrive,
/// so duplicated or dependent equations cost one reduction and no storage.
/// Pivots are taken at the lowest column index, so earlier columns are
/// preferred as basic variables.
class SparseLinearSystem {
public:
    using Entry = std::pair<std::size_t, Rational>;

    explicit SparseLinearSystem(std::size_t unknowns);

    /// Σ coeff_j x_j = rhs. Entries may be unsorted and repeat a column.
    void add_equation(std::vector<Entry> row, const Rational& rhs = Rational(0));

    std::size_t unknowns() const noexcept { return n_; }
    std::size_t equations() const noexcept { return equations_; }
    std::size_t rank() const noexcept { return rank_; }
    bool inconsistent() const noexcept { return inconsistent_; }

    LinearSolution solve() const;

private:
    using Row = std::vector<Entry>;  // sorted by column; column n_ is the right-hand side

    std::size_t n_;
    std::size_t equations_ = 0;
    std::size_t rank_ = 0;
    bool inconsistent_ = false;
    std::vector<Row> pivots_;  // pivots_[c] has leading entry 1 at column c, or is empty
};

}  // namespace jetcoh
