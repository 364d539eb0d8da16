#ifndef ZFAC_LINEAR_HPP
#define ZFAC_LINEAR_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include <zfac/rational.hpp>

namespace zfac {

// matrix * v = rhs over the rationals. `columns` is explicit so that systems
// with no rows (or no unknowns) are still well formed.
struct LinearSystem {
    std::size_t columns = 0;
    std::vector<std::vector<Rational>> matrix;
    std::vector<Rational> rhs;

    std::size_t rows() const noexcept { return matrix.size(); }
    void add_row(std::vector<Rational> row, Rational value);
};

struct LinearVerdict {
    enum class Kind { Unique, Underdetermined, Infeasible };

    Kind kind = Kind::Infeasible;
    // Free unknowns are set to zero.
    std::optional<std::vector<Rational>> solution;
    std::size_t kernel_dimension = 0;
    std::size_t rank = 0;
};

std::string_view to_string(LinearVerdict::Kind k);

// Exact Gauss-Jordan elimination. Pivot: largest |numerator| among the
// remaining entries, ties broken by lowest column, then lowest row.
// Throws UsageError on ragged input.
LinearVerdict solve_linear(const LinearSystem &system);

} // namespace zfac

#endif
