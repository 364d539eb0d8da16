#include <zfac/linear.hpp>

#include <zfac/errors.hpp>

namespace zfac {

void LinearSystem::add_row(std::vector<Rational> row, Rational value)
{
    if (row.size() != columns)
        throw UsageError("linear system row has the wrong length");
    matrix.push_back(std::move(row));
    rhs.push_back(std::move(value));
}

std::string_view to_string(LinearVerdict::Kind k)
{
    switch (k) {
    case LinearVerdict::Kind::Unique:
        return "Unique";
    case LinearVerdict::Kind::Underdetermined:
        return "Underdetermined";
    case LinearVerdict::Kind::Infeasible:
        return "Infeasible";
    }
    return "?";
}

LinearVerdict solve_linear(const LinearSystem &system)
{
    const std::size_t rows = system.matrix.size(), cols = system.columns;
    if (system.rhs.size() != rows)
        throw UsageError("linear system rhs length differs from row count");
    for (const auto &r : system.matrix)
        if (r.size() != cols)
            throw UsageError("ragged linear system");

    auto a = system.matrix;
    auto b = system.rhs;
    std::vector<bool> row_used(rows, false), col_used(cols, false);
    std::vector<std::size_t> pivot_col_of_row(rows, cols);

    for (;;) {
        std::size_t pr = rows, pc = cols;
        mpz_class best = 0;
        for (std::size_t c = 0; c < cols; ++c) {
            if (col_used[c])
                continue;
            for (std::size_t r = 0; r < rows; ++r) {
                if (row_used[r] || a[r][c].is_zero())
                    continue;
                const mpz_class mag = abs(a[r][c].num());
                if (pr == rows || mag > best) {
                    best = mag;
                    pr = r;
                    pc = c;
                }
            }
        }
        if (pr == rows)
            break;
        row_used[pr] = col_used[pc] = true;
        pivot_col_of_row[pr] = pc;
        const Rational inv = a[pr][pc].inverse();
        for (auto &v : a[pr])
            v *= inv;
        b[pr] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pr || a[r][pc].is_zero())
                continue;
            const Rational f = a[r][pc];
            for (std::size_t c = 0; c < cols; ++c)
                if (!a[pr][c].is_zero())
                    a[r][c] -= f * a[pr][c];
            b[r] -= f * b[pr];
        }
    }

    LinearVerdict out;
    bool consistent = true;
    for (std::size_t r = 0; r < rows; ++r) {
        if (pivot_col_of_row[r] != cols)
            ++out.rank;
        else if (!b[r].is_zero())
            consistent = false;
    }
    out.kernel_dimension = cols - out.rank;
    if (!consistent) {
        out.kind = LinearVerdict::Kind::Infeasible;
        return out;
    }
    std::vector<Rational> x(cols);
    for (std::size_t r = 0; r < rows; ++r)
        if (pivot_col_of_row[r] != cols)
            x[pivot_col_of_row[r]] = b[r];
    out.kind = out.kernel_dimension == 0 ? LinearVerdict::Kind::Unique
                                         : LinearVerdict::Kind::Underdetermined;
    out.solution = std::move(x);
    return out;
}

} // namespace zfac
