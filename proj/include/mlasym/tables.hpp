#pragma once

#include <string>
#include <vector>

#include "mlasym/precision.hpp"

namespace mlasym {
namespace tables {

// A reference cell as printed in the source tables. `bold_pos` is the
// 1-indexed significant digit flagged in the source as deviating (0 = none);
// matching is required at least up to that position. `sign_inconsistent`
// marks the one cell whose printed sign disagrees with the source's own
// cross-table values (k = 2 real part of the coefficient table).
struct Cell {
    std::string printed;
    int bold_pos = 0;
    bool sign_inconsistent = false;
    int required_override = 0;  // explicit match depth when nonzero

    int printed_digits() const;
    int required_digits() const;
};

struct CoeffRow {
    long k;
    Cell re;
    Cell im;
};

// Coefficient table: B_{2k}(pi) at a = 0.99, x = 40 (M = 42), k = 0..6.
const std::vector<CoeffRow>& table1_rows();

struct RemainderColumn {
    std::string a;
    std::string x;        // the x under which the printed values reproduce
    std::string caption_x; // the x stated in the source caption
    long M;
    std::vector<Cell> levels;  // R_M at truncation level k = 0..6
    Cell script_E;
};

// Convergence table columns: (i) a = 0.99 and (ii) a = 0.995. Column (ii)
// reproduces under x = 20 although the source caption says x = 40 for both.
const RemainderColumn& table2_col1();
const RemainderColumn& table2_col2();

struct SweepRow {
    std::string a;
    std::string x;
    long M_printed;   // as printed; the a = 0.90 row prints 21, reproduced by 31
    Cell script_E;
    Cell remainder;   // kmax = 5
    bool out_of_validity;  // a <= 1/3
};

const std::vector<SweepRow>& table3_rows();

// ---------------------------------------------------------------------------
// Digit matching
// ---------------------------------------------------------------------------

BigReal parse_printed(const std::string& printed, long digits10);

// Count of leading significant digits of `printed` reproduced by `computed`:
// the largest m <= printed_digits such that |computed - printed| is at most
// 0.500001 ulp of the m-th digit.
int matched_digits(const BigReal& computed, const Cell& cell);

struct CellCheck {
    int matched = 0;
    int required = 0;
    bool pass = false;
    bool sign_flip_applied = false;
};

// Match `computed` against the cell at its required depth. For the flagged
// sign-inconsistent cell, a full-depth match of the negated value passes and
// is reported via sign_flip_applied.
CellCheck check_cell(const BigReal& computed, const Cell& cell);

}  // namespace tables
}  // namespace mlasym
