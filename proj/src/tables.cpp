#include "mlasym/tables.hpp"

#include <cctype>
#include <cmath>

namespace mlasym {
namespace tables {

int Cell::printed_digits() const {
    int n = 0;
    for (char c : printed) {
        if (c == 'e' || c == 'E') break;
        if (std::isdigit(static_cast<unsigned char>(c))) ++n;
    }
    return n;
}

int Cell::required_digits() const {
    if (required_override > 0) return required_override;
    return bold_pos > 0 ? bold_pos : printed_digits();
}

const std::vector<CoeffRow>& table1_rows() {
    static const std::vector<CoeffRow> rows = {
        {0, {"+3.8975364113e-1", 0, false, 10}, {"-3.6166205223e-3", 0, false, 10}},
        {1, {"-6.4791569264e-3", 0, false, 10}, {"-2.2873163550e-5", 0, false, 10}},
        {2, {"+1.1939771912e-3", 0, true, 10}, {"+2.9428888000e-5", 0, false, 10}},
        {3, {"+6.7326294689e-5", 0, false, 10}, {"-3.3561255923e-7", 0, false, 10}},
        {4, {"+6.4497172230e-6", 0, false, 10}, {"-2.2913466614e-7", 0, false, 10}},
        {5, {"-4.9612005443e-7", 0, false, 10}, {"+4.0896790580e-9", 0, false, 10}},
        {6, {"-3.8100530725e-8", 0, false, 10}, {"+1.6905896799e-9", 0, false, 10}},
    };
    return rows;
}

const RemainderColumn& table2_col1() {
    static const RemainderColumn col = {
        "0.99",
        "40",
        "40",
        42,
        {
            {"1.568955214563456e-19", 4},
            {"1.569130883253406e-19", 7},
            {"1.569133239439717e-19", 9},
            {"1.569133223520415e-19", 11},
            {"1.569133223261265e-19", 13},
            {"1.569133223265555e-19", 14},
            {"1.569133223265644e-19", 16},
        },
        {"1.569133223265642e-19"},
    };
    return col;
}

const RemainderColumn& table2_col2() {
    static const RemainderColumn col = {
        "0.995",
        "20",
        "40",
        20,
        {
            {"1.378997750062528e-09", 6},
            {"1.378910044963445e-09", 6},
            {"1.378909886881488e-09", 8},
            {"1.378909908434786e-09", 11},
            {"1.378909908529609e-09", 12},
            {"1.378909908508309e-09", 14},
            {"1.378909908508144e-09", 15},
        },
        {"1.378909908508192e-09"},
    };
    return col;
}

const std::vector<SweepRow>& table3_rows() {
    static const std::vector<SweepRow> rows = {
        {"0.95", "20", 25, {"-2.521343284521e-11"}, {"-2.521343284522e-11", 13}, false},
        {"0.90", "20", 21, {"-2.706560459479e-13"}, {"-2.706560459478e-13", 13}, false},
        {"0.80", "20", 53, {"-4.827618810882e-20"}, {"-4.827618810882e-20"}, false},
        {"0.70", "15", 68, {"-3.052228407002e-23"}, {"-3.052228407002e-23"}, false},
        {"0.60", "10", 77, {"-6.895973422484e-22"}, {"-6.895973422484e-22"}, false},
        {"0.50", "5", 50, {"-1.106145146730e-12"}, {"-1.106145146730e-12"}, false},
        {"1/3", "3", 81, {"+8.345377837784e-14"}, {"+8.345377837735e-14", 12}, true},
        {"0.25", "3", 324, {"-1.220075244872e-37"}, {"-1.220075244872e-37"}, true},
    };
    return rows;
}

BigReal parse_printed(const std::string& printed, long digits10) {
    PrecisionGuard guard(digits10);
    return BigReal(printed.c_str());
}

namespace {

// ulp of the m-th significant digit of v (v != 0)
BigReal ulp_at(const BigReal& v, int m, long work) {
    PrecisionGuard guard(work);
    BigReal mag = abs(BigReal(v));
    long exp10 = floor_long(log10(mag));
    // guard against log10 landing a hair below an exact power of ten
    BigReal check = pow(BigReal(10), exp10 + 1);
    if (mag >= check) ++exp10;
    return pow(BigReal(10), exp10 - (m - 1));
}

}  // namespace

int matched_digits(const BigReal& computed, const Cell& cell) {
    const long work = 80;
    PrecisionGuard guard(work);
    BigReal expected = parse_printed(cell.printed, work);
    if (expected.is_zero()) return computed.is_zero() ? cell.printed_digits() : 0;
    BigReal diff = abs(at_precision(computed, work) - expected);
    const int total = cell.printed_digits();
    int m = 0;
    for (int probe = 1; probe <= total; ++probe) {
        BigReal tol = ulp_at(expected, probe, work) * BigReal("0.500001");
        if (diff <= tol)
            m = probe;
        else
            break;
    }
    return m;
}

CellCheck check_cell(const BigReal& computed, const Cell& cell) {
    CellCheck out;
    out.required = cell.required_digits();
    out.matched = matched_digits(computed, cell);
    out.pass = out.matched >= out.required;
    if (!out.pass && cell.sign_inconsistent) {
        Cell flipped = cell;
        flipped.sign_inconsistent = false;
        int m = matched_digits(BigReal(-computed), flipped);
        if (m >= out.required) {
            out.matched = m;
            out.pass = true;
            out.sign_flip_applied = true;
        }
    }
    return out;
}

}  // namespace tables
}  // namespace mlasym
