#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "etalab/eta/types.hpp"

namespace etalab::report {

using eta::TailIndex;
using mp::BigComplex;
using mp::BigReal;
using mp::Precision;

// "<decimal>[+|-]<decimal>i" with optional whitespace, e.g. "0.1234+56.789i".
// A lone real ("0.5") or imaginary ("2i") part is accepted too. Decimals may
// carry an exponent. ParseError carries the 1-based column.
BigComplex parse_complex(std::string_view text, Precision prec);

BigReal parse_real(std::string_view text, Precision prec);

// Exact integer n: "100000000", "1e8", "2.5e3".
TailIndex parse_index(std::string_view text);

// Comma-separated items, each an index or "lo:hi" (lo, 10 lo, ..., hi).
// The combined list must be strictly increasing.
std::vector<TailIndex> parse_schedule(std::string_view text);

// "lo:hi" with lo < hi.
std::pair<BigReal, BigReal> parse_range(std::string_view text, Precision prec);

// Comma-separated decimals.
std::vector<BigReal> parse_reals(std::string_view text, Precision prec);

}  // namespace etalab::report
