// Published tables of ν(T_j(k)) near β(k,16) and β(k,17), and the
// comparison table for s(n) <= β(n-1,n) <= ē(n). Values are transcribed, not
// computed; ">=" cells are stored as Val2::at_least.
#pragma once

#include "sunexp/twoadic.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace sunexp::tables {

struct ValuationRow {
  unsigned row_nu;    // ν(k - (n-1)) for this row
  bool open_ended;    // row label is ">= row_nu"
  std::array<Val2, 4> cells;
  unsigned bold;      // boldface row minimum, i.e. β(k, n)
};

struct ValuationTable {
  std::string id;
  std::uint64_t n;             // β(k, n) is the quantity the table explains
  std::uint64_t first_column;  // columns are j = first_column .. first_column+3
  std::vector<ValuationRow> rows;

  std::uint64_t base() const { return n - 1; }
};

namespace detail {
constexpr Val2 x(unsigned v) { return Val2::exact(v); }
constexpr Val2 ge(unsigned v) { return Val2::at_least(v); }
}  // namespace detail

inline const ValuationTable& table_1_5() {
  using detail::ge;
  using detail::x;
  static const ValuationTable table{
      "1.5", 16, 16,
      {
          {7, false, {x(24), x(19), x(20), x(20)}, 19},
          {8, false, {x(25), x(20), x(21), x(21)}, 20},
          {9, false, {x(26), x(21), x(22), x(22)}, 21},
          {10, false, {x(27), x(22), ge(24), ge(24)}, 22},
          {11, false, {ge(29), ge(24), x(23), x(23)}, 23},
          {12, true, {x(28), x(23), x(23), x(23)}, 23},
      }};
  return table;
}

inline const ValuationTable& table_1_6() {
  using detail::ge;
  using detail::x;
  static const ValuationTable table{
      "1.6", 17, 17,
      {
          {8, false, {x(20), x(21), x(22), x(23)}, 20},
          {9, false, {x(21), x(22), x(23), x(24)}, 21},
          {10, false, {x(22), x(23), ge(25), ge(26)}, 22},
          {11, false, {ge(24), x(24), x(24), x(25)}, 24},
          {12, false, {x(23), ge(26), x(24), x(25)}, 23},
          {13, true, {x(23), x(25), x(24), x(25)}, 23},
      }};
  return table;
}

/// One row of the comparison table: (s(n), β(n-1,n), ē(n)) as functions of e.
struct ComparisonRow {
  unsigned offset;  // n = 2^e + offset
  std::array<std::int64_t, 3> (*values)(unsigned e);
};

inline std::array<std::int64_t, 3> comparison_power(unsigned e) {
  const std::int64_t p = std::int64_t{1} << e;
  return {p + p / 2 - 2, p + p / 2 - 1, p + p / 2 - 1};
}

inline std::array<std::int64_t, 3> comparison_power_plus_one(unsigned e) {
  const std::int64_t p = std::int64_t{1} << e;
  return {p + p / 2 - 1, p + p / 2 - 1, p + p / 2};
}

inline const std::array<ComparisonRow, 2>& table_1_1() {
  static const std::array<ComparisonRow, 2> rows{{{0, &comparison_power},
                                                  {1, &comparison_power_plus_one}}};
  return rows;
}

}  // namespace sunexp::tables
