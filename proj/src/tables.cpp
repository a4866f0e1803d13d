#include "qteleport/tables.hpp"

#include <array>
#include <stdexcept>

namespace qteleport::tables {

namespace {

using Rows = std::array<std::array<int, 8>, 8>;

ComplexMatrix from_rows(const Rows& rows) {
  ComplexMatrix m(8, 8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) m(i, j) = rows[i][j];
  return m;
}

constexpr Rows kA1{{{1, 0, 0, 0, 0, 0, 1, 0},
                    {0, 1, 0, 0, 0, 0, 0, 1},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {1, 0, 0, 0, 0, 0, 1, 0},
                    {0, 1, 0, 0, 0, 0, 0, 1}}};

constexpr Rows kA2{{{0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 1, 0, 1, 0, 0, 0},
                    {0, 0, 0, 1, 0, 1, 0, 0},
                    {0, 0, 1, 0, 1, 0, 0, 0},
                    {0, 0, 0, 1, 0, 1, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0}}};

constexpr Rows kA3{{{1, 0, 0, 0, 0, 0, -1, 0},
                    {0, 1, 0, 0, 0, 0, 0, -1},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {-1, 0, 0, 0, 0, 0, 1, 0},
                    {0, -1, 0, 0, 0, 0, 0, 1}}};

constexpr Rows kA4{{{0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 1, 0, -1, 0, 0, 0},
                    {0, 0, 0, 1, 0, -1, 0, 0},
                    {0, 0, -1, 0, 1, 0, 0, 0},
                    {0, 0, 0, -1, 0, 1, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0}}};

constexpr Rows kB1{{{1, 0, 0, 0, 0, 0, 0, 0},
                    {0, 1, 0, 0, 0, 0, 0, 0},
                    {0, 0, 1, 0, 0, 0, 0, 0},
                    {0, 0, 0, 1, 0, 0, 0, 0},
                    {0, 0, 0, 0, 1, 0, 0, 0},
                    {0, 0, 0, 0, 0, 1, 0, 0},
                    {0, 0, 0, 0, 0, 0, 1, 0},
                    {0, 0, 0, 0, 0, 0, 0, 1}}};

constexpr Rows kB2{{{0, 1, 0, 0, 0, 0, 0, 0},
                    {1, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 1, 0, 0, 0, 0},
                    {0, 0, 1, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 1, 0, 0},
                    {0, 0, 0, 0, 1, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 1},
                    {0, 0, 0, 0, 0, 0, 1, 0}}};

constexpr Rows kB3{{{1, 0, 0, 0, 0, 0, 0, 0},
                    {0, -1, 0, 0, 0, 0, 0, 0},
                    {0, 0, 1, 0, 0, 0, 0, 0},
                    {0, 0, 0, -1, 0, 0, 0, 0},
                    {0, 0, 0, 0, 1, 0, 0, 0},
                    {0, 0, 0, 0, 0, -1, 0, 0},
                    {0, 0, 0, 0, 0, 0, 1, 0},
                    {0, 0, 0, 0, 0, 0, 0, -1}}};

constexpr Rows kB4{{{0, 1, 0, 0, 0, 0, 0, 0},
                    {-1, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 1, 0, 0, 0, 0},
                    {0, 0, -1, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 1, 0, 0},
                    {0, 0, 0, 0, -1, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 1},
                    {0, 0, 0, 0, 0, 0, -1, 0}}};

constexpr Rows kSwap13{{{1, 0, 0, 0, 0, 0, 0, 0},
                        {0, 0, 0, 0, 1, 0, 0, 0},
                        {0, 0, 1, 0, 0, 0, 0, 0},
                        {0, 0, 0, 0, 0, 0, 1, 0},
                        {0, 1, 0, 0, 0, 0, 0, 0},
                        {0, 0, 0, 0, 0, 1, 0, 0},
                        {0, 0, 0, 1, 0, 0, 0, 0},
                        {0, 0, 0, 0, 0, 0, 0, 1}}};

std::size_t slot(int outcome) {
  if (outcome < 1 || outcome > 4) throw std::out_of_range("tables: outcome must be in 1..4");
  return static_cast<std::size_t>(outcome - 1);
}

}  // namespace

const ComplexMatrix& measurement_operator(int outcome) {
  static const std::array<ComplexMatrix, 4> ops{from_rows(kA1), from_rows(kA2), from_rows(kA3),
                                                from_rows(kA4)};
  return ops[slot(outcome)];
}

const ComplexMatrix& correction_operator(int outcome) {
  static const std::array<ComplexMatrix, 4> ops{from_rows(kB1), from_rows(kB2), from_rows(kB3),
                                                from_rows(kB4)};
  return ops[slot(outcome)];
}

const ComplexMatrix& swap_13() {
  static const ComplexMatrix s = from_rows(kSwap13);
  return s;
}

}  // namespace qteleport::tables
