#pragma once

#include <cstddef>
#include <vector>

#include "splitfox/bigint.hpp"

namespace splitfox {

// Dense integer matrix, row-major.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Int> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, Int(0)) {}
  Int& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  static IntMatrix identity(std::size_t n);
  IntMatrix operator*(const IntMatrix& rhs) const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

// Smith normal form D = U * M * V with U, V unimodular and the diagonal of D
// nonnegative, each entry dividing the next. Pivot selection is deterministic:
// smallest nonzero absolute value, ties broken row-major.
struct SmithResult {
  IntMatrix d;
  IntMatrix u;  // rows x rows
  IntMatrix v;  // cols x cols
  std::size_t rank = 0;
  std::vector<Int> diagonal() const;  // nonzero invariant factors
};

SmithResult smith_normal_form(const IntMatrix& m);

}  // namespace splitfox
