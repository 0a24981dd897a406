#include "splitfox/intmat.hpp"

#include "splitfox/errors.hpp"

namespace splitfox {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols != rhs.rows) throw domain_error("matrix product shape mismatch");
  IntMatrix out(rows, rhs.cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) {
      if (at(i, k) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols; ++j) out.at(i, j) += at(i, k) * rhs.at(k, j);
    }
  return out;
}

std::vector<Int> SmithResult::diagonal() const {
  std::vector<Int> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(d.at(i, i));
  return out;
}

namespace {

Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  SmithResult r;
  r.d = m;
  r.u = IntMatrix::identity(m.rows);
  r.v = IntMatrix::identity(m.cols);
  IntMatrix& d = r.d;
  IntMatrix& u = r.u;
  IntMatrix& v = r.v;

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < d.cols; ++j) std::swap(d.at(a, j), d.at(b, j));
    for (std::size_t j = 0; j < u.cols; ++j) std::swap(u.at(a, j), u.at(b, j));
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < d.rows; ++i) std::swap(d.at(i, a), d.at(i, b));
    for (std::size_t i = 0; i < v.rows; ++i) std::swap(v.at(i, a), v.at(i, b));
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const Int& f) {  // row dst += f * row src
    for (std::size_t j = 0; j < d.cols; ++j) d.at(dst, j) += f * d.at(src, j);
    for (std::size_t j = 0; j < u.cols; ++j) u.at(dst, j) += f * u.at(src, j);
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const Int& f) {  // col dst += f * col src
    for (std::size_t i = 0; i < d.rows; ++i) d.at(i, dst) += f * d.at(i, src);
    for (std::size_t i = 0; i < v.rows; ++i) v.at(i, dst) += f * v.at(i, src);
  };
  auto negate_row = [&](std::size_t a) {
    for (std::size_t j = 0; j < d.cols; ++j) d.at(a, j) = -d.at(a, j);
    for (std::size_t j = 0; j < u.cols; ++j) u.at(a, j) = -u.at(a, j);
  };

  std::size_t t = 0;
  while (t < d.rows && t < d.cols) {
    // deterministic pivot: smallest nonzero |value| in the trailing block,
    // row-major among ties
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < d.rows; ++i)
      for (std::size_t j = t; j < d.cols; ++j) {
        if (d.at(i, j) == 0) continue;
        if (!found || int_abs(d.at(i, j)) < int_abs(d.at(pi, pj))) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    // clear row and column t; a nonzero remainder becomes the new, smaller
    // pivot, so this terminates
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < d.rows; ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = d.at(i, t) / d.at(t, t);
        add_row(i, t, -q);
        if (d.at(i, t) != 0) {
          swap_rows(t, i);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < d.cols; ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = d.at(t, j) / d.at(t, t);
        add_col(j, t, -q);
        if (d.at(t, j) != 0) {
          swap_cols(t, j);
          dirty = true;
        }
      }
    }

    // divisibility: fold any non-divisible trailing entry into row t and redo
    bool fixed = false;
    for (std::size_t i = t + 1; i < d.rows && !fixed; ++i)
      for (std::size_t j = t + 1; j < d.cols && !fixed; ++j) {
        if (d.at(i, j) % d.at(t, t) != 0) {
          add_row(t, i, 1);
          fixed = true;
        }
      }
    if (fixed) continue;  // re-run the same t

    if (d.at(t, t) < 0) negate_row(t);
    ++t;
  }
  r.rank = t;
  return r;
}

}  // namespace splitfox
