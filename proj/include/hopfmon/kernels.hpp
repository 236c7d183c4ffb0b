#pragma once

// Dense kernels over row-major storage. parallel:: is what the library calls;
// serial:: is a straightforward reference kept for the kernel tests and the
// benchmark. Both produce identical results for every field policy.

#include <algorithm>
#include <cstddef>
#include <vector>

namespace hopfmon::kernels {

namespace serial {

// (rows x inner) * (inner x cols)
template <class Ops>
std::vector<typename Ops::value_type> matmul(const Ops& ops, const std::vector<typename Ops::value_type>& a,
                                             std::size_t rows, std::size_t inner,
                                             const std::vector<typename Ops::value_type>& b, std::size_t cols) {
  std::vector<typename Ops::value_type> out(rows * cols, ops.zero());
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      auto acc = ops.zero();
      for (std::size_t k = 0; k < inner; ++k) ops.fma(acc, a[i * inner + k], b[k * cols + j]);
      out[i * cols + j] = acc;
    }
  }
  return out;
}

template <class Ops>
std::vector<typename Ops::value_type> kron(const Ops& ops, const std::vector<typename Ops::value_type>& a,
                                           std::size_t a_rows, std::size_t a_cols,
                                           const std::vector<typename Ops::value_type>& b, std::size_t b_rows,
                                           std::size_t b_cols) {
  const std::size_t cols = a_cols * b_cols;
  std::vector<typename Ops::value_type> out(a_rows * b_rows * cols, ops.zero());
  for (std::size_t i1 = 0; i1 < a_rows; ++i1)
    for (std::size_t j1 = 0; j1 < a_cols; ++j1)
      for (std::size_t i2 = 0; i2 < b_rows; ++i2)
        for (std::size_t j2 = 0; j2 < b_cols; ++j2)
          out[(i1 * b_rows + i2) * cols + j1 * b_cols + j2] = ops.mul(a[i1 * a_cols + j1], b[i2 * b_cols + j2]);
  return out;
}

template <class Ops>
std::vector<typename Ops::value_type> identity(const Ops& ops, std::size_t n) {
  std::vector<typename Ops::value_type> out(n * n, ops.zero());
  for (std::size_t i = 0; i < n; ++i) out[i * n + i] = ops.one();
  return out;
}

// (id_left (x) f (x) id_right) * m, computed literally through Kronecker products.
template <class Ops>
std::vector<typename Ops::value_type> apply_local(const Ops& ops, const std::vector<typename Ops::value_type>& f,
                                                  std::size_t f_rows, std::size_t f_cols,
                                                  const std::vector<typename Ops::value_type>& m, std::size_t left,
                                                  std::size_t right, std::size_t m_cols) {
  auto lf = kron(ops, identity(ops, left), left, left, f, f_rows, f_cols);
  auto full = kron(ops, lf, left * f_rows, left * f_cols, identity(ops, right), right, right);
  return matmul(ops, full, left * f_rows * right, left * f_cols * right, m, m_cols);
}

// Row r of m becomes row dest[r] of the result.
template <class T>
std::vector<T> permute_rows(const std::vector<T>& m, std::size_t rows, std::size_t cols,
                            const std::vector<std::size_t>& dest) {
  std::vector<T> out(m.size());
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out[dest[r] * cols + c] = m[r * cols + c];
  return out;
}

}  // namespace serial

namespace parallel {

// Below this many scalar operations a kernel runs on the calling thread.
inline constexpr std::size_t kParallelWork = 1 << 15;

template <class Ops>
std::vector<typename Ops::value_type> matmul(const Ops& ops, const std::vector<typename Ops::value_type>& a,
                                             std::size_t rows, std::size_t inner,
                                             const std::vector<typename Ops::value_type>& b, std::size_t cols) {
  std::vector<typename Ops::value_type> out(rows * cols, ops.zero());
  const auto n = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for schedule(dynamic, 4) if (rows * inner * cols >= kParallelWork)
  for (std::ptrdiff_t si = 0; si < n; ++si) {
    const auto i = static_cast<std::size_t>(si);
    auto* row = out.data() + i * cols;
    for (std::size_t k = 0; k < inner; ++k) {
      const auto& aik = a[i * inner + k];
      if (ops.is_zero(aik)) continue;
      const auto* brow = b.data() + k * cols;
      for (std::size_t j = 0; j < cols; ++j) {
        if (!ops.is_zero(brow[j])) ops.fma(row[j], aik, brow[j]);
      }
    }
  }
  return out;
}

template <class Ops>
std::vector<typename Ops::value_type> kron(const Ops& ops, const std::vector<typename Ops::value_type>& a,
                                           std::size_t a_rows, std::size_t a_cols,
                                           const std::vector<typename Ops::value_type>& b, std::size_t b_rows,
                                           std::size_t b_cols) {
  const std::size_t cols = a_cols * b_cols;
  const std::size_t rows = a_rows * b_rows;
  std::vector<typename Ops::value_type> out(rows * cols, ops.zero());
  const auto n = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for schedule(static) if (rows * cols >= kParallelWork)
  for (std::ptrdiff_t sr = 0; sr < n; ++sr) {
    const auto r = static_cast<std::size_t>(sr);
    const std::size_t i1 = r / b_rows;
    const std::size_t i2 = r % b_rows;
    auto* row = out.data() + r * cols;
    for (std::size_t j1 = 0; j1 < a_cols; ++j1) {
      const auto& x = a[i1 * a_cols + j1];
      if (ops.is_zero(x)) continue;
      const auto* brow = b.data() + i2 * b_cols;
      for (std::size_t j2 = 0; j2 < b_cols; ++j2) {
        if (!ops.is_zero(brow[j2])) row[j1 * b_cols + j2] = ops.mul(x, brow[j2]);
      }
    }
  }
  return out;
}

// (id_left (x) f (x) id_right) * m without materialising the Kronecker factor.
// Output row (l, o, r) accumulates f[o][i] * m-row (l, i, r) over the nonzeros of f.
template <class Ops>
std::vector<typename Ops::value_type> apply_local(const Ops& ops, const std::vector<typename Ops::value_type>& f,
                                                  std::size_t f_rows, std::size_t f_cols,
                                                  const std::vector<typename Ops::value_type>& m, std::size_t left,
                                                  std::size_t right, std::size_t m_cols) {
  std::vector<std::vector<std::size_t>> support(f_rows);
  for (std::size_t o = 0; o < f_rows; ++o)
    for (std::size_t i = 0; i < f_cols; ++i)
      if (!ops.is_zero(f[o * f_cols + i])) support[o].push_back(i);

  const std::size_t out_rows = left * f_rows * right;
  std::vector<typename Ops::value_type> out(out_rows * m_cols, ops.zero());
  const auto n = static_cast<std::ptrdiff_t>(out_rows);
#pragma omp parallel for schedule(dynamic, 8) if (out_rows * m_cols * f_cols >= kParallelWork)
  for (std::ptrdiff_t sr = 0; sr < n; ++sr) {
    const auto row_index = static_cast<std::size_t>(sr);
    const std::size_t r = row_index % right;
    const std::size_t o = (row_index / right) % f_rows;
    const std::size_t l = row_index / (right * f_rows);
    auto* row = out.data() + row_index * m_cols;
    for (const std::size_t i : support[o]) {
      const auto& coeff = f[o * f_cols + i];
      const auto* src = m.data() + ((l * f_cols + i) * right + r) * m_cols;
      for (std::size_t c = 0; c < m_cols; ++c) {
        if (!ops.is_zero(src[c])) ops.fma(row[c], coeff, src[c]);
      }
    }
  }
  return out;
}

template <class T>
std::vector<T> permute_rows(const std::vector<T>& m, std::size_t rows, std::size_t cols,
                            const std::vector<std::size_t>& dest) {
  std::vector<T> out(m.size());
  const auto n = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for schedule(static) if (m.size() >= kParallelWork)
  for (std::ptrdiff_t sr = 0; sr < n; ++sr) {
    const auto r = static_cast<std::size_t>(sr);
    std::copy(m.begin() + static_cast<std::ptrdiff_t>(r * cols), m.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols),
              out.begin() + static_cast<std::ptrdiff_t>(dest[r] * cols));
  }
  return out;
}

}  // namespace parallel

}  // namespace hopfmon::kernels
