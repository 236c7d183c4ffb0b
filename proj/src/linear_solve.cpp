#include "hopfmon/linear_solve.hpp"

#include <utility>

#include "hopfmon/errors.hpp"
#include "hopfmon/field_ops.hpp"

namespace hopfmon {

namespace {

// In-place reduced row echelon form of a rows x cols row-major matrix,
// restricted to pivot search in the first pivot_cols columns.
// Returns the pivot column of each pivot row.
template <class Ops>
std::vector<std::size_t> reduce(const Ops& ops, std::vector<typename Ops::value_type>& m, std::size_t rows,
                                std::size_t cols, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && ops.is_zero(m[sel * cols + c])) ++sel;
    if (sel == rows) continue;
    if (sel != r) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(m[sel * cols + k], m[r * cols + k]);
    }
    const auto inv = ops.inv(m[r * cols + c]);
    for (std::size_t k = 0; k < cols; ++k) m[r * cols + k] = ops.mul(inv, m[r * cols + k]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || ops.is_zero(m[i * cols + c])) continue;
      const auto factor = m[i * cols + c];
      for (std::size_t k = 0; k < cols; ++k) {
        if (!ops.is_zero(m[r * cols + k])) m[i * cols + k] = ops.sub(m[i * cols + k], ops.mul(factor, m[r * cols + k]));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<LinearMap> solve(const LinearMap& a, const LinearMap& b) {
  if (a.field() != b.field()) throw FieldError("solve: field mismatch");
  if (a.rows() != b.rows()) throw ShapeError("solve: right-hand side has the wrong number of rows");
  const std::size_t n = a.cols();
  const std::size_t k = b.cols();
  const std::size_t width = n + k;
  return with_field_ops(a.field(), [&](const auto& ops) -> std::optional<LinearMap> {
    using Ops = std::decay_t<decltype(ops)>;
    const auto& av = a.data<Ops>();
    const auto& bv = b.data<Ops>();
    std::vector<typename Ops::value_type> aug(a.rows() * width, ops.zero());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < n; ++j) aug[i * width + j] = av[i * n + j];
      for (std::size_t j = 0; j < k; ++j) aug[i * width + n + j] = bv[i * k + j];
    }
    const auto pivots = reduce(ops, aug, a.rows(), width, n);
    for (std::size_t i = pivots.size(); i < a.rows(); ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (!ops.is_zero(aug[i * width + n + j])) return std::nullopt;
      }
    }
    LinearMap x = LinearMap::zeros(a.field(), {b.domain_dims(), a.domain_dims()});
    auto& xv = x.data<Ops>();
    for (std::size_t p = 0; p < pivots.size(); ++p) {
      for (std::size_t j = 0; j < k; ++j) xv[pivots[p] * k + j] = aug[p * width + n + j];
    }
    return x;
  });
}

std::optional<LinearMap> invert(const LinearMap& f) {
  if (f.rows() != f.cols()) throw ShapeError("invert: matrix is not square");
  if (rank(f) != f.rows()) return std::nullopt;
  auto x = solve(f, LinearMap::identity(f.field(), f.codomain_dims()));
  if (!x) return std::nullopt;
  return x->reshaped({f.codomain_dims(), f.domain_dims()});
}

std::size_t rank(const LinearMap& a) {
  return with_field_ops(a.field(), [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    auto m = a.data<Ops>();
    return reduce(ops, m, a.rows(), a.cols(), a.cols()).size();
  });
}

std::vector<LinearMap> nullspace(const LinearMap& a) {
  return with_field_ops(a.field(), [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    auto m = a.data<Ops>();
    const std::size_t cols = a.cols();
    const auto pivots = reduce(ops, m, a.rows(), cols, cols);
    std::vector<bool> is_pivot(cols, false);
    for (const auto p : pivots) is_pivot[p] = true;
    std::vector<LinearMap> basis;
    for (std::size_t free = 0; free < cols; ++free) {
      if (is_pivot[free]) continue;
      LinearMap v = LinearMap::zeros(a.field(), {{}, a.domain_dims()});
      auto& vv = v.data<Ops>();
      vv[free] = ops.one();
      for (std::size_t p = 0; p < pivots.size(); ++p) vv[pivots[p]] = ops.neg(m[p * cols + free]);
      basis.push_back(std::move(v));
    }
    return basis;
  });
}

LinearMap from_columns(const std::vector<LinearMap>& vectors, const Dims& codomain) {
  if (vectors.empty()) throw ShapeError("from_columns: no vectors");
  const FieldSpec field = vectors.front().field();
  LinearMap out = LinearMap::zeros(field, {Dims{vectors.size()}, codomain});
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    const auto& v = vectors[k];
    if (v.cols() != 1 || v.rows() != out.rows()) throw ShapeError("from_columns: vector has the wrong shape");
    if (v.field() != field) throw FieldError("from_columns: field mismatch");
    with_field_ops(field, [&](const auto& ops) {
      using Ops = std::decay_t<decltype(ops)>;
      (void)ops;
      const auto& src = v.data<Ops>();
      auto& dst = out.data<Ops>();
      for (std::size_t r = 0; r < out.rows(); ++r) dst[r * vectors.size() + k] = src[r];
    });
  }
  return out;
}

LinearMap column(const LinearMap& a, std::size_t k) {
  if (k >= a.cols()) throw ShapeError("column index out of range");
  LinearMap v = LinearMap::zeros(a.field(), {{}, a.codomain_dims()});
  for (std::size_t r = 0; r < a.rows(); ++r) v.set(r, 0, a.at(r, k));
  return v;
}

std::vector<LinearMap> span_basis(const std::vector<LinearMap>& vectors) {
  if (vectors.empty()) return {};
  const Dims codomain = vectors.front().codomain_dims();
  const LinearMap stacked = transpose(from_columns(vectors, codomain));  // rows are the vectors
  return with_field_ops(stacked.field(), [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    auto m = stacked.data<Ops>();
    const std::size_t cols = stacked.cols();
    const auto pivots = reduce(ops, m, stacked.rows(), cols, cols);
    std::vector<LinearMap> basis;
    for (std::size_t p = 0; p < pivots.size(); ++p) {
      LinearMap v = LinearMap::zeros(stacked.field(), {{}, codomain});
      auto& vv = v.data<Ops>();
      for (std::size_t c = 0; c < cols; ++c) vv[c] = m[p * cols + c];
      basis.push_back(std::move(v));
    }
    return basis;
  });
}

}  // namespace hopfmon
