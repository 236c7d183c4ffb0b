#include "hopfmon/linear_map.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hopfmon/errors.hpp"
#include "hopfmon/field_ops.hpp"
#include "hopfmon/kernels.hpp"

namespace hopfmon {

std::size_t total(const Dims& dims) noexcept {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

Dims concat(const Dims& a, const Dims& b) {
  Dims out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string to_string(const Dims& dims) {
  std::string out = "(";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(dims[i]);
  }
  return out + ")";
}

namespace {

void check_dims(const Dims& dims) {
  for (const auto d : dims) {
    if (d == 0) throw ShapeError("tensor factor dimensions must be positive, got " + to_string(dims));
  }
}

void require_same_field(const LinearMap& a, const LinearMap& b, const char* op) {
  if (a.field() != b.field()) {
    throw FieldError(std::string(op) + ": field mismatch " + a.field().to_string() + " vs " + b.field().to_string());
  }
}

LinearMap::Storage zero_storage(FieldSpec field, std::size_t size) {
  if (field.is_prime()) return std::vector<std::uint32_t>(size, 0);
  return std::vector<mpq_class>(size);
}

// Flat index -> multi-index, row-major.
void unflatten(std::size_t flat, const Dims& dims, std::vector<std::size_t>& idx) {
  idx.resize(dims.size());
  for (std::size_t t = dims.size(); t-- > 0;) {
    idx[t] = flat % dims[t];
    flat /= dims[t];
  }
}

std::size_t flatten(const std::vector<std::size_t>& idx, const Dims& dims) {
  std::size_t flat = 0;
  for (std::size_t t = 0; t < dims.size(); ++t) flat = flat * dims[t] + idx[t];
  return flat;
}

void check_permutation(const std::vector<std::size_t>& perm, std::size_t n) {
  if (perm.size() != n) {
    throw ShapeError("permutation of length " + std::to_string(perm.size()) + " applied to " + std::to_string(n) +
                     " factors");
  }
  std::vector<bool> seen(n, false);
  for (const auto p : perm) {
    if (p >= n || seen[p]) throw ShapeError("not a permutation of the factor indices");
    seen[p] = true;
  }
}

// Destination flat index for each source flat index under the factor permutation.
std::vector<std::size_t> permutation_targets(const Dims& dims, const std::vector<std::size_t>& perm, Dims& out_dims) {
  check_permutation(perm, dims.size());
  out_dims.assign(dims.size(), 0);
  for (std::size_t t = 0; t < dims.size(); ++t) out_dims[perm[t]] = dims[t];
  const std::size_t n = total(dims);
  std::vector<std::size_t> dest(n);
  std::vector<std::size_t> idx;
  std::vector<std::size_t> out_idx(dims.size());
  for (std::size_t flat = 0; flat < n; ++flat) {
    unflatten(flat, dims, idx);
    for (std::size_t t = 0; t < dims.size(); ++t) out_idx[perm[t]] = idx[t];
    dest[flat] = flatten(out_idx, out_dims);
  }
  return dest;
}

}  // namespace

LinearMap::LinearMap(FieldSpec field, Interface shape, Storage storage)
    : field_(field),
      domain_(std::move(shape.domain)),
      codomain_(std::move(shape.codomain)),
      rows_(total(codomain_)),
      cols_(total(domain_)),
      storage_(std::move(storage)) {
  check_dims(domain_);
  check_dims(codomain_);
}

LinearMap LinearMap::zeros(FieldSpec field, Interface shape) {
  const std::size_t size = total(shape.domain) * total(shape.codomain);
  return LinearMap(field, std::move(shape), zero_storage(field, size));
}

LinearMap LinearMap::identity(FieldSpec field, Dims dims) {
  LinearMap out = zeros(field, {dims, dims});
  with_field_ops(field, [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    auto& d = out.data<Ops>();
    for (std::size_t i = 0; i < out.rows_; ++i) d[i * out.cols_ + i] = ops.one();
  });
  return out;
}

LinearMap LinearMap::from_ints(FieldSpec field, Interface shape, const std::vector<long long>& row_major) {
  LinearMap out = zeros(field, std::move(shape));
  if (row_major.size() != out.rows_ * out.cols_) {
    throw ShapeError("from_ints: expected " + std::to_string(out.rows_ * out.cols_) + " entries, got " +
                     std::to_string(row_major.size()));
  }
  with_field_ops(field, [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    auto& d = out.data<Ops>();
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = ops.from_int(row_major[i]);
  });
  return out;
}

LinearMap LinearMap::from_rows(FieldSpec field, std::initializer_list<std::initializer_list<long long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<long long> flat;
  for (const auto& row : rows) {
    if (row.size() != c) throw ShapeError("from_rows: ragged rows");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return from_ints(field, {Dims{c}, Dims{r}}, flat);
}

LinearMap LinearMap::scalar(const Scalar& value) {
  LinearMap out = zeros(value.field(), {{}, {}});
  out.set(0, 0, value);
  return out;
}

Scalar LinearMap::at(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols_) throw ShapeError("entry index out of range");
  return with_field_ops(field_, [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    return ops.to_scalar(data<Ops>()[row * cols_ + col]);
  });
}

void LinearMap::set(std::size_t row, std::size_t col, const Scalar& value) {
  if (row >= rows_ || col >= cols_) throw ShapeError("entry index out of range");
  if (value.field() != field_) throw FieldError("set: scalar field differs from map field");
  with_field_ops(field_, [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    data<Ops>()[row * cols_ + col] = ops.from_scalar(value);
  });
}

void LinearMap::set(std::size_t row, std::size_t col, long long value) { set(row, col, Scalar(field_, value)); }

LinearMap LinearMap::reshaped(Interface shape) const {
  if (total(shape.domain) != cols_ || total(shape.codomain) != rows_) {
    throw ShapeError("reshape " + hopfmon::to_string(codomain_) + "<-" + hopfmon::to_string(domain_) + " into " +
                     hopfmon::to_string(shape.codomain) + "<-" + hopfmon::to_string(shape.domain));
  }
  return LinearMap(field_, std::move(shape), storage_);
}

bool LinearMap::is_zero() const {
  return with_field_ops(field_, [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    const auto& d = data<Ops>();
    return std::all_of(d.begin(), d.end(), [&](const auto& v) { return ops.is_zero(v); });
  });
}

bool operator==(const LinearMap& a, const LinearMap& b) {
  return a.field_ == b.field_ && a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.storage_ == b.storage_;
}

std::string LinearMap::to_string() const {
  std::ostringstream os;
  os << hopfmon::to_string(codomain_) << " <- " << hopfmon::to_string(domain_) << " over " << field_.to_string()
     << "\n";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << "[";
    for (std::size_t c = 0; c < cols_; ++c) os << (c == 0 ? "" : " ") << at(r, c);
    os << "]\n";
  }
  return os.str();
}

std::optional<std::pair<std::size_t, std::size_t>> first_difference(const LinearMap& a, const LinearMap& b) {
  require_same_field(a, b, "first_difference");
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("cannot compare " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " with " +
                     std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  return with_field_ops(a.field(), [&](const auto& ops) -> std::optional<std::pair<std::size_t, std::size_t>> {
    using Ops = std::decay_t<decltype(ops)>;
    const auto& x = a.data<Ops>();
    const auto& y = b.data<Ops>();
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] != y[i]) return std::pair{i / a.cols(), i % a.cols()};
    }
    return std::nullopt;
  });
}

bool same_matrix(const LinearMap& a, const LinearMap& b) {
  return a.field() == b.field() && a.rows() == b.rows() && a.cols() == b.cols() && a.storage() == b.storage();
}

LinearMap compose(const LinearMap& f, const LinearMap& g) {
  require_same_field(f, g, "compose");
  if (f.cols() != g.rows()) {
    throw ShapeError("compose: domain " + to_string(f.domain_dims()) + " does not match codomain " +
                     to_string(g.codomain_dims()));
  }
  LinearMap out = LinearMap::zeros(f.field(), {g.domain_dims(), f.codomain_dims()});
  with_field_ops(f.field(), [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    out.data<Ops>() = kernels::parallel::matmul(ops, f.data<Ops>(), f.rows(), f.cols(), g.data<Ops>(), g.cols());
  });
  return out;
}

LinearMap chain(std::initializer_list<LinearMap> maps) {
  if (maps.size() == 0) throw ShapeError("chain of no maps");
  auto it = maps.begin();
  LinearMap acc = *it;
  for (++it; it != maps.end(); ++it) acc = compose(*it, acc);
  return acc;
}

LinearMap tensor(const LinearMap& f, const LinearMap& g) {
  require_same_field(f, g, "tensor");
  LinearMap out = LinearMap::zeros(f.field(), {concat(f.domain_dims(), g.domain_dims()),
                                               concat(f.codomain_dims(), g.codomain_dims())});
  with_field_ops(f.field(), [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    out.data<Ops>() = kernels::parallel::kron(ops, f.data<Ops>(), f.rows(), f.cols(), g.data<Ops>(), g.rows(), g.cols());
  });
  return out;
}

LinearMap tensor(std::initializer_list<LinearMap> maps) {
  if (maps.size() == 0) throw ShapeError("tensor of no maps");
  auto it = maps.begin();
  LinearMap acc = *it;
  for (++it; it != maps.end(); ++it) acc = tensor(acc, *it);
  return acc;
}

LinearMap permute_factors(FieldSpec field, const Dims& dims, const std::vector<std::size_t>& perm) {
  Dims out_dims;
  const auto dest = permutation_targets(dims, perm, out_dims);
  LinearMap out = LinearMap::zeros(field, {dims, out_dims});
  with_field_ops(field, [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    auto& d = out.data<Ops>();
    for (std::size_t col = 0; col < dest.size(); ++col) d[dest[col] * out.cols() + col] = ops.one();
  });
  return out;
}

LinearMap flip(FieldSpec field, std::size_t m, std::size_t n) { return permute_factors(field, {m, n}, {1, 0}); }

LinearMap apply_at(const LinearMap& m, std::size_t pos, const LinearMap& f) {
  require_same_field(m, f, "apply_at");
  const Dims& cod = m.codomain_dims();
  const Dims& fin = f.domain_dims();
  if (pos + fin.size() > cod.size() ||
      !std::equal(fin.begin(), fin.end(), cod.begin() + static_cast<std::ptrdiff_t>(pos))) {
    throw ShapeError("apply_at: map with domain " + to_string(fin) + " does not fit codomain " + to_string(cod) +
                     " at position " + std::to_string(pos));
  }
  const Dims prefix(cod.begin(), cod.begin() + static_cast<std::ptrdiff_t>(pos));
  const Dims suffix(cod.begin() + static_cast<std::ptrdiff_t>(pos + fin.size()), cod.end());
  LinearMap out = LinearMap::zeros(m.field(), {m.domain_dims(), concat(concat(prefix, f.codomain_dims()), suffix)});
  with_field_ops(m.field(), [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    out.data<Ops>() = kernels::parallel::apply_local(ops, f.data<Ops>(), f.rows(), f.cols(), m.data<Ops>(),
                                                     total(prefix), total(suffix), m.cols());
  });
  return out;
}

LinearMap permute_codomain(const LinearMap& m, const std::vector<std::size_t>& perm) {
  Dims out_dims;
  const auto dest = permutation_targets(m.codomain_dims(), perm, out_dims);
  LinearMap out = LinearMap::zeros(m.field(), {m.domain_dims(), out_dims});
  with_field_ops(m.field(), [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    out.data<Ops>() = kernels::parallel::permute_rows(m.data<Ops>(), m.rows(), m.cols(), dest);
  });
  return out;
}

namespace {

template <class Combine>
LinearMap entrywise(const LinearMap& a, const LinearMap& b, const char* op, Combine combine) {
  require_same_field(a, b, op);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError(std::string(op) + ": shape mismatch");
  LinearMap out = a;
  with_field_ops(a.field(), [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    auto& x = out.template data<Ops>();
    const auto& y = b.template data<Ops>();
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = combine(ops, x[i], y[i]);
  });
  return out;
}

}  // namespace

LinearMap operator+(const LinearMap& a, const LinearMap& b) {
  return entrywise(a, b, "add", [](const auto& ops, const auto& x, const auto& y) { return ops.add(x, y); });
}

LinearMap operator-(const LinearMap& a, const LinearMap& b) {
  return entrywise(a, b, "subtract", [](const auto& ops, const auto& x, const auto& y) { return ops.sub(x, y); });
}

LinearMap operator*(const Scalar& s, const LinearMap& a) {
  if (s.field() != a.field()) throw FieldError("scale: field mismatch");
  LinearMap out = a;
  with_field_ops(a.field(), [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    const auto c = ops.from_scalar(s);
    for (auto& x : out.data<Ops>()) x = ops.mul(c, x);
  });
  return out;
}

LinearMap transpose(const LinearMap& a) {
  LinearMap out = LinearMap::zeros(a.field(), {a.codomain_dims(), a.domain_dims()});
  with_field_ops(a.field(), [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    const auto& x = a.data<Ops>();
    auto& y = out.data<Ops>();
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) y[c * a.rows() + r] = x[r * a.cols() + c];
  });
  return out;
}

LinearMap power(const LinearMap& f, std::size_t k) {
  if (f.rows() != f.cols()) throw ShapeError("power of a non-square map");
  LinearMap acc = LinearMap::identity(f.field(), f.domain_dims());
  for (std::size_t i = 0; i < k; ++i) acc = compose(f, acc);
  return acc.reshaped({f.domain_dims(), f.codomain_dims()});
}

}  // namespace hopfmon
