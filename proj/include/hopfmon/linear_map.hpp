#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "hopfmon/scalar.hpp"

namespace hopfmon {

// Ordered tensor-factor dimensions. The empty list is the unit object (total 1).
using Dims = std::vector<std::size_t>;

std::size_t total(const Dims& dims) noexcept;
Dims concat(const Dims& a, const Dims& b);
std::string to_string(const Dims& dims);

struct Interface {
  Dims domain;
  Dims codomain;
};

// A matrix between tensor products of finite-dimensional spaces. Rows index
// the flattened codomain, columns the flattened domain; flattening is
// row-major over the factor list, so e_i (x) e_j sits at i * dim_2 + j.
class LinearMap {
 public:
  using Storage = std::variant<std::vector<std::uint32_t>, std::vector<mpq_class>>;

  static LinearMap zeros(FieldSpec field, Interface shape);
  static LinearMap identity(FieldSpec field, Dims dims);
  static LinearMap identity(FieldSpec field, std::size_t n) { return identity(field, Dims{n}); }
  // Row-major integer entries; convenient for literals and tests.
  static LinearMap from_ints(FieldSpec field, Interface shape, const std::vector<long long>& row_major);
  // Single-factor square or rectangular matrix from literal rows.
  static LinearMap from_rows(FieldSpec field, std::initializer_list<std::initializer_list<long long>> rows);
  // The 1x1 map on the unit object.
  static LinearMap scalar(const Scalar& value);

  FieldSpec field() const noexcept { return field_; }
  const Dims& domain_dims() const noexcept { return domain_; }
  const Dims& codomain_dims() const noexcept { return codomain_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar at(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, const Scalar& value);
  void set(std::size_t row, std::size_t col, long long value);

  // Same matrix, different factorisation of domain and codomain (totals must agree).
  LinearMap reshaped(Interface shape) const;

  bool is_zero() const;

  const Storage& storage() const noexcept { return storage_; }
  Storage& storage() noexcept { return storage_; }

  template <class Ops>
  const std::vector<typename Ops::value_type>& data() const {
    return std::get<std::vector<typename Ops::value_type>>(storage_);
  }
  template <class Ops>
  std::vector<typename Ops::value_type>& data() {
    return std::get<std::vector<typename Ops::value_type>>(storage_);
  }

  // Exact equality of field, factor lists, and entries.
  friend bool operator==(const LinearMap& a, const LinearMap& b);

  std::string to_string() const;

 private:
  LinearMap(FieldSpec field, Interface shape, Storage storage);

  FieldSpec field_;
  Dims domain_;
  Dims codomain_;
  std::size_t rows_;
  std::size_t cols_;
  Storage storage_;
};

// Position of the first differing entry when both maps have the same totals,
// std::nullopt when they agree. Factor lists are ignored.
std::optional<std::pair<std::size_t, std::size_t>> first_difference(const LinearMap& a, const LinearMap& b);
// Entrywise equality with matching totals (factorisation may differ).
bool same_matrix(const LinearMap& a, const LinearMap& b);

// f o g
LinearMap compose(const LinearMap& f, const LinearMap& g);
// Composes left to right: maps = {first, second, ...} yields ... o second o first.
LinearMap chain(std::initializer_list<LinearMap> maps);
// Kronecker product; (f (x) g)(x (x) y) = f(x) (x) g(y).
LinearMap tensor(const LinearMap& f, const LinearMap& g);
LinearMap tensor(std::initializer_list<LinearMap> maps);

// Basis permutation of factors: input factor t lands in output position perm[t].
// permute_factors(p) o permute_factors(q) == permute_factors(p o q).
LinearMap permute_factors(FieldSpec field, const Dims& dims, const std::vector<std::size_t>& perm);
// The symmetric braiding X (x) Y -> Y (x) X.
LinearMap flip(FieldSpec field, std::size_t m, std::size_t n);

// (id (x) f (x) id) o m where f consumes codomain factors [pos, pos + |f.domain|).
LinearMap apply_at(const LinearMap& m, std::size_t pos, const LinearMap& f);
// permute_factors(codomain(m), perm) o m
LinearMap permute_codomain(const LinearMap& m, const std::vector<std::size_t>& perm);

LinearMap operator+(const LinearMap& a, const LinearMap& b);
LinearMap operator-(const LinearMap& a, const LinearMap& b);
LinearMap operator*(const Scalar& s, const LinearMap& a);
LinearMap transpose(const LinearMap& a);
// f o f o ... (k times); k = 0 gives the identity.
LinearMap power(const LinearMap& f, std::size_t k);

}  // namespace hopfmon
