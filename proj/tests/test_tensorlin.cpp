#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "hopfmon/errors.hpp"
#include "hopfmon/field_ops.hpp"
#include "hopfmon/kernels.hpp"
#include "hopfmon/linear_map.hpp"
#include "hopfmon/linear_solve.hpp"

using namespace hopfmon;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F5 = FieldSpec::prime_field(5);

std::vector<std::size_t> compose_perm(const std::vector<std::size_t>& p, const std::vector<std::size_t>& q) {
  // (p o q)[t] = p[q[t]]
  std::vector<std::size_t> out(q.size());
  for (std::size_t t = 0; t < q.size(); ++t) out[t] = p[q[t]];
  return out;
}

Dims permuted(const Dims& dims, const std::vector<std::size_t>& perm) {
  Dims out(dims.size());
  for (std::size_t t = 0; t < dims.size(); ++t) out[perm[t]] = dims[t];
  return out;
}

}  // namespace

TEST_CASE("scalar canonical forms") {
  CHECK(Scalar::parse(Q, "6/-4").to_string() == "-3/2");
  CHECK(Scalar::parse(Q, "0/7").to_string() == "0");
  CHECK(Scalar(F5, -1).residue() == 4);
  CHECK(Scalar(F5, mpq_class(1, 2)).residue() == 3);
  CHECK_THROWS_AS(Scalar::parse(Q, "1/0"), ParseError);
  CHECK_THROWS_AS(Scalar::parse(Q, "1/x"), ParseError);
  CHECK_THROWS_AS(FieldSpec::prime_field(6), FieldError);
  CHECK(FieldSpec::parse("prime-field 7") == FieldSpec::prime_field(7));
  CHECK(FieldSpec::parse("rationals") == Q);
  CHECK_THROWS_AS(Scalar(F5, 0).inverse(), PreconditionError);
  CHECK((Scalar(F5, 2) * Scalar(F5, 2).inverse()).is_one());
}

TEST_CASE("compose") {
  CHECK(compose(LinearMap::identity(Q, 2), LinearMap::identity(Q, 2)) == LinearMap::identity(Q, 2));
  CHECK(same_matrix(compose(flip(Q, 2, 2), flip(Q, 2, 2)), LinearMap::identity(Q, 4)));
  // [[0,1],[1,0]] * [[2,0],[0,3]]: row 0 picks row 1 of the second factor.
  const LinearMap a = LinearMap::from_rows(F5, {{0, 1}, {1, 0}});
  const LinearMap b = LinearMap::from_rows(F5, {{2, 0}, {0, 3}});
  CHECK(compose(a, b) == LinearMap::from_rows(F5, {{0, 3}, {2, 0}}));
  CHECK_THROWS_AS(compose(LinearMap::identity(Q, 2), LinearMap::identity(Q, 3)), ShapeError);
  CHECK_THROWS_AS(compose(LinearMap::identity(Q, 2), LinearMap::identity(F5, 2)), FieldError);
}

TEST_CASE("tensor of maps") {
  CHECK(same_matrix(tensor(LinearMap::identity(Q, 2), LinearMap::identity(Q, 3)), LinearMap::identity(Q, 6)));
  CHECK(tensor(LinearMap::scalar(Scalar(Q, 3)), LinearMap::scalar(Scalar(Q, 5))) == LinearMap::scalar(Scalar(Q, 15)));
  const LinearMap k = tensor(LinearMap::from_rows(F5, {{0, 1}, {1, 0}}), LinearMap::from_rows(F5, {{2}}));
  CHECK(same_matrix(k, LinearMap::from_rows(F5, {{0, 2}, {2, 0}})));
  CHECK(k.domain_dims() == Dims{2, 1});
  CHECK_THROWS_AS(tensor(LinearMap::identity(Q, 2), LinearMap::identity(F5, 2)), FieldError);
}

TEST_CASE("tensor interchange on random maps") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> dim(1, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const FieldSpec f = trial % 2 ? Q : F5;
    const std::size_t a = dim(rng), b = dim(rng), c = dim(rng), x = dim(rng), y = dim(rng), z = dim(rng);
    const auto f1 = fixtures::random_map(f, {{a}, {b}}, rng);
    const auto f2 = fixtures::random_map(f, {{b}, {c}}, rng);
    const auto g1 = fixtures::random_map(f, {{x}, {y}}, rng);
    const auto g2 = fixtures::random_map(f, {{y}, {z}}, rng);
    CHECK(tensor(compose(f2, f1), compose(g2, g1)) == compose(tensor(f2, g2), tensor(f1, g1)));
  }
}

TEST_CASE("permute_factors") {
  CHECK(permute_factors(Q, {3}, {0}) == LinearMap::identity(Q, 3));
  CHECK(same_matrix(flip(Q, 1, 3), LinearMap::identity(Q, 3)));
  CHECK(same_matrix(flip(Q, 3, 1), LinearMap::identity(Q, 3)));
  CHECK_THROWS_AS(permute_factors(Q, {2, 2}, {0}), ShapeError);
  CHECK_THROWS_AS(permute_factors(Q, {2, 2}, {0, 0}), ShapeError);

  // e_1 (x) e_0 (x) e_2 in dims (2,3,4) with perm {2,0,1} lands at e_0 (x) e_2 (x) e_1 in dims (3,4,2).
  const LinearMap p = permute_factors(Q, {2, 3, 4}, {2, 0, 1});
  CHECK(p.codomain_dims() == Dims{3, 4, 2});
  CHECK(p.at((0 * 4 + 2) * 2 + 1, (1 * 3 + 0) * 4 + 2).is_one());
}

TEST_CASE("permute_factors is a homomorphism") {
  for (std::size_t k = 1; k <= 4; ++k) {
    std::vector<std::size_t> q(k);
    std::iota(q.begin(), q.end(), std::size_t{0});
    std::mt19937_64 rng(k);
    std::uniform_int_distribution<std::size_t> dim(1, 3);
    do {
      std::vector<std::size_t> p = q;
      std::shuffle(p.begin(), p.end(), rng);
      Dims dims(k);
      for (auto& d : dims) d = dim(rng);
      const LinearMap lhs = compose(permute_factors(F5, permuted(dims, q), p), permute_factors(F5, dims, q));
      CHECK(lhs == permute_factors(F5, dims, compose_perm(p, q)));
    } while (std::next_permutation(q.begin(), q.end()));
  }
}

TEST_CASE("flip satisfies hexagons and Yang-Baxter") {
  for (std::size_t a = 1; a <= 3; ++a)
    for (std::size_t b = 1; b <= 3; ++b)
      for (std::size_t c = 1; c <= 3; ++c) {
        const LinearMap ia = LinearMap::identity(Q, a), ib = LinearMap::identity(Q, b),
                        ic = LinearMap::identity(Q, c);
        // c_{X,Y(x)Z} = (id_Y (x) c_{X,Z}) o (c_{X,Y} (x) id_Z)
        CHECK(same_matrix(flip(Q, a, b * c), compose(tensor(ib, flip(Q, a, c)), tensor(flip(Q, a, b), ic))));
        // c_{X(x)Y,Z} = (c_{X,Z} (x) id_Y) o (id_X (x) c_{Y,Z})
        CHECK(same_matrix(flip(Q, a * b, c), compose(tensor(flip(Q, a, c), ib), tensor(ia, flip(Q, b, c)))));
        const LinearMap lhs = chain({tensor(flip(Q, a, b), ic), tensor(ib, flip(Q, a, c)), tensor(flip(Q, b, c), ia)});
        const LinearMap rhs = chain({tensor(ia, flip(Q, b, c)), tensor(flip(Q, a, c), ib), tensor(ic, flip(Q, a, b))});
        CHECK(same_matrix(lhs, rhs));
      }
}

TEST_CASE("invert") {
  CHECK(*invert(LinearMap::identity(Q, 3)) == LinearMap::identity(Q, 3));
  const LinearMap swap = LinearMap::from_rows(Q, {{0, 1}, {1, 0}});
  CHECK(*invert(swap) == swap);
  CHECK_FALSE(invert(LinearMap::from_rows(Q, {{1, 1}, {1, 1}})).has_value());
  CHECK_THROWS_AS(invert(LinearMap::from_rows(Q, {{1, 1}})), ShapeError);

  std::mt19937_64 rng(5);
  int inverted = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const FieldSpec f = trial % 2 ? Q : F5;
    const auto m = fixtures::random_map(f, {{4}, {4}}, rng, -2, 2);
    const auto inv = invert(m);
    if (!inv) {
      CHECK(rank(m) < 4);
      continue;
    }
    ++inverted;
    CHECK(compose(*inv, m) == LinearMap::identity(f, 4));
    CHECK(compose(m, *inv) == LinearMap::identity(f, 4));
  }
  CHECK(inverted > 20);
}

TEST_CASE("solve and nullspace") {
  const LinearMap a = LinearMap::from_rows(Q, {{1, 2, 3}, {2, 4, 6}});
  CHECK(rank(a) == 1);
  const auto kernel = nullspace(a);
  CHECK(kernel.size() == 2);
  for (const auto& v : kernel) CHECK(compose(a, v).is_zero());
  const auto x = solve(a, LinearMap::from_ints(Q, {{}, {2}}, {1, 2}));
  REQUIRE(x.has_value());
  CHECK(same_matrix(compose(a, *x), LinearMap::from_ints(Q, {{}, {2}}, {1, 2})));
  CHECK_FALSE(solve(a, LinearMap::from_ints(Q, {{}, {2}}, {1, 3})).has_value());
}

TEST_CASE("apply_at matches explicit identity padding") {
  std::mt19937_64 rng(3);
  const auto m = fixtures::random_map(F5, {{2}, {2, 3, 2}}, rng);
  const auto f = fixtures::random_map(F5, {{3}, {4, 1}}, rng);
  const LinearMap expected =
      compose(tensor({LinearMap::identity(F5, 2), f, LinearMap::identity(F5, 2)}), m);
  CHECK(apply_at(m, 1, f) == expected);
  CHECK_THROWS_AS(apply_at(m, 0, f), ShapeError);
}

TEST_CASE_TEMPLATE("parallel kernels agree with the serial reference", Ops, ModP, RationalOps) {
  Ops ops{};
  if constexpr (std::is_same_v<Ops, ModP>) ops.p = 7;
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long long> val(-4, 4);
  auto fill = [&](std::size_t n) {
    std::vector<typename Ops::value_type> v(n);
    for (auto& e : v) e = val(rng) == 0 ? ops.zero() : ops.from_int(val(rng));
    return v;
  };
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t r = 3 + trial, k = 5, c = 2 + trial % 4;
    const auto a = fill(r * k), b = fill(k * c);
    CHECK(kernels::parallel::matmul(ops, a, r, k, b, c) == kernels::serial::matmul(ops, a, r, k, b, c));
    CHECK(kernels::parallel::kron(ops, a, r, k, b, k, c) == kernels::serial::kron(ops, a, r, k, b, k, c));
    // f: 2 -> 3 applied at the middle of a (left=2, mid=2, right=3) column of width c
    const auto f = fill(3 * 2);
    const auto m = fill(2 * 2 * 3 * c);
    CHECK(kernels::parallel::apply_local(ops, f, 3, 2, m, 2, 3, c) ==
          kernels::serial::apply_local(ops, f, 3, 2, m, 2, 3, c));
  }
}
