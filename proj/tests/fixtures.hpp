#pragma once

// Hand-written structure constants used as independent oracles. These never
// go through the catalog builders, so a builder bug cannot hide behind them.

#include <cstddef>
#include <random>
#include <tuple>
#include <vector>

#include "hopfmon/hopf.hpp"
#include "hopfmon/linear_map.hpp"

namespace fixtures {

using hopfmon::AlgebraData;
using hopfmon::BialgebraData;
using hopfmon::CoalgebraData;
using hopfmon::Dims;
using hopfmon::FieldSpec;
using hopfmon::HopfData;
using hopfmon::LinearMap;
using hopfmon::RMatrix;
using hopfmon::Scalar;

struct Term {
  std::size_t i, j, k;
  long long c;
};

// e_i e_j = sum c e_k
inline LinearMap mult_from(FieldSpec f, std::size_t d, const std::vector<Term>& terms) {
  LinearMap m = LinearMap::zeros(f, {{d, d}, {d}});
  for (const auto& t : terms) m.set(t.k, t.i * d + t.j, m.at(t.k, t.i * d + t.j) + Scalar(f, t.c));
  return m;
}

// Delta(e_k) = sum c e_i (x) e_j
inline LinearMap comult_from(FieldSpec f, std::size_t d, const std::vector<Term>& terms) {
  LinearMap m = LinearMap::zeros(f, {{d}, {d, d}});
  for (const auto& t : terms) m.set(t.i * d + t.j, t.k, m.at(t.i * d + t.j, t.k) + Scalar(f, t.c));
  return m;
}

inline LinearMap vec(FieldSpec f, const std::vector<long long>& v) {
  return LinearMap::from_ints(f, {{}, {v.size()}}, v);
}

inline LinearMap covec(FieldSpec f, const std::vector<long long>& v) {
  return LinearMap::from_ints(f, {{v.size()}, {}}, v);
}

inline HopfData ground(FieldSpec f) {
  return HopfData(BialgebraData(hopfmon::ground_algebra(f), hopfmon::ground_coalgebra(f)), LinearMap::identity(f, 1));
}

// kZ_n with basis g^0..g^{n-1}.
inline HopfData cyclic_group_algebra(FieldSpec f, std::size_t n) {
  std::vector<Term> mt, ct;
  LinearMap s = LinearMap::zeros(f, {{n}, {n}});
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mt.push_back({a, b, (a + b) % n, 1});
    ct.push_back({a, a, a, 1});
    s.set((n - a) % n, a, 1);
  }
  std::vector<long long> unit(n, 0), counit(n, 1);
  unit[0] = 1;
  return HopfData(BialgebraData(AlgebraData(mult_from(f, n, mt), vec(f, unit)),
                                CoalgebraData(comult_from(f, n, ct), covec(f, counit))),
                  s);
}

// k^{Z_n} in the delta basis.
inline HopfData cyclic_dual(FieldSpec f, std::size_t n) {
  std::vector<Term> mt, ct;
  LinearMap s = LinearMap::zeros(f, {{n}, {n}});
  for (std::size_t a = 0; a < n; ++a) {
    mt.push_back({a, a, a, 1});
    for (std::size_t b = 0; b < n; ++b) ct.push_back({b, (a + n - b) % n, a, 1});
    s.set((n - a) % n, a, 1);
  }
  std::vector<long long> unit(n, 1), counit(n, 0);
  counit[0] = 1;
  return HopfData(BialgebraData(AlgebraData(mult_from(f, n, mt), vec(f, unit)),
                                CoalgebraData(comult_from(f, n, ct), covec(f, counit))),
                  s);
}

// Sweedler's algebra, basis 1, g, x, gx.
inline HopfData sweedler(FieldSpec f) {
  const std::vector<Term> mt = {
      {0, 0, 0, 1}, {0, 1, 1, 1}, {0, 2, 2, 1},  {0, 3, 3, 1},  {1, 0, 1, 1},  {1, 1, 0, 1},
      {1, 2, 3, 1}, {1, 3, 2, 1}, {2, 0, 2, 1},  {2, 1, 3, -1}, {3, 0, 3, 1},  {3, 1, 2, -1},
  };
  const std::vector<Term> ct = {
      {0, 0, 0, 1}, {1, 1, 1, 1}, {2, 0, 2, 1}, {1, 2, 2, 1}, {3, 1, 3, 1}, {0, 3, 3, 1},
  };
  const LinearMap s = LinearMap::from_rows(f, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
  return HopfData(BialgebraData(AlgebraData(mult_from(f, 4, mt), vec(f, {1, 0, 0, 0})),
                                CoalgebraData(comult_from(f, 4, ct), covec(f, {1, 1, 0, 0}))),
                  s);
}

// R_alpha = 1/2 (1(x)1 + 1(x)g + g(x)1 - g(x)g) + alpha/2 (x(x)x - x(x)gx + gx(x)gx + gx(x)x)
// (the sign pattern that matches Delta x = x (x) 1 + g (x) x)
inline RMatrix sweedler_r(FieldSpec f, long long alpha) {
  const Scalar half = Scalar(f, 2).inverse();
  const Scalar a = Scalar(f, alpha) * half;
  LinearMap r = LinearMap::zeros(f, {{}, {4, 4}});
  r.set(0 * 4 + 0, 0, half);
  r.set(0 * 4 + 1, 0, half);
  r.set(1 * 4 + 0, 0, half);
  r.set(1 * 4 + 1, 0, -half);
  r.set(2 * 4 + 2, 0, a);
  r.set(2 * 4 + 3, 0, -a);
  r.set(3 * 4 + 3, 0, a);
  r.set(3 * 4 + 2, 0, a);
  return RMatrix(r);
}

// The dual Hopf algebra: every structure map transposed.
inline HopfData dual(const HopfData& h) {
  const std::size_t d = h.dim();
  return HopfData(BialgebraData(AlgebraData(transpose(h.comult()).reshaped({{d, d}, {d}}),
                                            transpose(h.counit()).reshaped({{}, {d}})),
                                CoalgebraData(transpose(h.mult()).reshaped({{d}, {d, d}}),
                                              transpose(h.unit()).reshaped({{d}, {}}))),
                  transpose(h.antipode));
}

// R = 1/n sum_{a,b} omega^{ab} g^a (x) g^b on kZ_n, omega a primitive n-th root of unity.
inline RMatrix cyclic_r(FieldSpec f, std::size_t n, long long omega) {
  const Scalar inv_n = Scalar(f, static_cast<long long>(n)).inverse();
  LinearMap r = LinearMap::zeros(f, {{}, {n, n}});
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Scalar c = inv_n;
      for (std::size_t e = 0; e < (a * b) % n; ++e) c *= Scalar(f, omega);
      r.set(a * n + b, 0, c);
    }
  }
  return RMatrix(r);
}

inline LinearMap random_map(FieldSpec f, hopfmon::Interface shape, std::mt19937_64& rng, long long lo = -3,
                            long long hi = 3) {
  LinearMap m = LinearMap::zeros(f, shape);
  std::uniform_int_distribution<long long> dist(lo, hi);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m.set(r, c, dist(rng));
  return m;
}

}  // namespace fixtures
