#pragma once

#include <array>
#include <optional>
#include <utility>

#include "g2hom/exterior.hpp"
#include "g2hom/report.hpp"

namespace g2hom {

// The fundamental three-form on R^7 in the standard coframe:
// e123 + e145 - e167 + e246 + e257 + e347 - e356.
inline Form g2_three_form() {
  Form w(7);
  w.add(mask_from_indices({1, 2, 3}, 7), 1);
  w.add(mask_from_indices({1, 4, 5}, 7), 1);
  w.add(mask_from_indices({1, 6, 7}, 7), -1);
  w.add(mask_from_indices({2, 4, 6}, 7), 1);
  w.add(mask_from_indices({2, 5, 7}, 7), 1);
  w.add(mask_from_indices({3, 4, 7}, 7), 1);
  w.add(mask_from_indices({3, 5, 6}, 7), -1);
  return w;
}
inline Form build_omega() { return g2_three_form(); }

// Its Euclidean Hodge dual:
// -e1247 + e1256 + e1346 + e1357 - e2345 + e2367 + e4567.
inline Form g2_four_form() {
  Form w(7);
  w.add(mask_from_indices({1, 2, 4, 7}, 7), -1);
  w.add(mask_from_indices({1, 2, 5, 6}, 7), 1);
  w.add(mask_from_indices({1, 3, 4, 6}, 7), 1);
  w.add(mask_from_indices({1, 3, 5, 7}, 7), 1);
  w.add(mask_from_indices({2, 3, 4, 5}, 7), -1);
  w.add(mask_from_indices({2, 3, 6, 7}, 7), 1);
  w.add(mask_from_indices({4, 5, 6, 7}, 7), 1);
  return w;
}

// Octonion in coordinates over the basis (1, i, j, k, eps, i eps, j eps, k eps).
using Octonion = std::array<Rational, 8>;

inline Octonion oct_unit(int i) {
  Octonion x{};
  x[i] = 1;
  return x;
}
inline Rational oct_inner(const Octonion& a, const Octonion& b) {
  Rational s = 0;
  for (int i = 0; i < 8; ++i) s += a[i] * b[i];
  return s;
}
inline Octonion oct_add(const Octonion& a, const Octonion& b) {
  Octonion r{};
  for (int i = 0; i < 8; ++i) r[i] = a[i] + b[i];
  return r;
}
inline Octonion oct_scale(const Rational& c, const Octonion& a) {
  Octonion r{};
  for (int i = 0; i < 8; ++i) r[i] = c * a[i];
  return r;
}

inline Json oct_to_json(const Octonion& a) {
  Json j = Json::array();
  for (const auto& c : a) j.push_back(to_string(c));
  return j;
}

/// 8x8 multiplication table; entry (i,j) holds x_i * x_j.
struct OctonionTable {
  std::array<std::array<Octonion, 8>, 8> table;

  Octonion multiply(const Octonion& a, const Octonion& b) const {
    Octonion r{};
    for (int i = 0; i < 8; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < 8; ++j) {
        if (b[j] == 0) continue;
        Rational c = a[i] * b[j];
        for (int k = 0; k < 8; ++k) r[k] += c * table[i][j][k];
      }
    }
    return r;
  }
};

// Signed structure coefficient: the coefficient of the blade {i,j,k} with the
// sign of the permutation sorting (i,j,k).
inline Rational three_form_eval(const Form& w, int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  int a = i, b = j, c = k, s = 1;
  if (a > b) { std::swap(a, b); s = -s; }
  if (b > c) { std::swap(b, c); s = -s; }
  if (a > b) { std::swap(a, b); s = -s; }
  return s * w.coeff(mask_from_indices({a, b, c}, w.dim()));
}

// Rebuilds the multiplication table from a three-form via
// x_i * x_j = -delta_ij * 1 + sum_k w(x_i, x_j, x_k) x_k  on imaginary units.
inline OctonionTable multiplication_from_omega(const Form& w) {
  if (w.dim() != 7 || (!w.zero() && w.grade() != 3))
    throw std::invalid_argument("expected a three-form on dimension 7");
  OctonionTable t;
  for (int j = 0; j < 8; ++j) {
    t.table[0][j] = oct_unit(j);
    t.table[j][0] = oct_unit(j);
  }
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j) {
      Octonion p{};
      if (i == j) p[0] = -1;
      for (int k = 1; k <= 7; ++k) p[k] = three_form_eval(w, i, j, k);
      t.table[i][j] = p;
    }
  return t;
}

// Fixed deterministic suite of rational test vectors; components run over all
// eight coordinates including the real part.
inline std::vector<Octonion> deterministic_octonion_suite(int count) {
  std::vector<Octonion> v;
  std::uint64_t s = 0x243F6A8885A308D3ull;  // fixed seed
  auto next = [&s]() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  };
  for (int n = 0; n < count; ++n) {
    Octonion x{};
    for (int i = 0; i < 8; ++i) {
      long long num = (long long)(next() % 7) - 3;
      long long den = 1 + (long long)(next() % 3);
      x[i] = Rational(num, den);
    }
    v.push_back(x);
  }
  return v;
}

// Norm identity <xy,xy> = <x,x><y,y> on all 64 basis pairs and a fixed suite
// of rational vector pairs, plus the unit law, anticommutation and squares of
// imaginary units, and bilinearity spot checks.  Failures carry the first
// counterexample.
inline Report check_normed_division(const OctonionTable& t, int suite_pairs = 100) {
  Report rep;

  bool unit_ok = true;
  Json unit_wit;
  for (int j = 0; j < 8 && unit_ok; ++j) {
    if (t.table[0][j] != oct_unit(j) || t.table[j][0] != oct_unit(j)) {
      unit_ok = false;
      unit_wit["basis_index"] = j;
    }
  }
  rep.add("unit_element", unit_ok, unit_wit);

  bool imag_ok = true;
  Json imag_wit;
  for (int i = 1; i <= 7 && imag_ok; ++i) {
    Octonion sq = t.table[i][i];
    if (sq != oct_scale(-1, oct_unit(0))) {
      imag_ok = false;
      imag_wit = Json{{"i", i}, {"square", oct_to_json(sq)}};
    }
    for (int j = 1; j <= 7 && imag_ok; ++j) {
      if (i == j) continue;
      if (oct_add(t.table[i][j], t.table[j][i]) != Octonion{}) {
        imag_ok = false;
        imag_wit = Json{{"i", i}, {"j", j}};
      }
    }
  }
  rep.add("imaginary_units", imag_ok, imag_wit);

  bool basis_ok = true;
  Json basis_wit;
  int basis_checked = 0;
  for (int i = 0; i < 8 && basis_ok; ++i)
    for (int j = 0; j < 8 && basis_ok; ++j) {
      const Octonion& p = t.table[i][j];
      ++basis_checked;
      if (oct_inner(p, p) != 1) {
        basis_ok = false;
        basis_wit = Json{{"i", i}, {"j", j}, {"product", oct_to_json(p)}};
      }
    }
  rep.add("norm_identity_basis_pairs", basis_ok, basis_wit);

  std::vector<Octonion> suite = deterministic_octonion_suite(2 * suite_pairs);
  bool suite_ok = true;
  Json suite_wit;
  for (int n = 0; n < suite_pairs && suite_ok; ++n) {
    const Octonion& x = suite[2 * n];
    const Octonion& y = suite[2 * n + 1];
    Octonion p = t.multiply(x, y);
    if (oct_inner(p, p) != oct_inner(x, x) * oct_inner(y, y)) {
      suite_ok = false;
      suite_wit = Json{{"pair", n}, {"x", oct_to_json(x)}, {"y", oct_to_json(y)}};
    }
  }
  rep.add("norm_identity_vector_pairs", suite_ok, suite_wit);

  bool bilin_ok = true;
  for (int n = 0; n + 2 < int(suite.size()) && bilin_ok; n += 3) {
    const Octonion &x = suite[n], &y = suite[n + 1], &z = suite[n + 2];
    Octonion lhs = t.multiply(oct_add(x, y), z);
    Octonion rhs = oct_add(t.multiply(x, z), t.multiply(y, z));
    if (lhs != rhs) bilin_ok = false;
    lhs = t.multiply(z, oct_add(x, y));
    rhs = oct_add(t.multiply(z, x), t.multiply(z, y));
    if (lhs != rhs) bilin_ok = false;
  }
  rep.add("bilinearity", bilin_ok);

  rep.extra["basis_pairs_checked"] = basis_checked;
  rep.extra["vector_pairs_checked"] = suite_pairs;
  return rep;
}

// First basis triple with nonzero associator, if any.
inline std::optional<std::array<int, 3>> first_nonassociative_triple(const OctonionTable& t,
                                                                     int max_index = 7) {
  for (int i = 0; i <= max_index; ++i)
    for (int j = 0; j <= max_index; ++j)
      for (int k = 0; k <= max_index; ++k) {
        Octonion lhs = t.multiply(t.table[i][j], oct_unit(k));
        Octonion rhs = t.multiply(oct_unit(i), t.table[j][k]);
        if (lhs != rhs) return std::array<int, 3>{i, j, k};
      }
  return std::nullopt;
}

/// Metric and volume of a nondegenerate three-form via
/// g(X,Y) vol = -1/6 (X -| w) ^ (Y -| w) ^ w, normalised so that vol = *1.
inline std::pair<Metric, Form> associated_metric(const Form& w) {
  if (w.dim() != 7) throw std::invalid_argument("associated metric needs dimension 7");
  const int n = 7;
  const Mask top = (Mask(1) << n) - 1;
  Mat b(n, n);
  for (int i = 0; i < n; ++i) {
    Vec ei(n, Rational(0));
    ei[i] = 1;
    Form wi = contract(ei, w);
    for (int j = i; j < n; ++j) {
      Vec ej(n, Rational(0));
      ej[j] = 1;
      Form prod = wedge(wedge(wi, contract(ej, w)), w);
      Rational val = Rational(-1, 6) * prod.coeff(top);
      b(i, j) = val;
      b(j, i) = val;
    }
  }
  Rational d = det(b);
  if (d == 0) throw std::domain_error("not a G2-form: degenerate metric");
  // b = g * v with v = sqrt(det g), hence det b = v^9.
  auto v = exact_nth_root(d, 9);
  if (!v || *v == 0) throw std::domain_error("volume normalisation is not rational");
  Mat g = b * (1 / *v);
  Form vol(n);
  vol.add(top, *v);
  return {Metric(n, g), vol};  // Metric ctor rejects non positive definite g
}

/// The model structure: three-form, its metric, volume, and four-form.
struct G2Structure {
  Form omega;
  Metric metric;
  Form volume;
  Form star_omega;

  static G2Structure standard() {
    Form w = g2_three_form();
    auto [g, vol] = associated_metric(w);
    Form sw = hodge(w, g, Orientation(sign(vol.coeff((Mask(1) << 7) - 1))));
    return G2Structure{w, g, vol, sw};
  }
};

}  // namespace g2hom
