#pragma once

#include <map>
#include <string>
#include <vector>

#include "g2hom/exterior.hpp"
#include "g2hom/octonion.hpp"

namespace g2hom {

/// Finite-dimensional Lie algebra given by basis labels and structure
/// constants; antisymmetry and the Jacobi identity are checked on
/// construction.
class LieAlgebra {
 public:
  LieAlgebra(std::vector<std::string> labels, std::vector<std::vector<Vec>> brackets)
      : labels_(std::move(labels)), c_(std::move(brackets)) {
    n_ = int(labels_.size());
    if (int(c_.size()) != n_) throw std::invalid_argument("bracket table shape");
    for (const auto& row : c_) {
      if (int(row.size()) != n_) throw std::invalid_argument("bracket table shape");
      for (const auto& v : row)
        if (int(v.size()) != n_) throw std::invalid_argument("bracket value size");
    }
    check_antisymmetry();
    check_jacobi();
  }

  static LieAlgebra abelian(int k, const std::string& label_prefix = "z") {
    std::vector<std::string> labels;
    for (int i = 1; i <= k; ++i) labels.push_back(label_prefix + std::to_string(i));
    std::vector<std::vector<Vec>> c(k, std::vector<Vec>(k, Vec(k, Rational(0))));
    return LieAlgebra(std::move(labels), std::move(c));
  }

  int dim() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }

  const Vec& bracket_basis(int i, int j) const { return c_[i][j]; }
  Vec bracket(const Vec& x, const Vec& y) const {
    if (int(x.size()) != n_ || int(y.size()) != n_)
      throw std::invalid_argument("bracket operand size");
    Vec r(n_, Rational(0));
    for (int i = 0; i < n_; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < n_; ++j) {
        if (y[j] == 0) continue;
        Rational f = x[i] * y[j];
        for (int k = 0; k < n_; ++k) r[k] += f * c_[i][j][k];
      }
    }
    return r;
  }

  Mat ad(const Vec& x) const {
    Mat m(n_, n_);
    for (int j = 0; j < n_; ++j) {
      Vec ej(n_, Rational(0));
      ej[j] = 1;
      Vec im = bracket(x, ej);
      for (int i = 0; i < n_; ++i) m(i, j) = im[i];
    }
    return m;
  }

  // Structure constants in a new basis given by the columns of a.
  LieAlgebra rebased(const Mat& a, std::vector<std::string> new_labels) const {
    if (a.rows() != n_ || a.cols() != n_) throw std::invalid_argument("basis change shape");
    auto ainv = inverse(a);
    if (!ainv) throw std::invalid_argument("singular basis change");
    std::vector<std::vector<Vec>> c(n_, std::vector<Vec>(n_, Vec(n_, Rational(0))));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) c[i][j] = *ainv * bracket(a.col(i), a.col(j));
    return LieAlgebra(std::move(new_labels), std::move(c));
  }

 private:
  void check_antisymmetry() const {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j <= i; ++j) {
        Vec sum = c_[i][j] + c_[j][i];
        if (!is_zero(sum)) throw std::invalid_argument("structure constants not antisymmetric");
      }
  }
  void check_jacobi() const {
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        for (int k = j + 1; k < n_; ++k) {
          Vec ei(n_, Rational(0)), ej(n_, Rational(0)), ek(n_, Rational(0));
          ei[i] = 1;
          ej[j] = 1;
          ek[k] = 1;
          Vec s = bracket(ei, c_[j][k]) + bracket(ej, c_[k][i]) + bracket(ek, c_[i][j]);
          if (!is_zero(s)) throw std::invalid_argument("Jacobi identity fails");
        }
  }

  int n_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Vec>> c_;  // c_[i][j] = [e_i, e_j] in basis coordinates
};

// su(2) in the sigma basis: [s1,s2] = -2 s3, [s2,s3] = -2 s1, [s3,s1] = -2 s2.
inline LieAlgebra su2() {
  std::vector<std::vector<Vec>> c(3, std::vector<Vec>(3, Vec(3, Rational(0))));
  auto set = [&](int i, int j, int k) {
    c[i][j][k] = -2;
    c[j][i][k] = 2;
  };
  set(0, 1, 2);
  set(1, 2, 0);
  set(2, 0, 1);
  return LieAlgebra({"s1", "s2", "s3"}, std::move(c));
}

inline LieAlgebra u1(int k) { return LieAlgebra::abelian(k, "u"); }

inline LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  int n = a.dim() + b.dim();
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back("a." + l);
  for (const auto& l : b.labels()) labels.push_back("b." + l);
  std::vector<std::vector<Vec>> c(n, std::vector<Vec>(n, Vec(n, Rational(0))));
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      for (int k = 0; k < a.dim(); ++k) c[i][j][k] = a.bracket_basis(i, j)[k];
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j)
      for (int k = 0; k < b.dim(); ++k) c[a.dim() + i][a.dim() + j][a.dim() + k] = b.bracket_basis(i, j)[k];
  return LieAlgebra(std::move(labels), std::move(c));
}

/// Matrices of a representation, one per algebra basis element; bracket
/// compatibility rho([x,y]) = [rho x, rho y] is checked on construction.
struct Representation {
  const LieAlgebra* algebra;
  int dim;
  std::vector<Mat> matrices;

  Representation(const LieAlgebra& g, std::vector<Mat> mats)
      : algebra(&g), matrices(std::move(mats)) {
    if (int(matrices.size()) != g.dim()) throw std::invalid_argument("one matrix per basis element");
    dim = matrices.empty() ? 0 : matrices[0].rows();
    for (const auto& m : matrices)
      if (m.rows() != dim || m.cols() != dim) throw std::invalid_argument("representation matrix shape");
    for (int i = 0; i < g.dim(); ++i)
      for (int j = i + 1; j < g.dim(); ++j) {
        Mat lhs = commutator(matrices[i], matrices[j]);
        Mat rhs(dim, dim);
        const Vec& cij = g.bracket_basis(i, j);
        for (int k = 0; k < g.dim(); ++k)
          if (cij[k] != 0) rhs = rhs + matrices[k] * cij[k];
        if (!(lhs - rhs).is_zero()) throw std::invalid_argument("matrices do not represent the brackets");
      }
  }

  Mat apply(const Vec& x) const {
    Mat m(dim, dim);
    for (int i = 0; i < algebra->dim(); ++i)
      if (x[i] != 0) m = m + matrices[i] * x[i];
    return m;
  }
};

// Cartan element of the standard 7-dimensional action: zero on x1, rotation
// rates l1, l2, l1+l2 on the planes (x2,x3), (x4,x5), (x6,x7).
inline Mat cartan_g2_action(const Rational& l1, const Rational& l2) {
  Mat m(7, 7);
  auto plane = [&m](int a, int b, const Rational& rate) {
    m(a - 1, b - 1) = rate;
    m(b - 1, a - 1) = -rate;
  };
  plane(2, 3, l1);
  plane(4, 5, l2);
  plane(6, 7, l1 + l2);
  return m;
}

// Action induced on the coframe by a matrix acting on vectors, extended to
// forms as a derivation: A . e^i = -sum_j A(i,j) e^j.
inline Form form_action(const Mat& a, const Form& f) {
  int n = f.dim();
  if (a.rows() != n || a.cols() != n) throw std::invalid_argument("form action shape");
  Form out(n);
  for (const auto& [m, c] : f.terms()) {
    Mask rest = m;
    while (rest) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      Mask without = m & ~(Mask(1) << i);
      for (int j = 0; j < n; ++j) {
        if (a(i, j) == 0) continue;
        Mask bj = Mask(1) << j;
        if (without & bj) continue;
        // e^j re-enters at the slot of e^i: sign moves it from position of i
        // to its sorted position in the remaining blade.
        int s = merge_sign(without, bj);
        int pos_i = std::popcount(without & ((Mask(1) << i) - 1));
        int sgn = ((pos_i & 1) ? -1 : 1) * s;
        out.add(without | bj, -a(i, j) * c * sgn);
      }
    }
  }
  return out;
}

// Basis of degree-k forms annihilated by every generator: the kernel of the
// induced coframe action, solved as one rational linear system.
inline std::vector<Form> invariant_forms(const std::vector<Mat>& generators, int dim, int k) {
  std::vector<Mask> blades;
  detail::masks_of_grade(dim, k, blades);
  std::map<Mask, int> index;
  for (size_t i = 0; i < blades.size(); ++i) index[blades[i]] = int(i);

  int cols = int(blades.size());
  int rows = cols * int(generators.size());
  Mat sys(rows, cols);
  for (size_t gi = 0; gi < generators.size(); ++gi)
    for (int bi = 0; bi < cols; ++bi) {
      Form e(dim);
      e.add(blades[bi], 1);
      Form img = form_action(generators[gi], e);
      for (const auto& [m, c] : img.terms()) sys(int(gi) * cols + index.at(m), bi) = c;
    }
  std::vector<Form> basis;
  for (const Vec& v : nullspace(sys)) {
    Form f(dim);
    for (int i = 0; i < cols; ++i) f.add(blades[i], v[i]);
    basis.push_back(f);
  }
  return basis;
}

inline std::vector<Form> invariant_forms(const Representation& rho, int k) {
  return invariant_forms(rho.matrices, rho.dim, k);
}

// The stabilizer algebra of the fundamental three-form inside the skew
// matrices: solve A . omega = 0 over skew A.  Self-validating: dimension 14.
inline std::vector<Mat> g2_stabilizer_algebra() {
  const int n = 7;
  Form w = g2_three_form();
  // skew basis E_ij - E_ji, i < j
  std::vector<std::pair<int, int>> skew;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) skew.push_back({i, j});
  std::vector<Mask> blades;
  detail::masks_of_grade(n, 3, blades);
  std::map<Mask, int> index;
  for (size_t i = 0; i < blades.size(); ++i) index[blades[i]] = int(i);

  Mat sys(int(blades.size()), int(skew.size()));
  for (size_t s = 0; s < skew.size(); ++s) {
    Mat a(n, n);
    a(skew[s].first, skew[s].second) = 1;
    a(skew[s].second, skew[s].first) = -1;
    Form img = form_action(a, w);
    for (const auto& [m, c] : img.terms()) sys(index.at(m), int(s)) = c;
  }
  std::vector<Mat> basis;
  for (const Vec& v : nullspace(sys)) {
    Mat a(n, n);
    for (size_t s = 0; s < skew.size(); ++s) {
      a(skew[s].first, skew[s].second) += v[s];
      a(skew[s].second, skew[s].first) -= v[s];
    }
    basis.push_back(a);
  }
  if (basis.size() != 14) throw std::logic_error("stabilizer algebra dimension is not 14");
  return basis;
}

// ---------------------------------------------------------------------------
// Simultaneous rotation-plane decomposition of commuting integer-rate actions.

/// One oriented invariant 2-plane with its signed integer rates, one entry per
/// generator.
struct WeightPlane {
  std::vector<long long> weight;
  Vec u, v;  // ordered plane basis: A u = r v, A v = -r u for rate r
};

struct WeightDecomposition {
  int dim = 0;
  std::vector<WeightPlane> planes;
  std::vector<Vec> fixed;  // basis of the common kernel
};

namespace detail {

// Restriction of a to the span of basis (columns), in basis coordinates.
inline Mat restrict_to(const Mat& a, const std::vector<Vec>& basis) {
  if (basis.empty()) return Mat(0, 0);
  Mat b = Mat::from_cols(basis);
  Mat img(a.rows(), int(basis.size()));
  for (size_t j = 0; j < basis.size(); ++j) {
    Vec c = a * basis[j];
    for (int i = 0; i < a.rows(); ++i) img(i, int(j)) = c[i];
  }
  // solve b * x = img column-wise
  Mat coords(int(basis.size()), int(basis.size()));
  for (int j = 0; j < int(basis.size()); ++j) {
    auto x = solve(b, img.col(j));
    if (!x) throw std::invalid_argument("subspace not invariant");
    for (int i = 0; i < int(basis.size()); ++i) coords(i, j) = (*x)[i];
  }
  return coords;
}

inline std::vector<Vec> span_basis_in_ambient(const std::vector<Vec>& ambient_basis,
                                              const std::vector<Vec>& coords) {
  std::vector<Vec> out;
  for (const Vec& c : coords) {
    Vec v(ambient_basis.empty() ? 0 : ambient_basis[0].size(), Rational(0));
    for (size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0) v = v + c[i] * ambient_basis[i];
    out.push_back(v);
  }
  return out;
}

// Crude exact bound on |eigenvalues| of -M^2 (row-sum bound).
inline long long rate_bound(const Mat& m2) {
  Rational best = 0;
  for (int i = 0; i < m2.rows(); ++i) {
    Rational s = 0;
    for (int j = 0; j < m2.cols(); ++j) {
      Rational x = m2(i, j);
      s += (x < 0 ? Rational(-x) : x);
    }
    if (s > best) best = s;
  }
  Integer b = numerator(best) / denominator(best) + 1;
  Integer r = floor_nth_root(b, 2) + 1;
  return r.convert_to<long long>();
}

}  // namespace detail

// Splits the common action of pairwise-commuting semisimple matrices with
// integer rotation rates into oriented weight planes and fixed vectors.
// Rejects non-commuting input and non-integer rates.
inline WeightDecomposition weight_decomposition(const std::vector<Mat>& gens, int dim) {
  for (const auto& a : gens) {
    if (a.rows() != dim || a.cols() != dim) throw std::invalid_argument("generator shape");
    for (const auto& b : gens)
      if (!commutator(a, b).is_zero()) throw std::invalid_argument("generators do not commute");
  }

  // Pieces are bases of joint invariant subspaces with fixed |rate| per
  // generator.
  std::vector<Vec> full;
  for (int i = 0; i < dim; ++i) {
    Vec e(dim, Rational(0));
    e[i] = 1;
    full.push_back(e);
  }
  struct Piece {
    std::vector<Vec> basis;
    std::vector<long long> rates;  // unsigned rates so far
  };
  std::vector<Piece> pieces{{full, {}}};

  for (const Mat& a : gens) {
    std::vector<Piece> next;
    for (auto& p : pieces) {
      Mat r = detail::restrict_to(a, p.basis);
      Mat r2 = r * r;
      long long bound = detail::rate_bound(r2);
      int found = 0;
      for (long long rate = 0; rate <= bound && found < int(p.basis.size()); ++rate) {
        Mat shifted = r2 + Mat::identity(int(p.basis.size())) * Rational(rate * rate);
        auto ker = nullspace(shifted);
        if (ker.empty()) continue;
        Piece q;
        q.basis = detail::span_basis_in_ambient(p.basis, ker);
        q.rates = p.rates;
        q.rates.push_back(rate);
        found += int(ker.size());
        next.push_back(std::move(q));
      }
      if (found != int(p.basis.size()))
        throw std::invalid_argument("action has non-integer rotation rates");
    }
    pieces = std::move(next);
  }

  // Within a piece, fix relative signs using products A_k0 A_j, then peel
  // oriented planes.
  WeightDecomposition wd;
  wd.dim = dim;
  for (auto& p : pieces) {
    bool all_zero = true;
    for (long long r : p.rates)
      if (r != 0) all_zero = false;
    if (all_zero) {
      for (auto& v : p.basis) wd.fixed.push_back(v);
      continue;
    }
    int k0 = 0;
    while (p.rates[k0] == 0) ++k0;

    std::vector<Piece> sub{{p.basis, p.rates}};
    for (size_t j = 0; j < gens.size(); ++j) {
      if (int(j) == k0 || p.rates[j] == 0) continue;
      std::vector<Piece> refined;
      for (auto& s : sub) {
        Mat prod = detail::restrict_to(gens[k0] * gens[j], s.basis);
        Rational c = Rational(p.rates[k0]) * Rational(p.rates[j]);
        for (Rational eig : {c, Rational(-c)}) {
          auto ker = nullspace(prod - Mat::identity(int(s.basis.size())) * eig);
          if (ker.empty()) continue;
          refined.push_back({detail::span_basis_in_ambient(s.basis, ker), s.rates});
        }
      }
      sub = std::move(refined);
    }

    for (auto& s : sub) {
      std::vector<Vec> remaining = s.basis;
      while (!remaining.empty()) {
        Vec u = remaining.front();
        Vec au = gens[k0] * u;
        Vec v = Rational(1, p.rates[k0]) * au;  // A_{k0} u = r * v
        WeightPlane plane;
        plane.u = u;
        plane.v = v;
        plane.weight.assign(gens.size(), 0);
        plane.weight[k0] = p.rates[k0];
        for (size_t j = 0; j < gens.size(); ++j) {
          if (int(j) == k0) continue;
          if (p.rates[j] == 0) continue;
          // A_j u = sigma * r_j * v on a sign-consistent piece
          Vec img = gens[j] * u;
          Vec plus = img - Rational(p.rates[j]) * v;
          Vec minus = img + Rational(p.rates[j]) * v;
          if (is_zero(plus))
            plane.weight[j] = p.rates[j];
          else if (is_zero(minus))
            plane.weight[j] = -p.rates[j];
          else
            throw std::logic_error("inconsistent signed rate inside a refined piece");
        }
        // normalise: first nonzero entry positive (flip the orientation)
        for (long long w : plane.weight) {
          if (w == 0) continue;
          if (w < 0) {
            for (auto& x : plane.weight) x = -x;
            plane.v = Rational(-1) * plane.v;
          }
          break;
        }
        wd.planes.push_back(plane);

        // keep an independent complement of span(u, v)
        std::vector<Vec> keep;
        std::vector<Vec> span{u, v};
        for (size_t i = 1; i < remaining.size(); ++i) {
          std::vector<Vec> test = span;
          test.push_back(remaining[i]);
          Mat m = Mat::from_cols(test);
          if (rank(m) == int(test.size())) {
            span.push_back(remaining[i]);
            keep.push_back(remaining[i]);
          }
        }
        remaining = std::move(keep);
      }
    }
  }

  if (int(wd.fixed.size()) + 2 * int(wd.planes.size()) != dim)
    throw std::logic_error("weight decomposition does not exhaust the space");
  return wd;
}

// ---------------------------------------------------------------------------
// Harmonic-polynomial realizations of the odd irreducible rotation actions.

namespace detail {

// Monomials x^a y^b z^c of fixed total degree, lex-ordered exponents.
struct MonomialBasis {
  int degree;
  std::vector<std::array<int, 3>> mons;
  std::map<std::array<int, 3>, int> index;

  explicit MonomialBasis(int d) : degree(d) {
    for (int a = d; a >= 0; --a)
      for (int b = d - a; b >= 0; --b) {
        std::array<int, 3> m{a, b, d - a - b};
        index[m] = int(mons.size());
        mons.push_back(m);
      }
  }
  int size() const { return int(mons.size()); }
};

// (L_A p)(v) = -grad p . (A v) for the elementary rotation generators.
inline Mat rotation_on_polynomials(const MonomialBasis& basis, int axis) {
  // axis 0: A = E32 - E23, axis 1: A = E13 - E31, axis 2: A = E21 - E12
  Mat a(3, 3);
  if (axis == 0) {
    a(2, 1) = 1;
    a(1, 2) = -1;
  } else if (axis == 1) {
    a(0, 2) = 1;
    a(2, 0) = -1;
  } else {
    a(1, 0) = 1;
    a(0, 1) = -1;
  }
  Mat out(basis.size(), basis.size());
  for (int col = 0; col < basis.size(); ++col) {
    const auto& m = basis.mons[col];
    for (int i = 0; i < 3; ++i) {
      if (m[i] == 0) continue;
      for (int j = 0; j < 3; ++j) {
        if (a(i, j) == 0) continue;
        std::array<int, 3> res = m;
        res[i] -= 1;
        res[j] += 1;
        out(basis.index.at(res), col) += -a(i, j) * Rational(m[i]);
      }
    }
  }
  return out;
}

inline Mat laplacian(const MonomialBasis& from, const MonomialBasis& to) {
  Mat out(to.size(), from.size());
  for (int col = 0; col < from.size(); ++col) {
    const auto& m = from.mons[col];
    for (int i = 0; i < 3; ++i) {
      if (m[i] < 2) continue;
      std::array<int, 3> res = m;
      res[i] -= 2;
      out(to.index.at(res), col) += Rational(m[i]) * Rational(m[i] - 1);
    }
  }
  return out;
}

}  // namespace detail

/// The (2d+1)-dimensional irreducible rotation action realized on degree-d
/// harmonic polynomials, as the sigma-triple rho(s_a) = -2 L_a.  Exact
/// rational matrices; Cartan rotation rates are 2, 4, ..., 2d.
inline std::vector<Mat> spin_representation(const LieAlgebra& su2_alg, int d) {
  detail::MonomialBasis deg(d);
  std::vector<Vec> harmonics;
  if (d >= 2) {
    detail::MonomialBasis deg2(d - 2);
    harmonics = nullspace(detail::laplacian(deg, deg2));
  } else {
    for (int i = 0; i < deg.size(); ++i) {
      Vec e(deg.size(), Rational(0));
      e[i] = 1;
      harmonics.push_back(e);
    }
  }
  if (int(harmonics.size()) != 2 * d + 1) throw std::logic_error("harmonic space dimension");

  std::vector<Mat> out;
  Mat basis = Mat::from_cols(harmonics);
  for (int axis = 0; axis < 3; ++axis) {
    Mat big = detail::rotation_on_polynomials(deg, axis);
    Mat coords(int(harmonics.size()), int(harmonics.size()));
    for (size_t j = 0; j < harmonics.size(); ++j) {
      auto x = solve(basis, big * harmonics[j]);
      if (!x) throw std::logic_error("harmonics not rotation-invariant");
      for (size_t i = 0; i < harmonics.size(); ++i) coords(int(i), int(j)) = (*x)[i];
    }
    out.push_back(coords * Rational(-2));
  }
  // validated against the sigma-relations
  Representation check(su2_alg, out);
  (void)check;
  return out;
}

}  // namespace g2hom
