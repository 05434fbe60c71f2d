#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "g2hom/linalg.hpp"
#include "g2hom/rational.hpp"

namespace g2hom {

// Index subsets of {1..n} are bitmasks: bit i-1 <-> index i.  n <= 16.
using Mask = std::uint32_t;

constexpr int kMaxDim = 16;

inline int grade_of(Mask m) { return std::popcount(m); }

inline Mask mask_from_indices(const std::vector<int>& idx, int dim) {
  Mask m = 0;
  for (int i : idx) {
    if (i < 1 || i > dim) throw std::out_of_range("blade index out of range");
    Mask bit = Mask(1) << (i - 1);
    if (m & bit) throw std::invalid_argument("repeated blade index");
    m |= bit;
  }
  return m;
}

inline std::vector<int> indices_of(Mask m) {
  std::vector<int> idx;
  while (m) {
    idx.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return idx;
}

// Sign of merging two disjoint sorted index sets: parity of the number of
// transpositions moving each element of b past the larger elements of a.
inline int merge_sign(Mask a, Mask b) {
  int swaps = 0;
  Mask bb = b;
  while (bb) {
    int pos = std::countr_zero(bb);
    bb &= bb - 1;
    swaps += std::popcount(a >> (pos + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

/// Strictly increasing index subset of {1..n}.
struct Blade {
  int dim;
  Mask bits;

  int grade() const { return grade_of(bits); }
  std::vector<int> indices() const { return indices_of(bits); }
};

/// Sparse exact multivector: blade -> rational, zero coefficients never stored.
/// Structural equality is semantic equality.
class Form {
 public:
  explicit Form(int dim = 0) : dim_(dim) {
    if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("form dimension out of range");
  }

  // term(indices...) builders
  static Form term(int dim, const std::vector<int>& idx, const Rational& c) {
    Form f(dim);
    f.add(mask_from_indices(idx, dim), c);
    return f;
  }
  static Form scalar(int dim, const Rational& c) {
    Form f(dim);
    f.add(0, c);
    return f;
  }
  static Form coframe_generator(int dim, int i) { return term(dim, {i}, 1); }

  int dim() const { return dim_; }
  bool zero() const { return terms_.empty(); }
  const std::map<Mask, Rational>& terms() const { return terms_; }

  Rational coeff(Mask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  Rational coeff(const std::vector<int>& idx) const {
    return coeff(mask_from_indices(idx, dim_));
  }

  void add(Mask m, const Rational& c) {
    if (c == 0) return;
    if (grade_of(m) > dim_ || (m >> dim_) != 0) throw std::out_of_range("blade exceeds dimension");
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool homogeneous() const {
    if (terms_.empty()) return true;
    int g = grade_of(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
      if (grade_of(m) != g) return false;
    return true;
  }
  // Grade of a homogeneous nonzero form.
  int grade() const {
    if (terms_.empty()) throw std::logic_error("grade of zero form");
    if (!homogeneous()) throw std::logic_error("grade of mixed form");
    return grade_of(terms_.begin()->first);
  }
  Form grade_part(int k) const {
    Form f(dim_);
    for (const auto& [m, c] : terms_)
      if (grade_of(m) == k) f.add(m, c);
    return f;
  }

  Form operator+(const Form& o) const {
    require_same_dim(o);
    Form f = *this;
    for (const auto& [m, c] : o.terms_) f.add(m, c);
    return f;
  }
  Form operator-(const Form& o) const {
    require_same_dim(o);
    Form f = *this;
    for (const auto& [m, c] : o.terms_) f.add(m, -c);
    return f;
  }
  Form operator-() const { return Rational(-1) * *this; }
  friend Form operator*(const Rational& c, const Form& a) {
    Form f(a.dim_);
    if (c == 0) return f;
    for (const auto& [m, x] : a.terms_) f.terms_[m] = c * x;
    return f;
  }

  bool operator==(const Form& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }
  bool operator!=(const Form& o) const { return !(*this == o); }

  // Same terms over a larger coframe (for passing quotient forms to the full
  // group coframe).
  Form embedded(int new_dim) const {
    if (new_dim < dim_) throw std::invalid_argument("embedding must not shrink");
    Form f(new_dim);
    for (const auto& [m, c] : terms_) f.add(m, c);
    return f;
  }

  void require_same_dim(const Form& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("form dimension mismatch");
  }

 private:
  int dim_;
  std::map<Mask, Rational> terms_;
};

inline Form wedge(const Form& a, const Form& b) {
  a.require_same_dim(b);
  Form f(a.dim());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;  // repeated index
      f.add(ma | mb, ca * cb * merge_sign(ma, mb));
    }
  return f;
}

inline Form wedge(std::initializer_list<Form> fs) {
  Form acc;
  bool first = true;
  for (const Form& f : fs) {
    acc = first ? f : wedge(acc, f);
    first = false;
  }
  return acc;
}

// Interior product X -| a.
inline Form contract(const Vec& v, const Form& a) {
  if (int(v.size()) != a.dim()) throw std::invalid_argument("vector/form dimension mismatch");
  Form f(a.dim());
  for (const auto& [m, c] : a.terms()) {
    int pos = 0;
    Mask rest = m;
    while (rest) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      if (v[i] != 0) f.add(m & ~(Mask(1) << i), ((pos & 1) ? -c : c) * v[i]);
      ++pos;
    }
  }
  return f;
}

/// Symmetric positive definite rational metric.
struct Metric {
  int dim;
  Mat g;

  Metric(int d, Mat m) : dim(d), g(std::move(m)) {
    if (g.rows() != dim || g.cols() != dim) throw std::invalid_argument("metric shape");
    if (!symmetric(g)) throw std::invalid_argument("metric not symmetric");
    if (!positive_definite(g)) throw std::invalid_argument("metric not positive definite");
  }
  static Metric euclidean(int d) { return Metric(d, Mat::identity(d)); }

  bool operator==(const Metric& o) const { return dim == o.dim && g == o.g; }
};

/// +1 or -1 relative to the canonical coframe order.
struct Orientation {
  int sign = 1;
  Orientation(int s = 1) : sign(s) {
    if (s != 1 && s != -1) throw std::invalid_argument("orientation must be +1 or -1");
  }
};

namespace detail {
inline void masks_of_grade(int n, int k, std::vector<Mask>& out) {
  out.clear();
  for (Mask m = 0; m < (Mask(1) << n); ++m)
    if (grade_of(m) == k) out.push_back(m);
}
}  // namespace detail

// Hodge star via the Gram extension of g^{-1} to degree k, scaled by
// sqrt(det g) * orientation.  Every metric in this artifact has rational
// sqrt(det g); anything else is rejected.
inline Form hodge(const Form& a, const Metric& g, Orientation o = Orientation(1)) {
  if (a.dim() != g.dim) throw std::invalid_argument("form/metric dimension mismatch");
  int n = a.dim();
  auto ginv_opt = inverse(g.g);
  if (!ginv_opt) throw std::invalid_argument("metric not invertible");
  const Mat& ginv = *ginv_opt;
  auto sqrt_det = exact_sqrt(det(g.g));
  if (!sqrt_det) throw std::domain_error("det(metric) is not a perfect rational square");

  Form out(n);
  std::vector<Mask> same_grade;
  for (const auto& [mi, c] : a.terms()) {
    int k = grade_of(mi);
    std::vector<int> I = indices_of(mi);
    detail::masks_of_grade(n, k, same_grade);
    for (Mask mj : same_grade) {
      std::vector<int> J = indices_of(mj);
      // det of the k x k block of g^{-1} over rows I, cols J
      Mat block(k, k);
      for (int r = 0; r < k; ++r)
        for (int s = 0; s < k; ++s) block(r, s) = ginv(I[r] - 1, J[s] - 1);
      Rational gram = (k == 0) ? Rational(1) : det(block);
      if (gram == 0) continue;
      Mask comp = ~mj & ((Mask(1) << n) - 1);
      out.add(comp, c * gram * *sqrt_det * o.sign * merge_sign(mj, comp));
    }
  }
  return out;
}

// Rewrites a form under a coframe substitution: generator i of the old
// coframe becomes sum_j B(i,j) * generator j of the new one.  Composing
// substitutions multiplies the matrices.
inline Form change_coframe(const Form& a, const Mat& b) {
  if (b.rows() != a.dim()) throw std::invalid_argument("substitution rows must match form dimension");
  if (b.rows() != b.cols()) throw std::invalid_argument("substitution matrix must be square");
  if (!inverse(b)) throw std::invalid_argument("singular coframe substitution");
  int n = b.cols();
  Form out(n);
  for (const auto& [m, c] : a.terms()) {
    Form prod = Form::scalar(n, c);
    Mask rest = m;
    while (rest) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      Form line(n);
      for (int j = 0; j < n; ++j) line.add(Mask(1) << j, b(i, j));
      prod = wedge(prod, line);
      if (prod.zero()) break;
    }
    out = out + prod;
  }
  return out;
}

// "-2*e1245 + 4*e4567", terms sorted by blade bitmask; "0" when empty.
inline std::string to_text(const Form& a, const std::string& label = "e") {
  if (a.zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::string blade;
    if (m != 0) {
      blade = label;
      for (int i : indices_of(m)) {
        if (a.dim() > 9 && blade.size() > label.size()) blade += "_";
        blade += std::to_string(i);
      }
    }
    if (mag != 1 || blade.empty()) {
      os << to_string(mag);
      if (!blade.empty()) os << "*";
    }
    os << blade;
  }
  return os.str();
}

inline nlohmann::ordered_json form_to_json(const Form& a) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [m, c] : a.terms()) {
    nlohmann::ordered_json t;
    t["indices"] = indices_of(m);
    t["coeff"] = to_string(c);
    terms.push_back(t);
  }
  return terms;
}

}  // namespace g2hom
