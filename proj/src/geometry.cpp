#include "geometry.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>

namespace gh {

using boost::multiprecision::cpp_int;

bool Subspace::contains_vector(const Field& F, const std::vector<Fel>& v) const {
  // reduce v against the RREF rows; contained iff the residue vanishes
  std::vector<Fel> r = v;
  for (int i = 0; i < dim(); ++i) {
    Fel c = r[pivots_[i]];
    if (!c) continue;
    for (int j = 0; j < n_; ++j) r[j] = F.sub(r[j], F.mul(c, basis_.at(i, j)));
  }
  for (Fel c : r)
    if (c) return false;
  return true;
}

bool Subspace::contains(const Field& F, const Subspace& other) const {
  for (int i = 0; i < other.dim(); ++i)
    if (!contains_vector(F, other.basis().row(i))) return false;
  return true;
}

Subspace canonicalize(const Field& F, const Mat& rows) {
  RrefResult r = rref(F, rows);
  Mat basis(r.rank, rows.cols());
  for (int i = 0; i < r.rank; ++i)
    for (int j = 0; j < rows.cols(); ++j) basis.at(i, j) = r.mat.at(i, j);
  return Subspace(rows.cols(), std::move(basis), std::move(r.pivots));
}

Subspace zero_subspace(int n) { return Subspace(n, Mat(0, n), {}); }

Subspace full_space(const Field& F, int n) {
  std::vector<int> piv(n);
  for (int i = 0; i < n; ++i) piv[i] = i;
  return Subspace(n, Mat::identity(F, n), std::move(piv));
}

Subspace span_of_vectors(const Field& F, int n,
                         const std::vector<std::vector<Fel>>& v) {
  Mat m(int(v.size()), n);
  for (size_t i = 0; i < v.size(); ++i) m.set_row(int(i), v[i]);
  return canonicalize(F, m);
}

Subspace join(const Field& F, const Subspace& a, const Subspace& b) {
  require(a.n() == b.n(), Errc::input, "join over different ambient spaces");
  Mat m(a.dim() + b.dim(), a.n());
  for (int i = 0; i < a.dim(); ++i) m.set_row(i, a.basis().row(i));
  for (int i = 0; i < b.dim(); ++i) m.set_row(a.dim() + i, b.basis().row(i));
  return canonicalize(F, m);
}

Subspace meet(const Field& F, const Subspace& a, const Subspace& b) {
  require(a.n() == b.n(), Errc::input, "meet over different ambient spaces");
  if (a.dim() == 0 || b.dim() == 0) return zero_subspace(a.n());
  // solutions of alpha^T A = beta^T B give the intersection
  int da = a.dim(), db = b.dim();
  Mat sys(a.n(), da + db);
  for (int j = 0; j < da; ++j)
    for (int x = 0; x < a.n(); ++x) sys.at(x, j) = a.basis().at(j, x);
  for (int j = 0; j < db; ++j)
    for (int x = 0; x < a.n(); ++x) sys.at(x, da + j) = F.neg(b.basis().at(j, x));
  Mat null = kernel(F, sys);
  Mat rows(null.rows(), a.n());
  for (int i = 0; i < null.rows(); ++i) {
    std::vector<Fel> v(a.n(), 0);
    for (int j = 0; j < da; ++j) {
      Fel c = null.at(i, j);
      if (!c) continue;
      for (int x = 0; x < a.n(); ++x)
        v[x] = F.add(v[x], F.mul(c, a.basis().at(j, x)));
    }
    rows.set_row(i, v);
  }
  return canonicalize(F, rows);
}

MultiVector plucker(const Field& F, const Subspace& s) {
  require(s.dim() >= 1, Errc::input, "Plucker of the zero subspace");
  std::vector<std::vector<Fel>> rows;
  for (int i = 0; i < s.dim(); ++i) rows.push_back(s.basis().row(i));
  return wedge_of_vectors(F, rows, s.n());
}

u64 gaussian_binom_u64(int n, int d, u64 q, u64 cap) {
  cpp_int v = 1;
  for (int i = 0; i < d; ++i) {
    cpp_int num = cpp_int(boost::multiprecision::pow(cpp_int(q), unsigned(n - i))) - 1;
    cpp_int den = cpp_int(boost::multiprecision::pow(cpp_int(q), unsigned(i + 1))) - 1;
    v = v * num / den;
    if (v > cap)
      fail_cap("EnumerationTooLarge: Gaussian binomial [" + std::to_string(n) +
               " choose " + std::to_string(d) + "]_" + std::to_string(q) +
               " exceeds cap " + std::to_string(cap));
  }
  return v.convert_to<u64>();
}

std::string gaussian_binom_str(int n, int d, u64 q) {
  cpp_int v = 1;
  for (int i = 0; i < d; ++i) {
    cpp_int num = cpp_int(boost::multiprecision::pow(cpp_int(q), unsigned(n - i))) - 1;
    cpp_int den = cpp_int(boost::multiprecision::pow(cpp_int(q), unsigned(i + 1))) - 1;
    v = v * num / den;
  }
  return v.str();
}

SubspaceStream::SubspaceStream(const Field& F, int n, int d, u64 cap)
    : F_(F), n_(n), d_(d) {
  require(d >= 0 && d <= n, Errc::input, "subspace dimension out of range");
  total_ = gaussian_binom_u64(n, d, F.q(), cap);
  for_each_subset(n, d, [&](const KSubset& s) { patterns_.push_back(s); });
}

void SubspaceStream::load_pattern() {
  const KSubset& piv = patterns_[pat_idx_];
  free_pos_.clear();
  std::vector<bool> is_pivot(n_ + 1, false);
  for (int p : piv) is_pivot[p] = true;
  for (int i = 0; i < d_; ++i)
    for (int j = piv[i] + 1; j <= n_; ++j)
      if (!is_pivot[j]) free_pos_.push_back(i * n_ + (j - 1));
  free_val_.assign(free_pos_.size(), 0);
  pat_fresh_ = true;
}

std::optional<Subspace> SubspaceStream::next() {
  while (pat_idx_ < patterns_.size()) {
    if (pat_fresh_) {
      load_pattern();
      pat_fresh_ = false;
    } else {
      // advance the free entries as a base-q counter, last slot fastest
      size_t i = free_val_.size();
      bool carried_out = true;
      while (i > 0) {
        --i;
        if (++free_val_[i] < F_.q()) {
          carried_out = false;
          break;
        }
        free_val_[i] = 0;
      }
      if (carried_out) {
        ++pat_idx_;
        pat_fresh_ = true;
        continue;
      }
    }
    const KSubset& piv = patterns_[pat_idx_];
    Mat basis(d_, n_);
    std::vector<int> pivots;
    for (int i = 0; i < d_; ++i) {
      basis.at(i, piv[i] - 1) = F_.from_int(1);
      pivots.push_back(piv[i] - 1);
    }
    for (size_t t = 0; t < free_pos_.size(); ++t) {
      int i = free_pos_[t] / n_, j = free_pos_[t] % n_;
      basis.at(i, j) = free_val_[t];
    }
    return Subspace(n_, std::move(basis), std::move(pivots));
  }
  return std::nullopt;
}

void for_each_subspace(const Field& F, int n, int d,
                       const std::function<void(const Subspace&)>& fn, u64 cap) {
  SubspaceStream st(F, n, d, cap);
  while (auto s = st.next()) fn(*s);
}

std::vector<std::vector<Fel>> projective_points(const Field& F, int n, u64 cap) {
  std::vector<std::vector<Fel>> pts;
  for_each_subspace(F, n, 1, [&](const Subspace& s) { pts.push_back(s.basis().row(0)); },
                    cap);
  return pts;
}

std::vector<Subspace> grassmann_line(const Field& F, const Subspace& Y,
                                     const Subspace& Z) {
  require(Y.n() == Z.n() && Y.dim() + 2 == Z.dim(), Errc::input,
          "NotNested: need dim Z = dim Y + 2");
  require(Z.contains(F, Y), Errc::input, "NotNested: Y not inside Z");
  // two vectors of Z independent modulo Y
  std::vector<std::vector<Fel>> trans;
  Subspace acc = Y;
  for (int i = 0; i < Z.dim() && int(trans.size()) < 2; ++i) {
    std::vector<Fel> v = Z.basis().row(i);
    if (!acc.contains_vector(F, v)) {
      trans.push_back(v);
      Mat m(acc.dim() + 1, Y.n());
      for (int r = 0; r < acc.dim(); ++r) m.set_row(r, acc.basis().row(r));
      m.set_row(acc.dim(), v);
      acc = canonicalize(F, m);
    }
  }
  require(trans.size() == 2, Errc::internal, "transversal extraction failed");
  std::vector<Subspace> out;
  auto member = [&](const std::vector<Fel>& w) {
    Mat m(Y.dim() + 1, Y.n());
    for (int r = 0; r < Y.dim(); ++r) m.set_row(r, Y.basis().row(r));
    m.set_row(Y.dim(), w);
    out.push_back(canonicalize(F, m));
  };
  member(trans[0]);
  for (Fel c = 0; c < F.q(); ++c) {
    std::vector<Fel> w(Y.n());
    for (int j = 0; j < Y.n(); ++j)
      w[j] = F.add(F.mul(c, trans[0][j]), trans[1][j]);
    member(w);
  }
  return out;
}

std::vector<Fel> QuotientFrame::project(const Field& F,
                                        const std::vector<Fel>& v) const {
  std::vector<Fel> r = v;
  const Mat& B = base.basis();
  for (int i = 0; i < base.dim(); ++i) {
    Fel c = r[base.pivots()[i]];
    if (!c) continue;
    for (int j = 0; j < base.n(); ++j) r[j] = F.sub(r[j], F.mul(c, B.at(i, j)));
  }
  std::vector<Fel> w(complement_cols.size());
  for (size_t t = 0; t < complement_cols.size(); ++t) w[t] = r[complement_cols[t]];
  return w;
}

std::vector<Fel> QuotientFrame::lift(const std::vector<Fel>& w) const {
  std::vector<Fel> v(base.n(), 0);
  for (size_t t = 0; t < complement_cols.size(); ++t) v[complement_cols[t]] = w[t];
  return v;
}

QuotientFrame quotient_frame(const Field& F, const Subspace& X) {
  require(X.dim() < X.n(), Errc::input, "FullSpace: nothing to complement");
  (void)F;
  QuotientFrame qf;
  qf.base = X;
  std::vector<bool> is_pivot(X.n(), false);
  for (int p : X.pivots()) is_pivot[p] = true;
  for (int j = 0; j < X.n(); ++j)
    if (!is_pivot[j]) qf.complement_cols.push_back(j);
  return qf;
}

}  // namespace gh
