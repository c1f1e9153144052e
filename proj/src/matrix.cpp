#include "matrix.hpp"

#include <algorithm>

namespace gh {

Mat Mat::identity(const Field& F, int n) {
  Mat m(n, n);
  Fel one = F.from_int(1);
  for (int i = 0; i < n; ++i) m.at(i, i) = one;
  return m;
}

Mat Mat::transpose() const {
  Mat t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::vector<Fel> Mat::row(int i) const {
  return std::vector<Fel>(a_.begin() + size_t(i) * c_,
                          a_.begin() + size_t(i + 1) * c_);
}

void Mat::set_row(int i, const std::vector<Fel>& v) {
  std::copy(v.begin(), v.end(), a_.begin() + size_t(i) * c_);
}

Mat mat_add(const Field& F, const Mat& a, const Mat& b) {
  Mat r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = F.add(a.at(i, j), b.at(i, j));
  return r;
}

Mat mat_sub(const Field& F, const Mat& a, const Mat& b) {
  Mat r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = F.sub(a.at(i, j), b.at(i, j));
  return r;
}

Mat mat_mul(const Field& F, const Mat& a, const Mat& b) {
  require(a.cols() == b.rows(), Errc::input, "matrix product shape mismatch");
  Mat r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      Fel v = a.at(i, k);
      if (!v) continue;
      for (int j = 0; j < b.cols(); ++j)
        r.at(i, j) = F.add(r.at(i, j), F.mul(v, b.at(k, j)));
    }
  return r;
}

Mat mat_scale(const Field& F, Fel c, const Mat& a) {
  Mat r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = F.mul(c, a.at(i, j));
  return r;
}

std::vector<Fel> mat_vec(const Field& F, const Mat& a, const std::vector<Fel>& v) {
  std::vector<Fel> r(a.rows(), 0);
  for (int i = 0; i < a.rows(); ++i) {
    Fel s = 0;
    for (int j = 0; j < a.cols(); ++j) s = F.add(s, F.mul(a.at(i, j), v[j]));
    r[i] = s;
  }
  return r;
}

std::vector<Fel> vec_mat(const Field& F, const std::vector<Fel>& v, const Mat& a) {
  std::vector<Fel> r(a.cols(), 0);
  for (int i = 0; i < a.rows(); ++i) {
    Fel c = v[i];
    if (!c) continue;
    for (int j = 0; j < a.cols(); ++j) r[j] = F.add(r[j], F.mul(c, a.at(i, j)));
  }
  return r;
}

static RrefResult rref_generic(const Field& F, Mat m) {
  RrefResult out;
  int rows = m.rows(), cols = m.cols();
  int lead = 0;
  for (int col = 0; col < cols && lead < rows; ++col) {
    int piv = -1;
    for (int i = lead; i < rows; ++i)
      if (m.at(i, col)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != lead)
      for (int j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(lead, j));
    Fel s = F.inv(m.at(lead, col));
    if (s != 1)
      for (int j = 0; j < cols; ++j) m.at(lead, j) = F.mul(s, m.at(lead, j));
    for (int i = 0; i < rows; ++i) {
      if (i == lead) continue;
      Fel f = m.at(i, col);
      if (!f) continue;
      for (int j = 0; j < cols; ++j)
        m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(lead, j)));
    }
    out.pivots.push_back(col);
    ++lead;
  }
  out.rank = lead;
  out.mat = std::move(m);
  return out;
}

RrefResult rref(const Field& F, const Mat& m, bool force_generic) {
  if (!force_generic && F.is_gf2()) {
    BitRrefResult b = bit_rref(BitMat::from(m));
    return {b.mat.to_mat(), b.rank, std::move(b.pivots)};
  }
  return rref_generic(F, m);
}

int rank_of(const Field& F, const Mat& m, bool force_generic) {
  if (!force_generic && F.is_gf2()) return bit_rref(BitMat::from(m)).rank;
  return rref_generic(F, m).rank;
}

// kernel basis from an rref: one row per free column, then re-canonicalized
static Mat kernel_from_rref(const Field& F, const RrefResult& r, int cols) {
  std::vector<bool> is_pivot(cols, false);
  for (int p : r.pivots) is_pivot[p] = true;
  int dim = cols - r.rank;
  Mat out(dim, cols);
  int row = 0;
  for (int j = 0; j < cols; ++j) {
    if (is_pivot[j]) continue;
    out.at(row, j) = F.from_int(1);
    for (int i = 0; i < r.rank; ++i)
      out.at(row, r.pivots[i]) = F.neg(r.mat.at(i, j));
    ++row;
  }
  return rref_generic(F, out).mat;
}

Mat kernel(const Field& F, const Mat& m, bool force_generic) {
  if (!force_generic && F.is_gf2()) {
    BitMat k = bit_kernel(BitMat::from(m));
    return k.to_mat();
  }
  RrefResult r = rref_generic(F, m);
  return kernel_from_rref(F, r, m.cols());
}

Fel det(const Field& F, Mat m) {
  require(m.rows() == m.cols(), Errc::input, "determinant of non-square matrix");
  int n = m.rows();
  Fel d = F.from_int(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (m.at(i, col)) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
      d = F.neg(d);
    }
    Fel pv = m.at(col, col);
    d = F.mul(d, pv);
    Fel inv = F.inv(pv);
    for (int i = col + 1; i < n; ++i) {
      Fel f = m.at(i, col);
      if (!f) continue;
      Fel scale = F.mul(f, inv);
      for (int j = col; j < n; ++j)
        m.at(i, j) = F.sub(m.at(i, j), F.mul(scale, m.at(col, j)));
    }
  }
  return d;
}

Mat inverse(const Field& F, const Mat& m) {
  require(m.rows() == m.cols(), Errc::input, "inverse of non-square matrix");
  int n = m.rows();
  Mat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = F.from_int(1);
  }
  RrefResult r = rref(F, aug);
  require(r.rank == n && r.pivots.size() == size_t(n) && r.pivots[n - 1] == n - 1,
          Errc::input, "matrix not invertible");
  Mat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = r.mat.at(i, n + j);
  return out;
}

static Fel pfaffian_rec(const Field& F, const Mat& m, std::vector<int>& idx) {
  size_t k = idx.size();
  if (k == 0) return F.from_int(1);
  int i0 = idx[0];
  Fel sum = 0;
  bool negate = false;
  for (size_t j = 1; j < k; ++j) {
    int pair = idx[j];
    Fel mij = m.at(i0, pair);
    if (mij) {
      std::vector<int> rest;
      rest.reserve(k - 2);
      for (size_t t = 1; t < k; ++t)
        if (t != j) rest.push_back(idx[t]);
      Fel sub = pfaffian_rec(F, m, rest);
      Fel term = F.mul(mij, sub);
      sum = F.add(sum, negate ? F.neg(term) : term);
    }
    negate = !negate;
  }
  return sum;
}

Fel pfaffian_numeric(const Field& F, const Mat& m) {
  require(m.rows() == m.cols(), Errc::input, "Pfaffian of non-square matrix");
  int n = m.rows();
  require(n % 2 == 0, Errc::input, "OddSize: Pfaffian needs even size");
  require(n <= 8, Errc::input, "Pfaffian expansion limited to size 8");
  for (int i = 0; i < n; ++i) {
    require(m.at(i, i) == 0, Errc::input, "NotAntisymmetric: nonzero diagonal");
    for (int j = i + 1; j < n; ++j)
      require(m.at(i, j) == F.neg(m.at(j, i)), Errc::input,
              "NotAntisymmetric: m[i][j] != -m[j][i]");
  }
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  return pfaffian_rec(F, m, idx);
}

UniPoly char_poly_cubic(const Field& F, const Mat& m) {
  int n = m.rows();
  require(n >= 1 && n <= 3 && m.cols() == n, Errc::input,
          "closed-form characteristic polynomial needs size 1..3");
  Fel one = F.from_int(1);
  if (n == 1) return UniPoly({F.neg(m.at(0, 0)), one});
  if (n == 2) {
    Fel tr = F.add(m.at(0, 0), m.at(1, 1));
    Fel dt = F.sub(F.mul(m.at(0, 0), m.at(1, 1)), F.mul(m.at(0, 1), m.at(1, 0)));
    return UniPoly({dt, F.neg(tr), one});
  }
  Fel tr = F.add(F.add(m.at(0, 0), m.at(1, 1)), m.at(2, 2));
  // sum of principal 2x2 minors
  auto minor2 = [&](int i, int j) {
    return F.sub(F.mul(m.at(i, i), m.at(j, j)), F.mul(m.at(i, j), m.at(j, i)));
  };
  Fel s2 = F.add(F.add(minor2(0, 1), minor2(0, 2)), minor2(1, 2));
  Fel dt = det(F, m);
  // t^3 - tr t^2 + s2 t - det
  return UniPoly({F.neg(dt), s2, F.neg(tr), one});
}

bool has_eigenvalue(const Field& F, const Mat& m) {
  require(m.rows() == m.cols(), Errc::input, "eigenvalue test needs square matrix");
  int n = m.rows();
  if (!F.large()) {
    for (Fel t = 0; t < F.q(); ++t) {
      Mat shifted = m;
      for (int i = 0; i < n; ++i) shifted.at(i, i) = F.sub(shifted.at(i, i), t);
      if (det(F, shifted) == 0) return true;
    }
    return false;
  }
  require(n <= 3, Errc::input,
          "large-prime eigenvalue test limited to size <= 3");
  UniPoly cp = char_poly_cubic(F, m);
  UniPoly xp = UniPoly::powmod_x(F, F.p(), cp);
  UniPoly g = UniPoly::gcd(F, UniPoly::sub(F, xp, UniPoly::x()), cp);
  return g.degree() >= 1;
}

// --- BitMat ----------------------------------------------------------------

BitMat BitMat::from(const Mat& m) {
  BitMat b(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j)) b.set(i, j, true);
  return b;
}

Mat BitMat::to_mat() const {
  Mat m(r_, c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j)
      if (get(i, j)) m.at(i, j) = 1;
  return m;
}

BitRrefResult bit_rref(BitMat m) {
  BitRrefResult out;
  int rows = m.rows(), cols = m.cols();
  int lead = 0;
  for (int col = 0; col < cols && lead < rows; ++col) {
    int piv = -1;
    for (int i = lead; i < rows; ++i)
      if (m.get(i, col)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != lead) {
      u64* a = m.row_words(piv);
      u64* b = m.row_words(lead);
      for (int k = 0; k < m.words_per_row(); ++k) std::swap(a[k], b[k]);
    }
    for (int i = 0; i < rows; ++i)
      if (i != lead && m.get(i, col)) m.xor_row(i, lead);
    out.pivots.push_back(col);
    ++lead;
  }
  out.rank = lead;
  out.mat = std::move(m);
  return out;
}

BitMat bit_kernel(const BitMat& m) {
  BitRrefResult r = bit_rref(m);
  int cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int p : r.pivots) is_pivot[p] = true;
  int dim = cols - r.rank;
  BitMat out(dim, cols);
  int row = 0;
  for (int j = 0; j < cols; ++j) {
    if (is_pivot[j]) continue;
    out.set(row, j, true);
    for (int i = 0; i < r.rank; ++i)
      if (r.mat.get(i, j)) out.set(row, r.pivots[i], true);
    ++row;
  }
  return bit_rref(std::move(out)).mat;
}

}  // namespace gh
