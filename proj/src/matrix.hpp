#ifndef GH_MATRIX_HPP
#define GH_MATRIX_HPP

#include <vector>

#include "field.hpp"

namespace gh {

// Dense exact matrix, row-major field elements.
class Mat {
public:
  Mat() = default;
  Mat(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols, 0) {}
  static Mat identity(const Field& F, int n);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Fel at(int i, int j) const { return a_[size_t(i) * c_ + j]; }
  Fel& at(int i, int j) { return a_[size_t(i) * c_ + j]; }
  const std::vector<Fel>& data() const { return a_; }

  Mat transpose() const;
  std::vector<Fel> row(int i) const;
  void set_row(int i, const std::vector<Fel>& v);

  bool operator==(const Mat& o) const {
    return r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
  }

private:
  int r_ = 0, c_ = 0;
  std::vector<Fel> a_;
};

Mat mat_add(const Field& F, const Mat& a, const Mat& b);
Mat mat_sub(const Field& F, const Mat& a, const Mat& b);
Mat mat_mul(const Field& F, const Mat& a, const Mat& b);
Mat mat_scale(const Field& F, Fel c, const Mat& a);
std::vector<Fel> mat_vec(const Field& F, const Mat& a, const std::vector<Fel>& v);
std::vector<Fel> vec_mat(const Field& F, const std::vector<Fel>& v, const Mat& a);

struct RrefResult {
  Mat mat;
  int rank = 0;
  std::vector<int> pivots;
};

// Unique reduced row echelon form.  Dispatches to the bit-packed GF(2) path
// when the field is GF(2); force_generic pins the element-wise route (used by
// the agreement tests).
RrefResult rref(const Field& F, const Mat& m, bool force_generic = false);
int rank_of(const Field& F, const Mat& m, bool force_generic = false);

// Canonical basis (RREF rows) of the right null space.
Mat kernel(const Field& F, const Mat& m, bool force_generic = false);

Fel det(const Field& F, Mat m);
Mat inverse(const Field& F, const Mat& m);  // throws on singular input

// Pfaffian by perfect-matching expansion; antisymmetric with zero diagonal
// (checked; the zero diagonal matters in characteristic 2), even size <= 8.
Fel pfaffian_numeric(const Field& F, const Mat& m);

// True iff the characteristic polynomial of m has a root in F.  Enumerable
// fields evaluate det(m - t I) at every t; the large-prime fast path (size
// <= 3) tests gcd(x^p - x, charpoly) instead.
bool has_eigenvalue(const Field& F, const Mat& m);

UniPoly char_poly_cubic(const Field& F, const Mat& m);  // size <= 3

// ---------------------------------------------------------------------------
// Bit-packed GF(2) matrix: each row is a span of 64-bit words.

class BitMat {
public:
  BitMat() = default;
  BitMat(int rows, int cols)
      : r_(rows), c_(cols), w_((cols + 63) / 64), a_(size_t(rows) * w_, 0) {}
  static BitMat from(const Mat& m);
  Mat to_mat() const;

  int rows() const { return r_; }
  int cols() const { return c_; }
  bool get(int i, int j) const {
    return (a_[size_t(i) * w_ + (j >> 6)] >> (j & 63)) & 1;
  }
  void set(int i, int j, bool v) {
    u64& w = a_[size_t(i) * w_ + (j >> 6)];
    u64 bit = u64(1) << (j & 63);
    if (v)
      w |= bit;
    else
      w &= ~bit;
  }
  u64* row_words(int i) { return &a_[size_t(i) * w_]; }
  const u64* row_words(int i) const { return &a_[size_t(i) * w_]; }
  int words_per_row() const { return w_; }

  void xor_row(int dst, int src) {
    u64* d = row_words(dst);
    const u64* s = row_words(src);
    for (int k = 0; k < w_; ++k) d[k] ^= s[k];
  }

private:
  int r_ = 0, c_ = 0, w_ = 0;
  std::vector<u64> a_;
};

struct BitRrefResult {
  BitMat mat;
  int rank = 0;
  std::vector<int> pivots;
};

BitRrefResult bit_rref(BitMat m);
BitMat bit_kernel(const BitMat& m);

}  // namespace gh

#endif
