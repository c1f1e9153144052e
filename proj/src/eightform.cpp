#include "hyperplane.hpp"
#include "rng.hpp"

namespace gh {

int pair_rank6(int i, int j) { return int(subset_rank(6, {i, j})); }

Fel EightForm::at(int i, int j) const { return a[pair_rank6(i, j)]; }
void EightForm::set(int i, int j, Fel v) { a[pair_rank6(i, j)] = v; }

Mat a_matrix(const Field& F, const EightForm& c8) {
  (void)F;
  Mat A(3, 3);
  for (int i = 1; i <= 3; ++i)
    for (int j = 4; j <= 6; ++j) A.at(i - 1, j - 4) = c8.at(i, j);
  return A;
}

Functional build_canonical_eight(const Field& F, const EightForm& c8) {
  Functional f = zero_functional(8, 3);
  Fel one = F.from_int(1);
  for (const char* t : {"123", "456", "147", "257", "367"})
    add_term(F, f, {t[0] - '0', t[1] - '0', t[2] - '0'}, one);
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) {
      Fel v = c8.at(i, j);
      if (v) add_term(F, f, {i, j, 8}, v);
    }
  return f;
}

EightForm eight_from_functional(const Field& F, const Functional& f) {
  require(f.n == 8 && f.k == 3, Errc::input, "expected a form on dim 8");
  // check the T9 block and the absence of i78 / ij7 extras
  Functional t9 = canonical_form(F, Type::T9, 8);
  EightForm c8;
  u64 r = 0;
  bool ok = true;
  for_each_subset(8, 3, [&](const KSubset& s) {
    Fel c = f.coeffs[r];
    Fel base = t9.coeffs[r];
    ++r;
    if (s.back() == 8 && s[1] <= 6) {
      c8.set(s[0], s[1], c);
      return;
    }
    if (c != base) ok = false;
  });
  require(ok, Errc::input, "functional is not in the canonical n=8 shape");
  return c8;
}

EightForm random_eigfree(const Field& F, u64 seed) {
  Rng rng(seed);
  for (int tries = 0; tries < 4096; ++tries) {
    EightForm c8;
    for (auto& v : c8.a) v = rng.field_element(F);
    if (!has_eigenvalue(F, a_matrix(F, c8))) return c8;
  }
  fail_internal("random_eigfree: rejection sampling exhausted");
}

Mat eight_change_matrix(const Field& F, const Mat& C) {
  require(C.rows() == 3 && C.cols() == 3, Errc::input, "C must be 3x3");
  require(det(F, C) == F.from_int(1), Errc::input, "C must have determinant 1");
  Mat Cit = inverse(F, C).transpose();
  Mat M(8, 8);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      M.at(i, j) = C.at(i, j);
      M.at(3 + i, 3 + j) = Cit.at(i, j);
    }
  M.at(6, 6) = F.from_int(1);
  M.at(7, 7) = F.from_int(1);
  return M;
}

EightForm transform_eight(const Field& F, const EightForm& c8, const Mat& C) {
  Functional h = build_canonical_eight(F, c8);
  Functional moved = pullback(F, h, eight_change_matrix(F, C));
  return eight_from_functional(F, moved);
}

bool has_normalized_zeros(const EightForm& c8) {
  return c8.at(2, 5) == 0 && c8.at(2, 6) == 0 && c8.at(3, 4) == 0 &&
         c8.at(3, 6) == 0;
}

EightForm normalize_eight(const Field& F, const EightForm& c8) {
  Mat A = a_matrix(F, c8);
  require(!has_eigenvalue(F, A), Errc::input,
          "EigenvaluePresent: A must have no eigenvalue in the field");
  EightForm work = c8;
  if (work.at(1, 6) == 0) {
    // swap e1 <-> e2 (and e4 <-> e5) with a sign to move a26 into slot 16
    Mat S(3, 3);
    S.at(0, 1) = F.from_int(1);
    S.at(1, 0) = F.neg(F.from_int(1));
    S.at(2, 2) = F.from_int(1);
    work = transform_eight(F, work, S);
    require(work.at(1, 6) != 0, Errc::internal,
            "swap failed to produce a16 != 0");
  }
  A = a_matrix(F, work);
  Fel inv16 = F.inv(A.at(0, 2));
  Mat U1 = Mat::identity(F, 3);
  U1.at(1, 0) = F.neg(F.mul(A.at(1, 2), inv16));
  U1.at(2, 0) = F.neg(F.mul(A.at(2, 2), inv16));
  Mat A1 = mat_mul(F, mat_mul(F, U1, A), inverse(F, U1));
  require(A1.at(1, 0) != 0, Errc::internal, "a'24 vanished unexpectedly");
  Fel inv24 = F.inv(A1.at(1, 0));
  Mat U2 = Mat::identity(F, 3);
  U2.at(0, 1) = F.mul(A1.at(1, 1), inv24);
  U2.at(2, 1) = F.neg(F.mul(A1.at(2, 0), inv24));
  Mat C = mat_mul(F, U2, U1).transpose();
  EightForm out = transform_eight(F, work, C);
  require(has_normalized_zeros(out), Errc::internal,
          "normalization did not produce the four zeros");
  return out;
}

}  // namespace gh
