#include "hyperplane.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <map>
#include <unordered_set>

namespace gh {

Hyperplane::Hyperplane(const Field& F, Functional f)
    : F_(F), f_(std::move(f)), cache_(std::make_shared<Cache>()) {
  require(!f_.is_zero(), Errc::input, "ZeroFunctional: hyperplane needs f != 0");
  require(f_.k >= 2 && f_.k < f_.n, Errc::input, "need 2 <= k < n");
}

int Hyperplane::rank() const {
  std::lock_guard<std::mutex> lk(cache_->mu);
  if (!cache_->rank) cache_->rank = rank_of(F_, ftilde_matrix(F_, f_));
  return *cache_->rank;
}

const Subspace& Hyperplane::lower_radical() const {
  std::lock_guard<std::mutex> lk(cache_->mu);
  if (!cache_->lower) {
    // Rad(f) = right null space of the C(n,k-1) x n matrix S -> f(e_S ^ e_x),
    // which is the transpose of ftilde.
    Mat K = kernel(F_, ftilde_matrix(F_, f_).transpose());
    RrefResult r = rref(F_, K);
    cache_->lower = Subspace(f_.n, r.mat, r.pivots);
  }
  return *cache_->lower;
}

const std::vector<Mat>& Hyperplane::tri() const {
  std::lock_guard<std::mutex> lk(cache_->mu);
  if (!cache_->tri) {
    require(f_.k == 3, Errc::internal, "tri tensor is a k=3 facility");
    int n = f_.n;
    std::vector<Mat> T(n, Mat(n, n));
    u64 r = 0;
    for_each_subset(n, 3, [&](const KSubset& s) {
      Fel c = f_.coeffs[r++];
      if (!c) return;
      int a = s[0] - 1, b = s[1] - 1, d = s[2] - 1;
      Fel nc = F_.neg(c);
      T[a].at(b, d) = c;
      T[a].at(d, b) = nc;
      T[b].at(a, d) = nc;
      T[b].at(d, a) = c;
      T[d].at(a, b) = c;
      T[d].at(b, a) = nc;
    });
    cache_->tri = std::move(T);
  }
  return *cache_->tri;
}

bool hyperplane_contains(const Hyperplane& H, const Subspace& X) {
  require(X.dim() == H.k(), Errc::input,
          "DimensionMismatch: membership needs a k-subspace");
  return eval_on_multivector(H.field(), H.functional(),
                             plucker(H.field(), X)) == 0;
}

LocalPolarSpace local_polar(const Hyperplane& H, const Subspace& X) {
  const Field& F = H.field();
  require(X.n() == H.n() && X.dim() == H.k() - 2, Errc::input,
          "DimensionMismatch: local polar space needs dim X = k-2");
  LocalPolarSpace out;
  out.base = X;
  out.frame = quotient_frame(F, X);
  int m = out.frame.quot_dim();
  out.gram = Mat(m, m);
  MultiVector xi;
  if (X.dim() == 0) {
    xi.n = X.n();
    xi.degree = 0;
    xi.coeffs = {F.from_int(1)};
  } else {
    xi = plucker(F, X);
  }
  std::vector<MultiVector> xiu(m);
  for (int i = 0; i < m; ++i) {
    std::vector<Fel> ci(X.n(), 0);
    ci[out.frame.complement_cols[i]] = 1;
    xiu[i] = wedge_with_vector(F, xi, ci);
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      std::vector<Fel> cj(X.n(), 0);
      cj[out.frame.complement_cols[j]] = 1;
      Fel v = eval_on_multivector(F, H.functional(),
                                  wedge_with_vector(F, xiu[i], cj));
      out.gram.at(i, j) = v;
      out.gram.at(j, i) = F.neg(v);
    }
  return out;
}

int local_radical_rank(const Field& F, const LocalPolarSpace& s) {
  return s.gram.rows() - rank_of(F, s.gram);
}

std::vector<Subspace> local_radical_members(const Field& F,
                                            const LocalPolarSpace& s) {
  Mat K = kernel(F, s.gram);
  std::vector<Subspace> out;
  if (K.rows() == 0) return out;
  for_each_subspace(F, K.rows(), 1, [&](const Subspace& pt) {
    std::vector<Fel> w = vec_mat(F, pt.basis().row(0), K);
    std::vector<Fel> v = s.frame.lift(w);
    Mat rows(s.base.dim() + 1, s.base.n());
    for (int i = 0; i < s.base.dim(); ++i) rows.set_row(i, s.base.basis().row(i));
    rows.set_row(s.base.dim(), v);
    out.push_back(canonicalize(F, rows));
  });
  std::sort(out.begin(), out.end());
  return out;
}

int pole_degree(const Hyperplane& H, const std::vector<Fel>& point) {
  const Field& F = H.field();
  require(H.k() == 3, Errc::input, "pole degree is defined for k = 3");
  int n = H.n();
  const std::vector<Mat>& T = H.tri();
  Mat B(n, n);
  for (int i = 0; i < n; ++i) {
    Fel c = point[i];
    if (!c) continue;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        B.at(x, y) = F.add(B.at(x, y), F.mul(c, T[i].at(x, y)));
  }
  return n - 1 - rank_of(F, B);
}

int depth(const Hyperplane& H) {
  int best = 0;
  for (auto& p : projective_points(H.field(), H.n()))
    best = std::max(best, pole_degree(H, p));
  return best;
}

Subspace hyperplane_kernel(const Hyperplane& H) {
  const Field& F = H.field();
  Mat K = kernel(F, ftilde_matrix(F, H.functional()));
  RrefResult r = rref(F, K);
  return Subspace(K.cols(), r.mat, r.pivots);
}

namespace {

std::vector<Subspace> upper_radical_kernel(const Hyperplane& H, u64 cap) {
  const Field& F = H.field();
  require(H.k() == 3, Errc::input, "kernel method implemented for k = 3");
  Subspace K = hyperplane_kernel(H);
  int kd = K.dim();
  gaussian_binom_u64(kd, 1, F.q(), cap);  // cap check before enumerating
  std::vector<Subspace> out;
  for_each_subspace(F, kd, 1, [&](const Subspace& pt) {
    std::vector<Fel> w = vec_mat(F, pt.basis().row(0), K.basis());
    MultiVector mv{H.n(), 2, w};
    Mat W = bivector_matrix(F, mv);
    RrefResult r = rref(F, W);
    if (r.rank != 2) return;
    Mat rows(2, H.n());
    rows.set_row(0, r.mat.row(0));
    rows.set_row(1, r.mat.row(1));
    out.push_back(Subspace(H.n(), rows, {r.pivots[0], r.pivots[1]}));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subspace> upper_radical_brute(const Hyperplane& H, u64 cap) {
  const Field& F = H.field();
  Mat T = ftilde_matrix(F, H.functional());
  std::vector<Subspace> out;
  for_each_subspace(F, H.n(), H.k() - 1, [&](const Subspace& Y) {
    MultiVector w = plucker(F, Y);
    for (int x = 0; x < T.rows(); ++x) {
      Fel s = 0;
      for (int j = 0; j < T.cols(); ++j)
        if (T.at(x, j) && w.coeffs[j]) s = F.add(s, F.mul(T.at(x, j), w.coeffs[j]));
      if (s) return;
    }
    out.push_back(Y);
  }, cap);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Subspace> upper_radical(const Hyperplane& H, RadicalMethod method,
                                    u64 cap) {
  if (method == RadicalMethod::Kernel) return upper_radical_kernel(H, cap);
  if (method == RadicalMethod::BruteForce) return upper_radical_brute(H, cap);
  if (H.k() != 3) return upper_radical_brute(H, cap);
  const Field& F = H.field();
  int kd = int(binom(H.n(), 2)) - H.rank();
  double kern_pts = std::pow(double(F.q()), kd);
  double brute_pts = std::pow(double(F.q()), 2 * (H.n() - 2));  // ~[n,2]_q
  return kern_pts <= brute_pts ? upper_radical_kernel(H, cap)
                               : upper_radical_brute(H, cap);
}

std::vector<Subspace> i_radical(const Hyperplane& H, int i, u64 cap) {
  const Field& F = H.field();
  require(i >= 1 && i < H.k(), Errc::input, "i-radical needs 1 <= i < k");
  int n = H.n(), k = H.k();
  // X in R_i iff f(xi_X ^ e_B) = 0 for every (k-i)-subset B
  u64 rows = binom(n, i), cols = binom(n, k - i);
  Mat M(int(rows), int(cols));
  u64 ra = 0;
  for_each_subset(n, i, [&](const KSubset& A) {
    u64 my_ra = ra++;
    u64 maska = 0;
    for (int x : A) maska |= u64(1) << x;
    u64 rb = 0;
    for_each_subset(n, k - i, [&](const KSubset& B) {
      u64 my_rb = rb++;
      for (int y : B)
        if (maska & (u64(1) << y)) return;
      KSubset t;
      std::merge(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(t));
      Fel c = H.functional().coeffs[subset_rank(n, t)];
      if (!c) return;
      if (shuffle_sign(A, B) < 0) c = F.neg(c);
      M.at(int(my_ra), int(my_rb)) = c;
    });
  });
  std::vector<Subspace> out;
  for_each_subspace(F, n, i, [&](const Subspace& X) {
    MultiVector xi = plucker(F, X);
    for (int j = 0; j < M.cols(); ++j) {
      Fel s = 0;
      for (int r = 0; r < M.rows(); ++r)
        if (xi.coeffs[r] && M.at(r, j)) s = F.add(s, F.mul(xi.coeffs[r], M.at(r, j)));
      if (s) return;
    }
    out.push_back(X);
  }, cap);
  std::sort(out.begin(), out.end());
  return out;
}

// all projective points on a line (2-subspace), as canonical representatives
static std::vector<std::vector<Fel>> line_points(const Field& F,
                                                 const Subspace& line) {
  std::vector<std::vector<Fel>> pts;
  const std::vector<Fel> r0 = line.basis().row(0), r1 = line.basis().row(1);
  pts.push_back(r0);
  for (Fel c = 0; c < F.q(); ++c) {
    std::vector<Fel> v(line.n());
    for (int j = 0; j < line.n(); ++j) v[j] = F.add(F.mul(c, r0[j]), r1[j]);
    // normalize to leading 1
    int lead = 0;
    while (!v[lead]) ++lead;
    Fel inv = F.inv(v[lead]);
    if (inv != 1)
      for (auto& x : v) x = F.mul(inv, x);
    pts.push_back(std::move(v));
  }
  return pts;
}

bool is_spread_like(const Hyperplane& H, u64 cap) {
  const Field& F = H.field();
  std::vector<Subspace> R = upper_radical(H, RadicalMethod::Auto, cap);
  if (R.empty()) return false;
  if (H.k() == 3) {
    std::map<std::vector<Fel>, u64> cover;
    for (const Subspace& line : R)
      for (auto& p : line_points(F, line)) ++cover[p];
    u64 npoints = gaussian_binom_u64(H.n(), 1, F.q(), cap);
    if (cover.size() != npoints) return false;
    for (auto& [p, c] : cover)
      if (c != 1) return false;
    return true;
  }
  bool ok = true;
  for_each_subspace(F, H.n(), H.k() - 2, [&](const Subspace& X) {
    if (!ok) return;
    u64 cnt = 0;
    for (const Subspace& Y : R)
      if (Y.contains(F, X)) ++cnt;
    if (cnt != 1) ok = false;
  }, cap);
  return ok;
}

RestrictResult restrict_hyperplane(const Hyperplane& H, const Subspace& W) {
  const Field& F = H.field();
  require(W.n() == H.n(), Errc::input, "restriction ambient mismatch");
  require(W.dim() > H.k(), Errc::input,
          "DimensionTooSmall: restriction needs dim W > k");
  RestrictResult out;
  out.functional = zero_functional(W.dim(), H.k());
  u64 r = 0;
  bool any = false;
  for_each_subset(W.dim(), H.k(), [&](const KSubset& s) {
    std::vector<std::vector<Fel>> rows;
    rows.reserve(H.k());
    for (int x : s) rows.push_back(W.basis().row(x - 1));
    Fel v = apply_functional(F, H.functional(), rows);
    if (v) any = true;
    out.functional.coeffs[r++] = v;
  });
  out.full = !any;
  return out;
}

Subspace canonical_complement(const Field& F, const Subspace& X) {
  QuotientFrame qf = quotient_frame(F, X);
  Mat rows(qf.quot_dim(), X.n());
  for (int i = 0; i < qf.quot_dim(); ++i)
    rows.at(i, qf.complement_cols[i]) = F.from_int(1);
  return canonicalize(F, rows);
}

Functional trivial_extension(const Field& F, const Functional& f0,
                             const Subspace& V0, const Subspace& V1) {
  int n = V0.n();
  require(V1.n() == n, Errc::input, "ambient mismatch");
  require(f0.n == V0.dim(), Errc::input, "f0 must live on V0 coordinates");
  require(f0.k <= V0.dim(), Errc::input, "need dim V0 >= k");
  require(V0.dim() + V1.dim() == n, Errc::input,
          "NotComplementary: dim V0 + dim V1 != n");
  Mat B(n, n);
  for (int i = 0; i < V0.dim(); ++i) B.set_row(i, V0.basis().row(i));
  for (int i = 0; i < V1.dim(); ++i) B.set_row(V0.dim() + i, V1.basis().row(i));
  Mat Binv;
  try {
    Binv = inverse(F, B);
  } catch (const Error&) {
    fail_input("NotComplementary: V0 and V1 do not span V");
  }
  // coordinates of e_i are row i of B^{-1}; the V0 block is the projection
  std::vector<std::vector<Fel>> proj(n);
  for (int i = 0; i < n; ++i) {
    proj[i].assign(V0.dim(), 0);
    for (int j = 0; j < V0.dim(); ++j) proj[i][j] = Binv.at(i, j);
  }
  Functional out = zero_functional(n, f0.k);
  u64 r = 0;
  for_each_subset(n, f0.k, [&](const KSubset& s) {
    std::vector<std::vector<Fel>> vs;
    vs.reserve(f0.k);
    for (int x : s) vs.push_back(proj[x - 1]);
    out.coeffs[r++] = apply_functional(F, f0, vs);
  });
  return out;
}

Functional trivial_hyperplane(const Field& F, const Subspace& V1, int k) {
  int n = V1.n();
  require(V1.dim() == n - k, Errc::input,
          "trivial hyperplane center must have codimension k");
  Subspace V0 = canonical_complement(F, V1);
  Functional det_f = zero_functional(k, k);
  det_f.coeffs[0] = F.from_int(1);
  return trivial_extension(F, det_f, V0, V1);
}

Functional expansion(const Field& F, const Functional& f0) {
  (void)F;
  int n = f0.n + 1, k = f0.k + 1;
  Functional out = zero_functional(n, k);
  u64 r = 0;
  for_each_subset(n, k, [&](const KSubset& s) {
    u64 my_r = r++;
    if (s.back() != n) return;
    KSubset head(s.begin(), s.end() - 1);
    out.coeffs[my_r] = f0.coeffs[subset_rank(f0.n, head)];
  });
  return out;
}

const char* type_name(Type t) {
  switch (t) {
    case Type::T1: return "T1";
    case Type::T2: return "T2";
    case Type::T3: return "T3";
    case Type::T4: return "T4";
    case Type::T5: return "T5";
    case Type::T6: return "T6";
    case Type::T7: return "T7";
    case Type::T8: return "T8";
    case Type::T9: return "T9";
    case Type::T10: return "T10";
    case Type::T11: return "T11";
  }
  return "?";
}

std::optional<Type> type_from_name(const std::string& s) {
  static const std::map<std::string, Type> m = {
      {"T1", Type::T1},   {"T2", Type::T2},  {"T3", Type::T3},
      {"T4", Type::T4},   {"T5", Type::T5},  {"T6", Type::T6},
      {"T7", Type::T7},   {"T8", Type::T8},  {"T9", Type::T9},
      {"T10", Type::T10}, {"T11", Type::T11}};
  auto it = m.find(s);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

int type_rank(Type t) {
  switch (t) {
    case Type::T1: return 3;
    case Type::T2: return 5;
    case Type::T3:
    case Type::T4:
    case Type::T10: return 6;
    default: return 7;
  }
}

namespace {

void add_terms(const Field& F, Functional& f, const char* spec_terms, Fel coeff) {
  // space-separated index triples written in Table-1 reading order
  std::string s(spec_terms);
  std::vector<int> idx;
  for (char c : s) {
    if (c == ' ') continue;
    idx.push_back(c - '0');
    if (idx.size() == 3) {
      add_term(F, f, idx, coeff);
      idx.clear();
    }
  }
}

}  // namespace

Functional canonical_form(const Field& F, Type t, int n, std::optional<Fel> lambda) {
  require(n >= type_rank(t) && n >= 4, Errc::input,
          "RankExceedsDimension: type needs n >= its rank");
  Functional f = zero_functional(n, 3);
  Fel one = F.from_int(1);
  switch (t) {
    case Type::T1: add_terms(F, f, "123", one); break;
    case Type::T2: add_terms(F, f, "123 145", one); break;
    case Type::T3: add_terms(F, f, "123 456", one); break;
    case Type::T4: add_terms(F, f, "162 243 135", one); break;
    case Type::T5: add_terms(F, f, "123 456 147", one); break;
    case Type::T6: add_terms(F, f, "152 174 163 243", one); break;
    case Type::T7: add_terms(F, f, "146 157 245 367", one); break;
    case Type::T8: add_terms(F, f, "123 145 167", one); break;
    case Type::T9: add_terms(F, f, "123 456 147 257 367", one); break;
    case Type::T10:
    case Type::T11: {
      require(!F.large(), Errc::input, "T10/T11 need an enumerable field");
      QuadraticParam qp = irreducible_quadratic_param(F);
      Fel lam = lambda.value_or(qp.lambda);
      if (lambda) {
        UniPoly pl = (F.p() == 2) ? UniPoly({one, lam, one})
                                  : UniPoly({F.neg(lam), 0, one});
        bool has_root = false;
        for (Fel x = 0; x < F.q() && !has_root; ++x)
          if (pl.eval(F, x) == 0) has_root = true;
        require(!has_root, Errc::input, "InvalidLambda: p_lambda is reducible");
      }
      if (F.p() != 2) {
        add_terms(F, f, "123", one);
        add_terms(F, f, "156 345 426", lam);
      } else {
        add_terms(F, f, "126 153 234", one);
        add_terms(F, f, "456", F.add(F.mul(lam, lam), one));
        add_terms(F, f, "156 345 426", lam);
      }
      if (t == Type::T11) add_terms(F, f, "147", one);
      break;
    }
  }
  return f;
}

SigmaResult sigma_in_hyperplane(const Hyperplane& H, const Subspace& Vp, u64 cap) {
  const Field& F = H.field();
  require(Vp.n() == H.n() && Vp.dim() == H.n() - 1, Errc::input,
          "sigma needs a hyperplane of V");
  require(is_spread_like(H, cap), Errc::input,
          "NotASpread: upper radical is not a spread");
  std::vector<Subspace> R = upper_radical(H, RadicalMethod::Auto, cap);
  SigmaResult out;
  for (const Subspace& line : R)
    if (Vp.contains(F, line)) out.lines.push_back(line);
  RestrictResult rr = restrict_hyperplane(H, Vp);
  if (rr.full) return out;
  Hyperplane Hp(F, rr.functional);
  for (auto& ppt : projective_points(F, Vp.dim(), cap)) {
    if (pole_degree(Hp, ppt) == 0) continue;
    std::vector<Fel> v = vec_mat(F, ppt, Vp.basis());  // back to V coordinates
    bool on = false;
    for (const Subspace& line : out.lines)
      if (line.contains_vector(F, v)) {
        on = true;
        break;
      }
    if (!on) {
      out.poles_covered = false;
      out.uncovered_poles.push_back(v);
    }
  }
  return out;
}

}  // namespace gh
