#include "exterior.hpp"

#include <algorithm>
#include <array>
#include <iterator>
#include <cctype>
#include <sstream>

namespace gh {

u64 binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  u64 r = 1;
  for (int i = 1; i <= k; ++i) r = r * u64(n - k + i) / u64(i);
  return r;
}

u64 subset_rank(int n, const KSubset& s) {
  int k = int(s.size());
  u64 rank = 0;
  int prev = 0;
  for (int i = 0; i < k; ++i) {
    for (int v = prev + 1; v < s[i]; ++v) rank += binom(n - v, k - i - 1);
    prev = s[i];
  }
  return rank;
}

KSubset subset_unrank(int n, int k, u64 rank) {
  KSubset s(k);
  int v = 1;
  for (int i = 0; i < k; ++i) {
    while (true) {
      u64 block = binom(n - v, k - i - 1);
      if (rank < block) break;
      rank -= block;
      ++v;
    }
    s[i] = v++;
  }
  return s;
}

void for_each_subset(int n, int k, const std::function<void(const KSubset&)>& fn) {
  if (k == 0) {
    fn({});
    return;
  }
  if (k > n) return;
  KSubset s(k);
  for (int i = 0; i < k; ++i) s[i] = i + 1;
  while (true) {
    fn(s);
    int i = k - 1;
    while (i >= 0 && s[i] == n - (k - 1 - i)) --i;
    if (i < 0) return;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

int shuffle_sign(const KSubset& a, const KSubset& b) {
  int inv = 0;
  for (int x : a)
    for (int y : b)
      if (x > y) ++inv;
  return (inv & 1) ? -1 : 1;
}

MultiVector wedge_with_vector(const Field& F, const MultiVector& a,
                              const std::vector<Fel>& v) {
  MultiVector out;
  out.n = a.n;
  out.degree = a.degree + 1;
  out.coeffs.assign(binom(a.n, out.degree), 0);
  u64 t_rank = 0;
  for_each_subset(a.n, out.degree, [&](const KSubset& t) {
    // Laplace expansion along the appended row
    Fel sum = 0;
    int d1 = out.degree;
    for (int i = 0; i < d1; ++i) {
      Fel vx = v[t[i] - 1];
      if (!vx) continue;
      KSubset rest;
      rest.reserve(d1 - 1);
      for (int j = 0; j < d1; ++j)
        if (j != i) rest.push_back(t[j]);
      Fel sub = a.coeffs[subset_rank(a.n, rest)];
      if (!sub) continue;
      Fel term = F.mul(vx, sub);
      if (((d1 - 1 - i) & 1) != 0) term = F.neg(term);
      sum = F.add(sum, term);
    }
    out.coeffs[t_rank++] = sum;
  });
  return out;
}

MultiVector wedge_of_vectors(const Field& F, const std::vector<std::vector<Fel>>& vecs,
                             int n) {
  require(!vecs.empty() && int(vecs.size()) <= n, Errc::input,
          "DimensionMismatch: need between 1 and n vectors");
  for (auto& v : vecs)
    require(int(v.size()) == n, Errc::input, "DimensionMismatch: vector length != n");
  MultiVector acc;
  acc.n = n;
  acc.degree = 0;
  acc.coeffs = {F.from_int(1)};
  for (auto& v : vecs) acc = wedge_with_vector(F, acc, v);
  return acc;
}

MultiVector wedge(const Field& F, const MultiVector& a, const MultiVector& b) {
  require(a.n == b.n, Errc::input, "DimensionMismatch: wedge over different spaces");
  MultiVector out;
  out.n = a.n;
  out.degree = a.degree + b.degree;
  require(out.degree <= a.n, Errc::input, "wedge degree exceeds dimension");
  out.coeffs.assign(binom(a.n, out.degree), 0);
  u64 ra = 0;
  for_each_subset(a.n, a.degree, [&](const KSubset& sa) {
    Fel ca = a.coeffs[ra++];
    if (!ca) return;
    u64 maska = 0;
    for (int x : sa) maska |= u64(1) << x;
    u64 rb = 0;
    for_each_subset(a.n, b.degree, [&](const KSubset& sb) {
      Fel cb = b.coeffs[rb++];
      if (!cb) return;
      for (int y : sb)
        if (maska & (u64(1) << y)) return;
      KSubset t;
      t.reserve(out.degree);
      std::merge(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(t));
      Fel term = F.mul(ca, cb);
      if (shuffle_sign(sa, sb) < 0) term = F.neg(term);
      u64 rt = subset_rank(a.n, t);
      out.coeffs[rt] = F.add(out.coeffs[rt], term);
    });
  });
  return out;
}

Functional zero_functional(int n, int k) {
  Functional f;
  f.n = n;
  f.k = k;
  f.coeffs.assign(binom(n, k), 0);
  return f;
}

void add_term(const Field& F, Functional& f, std::vector<int> idx, Fel c) {
  require(int(idx.size()) == f.k, Errc::input, "term arity mismatch");
  // sort and track permutation parity
  int sign = 1;
  for (size_t i = 1; i < idx.size(); ++i)
    for (size_t j = i; j > 0 && idx[j - 1] > idx[j]; --j) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  for (size_t i = 0; i + 1 < idx.size(); ++i)
    require(idx[i] != idx[i + 1], Errc::input, "repeated index in term");
  require(idx.front() >= 1 && idx.back() <= f.n, Errc::input,
          "index out of range 1..n");
  if (sign < 0) c = F.neg(c);
  u64 r = subset_rank(f.n, idx);
  f.coeffs[r] = F.add(f.coeffs[r], c);
}

Fel eval_on_multivector(const Field& F, const Functional& f, const MultiVector& w) {
  require(w.degree == f.k && w.n == f.n, Errc::input,
          "DimensionMismatch: functional arity vs multivector degree");
  Fel s = 0;
  for (size_t i = 0; i < f.coeffs.size(); ++i)
    if (f.coeffs[i] && w.coeffs[i]) s = F.add(s, F.mul(f.coeffs[i], w.coeffs[i]));
  return s;
}

Fel apply_functional(const Field& F, const Functional& f,
                     const std::vector<std::vector<Fel>>& vectors) {
  require(int(vectors.size()) == f.k, Errc::input,
          "DimensionMismatch: expected k vectors");
  return eval_on_multivector(F, f, wedge_of_vectors(F, vectors, f.n));
}

Mat ftilde_matrix(const Field& F, const Functional& f) {
  require(f.k >= 2, Errc::input, "ftilde needs k >= 2");
  int n = f.n;
  u64 cols = binom(n, f.k - 1);
  Mat T(n, int(cols));
  u64 s_rank = 0;
  for_each_subset(n, f.k - 1, [&](const KSubset& s) {
    u64 mask = 0;
    for (int x : s) mask |= u64(1) << x;
    for (int x = 1; x <= n; ++x) {
      if (mask & (u64(1) << x)) continue;
      KSubset full = s;
      full.insert(std::lower_bound(full.begin(), full.end(), x), x);
      Fel c = f.coeffs[subset_rank(n, full)];
      if (!c) continue;
      if (shuffle_sign(s, {x}) < 0) c = F.neg(c);
      T.at(x - 1, int(s_rank)) = c;
    }
    ++s_rank;
  });
  return T;
}

Functional pullback(const Field& F, const Functional& f, const Mat& M) {
  require(M.rows() == f.n && M.cols() == f.n, Errc::input,
          "pullback matrix shape mismatch");
  std::vector<std::vector<Fel>> cols(f.n, std::vector<Fel>(f.n));
  for (int j = 0; j < f.n; ++j)
    for (int i = 0; i < f.n; ++i) cols[j][i] = M.at(i, j);
  Functional out = zero_functional(f.n, f.k);
  u64 r = 0;
  for_each_subset(f.n, f.k, [&](const KSubset& s) {
    std::vector<std::vector<Fel>> vs;
    vs.reserve(f.k);
    for (int x : s) vs.push_back(cols[x - 1]);
    out.coeffs[r++] = apply_functional(F, f, vs);
  });
  return out;
}

Functional scale_functional(const Field& F, const Functional& f, Fel c) {
  Functional out = f;
  for (auto& v : out.coeffs) v = F.mul(v, c);
  return out;
}

Functional add_functionals(const Field& F, const Functional& a, const Functional& b) {
  require(a.n == b.n && a.k == b.k, Errc::input, "functional shape mismatch");
  Functional out = a;
  for (size_t i = 0; i < out.coeffs.size(); ++i)
    out.coeffs[i] = F.add(out.coeffs[i], b.coeffs[i]);
  return out;
}

Mat bivector_matrix(const Field& F, const MultiVector& w) {
  require(w.degree == 2, Errc::input, "bivector expected");
  Mat W(w.n, w.n);
  u64 r = 0;
  for_each_subset(w.n, 2, [&](const KSubset& s) {
    Fel c = w.coeffs[r++];
    if (!c) return;
    W.at(s[0] - 1, s[1] - 1) = c;
    W.at(s[1] - 1, s[0] - 1) = F.neg(c);
  });
  return W;
}

bool is_decomposable_bivector(const Field& F, const MultiVector& w) {
  require(w.degree == 2, Errc::input, "bivector expected");
  require(!w.is_zero(), Errc::input, "ZeroInput: zero bivector");
  return rank_of(F, bivector_matrix(F, w)) <= 2;
}

// --- text format -----------------------------------------------------------

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) {
    fail_input("functional parse error at position " + std::to_string(i) + ": " +
               what);
  }
  u64 number() {
    skip_ws();
    if (i >= s.size() || !std::isdigit((unsigned char)s[i])) fail("expected number");
    u64 v = 0;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) {
      v = v * 10 + (s[i] - '0');
      if (v > (u64(1) << 62)) fail("number too large");
      ++i;
    }
    return v;
  }
};

}  // namespace

Functional parse_functional(const Field& F, int n, int k, const std::string& text) {
  Functional f = zero_functional(n, k);
  Cursor c{text};
  if (c.done()) c.fail("empty input");
  bool first = true;
  while (!c.done()) {
    int sign = 1;
    char ch = c.peek();
    if (ch == '+' || ch == '-') {
      sign = (ch == '-') ? -1 : 1;
      ++c.i;
    } else if (!first) {
      c.fail("expected '+' or '-' between terms");
    }
    first = false;
    c.skip_ws();
    // optional coefficient: number followed by '*'
    Fel coeff = F.from_int(1);
    size_t save = c.i;
    if (std::isdigit((unsigned char)c.peek())) {
      u64 v = c.number();
      if (c.peek() == '*') {
        ++c.i;
        if (F.m() == 1) {
          coeff = v % F.p();
        } else {
          if (v >= F.q()) c.fail("coefficient encoding out of range");
          coeff = v;
        }
      } else {
        c.i = save;  // digits were indices after all
      }
    }
    std::vector<int> idx;
    while (true) {
      c.skip_ws();
      if (c.i < text.size() && std::isdigit((unsigned char)text[c.i])) {
        idx.push_back(text[c.i] - '0');
        ++c.i;
      } else if (c.i < text.size() && text[c.i] == '[') {
        ++c.i;
        u64 v = c.number();
        if (c.peek() != ']') c.fail("expected ']'");
        ++c.i;
        idx.push_back(int(v));
      } else {
        break;
      }
    }
    if (int(idx.size()) != k)
      c.fail("term has " + std::to_string(idx.size()) + " indices, expected " +
             std::to_string(k));
    for (int v : idx)
      if (v < 1 || v > n) c.fail("index out of range 1..n");
    Fel value = sign < 0 ? F.neg(coeff) : coeff;
    add_term(F, f, idx, value);
  }
  return f;
}

std::string print_functional(const Field& F, const Functional& f) {
  std::ostringstream os;
  bool any = false;
  u64 r = 0;
  for_each_subset(f.n, f.k, [&](const KSubset& s) {
    Fel c = f.coeffs[r++];
    if (!c) return;
    if (any) os << "+";
    any = true;
    if (c != 1) os << c << "*";
    for (int x : s) {
      if (x <= 9)
        os << x;
      else
        os << "[" << x << "]";
    }
  });
  if (!any) return "0";
  return os.str();
}

}  // namespace gh
