#ifndef GH_GEOMETRY_HPP
#define GH_GEOMETRY_HPP

#include <functional>
#include <optional>

#include "exterior.hpp"

namespace gh {

// d-dimensional subspace of GF(q)^n held as its unique RREF basis; equal
// spans compare equal bit for bit.
class Subspace {
public:
  Subspace() = default;
  Subspace(int n, Mat basis, std::vector<int> pivots)
      : n_(n), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  int n() const { return n_; }
  int dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains_vector(const Field& F, const std::vector<Fel>& v) const;
  bool contains(const Field& F, const Subspace& other) const;

  bool operator==(const Subspace& o) const {
    return n_ == o.n_ && basis_ == o.basis_;
  }
  bool operator<(const Subspace& o) const {
    if (dim() != o.dim()) return dim() < o.dim();
    return basis_.data() < o.basis_.data();
  }

private:
  int n_ = 0;
  Mat basis_;  // dim x n RREF
  std::vector<int> pivots_;
};

struct SubspaceHash {
  size_t operator()(const Subspace& s) const {
    size_t h = std::hash<int>()(s.n()) * 1000003u + s.dim();
    for (Fel v : s.basis().data()) h = h * 1099511628211ull + v;
    return h;
  }
};

Subspace canonicalize(const Field& F, const Mat& rows);
Subspace zero_subspace(int n);
Subspace full_space(const Field& F, int n);
Subspace span_of_vectors(const Field& F, int n, const std::vector<std::vector<Fel>>& v);

Subspace join(const Field& F, const Subspace& a, const Subspace& b);
Subspace meet(const Field& F, const Subspace& a, const Subspace& b);

// Plucker coordinates of a d-subspace (wedge of its RREF basis).
MultiVector plucker(const Field& F, const Subspace& s);

u64 gaussian_binom_u64(int n, int d, u64 q, u64 cap);  // throws past cap
std::string gaussian_binom_str(int n, int d, u64 q);   // exact big integer

constexpr u64 kDefaultEnumCap = u64(1) << 27;

// Deterministic stream over all d-subspaces: pivot patterns in lex order,
// then free entries in row-major base-q order.  Splittable by pattern.
class SubspaceStream {
public:
  SubspaceStream(const Field& F, int n, int d, u64 cap = kDefaultEnumCap);
  std::optional<Subspace> next();
  u64 total() const { return total_; }

private:
  const Field& F_;
  int n_, d_;
  u64 total_;
  std::vector<KSubset> patterns_;
  size_t pat_idx_ = 0;
  std::vector<int> free_pos_;   // flattened (row, col) free slots, row-major
  std::vector<Fel> free_val_;
  bool pat_fresh_ = true;
  void load_pattern();
};

void for_each_subspace(const Field& F, int n, int d,
                       const std::function<void(const Subspace&)>& fn,
                       u64 cap = kDefaultEnumCap);

// Points of PG(n-1,q) as canonical projective representatives (last nonzero
// coordinate scaled to 1 ... here: RREF convention, leading coefficient 1).
std::vector<std::vector<Fel>> projective_points(const Field& F, int n, u64 cap = kDefaultEnumCap);

// the q+1 members of the Grassmann line between nested Y (dim k-1) and Z (dim k+1)
std::vector<Subspace> grassmann_line(const Field& F, const Subspace& Y,
                                     const Subspace& Z);

// Complement frame for V/X: the non-pivot standard basis vectors of X's RREF.
struct QuotientFrame {
  Subspace base;
  std::vector<int> complement_cols;  // 0-based standard basis indices

  int quot_dim() const { return int(complement_cols.size()); }
  // coordinates of v + X in the complement basis
  std::vector<Fel> project(const Field& F, const std::vector<Fel>& v) const;
  std::vector<Fel> lift(const std::vector<Fel>& w) const;  // representative
};

QuotientFrame quotient_frame(const Field& F, const Subspace& X);

}  // namespace gh

#endif
