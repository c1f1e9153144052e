#ifndef GH_HYPERPLANE_HPP
#define GH_HYPERPLANE_HPP

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "geometry.hpp"

namespace gh {

// Hyperplane H_f of the k-Grassmannian of GF(q)^n, f nonzero and read
// projectively.  Copies share the lazy caches.
class Hyperplane {
public:
  Hyperplane(const Field& F, Functional f);

  const Field& field() const { return F_; }
  const Functional& functional() const { return f_; }
  int n() const { return f_.n; }
  int k() const { return f_.k; }

  // rank of the defining functional = codim of the lower radical
  int rank() const;
  const Subspace& lower_radical() const;
  // k=3 contraction tensors: tri()[i][x][y] = f(e_{i+1} ^ e_{x+1} ^ e_{y+1})
  const std::vector<Mat>& tri() const;

private:
  Field F_;
  Functional f_;
  struct Cache {
    std::mutex mu;
    std::optional<int> rank;
    std::optional<Subspace> lower;
    std::optional<std::vector<Mat>> tri;
  };
  std::shared_ptr<Cache> cache_;
};

bool hyperplane_contains(const Hyperplane& H, const Subspace& X);

// Local polar space S_X(H) over a quotient frame of V/X; the Gram matrix is
// alternating with zero diagonal and is only defined up to a global scalar
// (the choice of xi), which leaves its radical and rank untouched.
struct LocalPolarSpace {
  Subspace base;
  QuotientFrame frame;
  Mat gram;
};

LocalPolarSpace local_polar(const Hyperplane& H, const Subspace& X);
int local_radical_rank(const Field& F, const LocalPolarSpace& s);
// the members of R_X(H): (k-1)-subspaces through X from the Gram radical
std::vector<Subspace> local_radical_members(const Field& F, const LocalPolarSpace& s);

// degree r(p) of a projective point, k = 3
int pole_degree(const Hyperplane& H, const std::vector<Fel>& point);
int depth(const Hyperplane& H);

enum class RadicalMethod { Auto, Kernel, BruteForce };

Subspace hyperplane_kernel(const Hyperplane& H);  // K(H) inside /\^{k-1}V

std::vector<Subspace> upper_radical(const Hyperplane& H,
                                    RadicalMethod method = RadicalMethod::Auto,
                                    u64 cap = kDefaultEnumCap);
std::vector<Subspace> i_radical(const Hyperplane& H, int i,
                                u64 cap = kDefaultEnumCap);

bool is_spread_like(const Hyperplane& H, u64 cap = kDefaultEnumCap);

struct RestrictResult {
  bool full = false;        // H(W) = G_k(W): the induced functional vanishes
  Functional functional;    // on W's RREF basis coordinates, valid when !full
};
RestrictResult restrict_hyperplane(const Hyperplane& H, const Subspace& W);

// Trivial extension of f0 (living on V0's basis coordinates) across V0 + V1.
Functional trivial_extension(const Field& F, const Functional& f0,
                             const Subspace& V0, const Subspace& V1);
// Trivial hyperplane centered at V1 (codim k): k-spaces meeting V1.
Functional trivial_hyperplane(const Field& F, const Subspace& V1, int k);
// canonical complement of X: span of the non-pivot standard basis vectors
Subspace canonical_complement(const Field& F, const Subspace& X);

// Expansion E(H0): hyperplane of G_k from a hyperplane of G_{k-1} one
// dimension down, over the standard flag (new coordinate appended last).
Functional expansion(const Field& F, const Functional& f0);

enum class Type { T1, T2, T3, T4, T5, T6, T7, T8, T9, T10, T11 };
const char* type_name(Type t);
std::optional<Type> type_from_name(const std::string& s);
int type_rank(Type t);

// Exact Table-1 coefficient patterns.  T10/T11 take the quadratic parameter
// lambda; by default the least valid one for the field.
Functional canonical_form(const Field& F, Type t, int n,
                          std::optional<Fel> lambda = std::nullopt);

bool is_hexagonal(const Hyperplane& H);        // n = 7, k = 3
bool singular_plane_free(const Hyperplane& H);  // k = 3

struct TypeSignature {
  int n = 0;
  u64 q = 0;
  int rank = 0;
  u64 pole_count = 0;
  std::vector<std::pair<int, u64>> degree_hist;  // (degree, count), ascending
  u64 upper_radical_size = 0;
  bool spread = false;
  bool singular_free = false;

  bool operator==(const TypeSignature& o) const {
    return n == o.n && q == o.q && rank == o.rank && pole_count == o.pole_count &&
           degree_hist == o.degree_hist &&
           upper_radical_size == o.upper_radical_size && spread == o.spread &&
           singular_free == o.singular_free;
  }
  bool operator<(const TypeSignature& o) const;
  std::string key() const;
};

TypeSignature signature(const Hyperplane& H, u64 cap = kDefaultEnumCap);
// Signature-based identification against canonical references; colliding
// signatures come back "Unknown" rather than a guess.
std::string identify_type(const Hyperplane& H, u64 cap = kDefaultEnumCap);
std::vector<std::pair<std::string, TypeSignature>> reference_signatures(
    const Field& F, int n, u64 cap = kDefaultEnumCap);

struct SigmaResult {
  std::vector<Subspace> lines;          // Sigma(V') = spread members inside V'
  bool poles_covered = true;            // Lemma-style check on H(V') poles
  std::vector<std::vector<Fel>> uncovered_poles;
};
SigmaResult sigma_in_hyperplane(const Hyperplane& H, const Subspace& Vp,
                                u64 cap = kDefaultEnumCap);

// --- the n = 8 canonical family --------------------------------------------

// h = 123+456+147+257+367 + sum a_ij * ij8 over 1 <= i < j <= 6
struct EightForm {
  std::array<Fel, 15> a{};  // lex pair rank of (i,j)

  Fel at(int i, int j) const;         // 1-based, i < j
  void set(int i, int j, Fel v);
};

int pair_rank6(int i, int j);

Mat a_matrix(const Field& F, const EightForm& c8);  // A = (a_{i,3+j})
Functional build_canonical_eight(const Field& F, const EightForm& c8);
EightForm eight_from_functional(const Field& F, const Functional& f);
EightForm random_eigfree(const Field& F, u64 seed);
// basis change blockdiag(C, C^-T, I2), det C = 1
Mat eight_change_matrix(const Field& F, const Mat& C);
EightForm transform_eight(const Field& F, const EightForm& c8, const Mat& C);
// force a25 = a26 = a34 = a36 = 0 while keeping A similar (EigenvaluePresent
// when A has an eigenvalue); returns the new coefficients
EightForm normalize_eight(const Field& F, const EightForm& c8);
bool has_normalized_zeros(const EightForm& c8);

}  // namespace gh

#endif
