#ifndef GH_EXTERIOR_HPP
#define GH_EXTERIOR_HPP

#include <functional>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace gh {

u64 binom(int n, int k);

// k-subsets of {1..n} as strictly increasing 1-based tuples, ranked
// lexicographically into [0, C(n,k)).
using KSubset = std::vector<int>;

u64 subset_rank(int n, const KSubset& s);
KSubset subset_unrank(int n, int k, u64 rank);
void for_each_subset(int n, int k, const std::function<void(const KSubset&)>& fn);

// sign of reordering the concatenation (a, b) of two disjoint sorted tuples
// into one sorted tuple: parity of #{(x,y) in a x b : x > y}
int shuffle_sign(const KSubset& a, const KSubset& b);

// Element of /\^d V with coefficients over the lex subset basis.
struct MultiVector {
  int n = 0;
  int degree = 0;
  std::vector<Fel> coeffs;  // length C(n, degree)

  bool is_zero() const {
    for (Fel c : coeffs)
      if (c) return false;
    return true;
  }
  bool operator==(const MultiVector& o) const {
    return n == o.n && degree == o.degree && coeffs == o.coeffs;
  }
};

// wedge of d row vectors; coefficient at S is the d x d minor on columns S
MultiVector wedge_of_vectors(const Field& F, const std::vector<std::vector<Fel>>& vecs,
                             int n);
MultiVector wedge(const Field& F, const MultiVector& a, const MultiVector& b);
MultiVector wedge_with_vector(const Field& F, const MultiVector& a,
                              const std::vector<Fel>& v);

// Linear functional on /\^k V; as a hyperplane it is read projectively.
struct Functional {
  int n = 0;
  int k = 0;
  std::vector<Fel> coeffs;  // length C(n, k), lex subset order

  bool is_zero() const {
    for (Fel c : coeffs)
      if (c) return false;
    return true;
  }
  Fel coeff_at(int n_, const KSubset& s) const { return coeffs[subset_rank(n_, s)]; }
  bool operator==(const Functional& o) const {
    return n == o.n && k == o.k && coeffs == o.coeffs;
  }
};

Functional zero_functional(int n, int k);

// Adds c at the (possibly unsorted, repeat-free) index tuple, applying the
// permutation sign of sorting it.
void add_term(const Field& F, Functional& f, std::vector<int> idx, Fel c);

Fel eval_on_multivector(const Field& F, const Functional& f, const MultiVector& w);
Fel apply_functional(const Field& F, const Functional& f,
                     const std::vector<std::vector<Fel>>& vectors);

// n x C(n,k-1) matrix T with T[x][S] = f(e_S wedge e_x); its right null space
// is the kernel K(H).
Mat ftilde_matrix(const Field& F, const Functional& f);

// f'(e_S) := f(M e_{s_1} ^ ... ^ M e_{s_k}) for M in GL(n); columns of M are
// the images of the basis vectors.
Functional pullback(const Field& F, const Functional& f, const Mat& M);

Functional scale_functional(const Field& F, const Functional& f, Fel c);
Functional add_functionals(const Field& F, const Functional& a, const Functional& b);

// Decomposability of bivectors: w != 0 with rank(W) <= 2 for the alternating
// matrix W[i][j] = w_{ij}.  Matches the w ^ w = 0 criterion in odd
// characteristic and stays correct in characteristic 2.
bool is_decomposable_bivector(const Field& F, const MultiVector& w);
Mat bivector_matrix(const Field& F, const MultiVector& w);  // n x n alternating

// Text format: terms "c*ijk" joined by "+"/"-", digits address e_1..e_9,
// "[10]" and up beyond that; omitted coefficient means 1; indices may come in
// any order and carry the permutation sign.
Functional parse_functional(const Field& F, int n, int k, const std::string& text);
std::string print_functional(const Field& F, const Functional& f);

}  // namespace gh

#endif
