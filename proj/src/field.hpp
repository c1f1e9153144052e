#ifndef GH_FIELD_HPP
#define GH_FIELD_HPP

#include <memory>
#include <vector>

#include "common.hpp"

namespace gh {

// Largest characteristic accepted in large-prime mode.
constexpr u64 kMaxLargePrime = (u64(1) << 61);
// Order cap for fields meant to be enumerated element by element.
constexpr u64 kMaxEnumOrder = u64(1) << 16;

bool is_prime_u64(u64 n);

// GF(p^m) with a canonical element encoding: an element with residue digits
// (c_0,...,c_{m-1}) is encoded as sum c_i p^i, so encodings run over [0, q).
// For m = 1 the encoding is the residue itself.  Immutable and cheap to copy.
class Field {
public:
  // Deterministic field: for m > 1 the modulus is the lexicographically
  // least monic irreducible of degree m over GF(p) (non-leading coefficient
  // tuple read most-significant first).
  static Field make(u64 p, u32 m = 1);

  u64 p() const { return d_->p; }
  u32 m() const { return d_->m; }
  u64 q() const { return d_->q; }          // field order (= p for m = 1)
  bool large() const { return d_->q > kMaxEnumOrder; }
  bool is_gf2() const { return d_->q == 2; }
  // Modulus coefficients c_0..c_m (monic), empty when m = 1.
  const std::vector<Fel>& modulus() const { return d_->modulus; }

  Fel add(Fel a, Fel b) const;
  Fel sub(Fel a, Fel b) const;
  Fel neg(Fel a) const;
  Fel mul(Fel a, Fel b) const;
  Fel inv(Fel a) const;
  Fel pow(Fel a, u64 e) const;
  Fel from_int(i64 v) const;  // reduce an integer into the prime subfield

  std::string describe() const;  // "GF(9) = GF(3^2), modulus t^2+1"

  bool operator==(const Field& o) const {
    return d_->p == o.d_->p && d_->m == o.d_->m;
  }

private:
  struct Data {
    u64 p = 0;
    u32 m = 1;
    u64 q = 0;
    std::vector<Fel> modulus;   // degree-m monic, coeffs low..high, m>1 only
    std::vector<u32> log_tab;   // m>1: discrete logs, log_tab[0] unused
    std::vector<u32> exp_tab;   // m>1: exp_tab[i] = g^i, length 2(q-1)
    bool use_int128 = false;    // m=1 with p >= 2^32
  };
  std::shared_ptr<const Data> d_;
  explicit Field(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  Fel ext_mul_slow(Fel a, Fel b) const;
  friend struct FieldTestAccess;
};

// ---------------------------------------------------------------------------
// Univariate polynomials over a field, coefficients low..high with the
// leading coefficient nonzero (zero polynomial = empty vector).

class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Fel> c) : c_(std::move(c)) { trim(); }

  static UniPoly x();                       // the monomial t
  static UniPoly constant(Fel c);
  bool zero() const { return c_.empty(); }
  int degree() const { return int(c_.size()) - 1; }  // -1 for zero
  Fel coeff(int i) const { return i >= 0 && i < int(c_.size()) ? c_[i] : 0; }
  const std::vector<Fel>& coeffs() const { return c_; }

  Fel eval(const Field& F, Fel x) const;

  static UniPoly add(const Field& F, const UniPoly& a, const UniPoly& b);
  static UniPoly sub(const Field& F, const UniPoly& a, const UniPoly& b);
  static UniPoly mul(const Field& F, const UniPoly& a, const UniPoly& b);
  // a mod b, b nonzero
  static UniPoly rem(const Field& F, UniPoly a, const UniPoly& b);
  static UniPoly gcd(const Field& F, UniPoly a, UniPoly b);  // monic gcd
  // x^e mod f
  static UniPoly powmod_x(const Field& F, u64 e, const UniPoly& f);
  void make_monic(const Field& F);

  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

private:
  std::vector<Fel> c_;
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
};

// True iff f (monic, degree >= 1, over a prime field GF(p), m = 1) is
// irreducible.  Trial division by all monic polynomials of degree <= deg/2.
bool irreducible_over_prime(const Field& F, const UniPoly& f);

// Table 1 lambda parameter: odd characteristic picks the least lambda with
// t^2 - lambda irreducible (variant 1); characteristic 2 picks the least
// lambda with t^2 + lambda t + 1 irreducible (variant 2).
struct QuadraticParam {
  int variant;  // 1 or 2
  Fel lambda;
};
QuadraticParam irreducible_quadratic_param(const Field& F);

}  // namespace gh

#endif
