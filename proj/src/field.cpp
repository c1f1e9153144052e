#include "field.hpp"

#include <algorithm>
#include <sstream>

namespace gh {

namespace {

u64 mulmod_u64(u64 a, u64 b, u64 p) {
  return u64((unsigned __int128)a * b % p);
}

u64 powmod_u64(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, p);
    a = mulmod_u64(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % d == 0) return n == d;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        comp = false;
        break;
      }
    }
    if (comp) return false;
  }
  return true;
}

// --- extension-field digit helpers (p^m <= 2^16, so everything is tiny) ----

namespace {

std::vector<u32> digits_of(Fel v, u64 p, u32 m) {
  std::vector<u32> d(m);
  for (u32 i = 0; i < m; ++i) {
    d[i] = u32(v % p);
    v /= p;
  }
  return d;
}

Fel pack_digits(const std::vector<u32>& d, u64 p) {
  Fel v = 0;
  for (size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

// product of digit vectors modulo the modulus (coeffs low..high, monic)
std::vector<u32> poly_mulmod(const std::vector<u32>& a, const std::vector<u32>& b,
                             const std::vector<Fel>& mod, u64 p) {
  u32 m = u32(mod.size() - 1);
  std::vector<u32> prod(2 * m, 0);
  for (u32 i = 0; i < m; ++i) {
    if (!a[i]) continue;
    for (u32 j = 0; j < m; ++j)
      prod[i + j] = u32((prod[i + j] + u64(a[i]) * b[j]) % p);
  }
  for (u32 d = 2 * m; d-- > m;) {
    u32 c = prod[d];
    if (!c) continue;
    prod[d] = 0;
    // t^d = -mod_low * t^(d-m) * ...
    for (u32 j = 0; j < m; ++j) {
      u64 sub = u64(c) * mod[j] % p;
      u32& tgt = prod[d - m + j];
      tgt = u32((tgt + p - u32(sub)) % p);
    }
  }
  prod.resize(m);
  return prod;
}

}  // namespace

Field Field::make(u64 p, u32 m) {
  require(is_prime_u64(p), Errc::input,
          "NonPrimeCharacteristic: " + std::to_string(p) + " is not prime");
  require(m >= 1, Errc::input, "field degree must be >= 1");
  auto d = std::make_shared<Data>();
  d->p = p;
  d->m = m;
  if (m == 1) {
    require(p <= kMaxLargePrime, Errc::input,
            "DegreeTooLarge: prime exceeds large-prime mode bound 2^61");
    d->q = p;
    d->use_int128 = p >= (u64(1) << 32);
    return Field(std::move(d));
  }
  // extension field: q = p^m must stay enumerable
  u64 q = 1;
  for (u32 i = 0; i < m; ++i) {
    q *= p;
    require(q <= kMaxEnumOrder, Errc::input,
            "DegreeTooLarge: p^m exceeds 2^16 for an extension field");
  }
  d->q = q;

  // lexicographically least monic irreducible modulus
  Field prime = Field::make(p, 1);
  UniPoly modulus;
  for (u64 v = 0; v < q; ++v) {
    // digit i of v is the t^i coefficient, so ascending v scans the
    // non-leading coefficient tuples lexicographically (t-coeff major)
    auto dig = digits_of(v, p, m);
    std::vector<Fel> c(m + 1);
    for (u32 i = 0; i < m; ++i) c[i] = dig[i];
    c[m] = 1;
    UniPoly f(std::move(c));
    if (irreducible_over_prime(prime, f)) {
      modulus = f;
      break;
    }
  }
  require(!modulus.zero(), Errc::internal, "no irreducible modulus found");
  d->modulus = modulus.coeffs();

  // discrete log tables over a generator
  u64 n = q - 1;
  std::vector<u64> prime_factors;
  {
    u64 t = n;
    for (u64 f = 2; f * f <= t; ++f)
      if (t % f == 0) {
        prime_factors.push_back(f);
        while (t % f == 0) t /= f;
      }
    if (t > 1) prime_factors.push_back(t);
  }
  auto pow_digit = [&](Fel a, u64 e) {
    std::vector<u32> r(m, 0);
    r[0] = 1;
    auto b = digits_of(a, p, m);
    while (e) {
      if (e & 1) r = poly_mulmod(r, b, d->modulus, p);
      b = poly_mulmod(b, b, d->modulus, p);
      e >>= 1;
    }
    return pack_digits(r, p);
  };
  Fel g = 0;
  for (Fel cand = 2; cand < q; ++cand) {
    bool ok = true;
    for (u64 f : prime_factors)
      if (pow_digit(cand, n / f) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      g = cand;
      break;
    }
  }
  require(g != 0, Errc::internal, "no generator found");

  auto dd = d;  // mutate before freezing
  dd->exp_tab.resize(2 * n);
  dd->log_tab.resize(q);
  std::vector<u32> acc(m, 0);
  acc[0] = 1;
  auto gd = digits_of(g, p, m);
  for (u64 i = 0; i < n; ++i) {
    Fel v = pack_digits(acc, p);
    dd->exp_tab[i] = u32(v);
    dd->exp_tab[i + n] = u32(v);
    dd->log_tab[v] = u32(i);
    acc = poly_mulmod(acc, gd, d->modulus, p);
  }
  return Field(std::move(d));
}

Fel Field::add(Fel a, Fel b) const {
  const Data& d = *d_;
  if (d.m == 1) {
    Fel s = a + b;  // p <= 2^61, no overflow
    return s >= d.p ? s - d.p : s;
  }
  if (d.p == 2) return a ^ b;
  Fel r = 0, mult = 1;
  for (u32 i = 0; i < d.m; ++i) {
    Fel s = a % d.p + b % d.p;
    if (s >= d.p) s -= d.p;
    r += s * mult;
    mult *= d.p;
    a /= d.p;
    b /= d.p;
  }
  return r;
}

Fel Field::neg(Fel a) const {
  const Data& d = *d_;
  if (d.m == 1) return a ? d.p - a : 0;
  if (d.p == 2) return a;
  Fel r = 0, mult = 1;
  for (u32 i = 0; i < d.m; ++i) {
    Fel c = a % d.p;
    r += (c ? d.p - c : 0) * mult;
    mult *= d.p;
    a /= d.p;
  }
  return r;
}

Fel Field::sub(Fel a, Fel b) const { return add(a, neg(b)); }

Fel Field::mul(Fel a, Fel b) const {
  const Data& d = *d_;
  if (d.m == 1) {
    if (d.use_int128) return mulmod_u64(a, b, d.p);
    return a * b % d.p;
  }
  if (a == 0 || b == 0) return 0;
  return d.exp_tab[d.log_tab[a] + d.log_tab[b]];
}

Fel Field::inv(Fel a) const {
  require(a != 0, Errc::input, "division by zero");
  const Data& d = *d_;
  if (d.m == 1) return powmod_u64(a, d.p - 2, d.p);
  u64 n = d.q - 1;
  u32 l = d.log_tab[a];
  return d.exp_tab[(n - l) % n];
}

Fel Field::pow(Fel a, u64 e) const {
  Fel r = from_int(1);
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Fel Field::from_int(i64 v) const {
  i64 p = i64(d_->p);
  i64 r = v % p;
  if (r < 0) r += p;
  return Fel(r);
}

Fel Field::ext_mul_slow(Fel a, Fel b) const {
  const Data& d = *d_;
  auto r = poly_mulmod(digits_of(a, d.p, d.m), digits_of(b, d.p, d.m),
                       d.modulus, d.p);
  return pack_digits(r, d.p);
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << q() << ")";
  if (m() > 1) {
    os << " = GF(" << p() << "^" << m() << "), modulus ";
    bool first = true;
    for (int i = int(m()); i >= 0; --i) {
      Fel c = modulus()[i];
      if (!c) continue;
      if (!first) os << "+";
      first = false;
      if (i == 0 || c != 1) os << c;
      if (i >= 1) os << "t";
      if (i >= 2) os << "^" << i;
    }
  }
  return os.str();
}

// --- UniPoly ---------------------------------------------------------------

UniPoly UniPoly::x() { return UniPoly({0, 1}); }

UniPoly UniPoly::constant(Fel c) { return UniPoly({c}); }

Fel UniPoly::eval(const Field& F, Fel x) const {
  Fel r = 0;
  for (size_t i = c_.size(); i-- > 0;) r = F.add(F.mul(r, x), c_[i]);
  return r;
}

UniPoly UniPoly::add(const Field& F, const UniPoly& a, const UniPoly& b) {
  std::vector<Fel> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = F.add(a.coeff(int(i)), b.coeff(int(i)));
  return UniPoly(std::move(c));
}

UniPoly UniPoly::sub(const Field& F, const UniPoly& a, const UniPoly& b) {
  std::vector<Fel> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = F.sub(a.coeff(int(i)), b.coeff(int(i)));
  return UniPoly(std::move(c));
}

UniPoly UniPoly::mul(const Field& F, const UniPoly& a, const UniPoly& b) {
  if (a.zero() || b.zero()) return UniPoly();
  std::vector<Fel> c(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (!a.c_[i]) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] = F.add(c[i + j], F.mul(a.c_[i], b.c_[j]));
  }
  return UniPoly(std::move(c));
}

UniPoly UniPoly::rem(const Field& F, UniPoly a, const UniPoly& b) {
  require(!b.zero(), Errc::input, "polynomial division by zero");
  Fel lead_inv = F.inv(b.c_.back());
  while (!a.zero() && a.degree() >= b.degree()) {
    Fel factor = F.mul(a.c_.back(), lead_inv);
    int shift = a.degree() - b.degree();
    for (int i = 0; i <= b.degree(); ++i)
      a.c_[i + shift] = F.sub(a.c_[i + shift], F.mul(factor, b.c_[i]));
    a.trim();
  }
  return a;
}

UniPoly UniPoly::gcd(const Field& F, UniPoly a, UniPoly b) {
  while (!b.zero()) {
    UniPoly r = rem(F, a, b);
    a = b;
    b = r;
  }
  a.make_monic(F);
  return a;
}

UniPoly UniPoly::powmod_x(const Field& F, u64 e, const UniPoly& f) {
  UniPoly r = UniPoly::constant(1);
  UniPoly b = rem(F, UniPoly::x(), f);
  while (e) {
    if (e & 1) r = rem(F, mul(F, r, b), f);
    b = rem(F, mul(F, b, b), f);
    e >>= 1;
  }
  return r;
}

void UniPoly::make_monic(const Field& F) {
  if (zero()) return;
  Fel inv = F.inv(c_.back());
  if (inv == 1 && c_.back() == 1) return;
  for (auto& c : c_) c = F.mul(c, inv);
}

bool irreducible_over_prime(const Field& F, const UniPoly& f) {
  int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  // trial division by every monic polynomial of degree 1..n/2
  for (int d = 1; 2 * d <= n; ++d) {
    u64 count = 1;
    for (int i = 0; i < d; ++i) count *= F.p();
    for (u64 v = 0; v < count; ++v) {
      std::vector<Fel> c(d + 1);
      u64 t = v;
      for (int i = 0; i < d; ++i) {
        c[i] = t % F.p();
        t /= F.p();
      }
      c[d] = 1;
      if (UniPoly::rem(F, f, UniPoly(std::move(c))).zero()) return false;
    }
  }
  return true;
}

QuadraticParam irreducible_quadratic_param(const Field& F) {
  require(F.q() > 1, Errc::input, "field too small");
  const bool char2 = F.p() == 2;
  auto irreducible = [&](const UniPoly& f) {
    if (!F.large()) {
      for (Fel x = 0; x < F.q(); ++x)
        if (f.eval(F, x) == 0) return false;
      return true;
    }
    // large prime: quadratic has a root iff gcd(x^p - x, f) != 1
    UniPoly xp = UniPoly::powmod_x(F, F.p(), f);
    UniPoly g = UniPoly::gcd(F, UniPoly::sub(F, xp, UniPoly::x()), f);
    return g.degree() == 0;
  };
  for (Fel lam = 0; lam < F.q(); ++lam) {
    UniPoly f = char2 ? UniPoly({1, lam, 1})
                      : UniPoly({F.neg(lam), 0, 1});  // t^2 - lambda
    if (irreducible(f)) return {char2 ? 2 : 1, lam};
  }
  fail_internal("NoneFound: no irreducible quadratic parameter exists");
}

}  // namespace gh
