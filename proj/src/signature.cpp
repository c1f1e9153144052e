#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "hyperplane.hpp"

namespace gh {

bool TypeSignature::operator<(const TypeSignature& o) const {
  auto tup = [](const TypeSignature& s) {
    return std::tuple(s.n, s.q, s.rank, s.pole_count, s.degree_hist,
                      s.upper_radical_size, s.spread, s.singular_free);
  };
  return tup(*this) < tup(o);
}

std::string TypeSignature::key() const {
  std::ostringstream os;
  os << "n" << n << ":q" << q << ":r" << rank << ":P" << pole_count << ":h";
  for (auto& [d, c] : degree_hist) os << d << "x" << c << ",";
  os << ":U" << upper_radical_size << ":s" << (spread ? 1 : 0) << ":f"
     << (singular_free ? 1 : 0);
  return os.str();
}

namespace {

std::vector<Fel> normalize_point(const Field& F, std::vector<Fel> v) {
  int lead = 0;
  while (lead < int(v.size()) && !v[lead]) ++lead;
  Fel inv = F.inv(v[lead]);
  if (inv != 1)
    for (auto& x : v) x = F.mul(inv, x);
  return v;
}

std::vector<std::vector<Fel>> points_of_line(const Field& F, const Subspace& line) {
  std::vector<std::vector<Fel>> pts;
  const std::vector<Fel> r0 = line.basis().row(0), r1 = line.basis().row(1);
  pts.push_back(normalize_point(F, r0));
  for (Fel c = 0; c < F.q(); ++c) {
    std::vector<Fel> v(line.n());
    for (int j = 0; j < line.n(); ++j) v[j] = F.add(F.mul(c, r0[j]), r1[j]);
    pts.push_back(normalize_point(F, v));
  }
  return pts;
}

// triangle of the pole geometry: two R-lines meeting at a point joined by a
// third R-line away from that point
bool has_triangle(const Field& F, const std::vector<Subspace>& R) {
  std::unordered_set<Subspace, SubspaceHash> rset(R.begin(), R.end());
  std::map<std::vector<Fel>, std::vector<size_t>> thru;
  std::vector<std::vector<std::vector<Fel>>> pts(R.size());
  for (size_t i = 0; i < R.size(); ++i) {
    pts[i] = points_of_line(F, R[i]);
    for (auto& p : pts[i]) thru[p].push_back(i);
  }
  for (auto& [p, lines] : thru) {
    for (size_t a = 0; a < lines.size(); ++a)
      for (size_t b = a + 1; b < lines.size(); ++b) {
        for (auto& x : pts[lines[a]]) {
          if (x == p) continue;
          for (auto& y : pts[lines[b]]) {
            if (y == p) continue;
            Subspace side = span_of_vectors(F, int(x.size()), {x, y});
            if (side.dim() == 2 && rset.count(side)) return true;
          }
        }
      }
  }
  return false;
}

}  // namespace

bool is_hexagonal(const Hyperplane& H) {
  require(H.n() == 7 && H.k() == 3, Errc::input,
          "WrongDimension: hexagonality lives on a 7-dimensional space");
  if (H.rank() != 7) return false;
  // every pole of degree exactly 2, and at least one pole
  int max_deg = 0;
  for (auto& p : projective_points(H.field(), 7)) {
    int d = pole_degree(H, p);
    if (d > 2) return false;
    max_deg = std::max(max_deg, d);
  }
  return max_deg == 2;
}

bool singular_plane_free(const Hyperplane& H) {
  const Field& F = H.field();
  require(H.k() == 3, Errc::input, "singular-plane test is a k=3 operation");
  std::vector<Subspace> R = upper_radical(H);
  if (R.empty()) return true;
  std::unordered_set<Subspace, SubspaceHash> rset(R.begin(), R.end());
  u64 q = F.q();

  // incidence point -> lines of R through it
  std::map<std::vector<Fel>, std::vector<size_t>> thru;
  std::vector<std::vector<std::vector<Fel>>> pts(R.size());
  for (size_t i = 0; i < R.size(); ++i) {
    pts[i] = points_of_line(F, R[i]);
    for (auto& p : pts[i]) thru[p].push_back(i);
  }

  // star planes: all lines through p inside some 4-space T
  for (auto& [p, lines] : thru) {
    if (lines.size() <= q + 1) continue;  // a plane holds q^2+q+1 > q+1 lines
    for (size_t a = 0; a < lines.size(); ++a)
      for (size_t b = a + 1; b < lines.size(); ++b) {
        Subspace T3 = join(F, R[lines[a]], R[lines[b]]);
        if (T3.dim() != 3) continue;
        for (size_t c = 0; c < lines.size(); ++c) {
          if (c == a || c == b || T3.contains(F, R[lines[c]])) continue;
          Subspace T = join(F, T3, R[lines[c]]);
          if (T.dim() != 4) continue;
          // full pencil-star check: every line through p inside T
          bool all = true;
          std::unordered_set<Subspace, SubspaceHash> seen;
          std::vector<Fel> pv = p;
          for_each_subspace(F, 4, 1, [&](const Subspace& w) {
            if (!all) return;
            std::vector<Fel> x = vec_mat(F, w.basis().row(0), T.basis());
            Subspace line = span_of_vectors(F, H.n(), {pv, x});
            if (line.dim() != 2 || !seen.insert(line).second) return;
            if (!rset.count(line)) all = false;
          });
          if (all && seen.size() == q * q + q + 1) return false;
        }
      }
  }

  // dual planes: all lines of a plane Pi; generated by any triangle
  for (auto& [p, lines] : thru) {
    for (size_t a = 0; a < lines.size(); ++a)
      for (size_t b = a + 1; b < lines.size(); ++b) {
        for (auto& x : pts[lines[a]]) {
          if (x == p) continue;
          for (auto& y : pts[lines[b]]) {
            if (y == p) continue;
            Subspace side = span_of_vectors(F, H.n(), {x, y});
            if (side.dim() != 2 || !rset.count(side)) continue;
            // triangle found: verify the full dual plane
            Subspace Pi = join(F, R[lines[a]], R[lines[b]]);
            if (Pi.dim() != 3) continue;
            bool all = true;
            for_each_subspace(F, 3, 2, [&](const Subspace& w) {
              if (!all) return;
              Mat rows(2, H.n());
              rows.set_row(0, vec_mat(F, w.basis().row(0), Pi.basis()));
              rows.set_row(1, vec_mat(F, w.basis().row(1), Pi.basis()));
              if (!rset.count(canonicalize(F, rows))) all = false;
            });
            if (all) return false;
          }
        }
      }
  }
  return true;
}

TypeSignature signature(const Hyperplane& H, u64 cap) {
  const Field& F = H.field();
  require(H.k() == 3, Errc::input, "signatures are defined for k = 3");
  TypeSignature sig;
  sig.n = H.n();
  sig.q = F.q();
  sig.rank = H.rank();
  std::map<int, u64> hist;
  int max_deg = 0;
  for (auto& p : projective_points(F, H.n(), cap)) {
    int d = pole_degree(H, p);
    if (d > 0) {
      ++hist[d];
      ++sig.pole_count;
      max_deg = std::max(max_deg, d);
    }
  }
  sig.degree_hist.assign(hist.begin(), hist.end());
  std::vector<Subspace> R = upper_radical(H, RadicalMethod::Auto, cap);
  sig.upper_radical_size = R.size();
  // spread-likeness: each point on exactly one member, i.e. every degree 1
  if (H.n() % 2 == 0) {
    u64 npts = gaussian_binom_u64(H.n(), 1, F.q(), cap);
    sig.spread = (sig.pole_count == npts) && max_deg == 1;
  } else {
    sig.spread = false;
  }
  // singular planes: a star needs a pole of degree >= 3, a dual plane forces
  // one (n even) or a triangle (n odd)
  if (H.n() % 2 == 0) {
    sig.singular_free = max_deg <= 1;
  } else if (max_deg >= 4) {
    sig.singular_free = false;
  } else if (max_deg == 0) {
    sig.singular_free = true;
  } else {
    sig.singular_free = !has_triangle(F, R);
  }
  return sig;
}

std::vector<std::pair<std::string, TypeSignature>> reference_signatures(
    const Field& F, int n, u64 cap) {
  std::vector<Type> types = {Type::T1};
  if (n >= 5) types.push_back(Type::T2);
  if (n >= 6) {
    types.push_back(Type::T3);
    types.push_back(Type::T4);
    types.push_back(Type::T10);
  }
  if (n >= 7) {
    types.insert(types.end(),
                 {Type::T5, Type::T6, Type::T7, Type::T8, Type::T9, Type::T11});
  }
  std::vector<std::pair<std::string, TypeSignature>> out;
  for (Type t : types) {
    Hyperplane H(F, canonical_form(F, t, n));
    out.emplace_back(type_name(t), signature(H, cap));
  }
  return out;
}

std::string identify_type(const Hyperplane& H, u64 cap) {
  static std::mutex mu;
  static std::map<std::tuple<u64, u32, int>,
                  std::vector<std::pair<std::string, TypeSignature>>>
      table;
  const Field& F = H.field();
  std::tuple<u64, u32, int> key{F.p(), F.m(), H.n()};
  std::vector<std::pair<std::string, TypeSignature>> refs;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = table.find(key);
    if (it != table.end()) refs = it->second;
  }
  if (refs.empty()) {
    refs = reference_signatures(F, H.n(), cap);
    std::lock_guard<std::mutex> lk(mu);
    table[key] = refs;
  }
  TypeSignature sig = signature(H, cap);
  std::string found;
  int matches = 0;
  for (auto& [name, ref] : refs)
    if (ref == sig) {
      found = name;
      ++matches;
    }
  if (matches != 1) return "Unknown";
  return found;
}

}  // namespace gh
