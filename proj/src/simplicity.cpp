#include "spincert/simplicity.hpp"

#include <sstream>

#include "spincert/error.hpp"

namespace spincert {

LatticeClass CurveFamily::at(const std::vector<Integer>& t) const {
  if (t.size() != directions.size())
    throw Error(ErrorCode::DimensionMismatch, "wrong number of family parameters");
  LatticeClass C = base;
  for (std::size_t j = 0; j < t.size(); ++j) C += t[j] * directions[j];
  return C;
}

bool CurveFamily::admits(const std::vector<Integer>& t) const {
  for (const auto& k : constraints)
    if (!k.admits(t)) return false;
  return true;
}

std::string CurveFamily::describe() const {
  static const char* names[] = {"x", "y"};
  std::ostringstream os;
  os << "C = " << base.to_string();
  for (std::size_t j = 0; j < directions.size(); ++j)
    os << " + " << names[j] << "(" << directions[j].to_string() << ")";
  os << ", C.H = " << degree;
  return os.str();
}

QuadraticPolynomial inequality_polynomial(const SurfaceModel& S, const LatticeClass& c1,
                                          const CurveFamily& family) {
  const LatticeClass& K = S.canonical();
  const LatticeClass& b = family.base;
  QuadraticPolynomial q;
  q.arity = family.arity();
  q.c = square(b) + pair(b, K) - pair(c1, b);
  if (q.arity >= 1) {
    const LatticeClass& u = family.directions[0];
    q.xx = square(u);
    q.x = 2 * pair(b, u) + pair(u, K) - pair(c1, u);
  }
  if (q.arity >= 2) {
    const LatticeClass& v = family.directions[1];
    q.yy = square(v);
    q.xy = 2 * pair(family.directions[0], v);
    q.y = 2 * pair(b, v) + pair(v, K) - pair(c1, v);
  }
  return q;
}

namespace {

// Unimodular U with w U = (g, 0, ..., 0), g = gcd(w) >= 0.
IntMatrix reduce_row(const IntVector& w, Integer& g) {
  const std::size_t n = w.size();
  IntMatrix U(n, IntVector(n));
  for (std::size_t i = 0; i < n; ++i) U[i][i] = 1;
  IntVector r = w;
  for (std::size_t j = 1; j < n; ++j) {
    if (r[j] == 0) continue;
    const Integer a = r[0], b = r[j];
    const ExtendedGcd eg = extended_gcd(a, b);
    const Integer ag = a / eg.g, bg = b / eg.g;
    for (std::size_t i = 0; i < n; ++i) {
      const Integer c0 = U[i][0], cj = U[i][j];
      U[i][0] = eg.x * c0 + eg.y * cj;
      U[i][j] = -bg * c0 + ag * cj;
    }
    r[0] = eg.g;
    r[j] = 0;
  }
  if (r[0] < 0) {
    for (std::size_t i = 0; i < n; ++i) U[i][0] = -U[i][0];
    r[0] = -r[0];
  }
  g = r[0];
  return U;
}

// Hermite normal form of a row basis: echelon, positive pivots, entries
// above each pivot reduced into [0, pivot).
IntMatrix hermite_rows(IntMatrix rows) {
  if (rows.empty()) return rows;
  const std::size_t m = rows.size(), n = rows[0].size();
  std::size_t p = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < n && p < m; ++c) {
    for (std::size_t r = p + 1; r < m; ++r) {
      if (rows[r][c] == 0) continue;
      const ExtendedGcd eg = extended_gcd(rows[p][c], rows[r][c]);
      const Integer a = rows[p][c] / eg.g, b = rows[r][c] / eg.g;
      for (std::size_t k = 0; k < n; ++k) {
        const Integer x = rows[p][k], y = rows[r][k];
        rows[p][k] = eg.x * x + eg.y * y;
        rows[r][k] = -b * x + a * y;
      }
    }
    if (rows[p][c] == 0) continue;
    if (rows[p][c] < 0)
      for (auto& v : rows[p]) v = -v;
    for (std::size_t r = 0; r < p; ++r) {
      const Integer q = floor_div(rows[r][c], rows[p][c]);
      if (q == 0) continue;
      for (std::size_t k = 0; k < n; ++k) rows[r][k] -= q * rows[p][k];
    }
    pivots.push_back(c);
    ++p;
  }
  rows.resize(p);
  return rows;
}

std::size_t pivot_of(const IntVector& row) {
  for (std::size_t i = 0; i < row.size(); ++i)
    if (row[i] != 0) return i;
  return row.size();
}

struct Slicer {
  const SurfaceModel& S;
  IntVector w;  // degree functional C -> C.H in coordinates
  Integer g;
  IntVector particular;  // w . particular = g
  IntMatrix kernel;      // HNF rows spanning ker w
  std::vector<NumericalConstraint> cone;  // effective-cone inequalities (bound 0)

  Slicer(const SurfaceModel& s, const LatticeClass& H) : S(s), w(H.dual()) {
    const std::size_t n = w.size();
    IntMatrix U = reduce_row(w, g);
    particular.resize(n);
    for (std::size_t i = 0; i < n; ++i) particular[i] = U[i][0];
    IntMatrix rows;
    for (std::size_t j = 1; j < n; ++j) {
      IntVector col(n);
      for (std::size_t i = 0; i < n; ++i) col[i] = U[i][j];
      rows.push_back(std::move(col));
    }
    kernel = hermite_rows(std::move(rows));
    build_cone();
  }

  // Inequalities sign(det M) adj(M) C >= 0 for a simplicial complete cone.
  void build_cone() {
    const auto& gens = S.effective_generators();
    const std::size_t n = S.pic().rank();
    if (!S.effective_cone_complete() || gens.size() != n) return;
    IntMatrix M(n, IntVector(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) M[i][j] = gens[j][i];
    const Integer det = determinant(M);
    if (det == 0) return;
    const int sgn = det > 0 ? 1 : -1;
    for (std::size_t r = 0; r < n; ++r) {
      // Row r of adj(M) is the cofactor vector of column r of M.
      IntVector row(n);
      for (std::size_t c = 0; c < n; ++c) {
        IntMatrix minor;
        for (std::size_t i = 0; i < n; ++i) {
          if (i == c) continue;
          IntVector mr;
          for (std::size_t j = 0; j < n; ++j)
            if (j != r) mr.push_back(M[i][j]);
          minor.push_back(std::move(mr));
        }
        const Integer cof = determinant(minor) * (((r + c) % 2 == 0) ? 1 : -1);
        row[c] = sgn * cof;
      }
      // adj(M) C is a coordinate-space functional; express it through the form
      // so it can be stored as a lattice class: f = G^{-1} row.
      const IntMatrix& Gi = S.pic().inverse_gram();
      IntVector f(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) f[i] += Gi[i][j] * row[j];
      cone.push_back({S.make_class(std::move(f)), Integer(0),
                      "effective cone: coefficient of " + gens[r].to_string() + " >= 0"});
    }
  }

  std::optional<CurveFamily> slice(const Integer& d) const {
    if (mod(d, g) != 0) return std::nullopt;
    const std::size_t n = w.size();
    IntVector base(n);
    for (std::size_t i = 0; i < n; ++i) base[i] = particular[i] * (d / g);
    for (const auto& row : kernel) {
      const std::size_t c = pivot_of(row);
      const Integer q = floor_div(base[c], row[c]);
      for (std::size_t i = 0; i < n; ++i) base[i] -= q * row[i];
    }
    CurveFamily fam{S.make_class(std::move(base)), {}, {}, {}, d, false};
    for (const auto& row : kernel) fam.directions.push_back(S.make_class(row));
    auto add = [&](const NumericalConstraint& nc) {
      LinearConstraint k{0, 0, nc.bound - pair(nc.functional, fam.base)};
      if (fam.arity() >= 1) k.a = pair(nc.functional, fam.directions[0]);
      if (fam.arity() >= 2) k.b = pair(nc.functional, fam.directions[1]);
      fam.constraints.push_back(k);
      fam.constraint_labels.push_back(nc.label);
    };
    for (const auto& nc : S.constraints()) add(nc);
    for (const auto& nc : cone) add(nc);
    return fam;
  }
};

}  // namespace

std::vector<CurveFamily> candidate_systems(const SurfaceModel& S, const Polarization& H,
                                           const LatticeClass& c1) {
  if (S.pic().b2_plus() != 1)
    throw Error(ErrorCode::UnboundedDegree,
                "degree slices are finite-dimensional only for b2+ = 1");
  if (S.pic().rank() > 3)
    throw Error(ErrorCode::UnboundedDegree,
                "Picard rank above 3 leaves more than two free parameters per slice");
  std::vector<CurveFamily> out;
  const Integer c1H = pair(c1, H.h());
  if (c1H <= 0) return out;
  bool origin_excluded = false;
  for (const auto& nc : S.constraints()) origin_excluded = origin_excluded || nc.bound > 0;
  if (origin_excluded)
    out.push_back(CurveFamily{S.pic().zero(), {}, {}, {}, Integer(0), true});
  const Slicer slicer(S, H.h());
  const Integer top = ceil_div(c1H, 2) - 1;
  for (Integer d = 0; d <= top; ++d) {
    auto fam = slicer.slice(d);
    if (!fam) continue;
    if (fam->arity() == 0 && !fam->admits({})) continue;
    if (fam->arity() == 0 && fam->base.is_zero()) fam->zero_family = true;
    out.push_back(std::move(*fam));
  }
  return out;
}

FamilyCheck check_inequality(const SurfaceModel& S, const LatticeClass& c1,
                             const CurveFamily& family) {
  FamilyCheck out{family, inequality_polynomial(S, c1, family), true, std::nullopt, std::nullopt,
                  std::nullopt};
  if (family.arity() == 0) {
    const LatticeClass& C = family.base;
    out.lhs = pair(C, S.canonical()) + square(C);
    out.rhs = pair(c1, C);
    out.holds = *out.lhs <= *out.rhs;
    if (!out.holds) out.witness = std::vector<Integer>{};
    return out;
  }
  const QuadraticDecision d = decide_quadratic_nonpositive(out.excess, family.constraints);
  out.holds = d.holds;
  out.witness = d.witness;
  return out;
}

SimplicityCertificate check_semisimple(const SurfaceModel& S, const Polarization& H,
                                       const LatticeClass& c1) {
  SimplicityCertificate cert{c1, H.h(), {}, true, false, nullptr};
  for (const auto& fam : candidate_systems(S, H, c1)) {
    cert.families.push_back(check_inequality(S, c1, fam));
    cert.semisimple = cert.semisimple && cert.families.back().holds;
  }
  return cert;
}

SimplicityCertificate check_simple(const SurfaceModel& S, const Polarization& H,
                                   const LatticeClass& c1) {
  SimplicityCertificate cert = check_semisimple(S, H, c1);
  auto partner = std::make_shared<SimplicityCertificate>(
      check_semisimple(S, H, Integer(2) * S.canonical() - c1));
  cert.simple = cert.semisimple && partner->semisimple;
  cert.partner = std::move(partner);
  return cert;
}

}  // namespace spincert
