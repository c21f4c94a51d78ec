#include "spincert/lattice.hpp"

#include <sstream>
#include <utility>

#include "spincert/error.hpp"

namespace spincert {

namespace {

using RatMatrix = std::vector<std::vector<Rational>>;

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    r[i].reserve(m[i].size());
    for (const auto& v : m[i]) r[i].emplace_back(v);
  }
  return r;
}

void require_square(const IntMatrix& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw Error(ErrorCode::DimensionMismatch, "matrix is not square");
}

void require_symmetric(const IntMatrix& m) {
  require_square(m);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (m[i][j] != m[j][i]) throw Error(ErrorCode::NotSymmetric, "gram matrix is not symmetric");
}

// Symmetric congruence step: row/col j added to row/col i.
void add_congruent(RatMatrix& a, std::size_t i, std::size_t j) {
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) a[i][k] += a[j][k];
  for (std::size_t k = 0; k < n; ++k) a[k][i] += a[k][j];
}

void swap_congruent(RatMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  std::swap(a[i], a[j]);
  for (auto& row : a) std::swap(row[i], row[j]);
}

IntMatrix integer_inverse(const IntMatrix& g) {
  const std::size_t n = g.size();
  RatMatrix a = to_rational(g);
  RatMatrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw Error(ErrorCode::NotUnimodular, "gram matrix is singular");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Rational p = a[col][col];
    for (std::size_t k = 0; k < n; ++k) {
      a[col][k] /= p;
      inv[col][k] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= f * a[col][k];
        inv[r][k] -= f * inv[col][k];
      }
    }
  }
  IntMatrix out(n, IntVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (boost::multiprecision::denominator(inv[i][j]) != 1)
        throw Error(ErrorCode::NotUnimodular, "inverse gram matrix is not integral");
      out[i][j] = boost::multiprecision::numerator(inv[i][j]);
    }
  return out;
}

}  // namespace

Inertia inertia(const IntMatrix& gram) {
  require_symmetric(gram);
  RatMatrix a = to_rational(gram);
  const std::size_t n = a.size();
  Inertia out;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][piv] == 0) ++piv;
    if (piv == n) {
      // No usable diagonal entry: create one from an off-diagonal pair.
      bool found = false;
      for (std::size_t i = k; i < n && !found; ++i)
        for (std::size_t j = i + 1; j < n && !found; ++j)
          if (a[i][j] != 0) {
            add_congruent(a, i, j);
            piv = i;
            found = true;
          }
      if (!found) {
        out.zero += n - k;
        return out;
      }
    }
    swap_congruent(a, piv, k);
    const Rational p = a[k][k];
    // Schur complement on the trailing block.
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a[r][k] == 0) continue;
      const Rational f = a[r][k] / p;
      for (std::size_t c = k + 1; c < n; ++c) a[r][c] -= f * a[k][c];
    }
    for (std::size_t r = k + 1; r < n; ++r) a[r][k] = a[k][r] = 0;
    if (p > 0) ++out.positive;
    else ++out.negative;
  }
  return out;
}

Integer determinant(const IntMatrix& m) {
  require_square(m);
  const std::size_t n = m.size();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

IntersectionLattice::IntersectionLattice(IntMatrix gram, std::vector<std::string> basis_names) {
  if (gram.empty()) throw Error(ErrorCode::InvalidInput, "lattice rank must be positive");
  require_symmetric(gram);
  if (!basis_names.empty() && basis_names.size() != gram.size())
    throw Error(ErrorCode::DimensionMismatch, "basis names do not match the rank");
  auto data = std::make_shared<Data>();
  data->det = spincert::determinant(gram);
  if (abs(data->det) != 1)
    throw Error(ErrorCode::NotUnimodular, "determinant is " + data->det.str());
  const Inertia in = spincert::inertia(gram);
  data->b2_plus = in.positive;
  data->b2_minus = in.negative;
  data->inverse = integer_inverse(gram);
  data->gram = std::move(gram);
  data->names = std::move(basis_names);
  data_ = std::move(data);
}

IntersectionLattice::IntersectionLattice(IntMatrix gram, std::size_t b2_plus, std::size_t b2_minus,
                                         std::vector<std::string> basis_names)
    : IntersectionLattice(std::move(gram), std::move(basis_names)) {
  if (b2_plus != data_->b2_plus || b2_minus != data_->b2_minus) {
    std::ostringstream os;
    os << "declared (b2+, b2-) = (" << b2_plus << ", " << b2_minus << ") but inertia is ("
       << data_->b2_plus << ", " << data_->b2_minus << ")";
    throw Error(ErrorCode::InconsistentSignature, os.str());
  }
}

bool IntersectionLattice::is_even() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (!spincert::is_even(data_->gram[i][i])) return false;
  return true;
}

LatticeClass IntersectionLattice::zero() const { return LatticeClass(*this, IntVector(rank())); }

LatticeClass IntersectionLattice::basis(std::size_t i) const {
  if (i >= rank()) throw Error(ErrorCode::DimensionMismatch, "basis index out of range");
  IntVector v(rank());
  v[i] = 1;
  return LatticeClass(*this, std::move(v));
}

LatticeClass IntersectionLattice::make_class(IntVector coords) const {
  return LatticeClass(*this, std::move(coords));
}

LatticeClass IntersectionLattice::make_class(std::initializer_list<long long> coords) const {
  return LatticeClass(*this, to_integers(std::vector<long long>(coords)));
}

IntersectionLattice IntersectionLattice::with_exceptional_class(const std::string& name) const {
  const std::size_t n = rank();
  IntMatrix g(n + 1, IntVector(n + 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g[i][j] = data_->gram[i][j];
  g[n][n] = -1;
  std::vector<std::string> names = data_->names;
  if (!names.empty()) names.push_back(name);
  return IntersectionLattice(std::move(g), std::move(names));
}

bool operator==(const IntersectionLattice& a, const IntersectionLattice& b) {
  return a.data_ == b.data_ || a.data_->gram == b.data_->gram;
}

LatticeClass::LatticeClass(IntersectionLattice lattice, IntVector coords)
    : lattice_(std::move(lattice)), coords_(std::move(coords)) {
  if (coords_.size() != lattice_.rank()) {
    std::ostringstream os;
    os << "class has " << coords_.size() << " coordinates, lattice rank is " << lattice_.rank();
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
}

bool LatticeClass::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

IntVector LatticeClass::dual() const {
  const std::size_t n = rank();
  IntVector out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i] += lattice_.gram(i, j) * coords_[j];
  return out;
}

std::string LatticeClass::to_string() const {
  const auto& names = lattice_.basis_names();
  if (names.empty()) return "(" + coords_string() + ")";
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const Integer& c = coords_[i];
    if (c == 0) continue;
    if (c < 0) out += "-";
    else if (!out.empty()) out += "+";
    if (abs(c) != 1) out += Integer(abs(c)).str();
    out += names[i];
  }
  return out.empty() ? "0" : out;
}

std::string LatticeClass::coords_string() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ",";
    out += coords_[i].str();
  }
  return out;
}

LatticeClass& LatticeClass::operator+=(const LatticeClass& other) {
  require_same_lattice(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

LatticeClass& LatticeClass::operator-=(const LatticeClass& other) {
  require_same_lattice(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

LatticeClass operator-(const LatticeClass& a) {
  LatticeClass out = a;
  for (auto& c : out.coords_) c = -c;
  return out;
}

LatticeClass operator*(const Integer& k, const LatticeClass& a) {
  LatticeClass out = a;
  for (auto& c : out.coords_) c *= k;
  return out;
}

bool operator==(const LatticeClass& a, const LatticeClass& b) {
  return a.lattice_ == b.lattice_ && a.coords_ == b.coords_;
}

bool operator<(const LatticeClass& a, const LatticeClass& b) {
  require_same_lattice(a, b);
  return a.coords_ < b.coords_;
}

void require_same_lattice(const LatticeClass& a, const LatticeClass& b) {
  if (a.rank() != b.rank())
    throw Error(ErrorCode::DimensionMismatch, "classes have different ranks");
  if (a.lattice() != b.lattice())
    throw Error(ErrorCode::LatticeMismatch, "classes belong to different lattices");
}

Integer pair(const LatticeClass& x, const LatticeClass& y) {
  require_same_lattice(x, y);
  const auto& L = x.lattice();
  Integer s = 0;
  for (std::size_t i = 0; i < x.rank(); ++i) {
    if (x[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < y.rank(); ++j) row += L.gram(i, j) * y[j];
    s += x[i] * row;
  }
  return s;
}

Integer square(const LatticeClass& x) { return pair(x, x); }

bool is_characteristic(const LatticeClass& c) {
  const IntVector d = c.dual();
  for (std::size_t i = 0; i < c.rank(); ++i)
    if (is_even(d[i] - c.lattice().gram(i, i)) == false) return false;
  return true;
}

std::optional<LatticeClass> halve(const LatticeClass& x) {
  IntVector v(x.rank());
  for (std::size_t i = 0; i < x.rank(); ++i) {
    if (!is_even(x[i])) return std::nullopt;
    v[i] = x[i] / 2;
  }
  return LatticeClass(x.lattice(), std::move(v));
}

SpinCStructure make_spin_c(const LatticeClass& c) {
  if (!is_characteristic(c))
    throw Error(ErrorCode::NotCharacteristic, c.to_string() + " is not characteristic");
  if (mod(square(c) - c.lattice().signature(), 8) != 0)
    throw Error(ErrorCode::Mod8Violation,
                c.to_string() + " has square " + square(c).str() + " but signature is " +
                    std::to_string(c.lattice().signature()));
  return SpinCStructure(c);
}

SpinCStructure spin_c_translate(const SpinCStructure& C, const LatticeClass& sigma) {
  return make_spin_c(C.c() + Integer(2) * sigma);
}

}  // namespace spincert
