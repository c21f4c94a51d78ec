#pragma once

// Unimodular intersection lattices, their classes, and Spin^c structures
// (characteristic elements).

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "spincert/integer.hpp"

namespace spincert {

class LatticeClass;

/// Signature data of a symmetric form, counted by exact congruence
/// diagonalisation over the rationals.
struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};

Inertia inertia(const IntMatrix& gram);
Integer determinant(const IntMatrix& m);

/// Free abelian group with a symmetric unimodular integer form.
///
/// Lattices are immutable and identified structurally by their Gram matrix;
/// optional basis labels only affect printing.
class IntersectionLattice {
 public:
  explicit IntersectionLattice(IntMatrix gram,
                               std::vector<std::string> basis_names = {});
  /// Same, but also verifies caller-declared b2+/b2- against the exact inertia.
  IntersectionLattice(IntMatrix gram, std::size_t b2_plus, std::size_t b2_minus,
                      std::vector<std::string> basis_names = {});

  std::size_t rank() const { return data_->gram.size(); }
  const IntMatrix& gram() const { return data_->gram; }
  const Integer& gram(std::size_t i, std::size_t j) const { return data_->gram[i][j]; }
  std::size_t b2_plus() const { return data_->b2_plus; }
  std::size_t b2_minus() const { return data_->b2_minus; }
  long signature() const {
    return static_cast<long>(data_->b2_plus) - static_cast<long>(data_->b2_minus);
  }
  Integer determinant() const { return data_->det; }
  bool is_even() const;
  const std::vector<std::string>& basis_names() const { return data_->names; }

  /// Exact inverse of the Gram matrix (integral by unimodularity).
  const IntMatrix& inverse_gram() const { return data_->inverse; }

  LatticeClass zero() const;
  LatticeClass basis(std::size_t i) const;
  LatticeClass make_class(IntVector coords) const;
  LatticeClass make_class(std::initializer_list<long long> coords) const;

  /// Orthogonal sum with a rank-one block <-1>, the lattice of a blow-up.
  IntersectionLattice with_exceptional_class(const std::string& name = "E") const;

  friend bool operator==(const IntersectionLattice& a, const IntersectionLattice& b);
  friend bool operator!=(const IntersectionLattice& a, const IntersectionLattice& b) {
    return !(a == b);
  }

 private:
  struct Data {
    IntMatrix gram;
    IntMatrix inverse;
    std::size_t b2_plus = 0;
    std::size_t b2_minus = 0;
    Integer det;
    std::vector<std::string> names;
  };
  std::shared_ptr<const Data> data_;
};

/// Integer coordinate vector in the basis of a fixed lattice.
class LatticeClass {
 public:
  LatticeClass(IntersectionLattice lattice, IntVector coords);

  const IntersectionLattice& lattice() const { return lattice_; }
  const IntVector& coords() const { return coords_; }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  std::size_t rank() const { return coords_.size(); }
  bool is_zero() const;

  /// Image of the form on this class: the vector G*x.
  IntVector dual() const;

  /// Pretty form such as "3l-E" when the lattice carries basis names,
  /// otherwise "(3,-1)".
  std::string to_string() const;
  /// Always the bare coordinate list "3,-1".
  std::string coords_string() const;

  LatticeClass& operator+=(const LatticeClass& other);
  LatticeClass& operator-=(const LatticeClass& other);

  friend LatticeClass operator+(LatticeClass a, const LatticeClass& b) { return a += b; }
  friend LatticeClass operator-(LatticeClass a, const LatticeClass& b) { return a -= b; }
  friend LatticeClass operator-(const LatticeClass& a);
  friend LatticeClass operator*(const Integer& k, const LatticeClass& a);
  friend LatticeClass operator*(const LatticeClass& a, const Integer& k) { return k * a; }

  /// Structural equality; classes of different lattices never compare equal.
  friend bool operator==(const LatticeClass& a, const LatticeClass& b);
  friend bool operator!=(const LatticeClass& a, const LatticeClass& b) { return !(a == b); }
  /// Lexicographic order on coordinates (same lattice only).
  friend bool operator<(const LatticeClass& a, const LatticeClass& b);

 private:
  IntersectionLattice lattice_;
  IntVector coords_;
};

/// Throws LatticeMismatch unless both classes live in the same lattice.
void require_same_lattice(const LatticeClass& a, const LatticeClass& b);

/// The intersection pairing x^T G y.
Integer pair(const LatticeClass& x, const LatticeClass& y);
Integer square(const LatticeClass& x);

/// True iff c.x = x.x (mod 2) for every basis vector x.
bool is_characteristic(const LatticeClass& c);

/// Divides every coordinate by 2; nullopt when some coordinate is odd.
std::optional<LatticeClass> halve(const LatticeClass& x);

/// Characteristic element of the lattice, i.e. an integral lift of w2.
class SpinCStructure {
 public:
  const LatticeClass& c() const { return c_; }
  const IntersectionLattice& lattice() const { return c_.lattice(); }
  Integer square() const { return spincert::square(c_); }

  friend bool operator==(const SpinCStructure& a, const SpinCStructure& b) { return a.c_ == b.c_; }
  friend bool operator!=(const SpinCStructure& a, const SpinCStructure& b) { return !(a == b); }

 private:
  explicit SpinCStructure(LatticeClass c) : c_(std::move(c)) {}
  friend SpinCStructure make_spin_c(const LatticeClass& c);

  LatticeClass c_;
};

/// Throws NotCharacteristic, or Mod8Violation when c^2 differs from the
/// signature mod 8 (which can only happen for inconsistent lattice data).
SpinCStructure make_spin_c(const LatticeClass& c);

/// The action C -> C + 2*sigma of the lattice on Spin^c structures.
SpinCStructure spin_c_translate(const SpinCStructure& C, const LatticeClass& sigma);

}  // namespace spincert
