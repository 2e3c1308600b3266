#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "casson/errors.hpp"

namespace casson {

/// Exact arbitrary-precision integer. Coefficients grow linearly and lambda
/// values quadratically in word length, so fixed-width arithmetic would
/// silently corrupt long-word results.
using Int = boost::multiprecision::cpp_int;

/// Genus of the underlying closed surface. The exterior algebra is defined
/// for g >= 2; Torelli-level operations (generator tables, words,
/// accumulation) additionally require g >= 3.
class Genus {
 public:
  explicit Genus(int g);
  int value() const { return g_; }
  /// Rank of H = H_1(Sigma_g; Z), i.e. 2g.
  int dim() const { return 2 * g_; }

  friend bool operator==(Genus a, Genus b) { return a.g_ == b.g_; }
  friend bool operator!=(Genus a, Genus b) { return a.g_ != b.g_; }

 private:
  int g_;
};

/// Number of basis triples of wedge^3 H, i.e. C(2g, 3).
Int wedge3_dim(Genus g);

/// Basis symbols are indexed 0..2g-1 in the fixed global order
/// x_1 < ... < x_g < y_1 < ... < y_g.
bool is_x_symbol(Genus g, int index);
std::string symbol_name(Genus g, int index);

/// An element of H in the symplectic basis {x_1..x_g, y_1..y_g}.
class HomologyVector {
 public:
  explicit HomologyVector(Genus g);  // zero vector
  HomologyVector(Genus g, std::vector<Int> coeffs);
  static HomologyVector basis(Genus g, int index);

  Genus genus() const { return genus_; }
  int dim() const { return genus_.dim(); }
  const Int& operator[](int index) const;
  Int& operator[](int index);

  HomologyVector& operator+=(const HomologyVector& other);
  HomologyVector& operator-=(const HomologyVector& other);
  HomologyVector& operator*=(const Int& n);
  friend HomologyVector operator+(HomologyVector a, const HomologyVector& b) { return a += b; }
  friend HomologyVector operator-(HomologyVector a, const HomologyVector& b) { return a -= b; }
  friend HomologyVector operator*(const Int& n, HomologyVector v) { return v *= n; }
  friend bool operator==(const HomologyVector& a, const HomologyVector& b) {
    return a.genus_ == b.genus_ && a.coeffs_ == b.coeffs_;
  }

 private:
  Genus genus_;
  std::vector<Int> coeffs_;
};

/// Standard symplectic form: <x_i, y_i> = 1, <x_i, x_j> = <y_i, y_j> = 0.
Int symplectic_pairing(const HomologyVector& u, const HomologyVector& v);

/// A canonically ordered basis triple i < j < k of symbol indices (0-based).
/// The strictly increasing representative is the canonical element of its
/// antisymmetry class.
struct BasisTriple {
  int i, j, k;
  BasisTriple(int i, int j, int k);

  friend bool operator==(const BasisTriple& a, const BasisTriple& b) {
    return a.i == b.i && a.j == b.j && a.k == b.k;
  }
  friend bool operator<(const BasisTriple& a, const BasisTriple& b) {
    if (a.i != b.i) return a.i < b.i;
    if (a.j != b.j) return a.j < b.j;
    return a.k < b.k;
  }
};

/// Triples are stored under a packed key (i << 16 | j << 8 | k). Packing
/// preserves lexicographic order and bounds the genus at 127.
using PackedTriple = std::uint32_t;
PackedTriple pack_triple(const BasisTriple& t);
BasisTriple unpack_triple(PackedTriple p);

/// A sparse exact-integer element of wedge^3 H. No zero coefficients are
/// ever stored and keys are canonical strictly increasing triples.
class TriVector {
 public:
  explicit TriVector(Genus g);

  Genus genus() const { return genus_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<PackedTriple, Int>& terms() const { return terms_; }

  /// Coefficient on a canonical triple; 0 if absent.
  Int coeff(const BasisTriple& t) const;

  /// Accumulates c on triple t, pruning the entry if it cancels to zero.
  void add_term(const BasisTriple& t, const Int& c);

  /// this += factor * other, term by term.
  void add_scaled(const TriVector& other, const Int& factor);

  TriVector& operator+=(const TriVector& other);
  TriVector& operator-=(const TriVector& other);
  TriVector& operator*=(const Int& n);
  friend TriVector operator+(TriVector a, const TriVector& b) { return a += b; }
  friend TriVector operator-(TriVector a, const TriVector& b) { return a -= b; }
  friend TriVector operator*(const Int& n, TriVector v) { return v *= n; }
  TriVector operator-() const;
  friend bool operator==(const TriVector& a, const TriVector& b) {
    return a.genus_ == b.genus_ && a.terms_ == b.terms_;
  }

  /// Sparse-representation hygiene: every key is a valid strictly increasing
  /// in-range triple and every stored coefficient is nonzero.
  bool well_formed() const;

  /// Canonical text form: a JSON array of records [i, j, k, coeff] with
  /// 1-based indices, sorted by triple. Coefficients outside the 64-bit
  /// range are emitted as decimal strings so the form stays exact.
  std::string to_text() const;
  static TriVector parse_text(const std::string& text, Genus g);

 private:
  Genus genus_;
  std::map<PackedTriple, Int> terms_;
};

/// Sup-norm of the coefficients; 0 for the zero vector.
Int ell_norm(const TriVector& v);

/// Trilinear fully antisymmetric product expanded into canonical triples.
/// The coefficient on i < j < k is the 3x3 determinant with rows in argument
/// order and columns in basis order.
TriVector wedge3(const HomologyVector& a, const HomologyVector& b, const HomologyVector& c);

/// Dense exact-integer square matrix, row-major.
class IntMatrix {
 public:
  IntMatrix(int rows, int cols);  // zero matrix
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Int& at(int r, int c) const;
  Int& at(int r, int c);

  IntMatrix mul(const IntMatrix& other) const;
  IntMatrix transpose() const;
  /// Exact determinant via fraction-free (Bareiss) elimination.
  Int det() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  int rows_, cols_;
  std::vector<Int> a_;
};

HomologyVector matrix_column(const IntMatrix& m, Genus g, int col);

/// The Lagrangian splitting H = H+ (+) H- with H+ = span(x_1..x_g) and
/// H- = span(y_1..y_g), as induced by a Heegaard embedding.
struct Splitting {
  explicit Splitting(Genus g) : genus(g) {}
  Genus genus;
};

/// Induced action of wedge^3 M: each basis triple e_i ^ e_j ^ e_k maps to
/// (M e_i) ^ (M e_j) ^ (M e_k), extended linearly. M must be invertible
/// over the integers (det in {-1, +1}).
TriVector induced_map(const IntMatrix& m, const TriVector& v);

/// Checks M^T J M = J for the standard form J.
bool is_symplectic(const IntMatrix& m);

/// Checks that M maps span(x_1..x_g) into itself and span(y_1..y_g) into
/// itself.
bool preserves_splitting(const IntMatrix& m, const Splitting& s);

}  // namespace casson
