#include "casson/exterior.hpp"

#include <limits>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace casson {

namespace {

constexpr int kMaxGenus = 127;  // packed triple keys hold 8 bits per symbol

Int det3(const Int& a0, const Int& a1, const Int& a2,
         const Int& b0, const Int& b1, const Int& b2,
         const Int& c0, const Int& c1, const Int& c2) {
  return a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) + a2 * (b0 * c1 - b1 * c0);
}

bool fits_int64(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  return v >= lo && v <= hi;
}

void append_coeff(std::ostream& out, const Int& c) {
  if (fits_int64(c)) {
    out << c;
  } else {
    out << '"' << c << '"';
  }
}

Int coeff_from_json(const nlohmann::json& v, const char* what) {
  if (v.is_number_integer()) {
    return Int(v.get<std::int64_t>());
  }
  if (v.is_number_unsigned()) {
    return Int(v.get<std::uint64_t>());
  }
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    std::size_t pos = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (pos == s.size()) throw InputError(std::string(what) + ": empty integer string");
    for (std::size_t q = pos; q < s.size(); ++q) {
      if (s[q] < '0' || s[q] > '9') {
        throw InputError(std::string(what) + ": '" + s + "' is not a decimal integer");
      }
    }
    return Int(s);
  }
  throw InputError(std::string(what) +
                   ": expected an integer (use a decimal string beyond 64 bits)");
}

}  // namespace

Genus::Genus(int g) : g_(g) {
  if (g < 2) throw InputError("genus must be at least 2, got " + std::to_string(g));
  if (g > kMaxGenus) {
    throw InputError("genus " + std::to_string(g) + " exceeds the supported maximum " +
                     std::to_string(kMaxGenus));
  }
}

Int wedge3_dim(Genus g) {
  const Int n = g.dim();
  return n * (n - 1) * (n - 2) / 6;
}

bool is_x_symbol(Genus g, int index) {
  if (index < 0 || index >= g.dim()) throw InputError("basis symbol index out of range");
  return index < g.value();
}

std::string symbol_name(Genus g, int index) {
  const bool x = is_x_symbol(g, index);
  const int one_based = x ? index + 1 : index - g.value() + 1;
  return (x ? "x" : "y") + std::to_string(one_based);
}

HomologyVector::HomologyVector(Genus g) : genus_(g), coeffs_(g.dim()) {}

HomologyVector::HomologyVector(Genus g, std::vector<Int> coeffs)
    : genus_(g), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != g.dim()) {
    throw InputError("homology vector needs exactly 2g = " + std::to_string(g.dim()) +
                     " coefficients, got " + std::to_string(coeffs_.size()));
  }
}

HomologyVector HomologyVector::basis(Genus g, int index) {
  HomologyVector v(g);
  v[index] = 1;
  return v;
}

const Int& HomologyVector::operator[](int index) const {
  if (index < 0 || index >= dim()) throw InputError("homology coordinate index out of range");
  return coeffs_[static_cast<std::size_t>(index)];
}

Int& HomologyVector::operator[](int index) {
  if (index < 0 || index >= dim()) throw InputError("homology coordinate index out of range");
  return coeffs_[static_cast<std::size_t>(index)];
}

HomologyVector& HomologyVector::operator+=(const HomologyVector& other) {
  if (genus_ != other.genus_) throw InputError("genus mismatch in homology vector addition");
  for (int idx = 0; idx < dim(); ++idx) coeffs_[idx] += other.coeffs_[idx];
  return *this;
}

HomologyVector& HomologyVector::operator-=(const HomologyVector& other) {
  if (genus_ != other.genus_) throw InputError("genus mismatch in homology vector subtraction");
  for (int idx = 0; idx < dim(); ++idx) coeffs_[idx] -= other.coeffs_[idx];
  return *this;
}

HomologyVector& HomologyVector::operator*=(const Int& n) {
  for (auto& c : coeffs_) c *= n;
  return *this;
}

Int symplectic_pairing(const HomologyVector& u, const HomologyVector& v) {
  if (u.genus() != v.genus()) throw InputError("genus mismatch in symplectic pairing");
  const int g = u.genus().value();
  Int acc = 0;
  for (int i = 0; i < g; ++i) {
    acc += u[i] * v[g + i] - u[g + i] * v[i];
  }
  return acc;
}

BasisTriple::BasisTriple(int i_, int j_, int k_) : i(i_), j(j_), k(k_) {
  if (!(0 <= i && i < j && j < k)) {
    throw InputError("basis triple must be strictly increasing and nonnegative");
  }
}

PackedTriple pack_triple(const BasisTriple& t) {
  return (static_cast<PackedTriple>(t.i) << 16) | (static_cast<PackedTriple>(t.j) << 8) |
         static_cast<PackedTriple>(t.k);
}

BasisTriple unpack_triple(PackedTriple p) {
  return BasisTriple(static_cast<int>((p >> 16) & 0xff), static_cast<int>((p >> 8) & 0xff),
                     static_cast<int>(p & 0xff));
}

TriVector::TriVector(Genus g) : genus_(g) {}

Int TriVector::coeff(const BasisTriple& t) const {
  auto it = terms_.find(pack_triple(t));
  return it == terms_.end() ? Int(0) : it->second;
}

void TriVector::add_term(const BasisTriple& t, const Int& c) {
  if (t.k >= genus_.dim()) throw InputError("basis triple index out of range for genus");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(pack_triple(t), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void TriVector::add_scaled(const TriVector& other, const Int& factor) {
  if (genus_ != other.genus_) throw InputError("genus mismatch in tri-vector addition");
  if (factor == 0) return;
  for (const auto& [key, c] : other.terms_) {
    auto [it, inserted] = terms_.emplace(key, c * factor);
    if (!inserted) {
      it->second += c * factor;
      if (it->second == 0) terms_.erase(it);
    }
  }
}

TriVector& TriVector::operator+=(const TriVector& other) {
  add_scaled(other, 1);
  return *this;
}

TriVector& TriVector::operator-=(const TriVector& other) {
  add_scaled(other, -1);
  return *this;
}

TriVector& TriVector::operator*=(const Int& n) {
  if (n == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= n;
  return *this;
}

TriVector TriVector::operator-() const {
  TriVector r(genus_);
  r.add_scaled(*this, -1);
  return r;
}

bool TriVector::well_formed() const {
  for (const auto& [key, c] : terms_) {
    const auto t = unpack_triple(key);
    if (!(0 <= t.i && t.i < t.j && t.j < t.k && t.k < genus_.dim())) return false;
    if (c == 0) return false;
  }
  return true;
}

std::string TriVector::to_text() const {
  std::ostringstream out;
  out << '[';
  bool first = true;
  for (const auto& [key, c] : terms_) {
    const auto t = unpack_triple(key);
    if (!first) out << ',';
    first = false;
    out << '[' << t.i + 1 << ',' << t.j + 1 << ',' << t.k + 1 << ',';
    append_coeff(out, c);
    out << ']';
  }
  out << ']';
  return out.str();
}

TriVector TriVector::parse_text(const std::string& text, Genus g) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw InputError("tri-vector text is not valid JSON");
  TriVector v(g);
  if (!doc.is_array()) throw InputError("tri-vector text must be a JSON array of records");
  for (const auto& rec : doc) {
    if (!rec.is_array() || rec.size() != 4) {
      throw InputError("tri-vector record must be [i, j, k, coeff]");
    }
    int idx[3];
    for (int q = 0; q < 3; ++q) {
      if (!rec[q].is_number_integer() && !rec[q].is_number_unsigned()) {
        throw InputError("tri-vector record indices must be integers");
      }
      const std::int64_t raw = rec[q].get<std::int64_t>();
      if (raw < 1 || raw > g.dim()) {
        throw InputError("tri-vector index " + std::to_string(raw) +
                         " out of range 1..2g = " + std::to_string(g.dim()));
      }
      idx[q] = static_cast<int>(raw) - 1;
    }
    if (!(idx[0] < idx[1] && idx[1] < idx[2])) {
      throw InputError("tri-vector record indices must be strictly increasing");
    }
    const BasisTriple t(idx[0], idx[1], idx[2]);
    if (v.terms_.count(pack_triple(t)) != 0) {
      throw InputError("duplicate tri-vector triple [" + std::to_string(idx[0] + 1) + "," +
                       std::to_string(idx[1] + 1) + "," + std::to_string(idx[2] + 1) + "]");
    }
    v.add_term(t, coeff_from_json(rec[3], "tri-vector coefficient"));
  }
  return v;
}

Int ell_norm(const TriVector& v) {
  Int best = 0;
  for (const auto& [key, c] : v.terms()) {
    Int a = abs(c);
    if (a > best) best = a;
  }
  return best;
}

TriVector wedge3(const HomologyVector& a, const HomologyVector& b, const HomologyVector& c) {
  if (a.genus() != b.genus() || b.genus() != c.genus()) {
    throw InputError("genus mismatch in wedge product");
  }
  const int n = a.dim();
  TriVector out(a.genus());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        Int d = det3(a[i], a[j], a[k], b[i], b[j], b[k], c[i], c[j], c[k]);
        if (d != 0) out.add_term(BasisTriple(i, j, k), d);
      }
    }
  }
  return out;
}

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) throw InputError("matrix dimensions must be positive");
  a_.resize(static_cast<std::size_t>(rows) * cols);
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

const Int& IntMatrix::at(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw InputError("matrix index out of range");
  return a_[static_cast<std::size_t>(r) * cols_ + c];
}

Int& IntMatrix::at(int r, int c) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw InputError("matrix index out of range");
  return a_[static_cast<std::size_t>(r) * cols_ + c];
}

IntMatrix IntMatrix::mul(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw InputError("matrix dimension mismatch in product");
  IntMatrix out(rows_, other.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int k = 0; k < cols_; ++k) {
      const Int& v = at(r, k);
      if (v == 0) continue;
      for (int c = 0; c < other.cols_; ++c) {
        out.at(r, c) += v * other.at(k, c);
      }
    }
  }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  }
  return out;
}

Int IntMatrix::det() const {
  if (rows_ != cols_) throw InputError("determinant of a non-square matrix");
  const int n = rows_;
  IntMatrix w = *this;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r) {
        if (w.at(r, k) != 0) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(w.at(k, c), w.at(pivot, c));
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c) {
        // Bareiss step: division by the previous pivot is exact.
        w.at(r, c) = (w.at(r, c) * w.at(k, k) - w.at(r, k) * w.at(k, c)) / prev;
      }
      w.at(r, k) = 0;
    }
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : Int(-w.at(n - 1, n - 1));
}

HomologyVector matrix_column(const IntMatrix& m, Genus g, int col) {
  if (m.rows() != g.dim()) throw InputError("matrix rows do not match 2g");
  HomologyVector v(g);
  for (int r = 0; r < m.rows(); ++r) v[r] = m.at(r, col);
  return v;
}

TriVector induced_map(const IntMatrix& m, const TriVector& v) {
  const Genus g = v.genus();
  if (m.rows() != g.dim() || m.cols() != g.dim()) {
    throw InputError("matrix must be 2g x 2g for the induced wedge^3 action");
  }
  const Int d = m.det();
  if (d != 1 && d != -1) {
    throw InputError("matrix is not invertible over the integers (det = " + d.str() + ")");
  }
  std::vector<HomologyVector> cols;
  cols.reserve(static_cast<std::size_t>(g.dim()));
  for (int c = 0; c < g.dim(); ++c) cols.push_back(matrix_column(m, g, c));
  TriVector out(g);
  for (const auto& [key, c] : v.terms()) {
    const auto t = unpack_triple(key);
    out.add_scaled(wedge3(cols[t.i], cols[t.j], cols[t.k]), c);
  }
  return out;
}

bool is_symplectic(const IntMatrix& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0 || m.rows() < 4) return false;
  const int g = m.rows() / 2;
  IntMatrix j(2 * g, 2 * g);
  for (int i = 0; i < g; ++i) {
    j.at(i, g + i) = 1;
    j.at(g + i, i) = -1;
  }
  return m.transpose().mul(j).mul(m) == j;
}

bool preserves_splitting(const IntMatrix& m, const Splitting& s) {
  const int g = s.genus.value();
  if (m.rows() != 2 * g || m.cols() != 2 * g) return false;
  for (int c = 0; c < g; ++c) {
    for (int r = g; r < 2 * g; ++r) {
      if (m.at(r, c) != 0) return false;
    }
  }
  for (int c = g; c < 2 * g; ++c) {
    for (int r = 0; r < g; ++r) {
      if (m.at(r, c) != 0) return false;
    }
  }
  return true;
}

}  // namespace casson
