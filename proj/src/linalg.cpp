#include "pcup/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "pcup/errors.hpp"

namespace pcup {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return "ParseError";
    case ErrorKind::ring_mismatch: return "RingMismatch";
    case ErrorKind::not_a_face_closure: return "NotAFaceClosure";
    case ErrorKind::bad_intersection: return "BadIntersection";
    case ErrorKind::redundant_vertex: return "RedundantVertex";
    case ErrorKind::invalid_cell: return "InvalidCell";
    case ErrorKind::not_convenient: return "NotConvenient";
    case ErrorKind::sampling_exhausted: return "SamplingExhausted";
    case ErrorKind::not_simplicial: return "NotSimplicial";
    case ErrorKind::phi_on_hyperplane: return "PhiOnHyperplane";
    case ErrorKind::no_crossing: return "NoCrossing";
    case ErrorKind::multiple_crossings: return "MultipleCrossings";
    case ErrorKind::bad_kappa: return "BadKappa";
    case ErrorKind::not_a_subdivision: return "NotASubdivision";
    case ErrorKind::degenerate_sum: return "DegenerateSum";
    case ErrorKind::dimension_mismatch: return "DimensionMismatch";
    case ErrorKind::not_a_cocycle: return "NotACocycle";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view body = text;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front())))
    body.remove_prefix(1);
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back())))
    body.remove_suffix(1);
  std::string_view unsigned_part = body;
  if (!unsigned_part.empty() && (unsigned_part[0] == '-' || unsigned_part[0] == '+'))
    unsigned_part.remove_prefix(1);
  auto slash = unsigned_part.find('/');
  std::string_view num = unsigned_part.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : unsigned_part.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorKind::parse, "malformed rational '" + std::string(text) + "'");
  mpz_class d{std::string(den)};
  if (d == 0)
    throw Error(ErrorKind::parse, "zero denominator in '" + std::string(text) + "'");
  Rat r{mpz_class{std::string(num)}, d};
  r.canonicalize();
  if (!body.empty() && body[0] == '-') r = -r;
  return r;
}

std::string to_string(const Rat& value) { return value.get_str(); }

std::string to_string(const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

int sign(const Rat& value) { return sgn(value); }

Vec zeros(std::size_t n) { return Vec(n, Rat(0)); }

Vec unit(std::size_t n, std::size_t i) {
  Vec v = zeros(n);
  v[i] = 1;
  return v;
}

Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector +: dimension mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector -: dimension mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec operator-(const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

Vec operator*(const Rat& s, const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return out;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

Vec primitive(const Vec& v) {
  if (is_zero(v)) return v;
  mpz_class l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> ints;
  mpz_class g = 0;
  for (const auto& x : v) {
    mpz_class n = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    ints.push_back(n);
  }
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(ints[i] / g);
  return out;
}

Vec canonical_line(const Vec& v) {
  Vec p = primitive(v);
  for (const auto& x : p) {
    if (x != 0) {
      if (x < 0) p = -p;
      break;
    }
  }
  return p;
}

Mat::Mat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

Mat::Mat(const std::vector<Vec>& rows, std::size_t cols)
    : rows_(rows.size()), cols_(rows.empty() ? cols : rows.front().size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("Mat: ragged rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Vec Mat::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec Mat::col(std::size_t j) const {
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

std::vector<Vec> Mat::row_vectors() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vec Mat::apply(const Vec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("Mat::apply: dimension mismatch");
  Vec out(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * x[j];
  return out;
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_columns(std::span<const Vec> columns, std::size_t rows) {
  Mat m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw std::invalid_argument("from_columns: bad column");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Echelon rref(Mat m) {
  Echelon out;
  std::size_t lead = 0;
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t p = lead;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != lead)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(lead, j));
    const Rat inv = 1 / m(lead, c);
    for (std::size_t j = c; j < cols; ++j) m(lead, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == lead || m(i, c) == 0) continue;
      const Rat f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(lead, j);
    }
    out.pivots.push_back(c);
    ++lead;
  }
  std::vector<Vec> kept;
  for (std::size_t i = 0; i < lead; ++i) kept.push_back(m.row(i));
  out.reduced = Mat(kept, cols);
  return out;
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

std::size_t rank(std::span<const Vec> vectors, std::size_t dim) {
  return rank(Mat(std::vector<Vec>(vectors.begin(), vectors.end()), dim));
}

Rat determinant(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square");
  Mat a = m;
  const std::size_t n = a.rows();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      const Rat f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

int det_sign(const Mat& m) { return sign(determinant(m)); }

std::vector<Vec> nullspace(const Mat& m) {
  const Echelon e = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v = zeros(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return span_basis(basis, cols);
}

std::optional<AffineSolution> solve_affine(const Mat& a, const Vec& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve_affine: rows != |b|");
  const std::size_t cols = a.cols();
  Mat aug(a.rows(), cols + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug(i, j) = a(i, j);
    aug(i, cols) = b[i];
  }
  const Echelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == cols) return std::nullopt;
  AffineSolution sol;
  sol.particular = zeros(cols);
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    sol.particular[e.pivots[r]] = e.reduced(r, cols);
  sol.nullspace_basis = nullspace(a);
  return sol;
}

std::vector<Vec> span_basis(std::span<const Vec> vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  return rref(Mat(std::vector<Vec>(vectors.begin(), vectors.end()), dim))
      .reduced.row_vectors();
}

std::vector<Vec> orthogonal_complement(std::span<const Vec> vectors, std::size_t dim) {
  if (vectors.empty()) {
    std::vector<Vec> full;
    for (std::size_t i = 0; i < dim; ++i) full.push_back(unit(dim, i));
    return full;
  }
  return nullspace(Mat(std::vector<Vec>(vectors.begin(), vectors.end()), dim));
}

bool in_span(std::span<const Vec> basis, const Vec& v, std::size_t dim) {
  std::vector<Vec> all(basis.begin(), basis.end());
  const std::size_t r = rank(all, dim);
  all.push_back(v);
  return rank(all, dim) == r;
}

BasisCoordinates::BasisCoordinates(std::span<const Vec> basis, std::size_t ambient_dim)
    : basis_(basis.begin(), basis.end()), ambient_(ambient_dim) {
  const std::size_t d = basis_.size();
  if (d == 0) return;
  // Columns are basis vectors; the pivots of the transpose pick d rows of the
  // ambient space on which the basis is invertible.
  Mat cols = Mat::from_columns(basis_, ambient_dim);
  const Echelon e = rref(cols.transpose());
  if (e.pivots.size() != d) throw std::invalid_argument("BasisCoordinates: dependent basis");
  pivot_rows_ = e.pivots;
  Mat sub(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) sub(i, j) = basis_[j][pivot_rows_[i]];
  Mat aug(d, 2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) aug(i, j) = sub(i, j);
    aug(i, d + i) = 1;
  }
  const Echelon inv = rref(aug);
  inverse_ = Mat(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) inverse_(i, j) = inv.reduced(i, d + j);
}

Vec BasisCoordinates::coords(const Vec& v) const {
  const std::size_t d = basis_.size();
  Vec picked(d);
  for (std::size_t i = 0; i < d; ++i) picked[i] = v[pivot_rows_[i]];
  return inverse_.apply(picked);
}

bool BasisCoordinates::contains(const Vec& v) const {
  const Vec c = coords(v);
  Vec back = zeros(ambient_);
  for (std::size_t j = 0; j < basis_.size(); ++j)
    for (std::size_t i = 0; i < ambient_; ++i) back[i] += c[j] * basis_[j][i];
  return back == v;
}

}  // namespace pcup
