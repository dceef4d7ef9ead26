#pragma once

// Coefficient rings for cochains: the rationals Q and the exterior algebra
// over Q^n. Both are stored as sparse sums of blades so one engine serves
// both; the scalar ring only ever uses the empty blade.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pcup/linalg.hpp"

namespace pcup {

/// A basis blade e_{i1} ^ ... ^ e_{ik} (i1 < ... < ik), encoded as the bit set
/// of its 0-based indices.
using Blade = std::uint32_t;

constexpr int kMaxExteriorDim = 30;

int grade(Blade b);
Blade blade_from_indices(const std::vector<int>& one_based);
std::vector<int> blade_indices(Blade b);  // 1-based, increasing

/// Sign of e_a ^ e_b rewritten as e_{a|b}; 0 when a and b share an index.
int wedge_sign(Blade a, Blade b);

enum class Parity { even, odd, mixed };
const char* to_string(Parity p);

class ExtElement {
 public:
  using Terms = std::map<Blade, Rat>;

  ExtElement() = default;
  explicit ExtElement(Rat scalar);
  static ExtElement blade(Blade b, Rat coeff = 1);
  /// The grade-1 element sum_i v[i] e_{i+1}.
  static ExtElement vector(const Vec& v);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rat coeff(Blade b) const;
  /// Highest index used by any blade, plus one (0 for scalars).
  int min_dim() const;
  Parity parity() const;
  /// Grade of a homogeneous nonzero element; -1 for zero or mixed grades.
  int homogeneous_grade() const;

  ExtElement& operator+=(const ExtElement& o);
  ExtElement& operator-=(const ExtElement& o);
  ExtElement& operator*=(const Rat& s);
  friend ExtElement operator+(ExtElement a, const ExtElement& b) { return a += b; }
  friend ExtElement operator-(ExtElement a, const ExtElement& b) { return a -= b; }
  friend ExtElement operator*(const Rat& s, ExtElement a) { return a *= s; }
  ExtElement operator-() const;
  friend bool operator==(const ExtElement&, const ExtElement&) = default;

  ExtElement wedge(const ExtElement& o) const;

  std::string to_string() const;

 private:
  void add_term(Blade b, const Rat& c);
  Terms terms_;
};

ExtElement wedge_all(const std::vector<Vec>& vectors);

/// Which coefficient ring a value lives in.
struct Ring {
  enum class Kind { scalar, exterior };
  Kind kind = Kind::scalar;
  int dim = 0;  // ambient dimension of the exterior algebra, 0 for scalars

  static Ring scalar() { return {Kind::scalar, 0}; }
  static Ring exterior(int n) { return {Kind::exterior, n}; }
  friend bool operator==(const Ring&, const Ring&) = default;
  std::string to_string() const;
};

/// A value of a cochain: an element of a specific ring. Operations on
/// elements of different rings raise Error(ring_mismatch).
class RingElement {
 public:
  RingElement() = default;  // scalar zero
  RingElement(Ring ring, ExtElement value);

  static RingElement zero(Ring ring) { return RingElement(ring, ExtElement()); }
  static RingElement one(Ring ring) { return RingElement(ring, ExtElement(Rat(1))); }
  static RingElement scalar(Rat v) { return RingElement(Ring::scalar(), ExtElement(std::move(v))); }

  const Ring& ring() const noexcept { return ring_; }
  const ExtElement& value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_.is_zero(); }
  Parity parity() const { return value_.parity(); }

  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(const Rat& s, RingElement a) {
    a.value_ *= s;
    return a;
  }
  RingElement operator-() const { return RingElement(ring_, -value_); }
  friend bool operator==(const RingElement&, const RingElement&) = default;

  std::string to_string() const { return value_.to_string(); }

 private:
  Ring ring_;
  ExtElement value_;
};

RingElement add(const RingElement& a, const RingElement& b);
RingElement mul(const RingElement& a, const RingElement& b);
Parity parity(const RingElement& a);

}  // namespace pcup
