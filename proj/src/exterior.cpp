#include "pcup/exterior.hpp"

#include <bit>
#include <stdexcept>

#include "pcup/errors.hpp"

namespace pcup {

int grade(Blade b) { return std::popcount(b); }

Blade blade_from_indices(const std::vector<int>& one_based) {
  Blade b = 0;
  int prev = 0;
  for (int i : one_based) {
    if (i <= prev || i > kMaxExteriorDim)
      throw Error(ErrorKind::parse, "blade indices must be strictly increasing and in 1.." +
                                        std::to_string(kMaxExteriorDim));
    b |= Blade{1} << (i - 1);
    prev = i;
  }
  return b;
}

std::vector<int> blade_indices(Blade b) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (b & (Blade{1} << i)) out.push_back(i + 1);
  return out;
}

int wedge_sign(Blade a, Blade b) {
  if (a & b) return 0;
  // Each pair (i in a, j in b) with i > j needs one transposition.
  int swaps = 0;
  for (Blade rest = a; rest; rest &= rest - 1) {
    const int i = std::countr_zero(rest);
    const Blade below = (Blade{1} << i) - 1;
    swaps += std::popcount(b & below);
  }
  return (swaps % 2) ? -1 : 1;
}

const char* to_string(Parity p) {
  switch (p) {
    case Parity::even: return "even";
    case Parity::odd: return "odd";
    case Parity::mixed: return "mixed";
  }
  return "?";
}

ExtElement::ExtElement(Rat scalar) {
  if (scalar != 0) terms_.emplace(Blade{0}, std::move(scalar));
}

ExtElement ExtElement::blade(Blade b, Rat coeff) {
  ExtElement e;
  e.add_term(b, coeff);
  return e;
}

ExtElement ExtElement::vector(const Vec& v) {
  if (v.size() > static_cast<std::size_t>(kMaxExteriorDim))
    throw std::invalid_argument("ExtElement::vector: dimension too large");
  ExtElement e;
  for (std::size_t i = 0; i < v.size(); ++i) e.add_term(Blade{1} << i, v[i]);
  return e;
}

Rat ExtElement::coeff(Blade b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Rat(0) : it->second;
}

int ExtElement::min_dim() const {
  Blade all = 0;
  for (const auto& [b, c] : terms_) all |= b;
  return all ? 32 - std::countl_zero(all) : 0;
}

Parity ExtElement::parity() const {
  bool has_even = false, has_odd = false;
  for (const auto& [b, c] : terms_) (grade(b) % 2 ? has_odd : has_even) = true;
  if (has_even && has_odd) return Parity::mixed;
  return has_odd ? Parity::odd : Parity::even;
}

int ExtElement::homogeneous_grade() const {
  int g = -1;
  for (const auto& [b, c] : terms_) {
    if (g == -1) g = grade(b);
    else if (g != grade(b)) return -1;
  }
  return g;
}

void ExtElement::add_term(Blade b, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ExtElement& ExtElement::operator+=(const ExtElement& o) {
  for (const auto& [b, c] : o.terms_) add_term(b, c);
  return *this;
}

ExtElement& ExtElement::operator-=(const ExtElement& o) {
  for (const auto& [b, c] : o.terms_) add_term(b, -c);
  return *this;
}

ExtElement& ExtElement::operator*=(const Rat& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, c] : terms_) c *= s;
  return *this;
}

ExtElement ExtElement::operator-() const {
  ExtElement e = *this;
  for (auto& [b, c] : e.terms_) c = -c;
  return e;
}

ExtElement ExtElement::wedge(const ExtElement& o) const {
  ExtElement out;
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : o.terms_) {
      const int s = wedge_sign(a, b);
      if (s == 0) continue;
      out.add_term(a | b, s > 0 ? Rat(ca * cb) : Rat(-(ca * cb)));
    }
  }
  return out;
}

std::string ExtElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [b, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += pcup::to_string(c);
    if (b) {
      out += "*e";
      for (int i : blade_indices(b)) out += std::to_string(i);
    }
  }
  return out;
}

ExtElement wedge_all(const std::vector<Vec>& vectors) {
  ExtElement acc(Rat(1));
  for (const auto& v : vectors) acc = acc.wedge(ExtElement::vector(v));
  return acc;
}

std::string Ring::to_string() const {
  return kind == Kind::scalar ? "Q" : "ext(" + std::to_string(dim) + ")";
}

RingElement::RingElement(Ring ring, ExtElement value)
    : ring_(ring), value_(std::move(value)) {
  if (ring_.kind == Ring::Kind::scalar) {
    for (const auto& [b, c] : value_.terms())
      if (b != 0) throw Error(ErrorKind::ring_mismatch, "scalar ring value with a blade");
  } else if (value_.min_dim() > ring_.dim) {
    throw Error(ErrorKind::ring_mismatch,
                "blade index exceeds exterior dimension " + std::to_string(ring_.dim));
  }
}

namespace {

void require_same_ring(const Ring& a, const Ring& b) {
  if (!(a == b))
    throw Error(ErrorKind::ring_mismatch, "cannot combine " + a.to_string() + " with " +
                                              b.to_string());
}

}  // namespace

RingElement& RingElement::operator+=(const RingElement& o) {
  require_same_ring(ring_, o.ring_);
  value_ += o.value_;
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  require_same_ring(ring_, o.ring_);
  value_ -= o.value_;
  return *this;
}

RingElement add(const RingElement& a, const RingElement& b) { return a + b; }

RingElement mul(const RingElement& a, const RingElement& b) {
  require_same_ring(a.ring(), b.ring());
  return RingElement(a.ring(), a.value().wedge(b.value()));
}

Parity parity(const RingElement& a) { return a.parity(); }

}  // namespace pcup
