#pragma once

// The parameterized cup product of cochains on a polyhedral complex.
//
// For a (p+q)-cell gamma and a covector v, the pair set collects the faces
// (delta, lambda) of dimensions (p, q) for which the shifted dual cone
// pi_gamma(v) + delta^* meets lambda^* in a single interior point. The
// product on gamma is the signed sum of r_p(delta) r_q(lambda) over that set,
// the sign being det(B_delta | B_lambda) in gamma's oriented basis.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pcup/errors.hpp"
#include "pcup/pcomplex.hpp"

namespace pcup {

struct PairEntry {
  CellId delta = 0;
  CellId lambda = 0;
  int sign = 1;
  Vec point;  // the intersection point, gamma coordinates
};

struct PairSet {
  CellId cell = 0;
  int p = 0;
  int q = 0;
  Vec parameter;
  std::vector<PairEntry> entries;
};

enum class FailureKind { non_transversal, boundary };

struct ConvenienceReport {
  bool convenient = true;
  // Witness, meaningful only when !convenient.
  CellId cell = 0;
  CellId delta = 0;
  CellId lambda = 0;
  int p = 0;
  int q = 0;
  FailureKind kind = FailureKind::non_transversal;

  std::string to_string() const;
};

class NotConvenient : public Error {
 public:
  explicit NotConvenient(ConvenienceReport report);
  const ConvenienceReport& report() const noexcept { return report_; }

 private:
  ConvenienceReport report_;
};

using DegreePair = std::pair<int, int>;

/// Throws NotConvenient when v is not (p, q)-convenient on gamma.
PairSet pair_set(const PComplex& x, CellId gamma, int p, int q, const Vec& v);

/// Convenience of v at the requested (p, q) levels; every level with
/// 0 < p + q <= top_dim when `degrees` is empty.
ConvenienceReport is_convenient(const PComplex& x, const Vec& v,
                                const std::set<DegreePair>& degrees = {});

struct SampleOptions {
  std::uint64_t seed = 1;
  int max_tries = 400;
  long initial_box = 5;
  int tries_per_box = 25;
};

/// Deterministic integer covector that is convenient at every level and lies
/// on no unconvenient hyperplane of x. Throws Error(sampling_exhausted).
Vec sample_convenient(const PComplex& x, const SampleOptions& options);
Vec sample_convenient(const PComplex& x, std::uint64_t seed);

Cochain cup(const PComplex& x, const Cochain& rp, const Cochain& rq, const Vec& v);

/// Vertex ids sorted by increasing v, ties broken by id.
std::vector<std::size_t> ascending_order(const PComplex& x, const Vec& v);

/// The classical front-face/back-face product on a simplicial complex, with
/// vertices ordered by `order` (a list of all vertex ids, smallest first).
Cochain cech_cup(const PComplex& x, const Cochain& rp, const Cochain& rq,
                 const std::vector<std::size_t>& order);

/// Parameters tau in [0, 1] at which u + tau (v - u) fails to be convenient
/// at the given levels. `whole_interval` is set when failures are not
/// isolated points.
struct SegmentReport {
  std::set<Rat> failures;
  bool whole_interval = false;
  bool clean() const { return failures.empty() && !whole_interval; }
};

SegmentReport segment_convenience(const PComplex& x, const Vec& u, const Vec& v,
                                  const std::set<DegreePair>& degrees);

}  // namespace pcup
