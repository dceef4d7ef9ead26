#include "pcup/cup.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>

#include "pcup/discriminant.hpp"
#include "pcup/normal_fan.hpp"

namespace pcup {

namespace {

struct CellCheck {
  ConvenienceReport report;
  std::vector<PairEntry> entries;
};

std::vector<CellId> faces_of_dim(const PComplex& x, CellId gamma, int d, bool at_least) {
  std::vector<CellId> out;
  for (CellId f : x.cell(gamma).faces) {
    const int fd = x.cell(f).dim;
    if (fd == d || (at_least && fd > d)) out.push_back(f);
  }
  return out;
}

// det(B_delta | B_lambda) in gamma coordinates, 0 when not transversal.
Rat pair_determinant(const NormalCone& a, const NormalCone& b) {
  std::vector<Vec> cols = a.equalities;
  cols.insert(cols.end(), b.equalities.begin(), b.equalities.end());
  return determinant(Mat::from_columns(cols, a.space_dim));
}

ConvenienceReport failure(CellId gamma, CellId delta, CellId lambda, int p, int q,
                          FailureKind kind) {
  return {false, gamma, delta, lambda, p, q, kind};
}

// Runs the (p, q) convenience test on one cell with shift s = pi_gamma(v),
// collecting the pair set on success. A non-transversal witness is preferred
// over a boundary hit when both exist.
CellCheck check_cell(const PComplex& x, CellId gamma, int p, int q, const Vec& s) {
  CellCheck out;
  std::optional<ConvenienceReport> boundary_hit;
  const int m = x.cell(gamma).dim;
  if (m == 0) {
    out.entries.push_back({gamma, gamma, 1, {}});
    return out;
  }
  const Fan& fan = x.fan(gamma);
  const auto deltas = faces_of_dim(x, gamma, p, false);
  const auto lambdas = faces_of_dim(x, gamma, q, false);
  for (CellId delta : deltas) {
    const NormalCone& a = fan.cone(delta);
    for (CellId lambda : lambdas) {
      const NormalCone& b = fan.cone(lambda);
      const Rat det = pair_determinant(a, b);
      if (det == 0) {
        if (cones_meet(a, b, s)) {
          out.report = failure(gamma, delta, lambda, p, q, FailureKind::non_transversal);
          return out;
        }
        continue;
      }
      std::vector<Vec> rows = a.equalities;
      rows.insert(rows.end(), b.equalities.begin(), b.equalities.end());
      Vec rhs;
      for (const auto& t : a.equalities) rhs.push_back(dot(t, s));
      rhs.resize(rows.size(), Rat(0));
      const Vec point = solve_affine(Mat(rows, static_cast<std::size_t>(m)), rhs)->particular;
      const Vec shifted = point - s;
      if (!a.contains(shifted) || !b.contains(point)) continue;
      if (!a.contains_relint(shifted) || !b.contains_relint(point)) {
        if (!boundary_hit) boundary_hit = failure(gamma, delta, lambda, p, q, FailureKind::boundary);
        continue;
      }
      out.entries.push_back({delta, lambda, sign(det), point});
    }
  }
  // Lower-dimensional cones of the two skeletons must not meet at all.
  for (CellId delta : faces_of_dim(x, gamma, p, true)) {
    for (CellId lambda : faces_of_dim(x, gamma, q, true)) {
      if (x.cell(delta).dim + x.cell(lambda).dim == m) continue;
      if (cones_meet(fan.cone(delta), fan.cone(lambda), s)) {
        out.report = failure(gamma, delta, lambda, p, q, FailureKind::non_transversal);
        return out;
      }
    }
  }
  if (boundary_hit) out.report = *boundary_hit;
  return out;
}

std::set<DegreePair> all_levels(const PComplex& x) {
  std::set<DegreePair> out;
  for (int total = 1; total <= x.top_dim(); ++total)
    for (int p = 0; p <= total; ++p) out.insert({p, total - p});
  return out;
}

void require_same_ring(const Cochain& a, const Cochain& b) {
  if (!(a.ring() == b.ring()))
    throw Error(ErrorKind::ring_mismatch, "cochains over " + a.ring().to_string() + " and " +
                                              b.ring().to_string());
}

}  // namespace

std::string ConvenienceReport::to_string() const {
  if (convenient) return "convenient";
  return std::string("not convenient at level (") + std::to_string(p) + "," +
         std::to_string(q) + "): cell " + std::to_string(cell) + ", faces (" +
         std::to_string(delta) + ", " + std::to_string(lambda) + "), " +
         (kind == FailureKind::boundary ? "boundary hit" : "non-transversal");
}

NotConvenient::NotConvenient(ConvenienceReport report)
    : Error(ErrorKind::not_convenient, report.to_string()), report_(std::move(report)) {}

PairSet pair_set(const PComplex& x, CellId gamma, int p, int q, const Vec& v) {
  if (p < 0 || q < 0 || p + q != x.cell(gamma).dim)
    throw Error(ErrorKind::dimension_mismatch, "pair set degrees (" + std::to_string(p) + "," +
                                                   std::to_string(q) + ") do not add up to the cell dimension");
  const Vec s = project_to_cell(x, v, gamma);
  CellCheck check = check_cell(x, gamma, p, q, s);
  if (!check.report.convenient) throw NotConvenient(check.report);
  return {gamma, p, q, v, std::move(check.entries)};
}

ConvenienceReport is_convenient(const PComplex& x, const Vec& v,
                                const std::set<DegreePair>& degrees) {
  if (v.size() != x.ambient_dim())
    throw Error(ErrorKind::dimension_mismatch, "covector of wrong dimension");
  const auto levels = degrees.empty() ? all_levels(x) : degrees;
  for (const auto& [p, q] : levels) {
    for (CellId gamma : x.cells_of_dim(p + q)) {
      auto check = check_cell(x, gamma, p, q, project_to_cell(x, v, gamma));
      if (!check.report.convenient) return check.report;
    }
  }
  return {};
}

Vec sample_convenient(const PComplex& x, const SampleOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::vector<Vec> lines;
  for (const auto& h : unconvenient_hyperplanes(x)) lines.push_back(h.normal);
  long box = options.initial_box;
  for (int attempt = 0; attempt < options.max_tries; ++attempt) {
    if (attempt > 0 && attempt % options.tries_per_box == 0) box *= 2;
    std::uniform_int_distribution<long> coord(-box, box);
    Vec v(x.ambient_dim());
    for (auto& c : v) c = Rat(coord(rng));
    if (is_zero(v)) continue;
    if (std::any_of(lines.begin(), lines.end(), [&](const Vec& l) { return dot(l, v) == 0; }))
      continue;
    if (is_convenient(x, v).convenient) return v;
  }
  throw Error(ErrorKind::sampling_exhausted,
              "no convenient covector found in " + std::to_string(options.max_tries) + " draws");
}

Vec sample_convenient(const PComplex& x, std::uint64_t seed) {
  SampleOptions options;
  options.seed = seed;
  return sample_convenient(x, options);
}

Cochain cup(const PComplex& x, const Cochain& rp, const Cochain& rq, const Vec& v) {
  require_same_ring(rp, rq);
  const int p = rp.degree(), q = rq.degree();
  Cochain out(p + q, rp.ring());
  if (p < 0 || q < 0) return out;
  for (CellId gamma : x.cells_of_dim(p + q)) {
    const PairSet pairs = pair_set(x, gamma, p, q, v);
    RingElement value = RingElement::zero(rp.ring());
    for (const auto& e : pairs.entries)
      value += Rat(e.sign) * mul(rp[e.delta], rq[e.lambda]);
    out.set(gamma, value);
  }
  return out;
}

std::vector<std::size_t> ascending_order(const PComplex& x, const Vec& v) {
  std::vector<std::size_t> ids(x.vertices().size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  std::vector<Rat> value;
  for (const auto& p : x.vertices()) value.push_back(dot(v, p));
  std::stable_sort(ids.begin(), ids.end(),
                   [&](std::size_t a, std::size_t b) { return value[a] < value[b]; });
  return ids;
}

Cochain cech_cup(const PComplex& x, const Cochain& rp, const Cochain& rq,
                 const std::vector<std::size_t>& order) {
  require_same_ring(rp, rq);
  if (!x.is_simplicial()) throw Error(ErrorKind::not_simplicial, "complex is not simplicial");
  std::map<std::size_t, std::size_t> position;
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
  const int p = rp.degree(), q = rq.degree();
  Cochain out(p + q, rp.ring());
  for (CellId gamma : x.cells_of_dim(p + q)) {
    std::vector<std::size_t> u = x.cell(gamma).vertices;
    for (auto v : u)
      if (!position.count(v))
        throw Error(ErrorKind::invalid_cell, "vertex " + std::to_string(v) + " missing from order");
    std::sort(u.begin(), u.end(),
              [&](std::size_t a, std::size_t b) { return position[a] < position[b]; });
    const std::vector<std::size_t> front(u.begin(), u.begin() + p + 1);
    const std::vector<std::size_t> back(u.begin() + p, u.end());
    auto sorted = [](std::vector<std::size_t> s) {
      std::sort(s.begin(), s.end());
      return s;
    };
    const CellId f = *x.find(sorted(front));
    const CellId b = *x.find(sorted(back));
    const RingElement value = mul(evaluate(x, rp, f, front), evaluate(x, rq, b, back));
    out.set(gamma, Rat(x.relative_orientation(gamma, u)) * value);
  }
  return out;
}

SegmentReport segment_convenience(const PComplex& x, const Vec& u, const Vec& v,
                                  const std::set<DegreePair>& degrees) {
  SegmentReport out;
  const auto levels = degrees.empty() ? all_levels(x) : degrees;
  const Vec step = v - u;
  for (const auto& [p, q] : levels) {
    for (CellId gamma : x.cells_of_dim(p + q)) {
      const int m = p + q;
      if (m == 0) continue;
      const Fan& fan = x.fan(gamma);
      const Vec s0 = project_to_cell(x, u, gamma);
      const Vec s1 = project_to_cell(x, step, gamma);
      for (CellId delta : faces_of_dim(x, gamma, p, true)) {
        for (CellId lambda : faces_of_dim(x, gamma, q, true)) {
          const NormalCone& a = fan.cone(delta);
          const NormalCone& b = fan.cone(lambda);
          if (x.cell(delta).dim + x.cell(lambda).dim == m && pair_determinant(a, b) != 0)
            continue;
          const auto hit = meeting_interval(a, b, s0, s1);
          if (!hit) continue;
          out.failures.insert(hit->first);
          out.failures.insert(hit->second);
          if (hit->first != hit->second) out.whole_interval = true;
        }
      }
    }
  }
  return out;
}

}  // namespace pcup
