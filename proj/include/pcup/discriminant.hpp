#pragma once

// Special triples, the discriminant D(X), classification of parameter points
// and the wall-crossing correction between neighbouring components of
// V^* \ D(X).
//
// Hyperplanes of V^* are all of the form L^perp for a line L of V; they are
// stored by the canonical primitive integer vector spanning L, so that u lies
// on the hyperplane iff normal . u = 0.

#include <set>
#include <string>
#include <vector>

#include "pcup/cup.hpp"
#include "pcup/pcomplex.hpp"

namespace pcup {

/// (delta, lambda, mu) with dims (p, q, p+q), delta and lambda faces of mu,
/// and V_delta and V_lambda meeting in dimension >= 1.
struct LambdaTriple {
  CellId delta = 0;
  CellId lambda = 0;
  CellId mu = 0;
  int p = 0;
  int q = 0;
  int meet_dim = 0;
  Vec line;  // canonical spanning vector of the meet when meet_dim == 1
};

struct SpecialTriple {
  CellId delta = 0;
  CellId lambda = 0;
  CellId gamma = 0;
  int p = 0;
  int q = 0;
  Vec line;  // canonical spanning vector of V_delta cap V_lambda

  friend bool operator==(const SpecialTriple&, const SpecialTriple&) = default;
};

struct Hyperplane {
  Vec normal;                          // canonical line; the hyperplane is normal^perp
  std::vector<SpecialTriple> triples;  // generating special triples (discriminant only)
};

std::vector<LambdaTriple> lambda_triples(const PComplex& x, int p, int q);
std::vector<SpecialTriple> special_triples(const PComplex& x, int p, int q);
/// Over every level 1 <= p, q with p + q <= top_dim.
std::vector<SpecialTriple> special_triples(const PComplex& x);

/// Deduplicated hyperplanes of D(X), sorted by normal.
std::vector<Hyperplane> discriminant(const PComplex& x);

/// Unconvenient hyperplanes at the given levels (all when empty), sorted by
/// normal; `triples` is left empty.
std::vector<Hyperplane> unconvenient_hyperplanes(const PComplex& x,
                                                 const std::set<DegreePair>& degrees = {});

struct PointClass {
  enum class Kind { convenient, on_unconvenient_hyperplane, uncommon, mixed };
  Kind kind = Kind::convenient;
  std::vector<Vec> hyperplanes;  // normals of the unconvenient hyperplanes through u
  bool uncommon = false;
  bool convenient = false;       // the full convenience test

  std::string to_string() const;
};

const char* to_string(PointClass::Kind kind);

/// Hyperplane membership and the uncommon test are reported separately; the
/// kind is convenient when neither holds and u is convenient, uncommon or
/// on_unconvenient_hyperplane when exactly one holds, and mixed otherwise.
PointClass classify_point(const PComplex& x, const Vec& u,
                          const std::set<DegreePair>& degrees = {});

bool is_uncommon(const PComplex& x, const Vec& u, const std::set<DegreePair>& degrees = {});

/// The (p+q-1)-cochain supported on t.gamma with value eps r_p(delta) r_q(lambda),
/// eps matching the orientation of gamma against those of delta and lambda
/// when the common line is oriented by phi > 0. Throws
/// Error(phi_on_hyperplane) if phi vanishes on the line.
Cochain theta_cochain(const PComplex& x, const Cochain& rp, const Cochain& rq,
                      const SpecialTriple& t, const Vec& phi);

/// Orientation sign used by theta_cochain.
int theta_sign(const PComplex& x, const SpecialTriple& t, const Vec& phi);

struct WallCrossing {
  Vec normal;      // the crossed hyperplane
  Rat tau;         // kappa = u + tau (v - u)
  Vec kappa;
  std::vector<SpecialTriple> active;  // S^H_{p,q}(kappa)
  Cochain delta;   // cup_v - cup_u
};

/// The correction cup_v(r_p, r_q) - cup_u(r_p, r_q) for cocycles when the
/// segment [u, v] crosses exactly one discriminant hyperplane, as a sum of
/// coboundaries of theta cochains over the special triples active at the
/// crossing point. All hypotheses are checked: Error(not_a_cocycle),
/// NotConvenient, Error(no_crossing | multiple_crossings | bad_kappa).
WallCrossing wall_crossing(const PComplex& x, const Cochain& rp, const Cochain& rq,
                           const Vec& u, const Vec& v);

Cochain wall_crossing_delta(const PComplex& x, const Cochain& rp, const Cochain& rq,
                            const Vec& u, const Vec& v);

/// True when no discriminant hyperplane separates u and v or contains
/// either of them.
bool same_component(const PComplex& x, const Vec& u, const Vec& v);

}  // namespace pcup
