// Command-line front end. Every command prints one JSON document.
// Exit codes: 0 success, 2 validation or convenience failure, 3 cross-check
// mismatch.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "pcup/cup.hpp"
#include "pcup/discriminant.hpp"
#include "pcup/geom.hpp"
#include "pcup/io.hpp"
#include "pcup/subdivision.hpp"

using namespace pcup;

namespace {

constexpr int kFailure = 2;
constexpr int kMismatch = 3;

struct Options {
  std::string v;
  std::string u;
  std::uint64_t seed = 1;
  std::string ring = "Q";
  bool verify = false;
  std::string out;
  std::vector<std::string> files;
};

void emit(const Options& o, const Json& j) {
  const std::string text = j.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(o.out);
  if (!file) throw Error(ErrorKind::parse, "cannot write " + o.out);
  file << text;
}

Json load_cochain_json(const Options& o, const std::string& path) {
  Json j = load_json(path);
  if (j.is_object() && !j.contains("ring")) j["ring"] = o.ring;
  return j;
}

Cochain load_cochain(const Options& o, const std::string& path, const PComplex& x) {
  Cochain c = cochain_from_json(load_cochain_json(o, path), x.ambient_dim());
  validate(x, c);
  return c;
}

// The parameter: --v when given, otherwise sampled from --seed.
Vec parameter(const Options& o, const PComplex& x) {
  if (!o.v.empty()) {
    Vec v = parse_covector(o.v);
    if (v.size() != x.ambient_dim())
      throw Error(ErrorKind::dimension_mismatch, "--v has " + std::to_string(v.size()) +
                                                     " entries, expected " +
                                                     std::to_string(x.ambient_dim()));
    return v;
  }
  return sample_convenient(x, o.seed);
}

int cmd_validate(const Options& o) {
  const PComplex x = complex_from_json(load_json(o.files.at(0)));
  Json cells = Json::array();
  for (int d = 0; d <= x.top_dim(); ++d) cells.push_back(x.cells_of_dim(d).size());
  emit(o, {{"valid", true},
           {"top_dim", x.top_dim()},
           {"cells_by_dim", cells},
           {"simplicial", x.is_simplicial()},
           {"pascal", check_pascal(x)}});
  return 0;
}

int cmd_product(const Options& o) {
  const PComplex x = complex_from_json(load_json(o.files.at(0)));
  const Cochain a = load_cochain(o, o.files.at(1), x);
  const Cochain b = load_cochain(o, o.files.at(2), x);
  const Vec v = parameter(o, x);
  const Cochain product = cup(x, a, b, v);
  Json report{{"v", to_json(v)}, {"product", to_json(product)}};
  int code = 0;
  if (o.verify && x.is_simplicial()) {
    const bool same = cech_cup(x, a, b, ascending_order(x, v)) == product;
    report["cech_agrees"] = same;
    if (!same) code = kMismatch;
  }
  emit(o, report);
  return code;
}

int cmd_volume(const Options& o) {
  const auto points = polytope_from_json(load_json(o.files.at(0)));
  if (points.empty()) throw Error(ErrorKind::invalid_cell, "empty polytope");
  const std::size_t n = points.front().size();
  const PComplex x = polytope_complex(n, points, true);
  if (x.top_dim() != static_cast<int>(n)) {
    emit(o, {{"volume", "0"}, {"triangulation", "0"}, {"agrees", true}});
    return 0;
  }
  const Vec v = parameter(o, x);
  const Rat by_cup = volume_by_cup(x, v);
  const Rat by_triangulation = cell_volume(x, x.cells_of_dim(x.top_dim()).front());
  const bool agrees = by_cup == by_triangulation;
  emit(o, {{"v", to_json(v)},
           {"volume", to_json(by_cup)},
           {"triangulation", to_json(by_triangulation)},
           {"agrees", agrees}});
  return agrees ? 0 : kMismatch;
}

Rat hull_volume(std::size_t n, const std::vector<Vec>& points) {
  const PComplex x = polytope_complex(n, points, true);
  if (x.top_dim() != static_cast<int>(n)) return 0;
  return cell_volume(x, x.cells_of_dim(x.top_dim()).front());
}

// n! V(P_1, ..., P_n) = sum over nonempty S of (-1)^(n - |S|) vol(sum of P_i, i in S).
Rat polarization(const std::vector<std::vector<Vec>>& summands) {
  const std::size_t n = summands.size();
  Rat total = 0;
  for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
    std::vector<Vec> sum{zeros(n)};
    std::size_t size = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (!(mask >> k & 1)) continue;
      ++size;
      std::vector<Vec> next;
      for (const auto& a : sum)
        for (const auto& b : summands[k]) next.push_back(a + b);
      sum = std::move(next);
    }
    const Rat vol = hull_volume(n, sum);
    total += (n - size) % 2 == 0 ? vol : Rat(-vol);
  }
  Rat fact = 1;
  for (std::size_t k = 2; k <= n; ++k) fact *= static_cast<long>(k);
  return total / fact;
}

int cmd_mixed_volume(const Options& o) {
  std::vector<std::vector<Vec>> summands;
  for (const auto& f : o.files) summands.push_back(polytope_from_json(load_json(f)));
  const std::size_t n = summands.size();
  for (const auto& s : summands)
    for (const auto& p : s)
      if (p.size() != n)
        throw Error(ErrorKind::dimension_mismatch, std::to_string(n) +
                                                       " summands need points of dimension " +
                                                       std::to_string(n));
  const MinkowskiSum sum = minkowski_sum_complex(n, summands);
  const Vec v = parameter(o, sum.complex);
  const Rat value = mixed_volume(summands, v);
  Json report{{"v", to_json(v)}, {"mixed_volume", to_json(value)}};
  int code = 0;
  if (o.verify) {
    const Rat oracle = polarization(summands);
    report["polarization"] = to_json(oracle);
    report["agrees"] = oracle == value;
    if (oracle != value) code = kMismatch;
  }
  emit(o, report);
  return code;
}

Json triple_json(const SpecialTriple& t) {
  return {{"delta", t.delta}, {"lambda", t.lambda}, {"gamma", t.gamma}, {"p", t.p}, {"q", t.q}};
}

int cmd_discriminant(const Options& o) {
  const PComplex x = complex_from_json(load_json(o.files.at(0)));
  Json hyperplanes = Json::array();
  for (const auto& h : discriminant(x)) {
    Json triples = Json::array();
    for (const auto& t : h.triples) triples.push_back(triple_json(t));
    hyperplanes.push_back({{"normal", to_json(h.normal)}, {"triples", triples}});
  }
  Json unconvenient = Json::array();
  for (const auto& h : unconvenient_hyperplanes(x)) unconvenient.push_back(to_json(h.normal));
  Json report{{"discriminant", hyperplanes}, {"unconvenient", unconvenient}};
  if (!o.v.empty()) {
    const Vec u = parse_covector(o.v);
    const PointClass c = classify_point(x, u);
    Json on = Json::array();
    for (const auto& h : c.hyperplanes) on.push_back(to_json(h));
    report["point"] = {{"u", to_json(u)},
                       {"class", to_string(c.kind)},
                       {"hyperplanes", on},
                       {"uncommon", c.uncommon},
                       {"convenient", c.convenient}};
  }
  emit(o, report);
  return 0;
}

int cmd_wallcross(const Options& o) {
  const PComplex x = complex_from_json(load_json(o.files.at(0)));
  const Cochain a = load_cochain(o, o.files.at(1), x);
  const Cochain b = load_cochain(o, o.files.at(2), x);
  if (o.u.empty() || o.v.empty())
    throw Error(ErrorKind::parse, "wallcross needs both --u and --v");
  const Vec u = parse_covector(o.u), v = parse_covector(o.v);
  const WallCrossing w = wall_crossing(x, a, b, u, v);
  const Cochain difference = cup(x, a, b, v) - cup(x, a, b, u);
  const bool verified = difference == w.delta;
  Json active = Json::array();
  for (const auto& t : w.active) active.push_back(triple_json(t));
  emit(o, {{"u", to_json(u)},
           {"v", to_json(v)},
           {"wall", to_json(w.normal)},
           {"kappa", to_json(w.kappa)},
           {"active_triples", active},
           {"correction", to_json(w.delta)},
           {"difference", to_json(difference)},
           {"verified", verified}});
  return verified ? 0 : kMismatch;
}

int cmd_cech_check(const Options& o) {
  const PComplex x = complex_from_json(load_json(o.files.at(0)));
  const Cochain a = load_cochain(o, o.files.at(1), x);
  const Cochain b = load_cochain(o, o.files.at(2), x);
  const Vec v = parameter(o, x);
  const Cochain product = cup(x, a, b, v);
  const auto order = ascending_order(x, v);
  const Cochain cech = cech_cup(x, a, b, order);
  const bool agrees = product == cech;
  emit(o, {{"v", to_json(v)},
           {"order", order},
           {"product", to_json(product)},
           {"cech", to_json(cech)},
           {"agrees", agrees}});
  return agrees ? 0 : kMismatch;
}

int cmd_res(const Options& o) {
  const PComplex fine = complex_from_json(load_json(o.files.at(0)));
  const PComplex coarse = complex_from_json(load_json(o.files.at(1)));
  const SubdivisionMap m = build_subdivision(fine, coarse);
  const Cochain a = load_cochain(o, o.files.at(2), fine);
  Json report{{"res", to_json(res(a, m))}};
  int code = 0;
  if (o.verify && !(res(coboundary(fine, a), m) == coboundary(coarse, res(a, m)))) {
    report["commutes_with_d"] = false;
    code = kMismatch;
  } else if (o.verify) {
    report["commutes_with_d"] = true;
  }
  if (o.files.size() > 3) {
    const Cochain b = load_cochain(o, o.files.at(3), fine);
    const Vec v = !o.v.empty() ? parameter(o, coarse) : [&] {
      SampleOptions opts;
      opts.seed = o.seed;
      // A parameter convenient for both complexes.
      for (int attempt = 0; attempt < 64; ++attempt, ++opts.seed) {
        Vec c = sample_convenient(fine, opts);
        if (is_convenient(coarse, c).convenient) return c;
      }
      throw Error(ErrorKind::sampling_exhausted, "no parameter convenient for both complexes");
    }();
    const Defect d = subdivision_defect(a, b, v, m);
    report["v"] = to_json(v);
    report["defect"] = to_json(d.defect);
    report["witness"] = d.witness ? to_json(*d.witness) : Json(nullptr);
    if (!d.witness) code = kMismatch;
  }
  emit(o, report);
  return code;
}

int cmd_cohomology(const Options& o) {
  const PComplex x = complex_from_json(load_json(o.files.at(0)));
  Json ranks = Json::array();
  for (int p = 0; p <= x.top_dim(); ++p) ranks.push_back(cohomology_rank(x, p));
  Json report{{"ranks", ranks}};
  if (o.files.size() > 1) {
    const Cochain a = load_cochain(o, o.files.at(1), x);
    report["cocycle"] = is_cocycle(x, a);
    const auto w = is_coboundary(x, a);
    report["coboundary"] = w.has_value();
    if (w) report["witness"] = to_json(*w);
  }
  emit(o, report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parameterized cup products on polyhedral complexes"};
  app.require_subcommand(1);
  Options o;

  auto add = [&](const char* name, const char* help, std::size_t min_files, int max_files,
                 bool param, int (*run)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("files", o.files, "input files")->expected(static_cast<int>(min_files), max_files)->required();
    sub->add_option("--out", o.out, "write the report to FILE");
    sub->add_flag("--verify", o.verify, "run the internal cross-checks");
    sub->add_option("--ring", o.ring, "ring for cochain files without one")
        ->check(CLI::IsMember({"Q", "ext"}));
    if (param) {
      auto* v = sub->add_option("--v", o.v, "parameter covector \"a/b,c/d,...\"");
      sub->add_option("--seed", o.seed, "seed for sampling a convenient parameter")->excludes(v);
    }
    sub->callback([&o, run]() { throw CLI::RuntimeError(run(o)); });
    return sub;
  };
  add("validate", "check the complex axioms", 1, 1, false, cmd_validate);
  add("product", "cup product of two cochains", 3, 3, true, cmd_product);
  add("volume", "volume of a polytope from (vol_1)^n", 1, 1, true, cmd_volume);
  add("mixed-volume", "mixed volume of n polytopes in dimension n", 1, -1, true, cmd_mixed_volume);
  add("discriminant", "discriminant hyperplanes; classify --v when given", 1, 1, true,
      cmd_discriminant);
  auto* wall = add("wallcross", "wall-crossing correction between --u and --v", 3, 3, true,
                   cmd_wallcross);
  wall->add_option("--u", o.u, "starting covector");
  add("cech-check", "compare with the front/back-face product", 3, 3, true, cmd_cech_check);
  add("res", "push a cochain from a subdivision (fine coarse a [b])", 3, 4, true, cmd_res);
  add("cohomology", "cohomology ranks; cocycle/coboundary test of an optional cochain", 1, 2,
      false, cmd_cohomology);

  try {
    app.parse(argc, argv);
  } catch (const CLI::RuntimeError& e) {
    return e.get_exit_code();
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const NotConvenient& e) {
    std::cout << Json{{"error", to_string(ErrorKind::not_convenient)},
                      {"message", e.what()},
                      {"cell", e.report().cell},
                      {"delta", e.report().delta},
                      {"lambda", e.report().lambda}}
                     .dump(2)
              << "\n";
    return kFailure;
  } catch (const Error& e) {
    std::cout << Json{{"error", to_string(e.kind())}, {"message", e.what()}}.dump(2) << "\n";
    return kFailure;
  }
  return 0;
}
