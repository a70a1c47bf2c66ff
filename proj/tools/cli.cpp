#include "cli.hpp"

#include "fixtures.hpp"

#include "conelab/cones.hpp"
#include "conelab/cyclo.hpp"
#include "conelab/eisenstein.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <ostream>

namespace conelab::cli {

namespace {

using io::Json;
using io::to_json;

void emit(std::ostream& out, const Json& report) { out << report.dump(2) << "\n"; }

Json matrix_list(const std::vector<LatticeVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

Json pair_json(const EigenPair& p) { return Json::array({p.k1, p.k2}); }

Json pair_list(const std::vector<EigenPair>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(pair_json(p));
  return out;
}

std::size_t cap_from_env(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  const IntVector v = io::parse_int_list(raw, name);
  if (v.size() != 1 || v[0] < 1 || v[0] > Int(1000000000)) {
    throw Error(ErrorKind::ParseError, std::string(name) + ": expected a positive integer");
  }
  return static_cast<std::size_t>(v[0]);
}

std::vector<Root> excluded_roots(const IntegralLattice& l, const RunConfig& c) {
  std::vector<Root> out;
  for (const auto& e : c.excluded) out.push_back(Root::verified(l, io::parse_int_list(e, "--exclude")));
  return out;
}

Json roots_json(const IntegralLattice& l, const std::vector<Root>& roots, const LatticeVector& h) {
  Json out = Json::array();
  for (const auto& r : roots) out.push_back({{"vector", to_json(r.vector())}, {"height", to_json(l.pair(r.vector(), h))}});
  return out;
}

int lattice_info(const RunConfig& c, std::ostream& out) {
  const IntegralLattice l = io::lattice_from_json(io::read_file(c.lattice_path));
  const LatticeInvariants inv = lattice_invariants(l);
  Json rep;
  rep["rank"] = inv.rank;
  rep["det"] = to_json(inv.det);
  rep["even"] = inv.even;
  rep["signature"] = Json::array({inv.signature.positive, inv.signature.negative, inv.signature.zero});
  rep["hyperbolic"] = inv.hyperbolic();
  std::optional<DiscriminantData> disc;
  if (inv.det != 0) {
    disc = discriminant_group(l);
    rep["discriminant"] = {{"invariant_factors", to_json(disc->invariant_factors)}, {"order", to_json(disc->order())}};
  } else {
    rep["discriminant"] = nullptr;
  }
  if (!c.group_path.empty()) {
    const auto gens = io::integer_maps_from_json(io::read_file(c.group_path));
    const GroupAction g = group_closure(l, gens, c.group_cap);
    const Sublattice fixed = fixed_sublattice(l, g);
    const Sublattice comp = orthogonal_complement(l, fixed.basis);
    Json group;
    group["order"] = g.order();
    group["fixed_basis"] = matrix_list(fixed.vectors());
    group["fixed_gram"] = to_json(fixed.gram);
    group["complement_basis"] = matrix_list(comp.vectors());
    group["complement_gram"] = to_json(comp.gram);
    if (disc) {
      Json acts = Json::array();
      for (const auto& gen : gens) {
        const DiscriminantAction a = discriminant_action(l, *disc, Isometry::verified(l, gen));
        acts.push_back({{"induced", to_json(a.induced)}, {"is_identity", a.is_identity}});
      }
      group["discriminant_action"] = acts;
    }
    rep["group"] = group;
  }
  emit(out, rep);
  return 0;
}

int roots_enum(const RunConfig& c, std::ostream& out) {
  const IntegralLattice l = io::lattice_from_json(io::read_file(c.lattice_path));
  const LatticeVector h = io::parse_int_list(c.polarization, "--polarization");
  const auto ex = excluded_roots(l, c);
  const auto roots = enumerate_roots(l, h, Int(c.bound), ex);
  Json rep;
  rep["polarization"] = to_json(h);
  rep["bound"] = c.bound;
  rep["excluded"] = Json::array();
  for (const auto& e : ex) rep["excluded"].push_back(to_json(e.vector()));
  rep["count"] = roots.size();
  rep["roots"] = roots_json(l, roots, h);
  emit(out, rep);
  return 0;
}

int roots_walk(const RunConfig& c, std::ostream& out) {
  const IntegralLattice l = io::lattice_from_json(io::read_file(c.lattice_path));
  const LatticeVector h = io::parse_int_list(c.polarization, "--polarization");
  const LatticeVector d = io::parse_int_list(c.start_vector, "--vector");
  const auto roots = enumerate_roots(l, h, Int(c.bound), excluded_roots(l, c));
  const WalkResult w = chamber_walk(l, roots, d, c.walk_cap);
  Json rep;
  rep["start"] = to_json(d);
  rep["roots"] = roots_json(l, roots, h);
  rep["word"] = w.word;
  rep["steps"] = w.steps;
  rep["final"] = to_json(w.final);
  rep["replay_matches"] = apply_word(l, roots, w.word, d) == w.final;
  emit(out, rep);
  return 0;
}

int classify(const RunConfig& c, std::ostream& out) {
  emit(out, classify_report(io::matrix_from_json(io::read_file(c.matrix_path))));
  return 0;
}

int hermitian_reduce(const RunConfig& c, std::ostream& out) {
  const HermitianForm f = io::form_from_json(io::read_file(c.form_path));
  const Reduction r = reduce(f);
  Json rep;
  rep["input"] = to_json(f);
  rep["det"] = to_json(herm_invariants(f).det);
  rep["reduced"] = to_json(r.form);
  rep["transform"] = to_json(r.transform);
  rep["in_cone"] = cone_contains(eisenstein_cone(), r.form.coords()).member;
  emit(out, rep);
  return 0;
}

int hermitian_verify(const RunConfig& c, std::ostream& out) {
  if (c.sample_count < 1) throw Error(ErrorKind::InvalidInput, "--samples must be positive");
  const DomainReport r = verify_eisenstein_domain(static_cast<std::size_t>(c.sample_count), c.seed, c.ball_radius);
  Json rep;
  rep["samples"] = r.samples_total;
  rep["seed"] = c.seed;
  rep["ball_radius"] = c.ball_radius;
  rep["reduced_in_cone"] = r.reduced_in_cone;
  rep["covered"] = r.samples_covered;
  rep["coverage"] = Json::array({r.samples_covered, r.samples_total});
  rep["uncovered_witnesses"] = Json::array();
  for (const auto& f : r.uncovered_witnesses) rep["uncovered_witnesses"].push_back(to_json(f));
  rep["ball_classes"] = r.ball_classes;
  rep["classes_separated_by_facet"] = r.classes_separated;
  rep["overlap_witnesses"] = Json::array();
  for (const auto& o : r.overlap_witnesses)
    rep["overlap_witnesses"].push_back({{"transform", to_json(o.transform)}, {"point", to_json(o.point)}});
  emit(out, rep);
  return r.uncovered_witnesses.empty() && r.overlap_witnesses.empty() ? 0 : 1;
}

int cone_check(const RunConfig& c, std::ostream& out) {
  const RationalCone delta = io::cone_from_json(io::read_file(c.delta_path));
  const auto group = io::maps_from_json(io::read_file(c.group_path));
  const auto samples = io::samples_from_json(io::read_file(c.samples_path));
  const CoverageReport r = fundamental_domain_check(delta, group, samples);
  emit(out, coverage_report(r));
  return r.passed() ? 0 : 1;
}

int fixtures_run(std::ostream& out) {
  Json rep = Json::array();
  bool all = true;
  for (const auto& o : fixtures::run_all()) {
    all = all && o.ok;
    rep.push_back({{"name", o.name}, {"ok", o.ok}, {"report", o.report}});
  }
  emit(out, rep);
  return all ? 0 : 1;
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CapExceeded:
    case ErrorKind::InfiniteOrder:
    case ErrorKind::FixedDirection:
    case ErrorKind::EvenOrder:
    case ErrorKind::RankObstruction:
    case ErrorKind::NotFree:
      return 1;
    default:
      return 2;
  }
}

Json classify_report(const IntMatrix& matrix) {
  const CoverAction action = classify_cover_order(matrix);
  const EigenPairClassification pairs = admissible_eigen_pairs(action.order);
  const Wedge2Ranks w = wedge2_invariant_rank(action.matrix);
  Json rep;
  rep["order"] = action.order;
  rep["annihilated"] = annihilator_check(action.matrix, action.order);
  rep["module_rank"] = module_rank(action.order);
  rep["eigen_pairs"] = {{"raw", pair_list(pairs.raw)},
                        {"admissible", pair_list(pairs.admissible)},
                        {"normalized", pair_list(pairs.normalized)},
                        {"excluded", pair_list(pairs.excluded_normalized)}};
  rep["wedge2"] = {{"invariant", w.invariant}, {"complement", w.complement}};
  rep["free_basis"] = to_json(free_basis(action));
  return rep;
}

Json coverage_report(const CoverageReport& r) {
  Json rep;
  rep["samples_total"] = r.samples_total;
  rep["samples_covered"] = r.samples_covered;
  Json cover = Json::array();
  for (const auto& e : r.covering_element) cover.push_back(e ? Json(*e) : Json(nullptr));
  rep["covering_element"] = cover;
  rep["uncovered_witnesses"] = Json::array();
  for (const auto& w : r.uncovered_witnesses) rep["uncovered_witnesses"].push_back(to_json(w));
  rep["pairs_checked"] = r.pairs_checked;
  rep["pairs_skipped"] = r.pairs_skipped;
  rep["overlap_witnesses"] = Json::array();
  for (const auto& w : r.overlap_witnesses)
    rep["overlap_witnesses"].push_back({{"first", w.first}, {"second", w.second}, {"point", to_json(w.point)}});
  rep["coverage_ok"] = r.coverage_ok();
  rep["overlap_ok"] = r.overlap_ok();
  rep["passed"] = r.passed();
  return rep;
}

int execute(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    switch (c.subcommand) {
      case Subcommand::LatticeInfo: return lattice_info(c, out);
      case Subcommand::RootsEnum: return roots_enum(c, out);
      case Subcommand::RootsWalk: return roots_walk(c, out);
      case Subcommand::ClassifyAbelian: return classify(c, out);
      case Subcommand::HermitianReduce: return hermitian_reduce(c, out);
      case Subcommand::HermitianVerifyRemark: return hermitian_verify(c, out);
      case Subcommand::ConeCheck: return cone_check(c, out);
      case Subcommand::Fixtures: return fixtures_run(out);
    }
  } catch (const Error& e) {
    const int code = exit_code_for(e.kind());
    if (code == 1) emit(out, Json{{"error", error_name(e.kind())}, {"detail", e.detail()}});
    err << "error: " << e.what() << "\n";
    return code;
  }
  return 2;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Exact lattice, root, cyclotomic and cone computations", "conelab"};
  app.require_subcommand(0, 1);
  bool fixtures = false;
  app.add_flag("--fixtures", fixtures, "Run the bundled regression corpus");

  auto* lattice_info = app.add_subcommand("lattice-info", "Invariants, discriminant group, optional group data");
  lattice_info->add_option("--lattice", c.lattice_path, "Lattice JSON file")->required();
  lattice_info->add_option("--group", c.group_path, "Generators JSON file {\"maps\": [...]}");

  auto* roots = app.add_subcommand("roots", "Root enumeration and chamber walking");
  roots->require_subcommand(1);
  auto* roots_enum = roots->add_subcommand("enum", "Roots with 0 <= (C . h) <= bound");
  auto* roots_walk = roots->add_subcommand("walk", "Walk a vector into the chamber of the enumerated roots");
  for (auto* s : {roots_enum, roots_walk}) {
    s->add_option("--lattice", c.lattice_path, "Lattice JSON file")->required();
    s->add_option("--polarization", c.polarization, "Polarization h, comma-separated")->required();
    s->add_option("--bound", c.bound, "Height bound")->check(CLI::NonNegativeNumber);
    s->add_option("--exclude", c.excluded, "Excluded root, comma-separated (repeatable)");
  }
  roots_walk->add_option("--vector", c.start_vector, "Start vector, comma-separated")->required();
  roots_walk->add_option("--cap", c.walk_cap, "Step cap")->check(CLI::PositiveNumber);

  auto* classify = app.add_subcommand("classify-abelian", "Classify a cover action on Z^4");
  classify->add_option("--matrix", c.matrix_path, "Matrix JSON file {\"matrix\": [...]}")->required();

  auto* hermitian = app.add_subcommand("hermitian", "Hermitian forms over Z[zeta_3]");
  hermitian->require_subcommand(1);
  auto* h_reduce = hermitian->add_subcommand("reduce", "Canonical reduced form and transform");
  h_reduce->add_option("--form", c.form_path, "Form JSON file {\"form\": [a, d, h0, h1]}")->required();
  auto* h_verify = hermitian->add_subcommand("verify-remark", "Coverage and overlap report for the explicit cone");
  h_verify->add_option("--samples", c.sample_count, "Sample count")->check(CLI::PositiveNumber);
  h_verify->add_option("--seed", c.seed, "Seed");
  h_verify->add_option("--ball", c.ball_radius, "Coefficient radius of the transform ball")->check(CLI::Range(0, 6));

  auto* cone = app.add_subcommand("cone", "Rational cone checks");
  cone->require_subcommand(1);
  auto* cone_check = cone->add_subcommand("check", "Fundamental-domain conditions on samples");
  cone_check->add_option("--delta", c.delta_path, "Cone JSON file")->required();
  cone_check->add_option("--group", c.group_path, "Maps JSON file")->required();
  cone_check->add_option("--samples", c.samples_path, "Samples JSON file")->required();

  try {
    c.group_cap = cap_from_env("CONELAB_GROUP_CAP", kDefaultGroupCap);
    c.walk_cap = cap_from_env("CONELAB_WALK_CAP", kDefaultWalkCap);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  std::vector<std::string> storage{"conelab"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  if (lattice_info->parsed())
    c.subcommand = Subcommand::LatticeInfo;
  else if (roots_enum->parsed())
    c.subcommand = Subcommand::RootsEnum;
  else if (roots_walk->parsed())
    c.subcommand = Subcommand::RootsWalk;
  else if (classify->parsed())
    c.subcommand = Subcommand::ClassifyAbelian;
  else if (h_reduce->parsed())
    c.subcommand = Subcommand::HermitianReduce;
  else if (h_verify->parsed())
    c.subcommand = Subcommand::HermitianVerifyRemark;
  else if (cone_check->parsed())
    c.subcommand = Subcommand::ConeCheck;
  else if (fixtures)
    c.subcommand = Subcommand::Fixtures;
  else {
    err << "usage error: a subcommand or --fixtures is required\n" << app.help();
    return 2;
  }
  return execute(c, out, err);
}

}  // namespace conelab::cli
