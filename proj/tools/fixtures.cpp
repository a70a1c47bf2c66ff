#include "fixtures.hpp"

#include "cli.hpp"

#include "conelab/cyclo.hpp"
#include "conelab/eisenstein.hpp"

namespace conelab::fixtures {

namespace {

RatMatrix rat(const IntMatrix& m) { return to_rational(m); }

std::vector<RatVector> positive_cone_samples() {
  std::vector<RatVector> out;
  for (int x = 1; x <= 6; ++x)
    for (int y = -x + 1; y <= x - 1; ++y) out.push_back({Rational(x), Rational(y)});
  return out;
}

}  // namespace

IntegralLattice u_plus_a1() { return IntegralLattice(IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, -2}}); }

IntegralLattice two_chamber_lattice() { return IntegralLattice(IntMatrix{{2, 0}, {0, -2}}); }

Root two_chamber_root() { return Root::verified(two_chamber_lattice(), {0, 1}); }

IntegralLattice dihedral_lattice() { return IntegralLattice(IntMatrix{{-2, 3}, {3, -2}}); }

std::vector<Root> dihedral_roots() {
  const auto l = dihedral_lattice();
  return {Root::verified(l, {1, 0}), Root::verified(l, {0, 1})};
}

IntMatrix dihedral_swap() { return IntMatrix{{0, 1}, {1, 0}}; }

std::vector<IntegralLattice> hyperbolic_set() {
  return {
      two_chamber_lattice(),
      dihedral_lattice(),
      u_plus_a1(),
      IntegralLattice(IntMatrix{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, -2, 0}, {0, 0, 0, -2}}),
      IntegralLattice(IntMatrix{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, -2, 1}, {0, 0, 1, -2}}),
  };
}

IntMatrix phi3_pair() {
  const IntMatrix c = companion_matrix(cyclotomic_polynomial(3));
  return block_diagonal({c, c});
}

IntMatrix phi5_companion() { return companion_matrix(cyclotomic_polynomial(5)); }

IntMatrix order4_rotation() {
  const IntMatrix rot{{0, -1}, {1, 0}};
  return block_diagonal({rot, rot});
}

ConeCase hyperelliptic() {
  std::vector<RatVector> samples = {{1, 0}, {0, 1}};
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) samples.push_back({Rational(a), Rational(b)});
  return {"hyperelliptic", RationalCone(2, std::vector<IntVector>{{1, 0}, {0, 1}}), {rat(IntMatrix::identity(2))},
          samples};
}

ConeCase two_chamber() {
  const auto l = two_chamber_lattice();
  const IntMatrix r = reflection_matrix(l, two_chamber_root()).matrix();
  return {"two-chamber", RationalCone(2, std::vector<IntVector>{{1, 0}, {1, -1}}),
          {rat(IntMatrix::identity(2)), rat(r)}, positive_cone_samples()};
}

ConeCase deliberate_overlap() {
  const auto l = two_chamber_lattice();
  const IntMatrix r = reflection_matrix(l, two_chamber_root()).matrix();
  return {"deliberate-overlap", RationalCone(2, std::vector<IntVector>{{1, 1}, {1, -1}}),
          {rat(IntMatrix::identity(2)), rat(r)}, positive_cone_samples()};
}

std::vector<Outcome> run_all() {
  std::vector<Outcome> out;

  {
    const RationalCone delta = eisenstein_cone();
    io::Json gens = io::Json::array();
    bool all_psd = true;
    for (const auto& g : eisenstein_cone_generators()) {
      const auto inv = herm_invariants(g);
      all_psd = all_psd && inv.psd;
      gens.push_back({{"form", io::to_json(g)}, {"det", io::to_json(inv.det)}, {"psd", inv.psd}, {"pd", inv.pd}});
    }
    const IntVector outside{1, 0, 0, 0};
    const Membership m = cone_contains(delta, outside);
    const bool ok = all_psd && delta.full_dimensional() && !m.member && verify_membership(delta, to_rational(outside), m);
    out.push_back({"eisenstein-cone", ok,
                   {{"generators", gens},
                    {"full_dimensional", delta.full_dimensional()},
                    {"facets", [&] {
                       io::Json f = io::Json::array();
                       for (const auto& v : delta.facets()) f.push_back(io::to_json(v));
                       return f;
                     }()},
                    {"form_1_0_0_0_in_cone", m.member},
                    {"separator", io::to_json(m.separator)}}});
  }

  auto classify_case = [&](const std::string& name, const IntMatrix& m, int order, int rank, std::size_t inv,
                           std::size_t comp) {
    io::Json rep = cli::classify_report(m);
    const bool ok = rep.value("order", 0) == order && rep.value("module_rank", 0) == rank &&
                    rep["wedge2"]["invariant"] == inv && rep["wedge2"]["complement"] == comp;
    out.push_back({name, ok, rep});
  };
  classify_case("classify-phi3-pair", phi3_pair(), 3, 2, 4, 2);
  classify_case("classify-phi5", phi5_companion(), 5, 1, 2, 4);

  for (const auto& c : {hyperelliptic(), two_chamber(), deliberate_overlap()}) {
    const CoverageReport rep = fundamental_domain_check(c.delta, c.group, c.samples);
    const bool expect_pass = c.name != "deliberate-overlap";
    const bool ok = expect_pass ? rep.passed() : (!rep.overlap_ok() && rep.coverage_ok());
    out.push_back({c.name, ok, cli::coverage_report(rep)});
  }

  {
    const SemidirectReport a = semidirect_check(two_chamber_lattice(), {two_chamber_root()},
                                                {IntMatrix::identity(2)}, {2, -1});
    const SemidirectReport b = semidirect_check(dihedral_lattice(), dihedral_roots(), {dihedral_swap()}, {4, 3});
    out.push_back({"semidirect", a.passed() && b.passed(),
                   {{"two_chamber_words", a.words_checked},
                    {"two_chamber_failures", a.failures.size()},
                    {"dihedral_words", b.words_checked},
                    {"dihedral_failures", b.failures.size()}}});
  }
  return out;
}

}  // namespace conelab::fixtures
