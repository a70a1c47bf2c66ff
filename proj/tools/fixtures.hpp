#pragma once

#include "io.hpp"

#include "conelab/cones.hpp"
#include "conelab/lattice.hpp"
#include "conelab/roots.hpp"

#include <string>
#include <vector>

namespace conelab::fixtures {

/// U + <-2>: Gram [[0,1,0],[1,0,0],[0,0,-2]].
IntegralLattice u_plus_a1();
/// <2> + <-2>, whose only roots are +-(0,1).
IntegralLattice two_chamber_lattice();
Root two_chamber_root();
/// [[-2,3],[3,-2]]; e1, e2 are roots, chamber cone{(3,2),(2,3)}, swapped by e1 <-> e2.
IntegralLattice dihedral_lattice();
std::vector<Root> dihedral_roots();
IntMatrix dihedral_swap();

/// Hyperbolic lattices of ranks 2 to 4 used for random root checks.
std::vector<IntegralLattice> hyperbolic_set();

IntMatrix phi3_pair();      // companion(Phi_3) + companion(Phi_3)
IntMatrix phi5_companion();
IntMatrix order4_rotation();  // rotation + rotation

struct ConeCase {
  std::string name;
  RationalCone delta;
  std::vector<RatMatrix> group;
  std::vector<RatVector> samples;
};

/// Two fibration rays in dimension 2 with the trivial group.
ConeCase hyperelliptic();
/// The chamber y <= 0 of the <2> + <-2> positive cone with {id, r_C}.
ConeCase two_chamber();
/// The whole positive cone with {id, r_C}; r_C maps it onto itself.
ConeCase deliberate_overlap();

struct Outcome {
  std::string name;
  bool ok = false;
  io::Json report;
};

/// Runs the bundled corpus; each outcome is ok when it behaves as expected
/// (the deliberate overlap is expected to fail).
std::vector<Outcome> run_all();

}  // namespace conelab::fixtures
