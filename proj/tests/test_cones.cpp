#include "doctest.h"
#include "fixtures.hpp"
#include "support.hpp"

#include "conelab/cones.hpp"

#include <numeric>
#include <random>

using namespace conelab;

namespace {

RatVector qv(std::initializer_list<int> xs) {
  RatVector v;
  for (int x : xs) v.push_back(Rational(x));
  return v;
}

oracle::QVec to_q(const RatVector& v) { return oracle::QVec(v.begin(), v.end()); }

std::vector<oracle::Vec> random_gens(std::mt19937_64& rng, std::size_t dim, std::size_t count, int box) {
  std::uniform_int_distribution<int> c(-box, box);
  std::vector<oracle::Vec> out;
  while (out.size() < count) {
    oracle::Vec v(dim);
    for (auto& x : v) x = c(rng);
    if (std::any_of(v.begin(), v.end(), [](oracle::i64 x) { return x != 0; })) out.push_back(v);
  }
  return out;
}

RationalCone make(const std::vector<oracle::Vec>& g) {
  std::vector<IntVector> gens;
  for (const auto& v : g) gens.push_back(support::from_oracle(v));
  return RationalCone(g.front().size(), gens);
}

}  // namespace

TEST_SUITE("cones") {

TEST_CASE("construction and canonical storage") {
  const RationalCone k(2, std::vector<RatVector>{{Rational(1, 2), Rational(1, 3)}, {2, 0}, {Rational(3), 0}});
  CHECK(k.generators() == std::vector<IntVector>{{3, 2}, {1, 0}});
  CHECK(k.full_dimensional());
  CHECK_THROWS_AS(RationalCone(2, std::vector<IntVector>{{0, 0}}), Error);
  CHECK_THROWS_AS(RationalCone(2, std::vector<IntVector>{{1, 0, 0}}), Error);
  try {
    RationalCone(7, std::vector<IntVector>{{1, 0, 0, 0, 0, 0, 0}});
    FAIL("expected DimensionLimit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionLimit);
  }
  // A negative generator keeps its direction.
  const RationalCone neg(2, std::vector<IntVector>{{-2, 0}});
  CHECK(neg.generators() == std::vector<IntVector>{{-1, 0}});
}

TEST_CASE("facets and equalities") {
  const RationalCone quad(2, std::vector<IntVector>{{1, 0}, {0, 1}});
  std::vector<IntVector> f = quad.facets();
  std::sort(f.begin(), f.end());
  CHECK(f == std::vector<IntVector>{{0, 1}, {1, 0}});
  CHECK(quad.equalities().empty());

  const RationalCone flat(3, std::vector<IntVector>{{1, 0, 0}, {0, 1, 0}});
  CHECK(flat.dimension() == 2);
  CHECK_FALSE(flat.full_dimensional());
  REQUIRE(flat.equalities().size() == 1);
  CHECK(canonical_sign(flat.equalities()[0]) == IntVector{0, 0, 1});
  for (const auto& n : flat.facets()) CHECK(n[2] == 0);

  const RationalCone half(2, std::vector<IntVector>{{0, 1}, {0, -1}, {1, 0}});
  REQUIRE(half.facets().size() == 1);
  CHECK(half.facets()[0] == IntVector{1, 0});

  const RationalCone line(2, std::vector<IntVector>{{1, 1}, {-1, -1}});
  CHECK(line.dimension() == 1);
  CHECK(line.facets().empty());

  const RationalCone space(2, std::vector<IntVector>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
  CHECK(space.facets().empty());
}

TEST_CASE("facets agree with the cross-product oracle") {
  std::mt19937_64 rng(43);
  int checked = 0;
  while (checked < 200) {
    const auto g = random_gens(rng, 3, 3 + rng() % 3, 3);
    const RationalCone k = make(g);
    if (!k.full_dimensional()) continue;
    std::set<IntVector> lib, ora;
    for (const auto& f : k.facets()) lib.insert(f);
    for (const auto& f : oracle::facets3(g)) {
      oracle::i64 d = 0;
      for (auto x : f) d = oracle::igcd(d, x);
      oracle::Vec p = f;
      for (auto& x : p) x /= d;
      ora.insert(support::from_oracle(p));
    }
    CHECK(lib == ora);
    ++checked;
  }
}

TEST_CASE("membership examples") {
  const RationalCone k(3, std::vector<IntVector>{{1, 0, 0}, {0, 1, 0}, {1, 1, 1}});
  for (const auto& g : k.generators()) {
    const Membership m = cone_contains(k, g);
    CHECK(m.member);
    CHECK(verify_membership(k, to_rational(g), m));
  }
  const Membership sum = cone_contains(k, qv({2, 2, 1}));
  CHECK(sum.member);
  CHECK(verify_membership(k, qv({2, 2, 1}), sum));
  const Membership neg = cone_contains(k, qv({-1, 0, 0}));
  CHECK_FALSE(neg.member);
  CHECK(verify_membership(k, qv({-1, 0, 0}), neg));
  CHECK(cone_contains(k, qv({0, 0, 0})).member);
  CHECK_THROWS_AS(cone_contains(k, qv({1, 0})), Error);

  // A forged certificate is rejected.
  Membership fake = neg;
  fake.member = true;
  fake.coefficients = qv({1, 0, 0});
  CHECK_FALSE(verify_membership(k, qv({-1, 0, 0}), fake));
  Membership bad_sep = sum;
  bad_sep.member = false;
  bad_sep.separator = qv({0, 0, -1});
  CHECK_FALSE(verify_membership(k, qv({2, 2, 1}), bad_sep));
}

TEST_CASE("membership agrees with the Caratheodory oracle") {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<int> c(-4, 4);
  int checked = 0;
  while (checked < 300) {
    const auto g = random_gens(rng, 3, 3 + rng() % 3, 3);
    const RationalCone k = make(g);
    if (!k.full_dimensional()) continue;
    for (int t = 0; t < 5; ++t) {
      const RatVector v = qv({c(rng), c(rng), c(rng)});
      const Membership m = cone_contains(k, v);
      CHECK(m.member == oracle::in_cone3(g, to_q(v)));
      CHECK(verify_membership(k, v, m));
      // Positive rescaling and permuted generators give the same answer.
      RatVector w = v;
      for (auto& x : w) x *= Rational(3, 7);
      CHECK(cone_contains(k, w).member == m.member);
      std::vector<oracle::Vec> perm(g.rbegin(), g.rend());
      CHECK(cone_contains(make(perm), v).member == m.member);
    }
    ++checked;
  }
}

TEST_CASE("membership in lower-dimensional cones") {
  const RationalCone flat(3, std::vector<IntVector>{{1, 0, 0}, {1, 1, 0}});
  CHECK(cone_contains(flat, qv({3, 1, 0})).member);
  const Membership off = cone_contains(flat, qv({1, 0, 1}));
  CHECK_FALSE(off.member);
  CHECK(verify_membership(flat, qv({1, 0, 1}), off));
  const Membership wrong = cone_contains(flat, qv({0, 1, 0}));
  CHECK_FALSE(wrong.member);
  CHECK(verify_membership(flat, qv({0, 1, 0}), wrong));
}

TEST_CASE("interior tests") {
  const RationalCone k(2, std::vector<IntVector>{{1, 0}, {0, 1}});
  CHECK(interior_contains(k, qv({1, 1})).inside);
  CHECK_FALSE(interior_contains(k, qv({1, 0})).inside);
  CHECK_FALSE(interior_contains(k, qv({0, 0})).inside);
  const RationalCone flat(3, std::vector<IntVector>{{1, 0, 0}, {0, 1, 0}});
  const InteriorTest t = interior_contains(flat, qv({1, 1, 0}));
  CHECK(t.inside);
  CHECK(t.lower_dimensional);
  CHECK_FALSE(interior_contains(flat, qv({1, 1, 1})).inside);
}

TEST_CASE("interior disjointness examples") {
  const RationalCone k(2, std::vector<IntVector>{{1, 0}, {1, 1}});
  const auto self = interiors_disjoint(k, k);
  CHECK_FALSE(self.disjoint);
  REQUIRE(self.witness);
  CHECK(interior_contains(k, *self.witness).inside);

  const RationalCone right(2, std::vector<IntVector>{{0, 1}, {0, -1}, {1, 0}});
  const RationalCone left(2, std::vector<IntVector>{{0, 1}, {0, -1}, {-1, 0}});
  CHECK(interiors_disjoint(right, left).disjoint);

  const RationalCone a(2, std::vector<IntVector>{{1, 0}, {0, 1}});
  const RationalCone b(2, std::vector<IntVector>{{1, 1}, {-1, 1}});
  const auto ab = interiors_disjoint(a, b);
  CHECK_FALSE(ab.disjoint);
  CHECK(interior_contains(a, *ab.witness).inside);
  CHECK(interior_contains(b, *ab.witness).inside);

  // Two flat cones in the same plane meet; in different planes they do not.
  const RationalCone p1(3, std::vector<IntVector>{{1, 0, 0}, {0, 1, 0}});
  const RationalCone p2(3, std::vector<IntVector>{{1, 1, 0}, {-1, 2, 0}});
  CHECK_FALSE(interiors_disjoint(p1, p2).disjoint);
  const RationalCone p3(3, std::vector<IntVector>{{1, 0, 0}, {0, 0, 1}});
  CHECK(interiors_disjoint(p1, p3).disjoint);
  CHECK_THROWS_AS(interiors_disjoint(p1, a), Error);
}

TEST_CASE("interior disjointness agrees with the angular oracle") {
  std::mt19937_64 rng(53);
  int checked = 0;
  while (checked < 500) {
    auto g1 = random_gens(rng, 2, 2, 4);
    auto g2 = random_gens(rng, 2, 2, 4);
    auto cross = [](const oracle::Vec& u, const oracle::Vec& v) { return u[0] * v[1] - u[1] * v[0]; };
    if (cross(g1[0], g1[1]) <= 0 || cross(g2[0], g2[1]) <= 0) continue;  // want pointed sectors, u before v
    const RationalCone k1 = make(g1), k2 = make(g2);
    const auto res = interiors_disjoint(k1, k2);
    // Open arcs shorter than a half turn meet iff one starts strictly inside
    // the other or both start on the same ray.
    auto inside = [&](const std::vector<oracle::Vec>& s, const oracle::Vec& d) {
      return oracle::in_open_sector(s[0], s[1], {oracle::Q(d[0]), oracle::Q(d[1])});
    };
    const bool same_start = cross(g1[0], g2[0]) == 0 && oracle::dot(g1[0], g2[0]) > 0;
    const bool exact = inside(g1, g2[0]) || inside(g2, g1[0]) || same_start;
    CHECK(exact == !res.disjoint);
    if (!res.disjoint) {
      CHECK(inside(g1, support::to_oracle(primitive_on_ray(*res.witness))));
      CHECK(inside(g2, support::to_oracle(primitive_on_ray(*res.witness))));
    }
    ++checked;
  }
}

TEST_CASE("fourier-motzkin") {
  const RatMatrix a{{1, 0}, {0, 1}, {-1, -1}};
  const auto x = fourier_motzkin(a, qv({1, 1, -3}));
  REQUIRE(x);
  const RatVector ax = a * *x;
  CHECK(ax[0] >= 1);
  CHECK(ax[1] >= 1);
  CHECK(ax[2] >= -3);
  CHECK_FALSE(fourier_motzkin(a, qv({1, 1, -1})));
  CHECK_FALSE(fourier_motzkin(RatMatrix{{1}, {-1}}, qv({1, 0})));
  CHECK(fourier_motzkin(RatMatrix{{0, 0}}, qv({0})));
  CHECK_FALSE(fourier_motzkin(RatMatrix{{0, 0}}, qv({1})));

  std::mt19937_64 rng(59);
  std::uniform_int_distribution<int> c(-5, 5);
  for (int t = 0; t < 300; ++t) {
    RatMatrix m(6, 3);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = c(rng);
    const RatVector x0 = qv({c(rng), c(rng), c(rng)});
    RatVector b = m * x0;
    for (auto& e : b) e -= Rational(static_cast<int>(rng() % 3));
    const auto sol = fourier_motzkin(m, b);
    REQUIRE(sol);
    const RatVector ms = m * *sol;
    for (std::size_t i = 0; i < 6; ++i) CHECK(ms[i] >= b[i]);
    // f.x >= 1 together with -f.x >= 0 never holds.
    RatMatrix m2(2, 3);
    for (std::size_t j = 0; j < 3; ++j) {
      m2(0, j) = m(0, j);
      m2(1, j) = -m(0, j);
    }
    CHECK_FALSE(fourier_motzkin(m2, qv({1, 0})));
  }
}

TEST_CASE("fundamental domain fixtures") {
  const auto h = fixtures::hyperelliptic();
  const auto rh = fundamental_domain_check(h.delta, h.group, h.samples);
  CHECK(rh.passed());
  CHECK(rh.samples_covered == rh.samples_total);

  const auto tc = fixtures::two_chamber();
  const auto rt = fundamental_domain_check(tc.delta, tc.group, tc.samples);
  CHECK(rt.passed());
  // y < 0 lands in D itself, y > 0 needs the reflection.
  for (std::size_t i = 0; i < tc.samples.size(); ++i) {
    REQUIRE(rt.covering_element[i]);
    if (tc.samples[i][1] < 0) CHECK(*rt.covering_element[i] == 0);
    if (tc.samples[i][1] > 0) CHECK(*rt.covering_element[i] == 1);
  }

  const auto ov = fixtures::deliberate_overlap();
  const auto ro = fundamental_domain_check(ov.delta, ov.group, ov.samples);
  CHECK(ro.coverage_ok());
  REQUIRE(ro.overlap_witnesses.size() == 1);
  const auto& w = ro.overlap_witnesses.front();
  CHECK(w.first == 0);
  CHECK(w.second == 1);
  CHECK(interior_contains(ov.delta.transformed(ov.group[w.first]), w.point).inside);
  CHECK(interior_contains(ov.delta.transformed(ov.group[w.second]), w.point).inside);
}

TEST_CASE("uncovered samples are reported") {
  const RationalCone quad(2, std::vector<IntVector>{{1, 0}, {0, 1}});
  const std::vector<RatMatrix> id{to_rational(IntMatrix::identity(2))};
  const auto r = fundamental_domain_check(quad, id, {qv({1, 1}), qv({-1, 2}), qv({3, 0})});
  CHECK(r.samples_covered == 2);
  REQUIRE(r.uncovered_witnesses.size() == 1);
  CHECK(r.uncovered_witnesses[0] == qv({-1, 2}));
  CHECK_FALSE(r.covering_element[1]);
  CHECK_FALSE(r.passed());
}

TEST_CASE("maps acting trivially on the span are not overlaps") {
  const RationalCone flat(3, std::vector<IntVector>{{1, 0, 0}, {0, 1, 0}});
  const std::vector<RatMatrix> group{to_rational(IntMatrix::identity(3)),
                                     to_rational(IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}})};
  const auto r = fundamental_domain_check(flat, group, {qv({1, 2, 0})});
  CHECK(r.passed());
  CHECK(r.pairs_skipped == 1);
  CHECK(r.pairs_checked == 0);
  CHECK_THROWS_AS(fundamental_domain_check(flat, {to_rational(IntMatrix{{1, 0, 0}, {0, 0, 0}, {0, 0, 1}})}, {}),
                  Error);
}

TEST_CASE("semidirect check") {
  const SemidirectReport a = semidirect_check(fixtures::two_chamber_lattice(), {fixtures::two_chamber_root()},
                                              {IntMatrix::identity(2)}, {2, -1});
  CHECK(a.passed());
  CHECK(a.words_checked == 31);  // 1 + 2 + 4 + 8 + 16 words over two letters
  const SemidirectReport b = semidirect_check(fixtures::dihedral_lattice(), fixtures::dihedral_roots(),
                                              {fixtures::dihedral_swap()}, {4, 3});
  CHECK(b.passed());
  CHECK(b.words_checked == 121);  // three letters

  // Without the second root, swap r1 swap is a reflection the walk cannot undo.
  const SemidirectReport c = semidirect_check(fixtures::dihedral_lattice(), {fixtures::dihedral_roots()[0]},
                                              {fixtures::dihedral_swap()}, {4, 3}, 3);
  CHECK_FALSE(c.passed());
}

}  // TEST_SUITE
