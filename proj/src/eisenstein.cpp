#include "conelab/eisenstein.hpp"

#include "conelab/roots.hpp"

#include <array>
#include <limits>
#include <map>
#include <stdexcept>

namespace conelab {

namespace {

// Machine-word twin of Eisenstein for the ball scans.
struct Small {
  long long x = 0;
  long long y = 0;
};

Small mul(Small a, Small b) { return {a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x - a.y * b.y}; }
Small sub(Small a, Small b) { return {a.x - b.x, a.y - b.y}; }
long long norm(Small a) { return a.x * a.x - a.x * a.y + a.y * a.y; }

Eisenstein widen(Small a) { return {Int(a.x), Int(a.y)}; }

using SmallMatrix = std::array<long long, 16>;

SmallMatrix small_action(const IntMatrix& m) {
  SmallMatrix out{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out[i * 4 + j] = static_cast<long long>(m(i, j));
  return out;
}

bool fits(const Int& v) {
  return v >= Int(std::numeric_limits<int>::min()) && v <= Int(std::numeric_limits<int>::max());
}

void require_pd(const HermitianForm& form) {
  if (!herm_invariants(form).pd) {
    throw Error(ErrorKind::NotPositiveDefinite, "form (" + to_string(form.a) + ", " + to_string(form.d) + ", " +
                                                    to_string(form.h.x) + ", " + to_string(form.h.y) +
                                                    ") is not positive definite");
  }
}

struct BallEntry {
  UnimodularTransform transform;
  SmallMatrix action;
};

std::vector<BallEntry> ball_with_actions(int radius) {
  if (radius < 0) throw Error(ErrorKind::InvalidInput, "ball radius must be nonnegative");
  std::vector<Small> box;
  for (long long x = -radius; x <= radius; ++x)
    for (long long y = -radius; y <= radius; ++y) box.push_back({x, y});

  std::vector<BallEntry> out;
  std::map<SmallMatrix, std::size_t> seen;
  auto consider = [&](const UnimodularTransform& g) {
    const SmallMatrix a = small_action(action_matrix(g));
    if (seen.emplace(a, out.size()).second) out.push_back({g, a});
  };
  consider(UnimodularTransform::identity());
  for (const Small& p : box)
    for (const Small& r : box) {
      if (p.x == 0 && p.y == 0 && r.x == 0 && r.y == 0) continue;
      for (const Small& q : box)
        for (const Small& s : box) {
          if (norm(sub(mul(p, s), mul(q, r))) != 1) continue;
          consider(UnimodularTransform::verified(widen(p), widen(q), widen(r), widen(s)));
        }
    }
  return out;
}

}  // namespace

Eisenstein Eisenstein::from(const CyclotomicElement& e) {
  if (e.order() != 3) throw Error(ErrorKind::OrderMismatch, "Eisenstein integers need order 3");
  return {e[0], e[1]};
}

std::vector<Eisenstein> eisenstein_units() {
  return {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {-1, -1}, {1, 1}};
}

Eisenstein nearest_eisenstein(const Rational& t0, const Rational& t1) {
  const Int f0 = floor(t0);
  const Int f1 = floor(t1);
  std::optional<Eisenstein> best;
  Rational best_norm;
  for (Int q0 = f0 - 1; q0 <= f0 + 1; ++q0)
    for (Int q1 = f1 - 1; q1 <= f1 + 1; ++q1) {
      const Rational u = t0 - q0;
      const Rational w = t1 - q1;
      const Rational n = u * u - u * w + w * w;
      if (!best || n < best_norm) {
        best = Eisenstein{q0, q1};
        best_norm = n;
      }
    }
  return *best;
}

HermitianForm HermitianForm::from_coords(const IntVector& c) {
  if (c.size() != 4) throw Error(ErrorKind::DimensionMismatch, "a Hermitian form has four coordinates");
  return {c[0], c[1], {c[2], c[3]}};
}

Int HermitianForm::value(const Eisenstein& v1, const Eisenstein& v2) const {
  return a * v1.norm() + d * v2.norm() + (v1.conj() * h * v2).trace();
}

HermInvariants herm_invariants(const HermitianForm& form) {
  HermInvariants inv;
  inv.det = form.a * form.d - form.h.norm();
  inv.pd = form.a > 0 && inv.det > 0;
  inv.psd = form.a >= 0 && form.d >= 0 && inv.det >= 0;
  return inv;
}

UnimodularTransform UnimodularTransform::verified(Eisenstein p, Eisenstein q, Eisenstein r, Eisenstein s) {
  const Eisenstein det = p * s - q * r;
  if (!det.is_unit()) {
    throw Error(ErrorKind::NotUnimodular, "determinant " + to_string(det.x) + " + " + to_string(det.y) +
                                              " zeta has norm " + to_string(det.norm()));
  }
  return UnimodularTransform(std::move(p), std::move(q), std::move(r), std::move(s));
}

UnimodularTransform UnimodularTransform::identity() { return UnimodularTransform({1, 0}, {0, 0}, {0, 0}, {1, 0}); }
UnimodularTransform UnimodularTransform::swap() { return UnimodularTransform({0, 0}, {1, 0}, {1, 0}, {0, 0}); }
UnimodularTransform UnimodularTransform::translation(const Eisenstein& t) {
  return UnimodularTransform({1, 0}, t, {0, 0}, {1, 0});
}

UnimodularTransform UnimodularTransform::inverse() const {
  const Eisenstein u = det().conj();  // inverse of a unit
  return UnimodularTransform(u * s_, -(u * q_), -(u * r_), u * p_);
}

UnimodularTransform operator*(const UnimodularTransform& a, const UnimodularTransform& b) {
  return UnimodularTransform(a.p_ * b.p_ + a.q_ * b.r_, a.p_ * b.q_ + a.q_ * b.s_, a.r_ * b.p_ + a.s_ * b.r_,
                             a.r_ * b.q_ + a.s_ * b.s_);
}

HermitianForm gl2_action(const UnimodularTransform& g, const HermitianForm& form) {
  if (!g.det().is_unit()) throw Error(ErrorKind::NotUnimodular, "transform determinant is not a unit");
  const Eisenstein& p = g.p();
  const Eisenstein& q = g.q();
  const Eisenstein& r = g.r();
  const Eisenstein& s = g.s();
  HermitianForm out;
  out.a = form.value(p, r);
  out.d = form.value(q, s);
  out.h = form.a * (p.conj() * q) + form.d * (r.conj() * s) + p.conj() * form.h * s + r.conj() * form.h.conj() * q;
  return out;
}

IntMatrix action_matrix(const UnimodularTransform& g) {
  IntMatrix m(4, 4);
  for (std::size_t j = 0; j < 4; ++j) {
    IntVector e(4, Int(0));
    e[j] = 1;
    const IntVector img = gl2_action(g, HermitianForm::from_coords(e)).coords();
    for (std::size_t i = 0; i < 4; ++i) m(i, j) = img[i];
  }
  return m;
}

Reduction basic_reduce(const HermitianForm& form) {
  require_pd(form);
  Reduction red{form, UnimodularTransform::identity()};
  while (true) {
    const Eisenstein t = nearest_eisenstein(Rational(-red.form.h.x, red.form.a), Rational(-red.form.h.y, red.form.a));
    if (!t.is_zero()) {
      const auto step = UnimodularTransform::translation(t);
      red.form = gl2_action(step, red.form);
      red.transform = red.transform * step;
    }
    if (red.form.d >= red.form.a) return red;
    const auto step = UnimodularTransform::swap();
    red.form = gl2_action(step, red.form);
    red.transform = red.transform * step;
  }
}

Reduction reduce(const HermitianForm& form) {
  const Reduction basic = basic_reduce(form);
  const HermitianForm& b = basic.form;

  // After basic reduction a is the minimum of H and every vector of a
  // lexicographically minimal basis has value at most d.
  RatMatrix q(4, 4);
  auto value_of = [&](const IntVector& v) { return b.value({v[0], v[1]}, {v[2], v[3]}); };
  std::array<Int, 4> diag;
  for (std::size_t i = 0; i < 4; ++i) {
    IntVector e(4, Int(0));
    e[i] = 1;
    diag[i] = value_of(e);
    q(i, i) = diag[i];
  }
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      IntVector e(4, Int(0));
      e[i] = 1;
      e[j] = 1;
      q(i, j) = q(j, i) = Rational(value_of(e) - diag[i] - diag[j], 2);
    }

  std::vector<std::pair<Int, IntVector>> candidates;
  short_vectors(q, Rational(b.d), [&](const IntVector& v) {
    if (std::any_of(v.begin(), v.end(), [](const Int& x) { return x != 0; })) candidates.emplace_back(value_of(v), v);
    return true;
  });

  HermitianForm best = b;
  UnimodularTransform best_g = UnimodularTransform::identity();
  for (const auto& [h1, v1] : candidates) {
    if (h1 != b.a) continue;
    const Eisenstein p{v1[0], v1[1]};
    const Eisenstein r{v1[2], v1[3]};
    for (const auto& [h2, v2] : candidates) {
      if (h2 > best.d) continue;
      const Eisenstein qq{v2[0], v2[1]};
      const Eisenstein s{v2[2], v2[3]};
      if (!(p * s - qq * r).is_unit()) continue;
      const auto g = UnimodularTransform::verified(p, qq, r, s);
      const HermitianForm img = gl2_action(g, b);
      if (img < best) {
        best = img;
        best_g = g;
      }
    }
  }

  if (best == form) return {form, UnimodularTransform::identity()};
  Reduction out{best, basic.transform * best_g};
  if (!(gl2_action(out.transform, form) == best)) throw std::logic_error("reduction transform does not reproduce the form");
  return out;
}

std::vector<HermitianForm> eisenstein_cone_generators() {
  return {{0, 1, {0, 0}}, {1, 1, {0, 0}}, {2, 2, {1, 1}}, {2, 2, {1, -1}}};
}

RationalCone eisenstein_cone() {
  std::vector<IntVector> gens;
  for (const auto& f : eisenstein_cone_generators()) gens.push_back(f.coords());
  return RationalCone(4, gens);
}

std::vector<UnimodularTransform> unimodular_ball(int radius) {
  std::vector<UnimodularTransform> out;
  for (auto& e : ball_with_actions(radius)) out.push_back(std::move(e.transform));
  return out;
}

std::int64_t SampleRng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw Error(ErrorKind::InvalidInput, "empty sampling range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return lo + static_cast<std::int64_t>(draw % span);
}

UnimodularTransform random_unimodular(SampleRng& rng, int box) {
  if (box < 1) throw Error(ErrorKind::InvalidInput, "sampling box must be at least 1");
  while (true) {
    std::array<Small, 4> e;
    for (auto& c : e) c = {rng.uniform(-box, box), rng.uniform(-box, box)};
    if (norm(sub(mul(e[0], e[3]), mul(e[1], e[2]))) != 1) continue;
    return UnimodularTransform::verified(widen(e[0]), widen(e[1]), widen(e[2]), widen(e[3]));
  }
}

HermitianForm random_pd_form(SampleRng& rng, int box) {
  HermitianForm base;
  do {
    base.a = rng.uniform(1, 4);
    base.d = rng.uniform(1, 4);
    base.h = {rng.uniform(-2, 2), rng.uniform(-2, 2)};
  } while (!herm_invariants(base).pd);
  return gl2_action(random_unimodular(rng, box), base);
}

std::vector<HermitianForm> domain_samples(std::size_t sample_count, std::uint64_t seed) {
  std::vector<HermitianForm> out;
  if (sample_count == 0) return out;
  out.push_back({1, 1, {0, 0}});
  SampleRng rng(seed);
  while (out.size() < sample_count) out.push_back(random_pd_form(rng));
  return out;
}

DomainReport verify_eisenstein_domain(std::size_t sample_count, std::uint64_t seed, int ball_radius) {
  if (sample_count == 0) throw Error(ErrorKind::InvalidInput, "sample count must be positive");
  const RationalCone delta = eisenstein_cone();
  const std::vector<BallEntry> ball = ball_with_actions(ball_radius);
  std::vector<std::array<long long, 4>> facets;
  for (const auto& f : delta.facets())
    facets.push_back({static_cast<long long>(f[0]), static_cast<long long>(f[1]), static_cast<long long>(f[2]),
                      static_cast<long long>(f[3])});

  DomainReport report;
  report.samples_total = sample_count;
  report.ball_classes = ball.size();
  for (const auto& sample : domain_samples(sample_count, seed)) {
    const HermitianForm red = reduce(sample).form;
    const IntVector x = red.coords();
    if (cone_contains(delta, x).member) ++report.reduced_in_cone;

    bool covered = false;
    if (std::all_of(x.begin(), x.end(), fits)) {
      std::array<long long, 4> xs;
      for (std::size_t i = 0; i < 4; ++i) xs[i] = static_cast<long long>(x[i]);
      for (const auto& entry : ball) {
        std::array<long long, 4> y{};
        for (std::size_t i = 0; i < 4; ++i)
          for (std::size_t j = 0; j < 4; ++j) y[i] += entry.action[i * 4 + j] * xs[j];
        bool inside = true;
        for (const auto& f : facets)
          if (f[0] * y[0] + f[1] * y[1] + f[2] * y[2] + f[3] * y[3] < 0) {
            inside = false;
            break;
          }
        if (inside && cone_contains(delta, action_matrix(entry.transform) * x).member) {
          covered = true;
          break;
        }
      }
    } else {
      for (const auto& entry : ball)
        if (cone_contains(delta, action_matrix(entry.transform) * x).member) {
          covered = true;
          break;
        }
    }
    if (covered)
      ++report.samples_covered;
    else
      report.uncovered_witnesses.push_back(red);
  }

  // A single facet of D or of g D with the other cone on its far side settles
  // disjointness; everything else goes to the exact feasibility test.
  const auto& gens = delta.generators();
  for (std::size_t k = 1; k < ball.size(); ++k) {
    const IntMatrix a = action_matrix(ball[k].transform);
    const IntMatrix a_inv = action_matrix(ball[k].transform.inverse());
    auto separated_by = [&](const IntMatrix& map) {
      for (const auto& f : delta.facets()) {
        bool all_nonpositive = true;
        for (const auto& g : gens)
          if (dot(f, map * g) > 0) {
            all_nonpositive = false;
            break;
          }
        if (all_nonpositive) return true;
      }
      return false;
    };
    if (separated_by(a) || separated_by(a_inv)) {
      ++report.classes_separated;
      continue;
    }
    const auto res = interiors_disjoint(delta, delta.transformed(a));
    if (!res.disjoint) {
      IntVector point = primitive_on_ray(*res.witness);
      report.overlap_witnesses.push_back({ball[k].transform, std::move(point)});
    }
  }
  return report;
}

}  // namespace conelab
