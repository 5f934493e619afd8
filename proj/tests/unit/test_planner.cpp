#include <algorithm>

#include "doctest.h"
#include "generators.hpp"
#include "reeb/errors.hpp"
#include "reeb/planner.hpp"

using namespace reeb;
using testing::target_from;

namespace {

const GeneratingManifold kPoint = GeneratingManifold::point();

TargetSequence with_torsion(int n, int degree, long order) {
  std::vector<AbelianGroup> g(static_cast<std::size_t>(n) + 1);
  g[static_cast<std::size_t>(n)] = AbelianGroup::free(3);
  g[static_cast<std::size_t>(degree)] = direct_sum(g[static_cast<std::size_t>(degree)], AbelianGroup(0, {Integer(order)}));
  return TargetSequence(GradedGroup(std::move(g)));
}

// Structure forced on any plan realizing t: rank G_n operations, the
// largest of dimension n - j0, exactly rank G_{j0} of them.
void check_operation_structure(const Plan& plan, const TargetSequence& t) {
  const auto j0 = effective_minimum(t);
  REQUIRE(j0.has_value());
  CHECK(Integer(plan.operations.size()) == t[t.n()].rank());
  int max_dim = 0;
  for (const auto& m : plan.operations) max_dim = std::max(max_dim, m.dim);
  CHECK(max_dim == t.n() - *j0);
  const auto top_count = std::count_if(plan.operations.begin(), plan.operations.end(),
                                       [&](const GeneratingManifold& m) { return m.dim == max_dim; });
  CHECK(Integer(top_count) == t[*j0].rank());
}

}  // namespace

TEST_SUITE("planner") {
  TEST_CASE("effective_minimum examples") {
    CHECK(effective_minimum(TargetSequence::from_ranks({0, 0, 2, 5})) == 2);
    CHECK_FALSE(effective_minimum(TargetSequence::from_ranks({0, 0, 0})).has_value());
    CHECK(effective_minimum(TargetSequence::from_ranks({0, 1, 0, 1})) == 1);
  }

  TEST_CASE("check_necessary examples") {
    const auto torsion_low_top = with_torsion(3, 2, 2);
    const auto c = check_necessary(torsion_low_top);
    CHECK_FALSE(c.pass);
    CHECK(c.condition == "free_top_degrees");
    CHECK(c.degrees == std::vector<int>{2});

    const auto d = check_necessary(TargetSequence::from_ranks({0, 2, 1}));
    CHECK_FALSE(d.pass);
    CHECK(d.condition == "top_dominates_minimum");
    CHECK(d.degrees == std::vector<int>{1, 2});

    CHECK(check_necessary(TargetSequence::from_ranks({0, 1, 2})).pass);
  }

  TEST_CASE("check_necessary remaining conditions") {
    CHECK(check_necessary(TargetSequence::from_ranks({1, 1, 2})).condition == "trivial_degree_zero");
    CHECK(check_necessary(TargetSequence::from_ranks({0, 1, 0})).condition == "top_dominates_minimum");
    CHECK(check_necessary(with_torsion(4, 4, 3)).condition == "free_top_degrees");
    // Torsion at the effective minimum, away from the top degrees.
    const auto e = check_necessary(with_torsion(4, 1, 2));
    CHECK(e.condition == "free_effective_minimum");
    CHECK(e.degrees == std::vector<int>{1});
    CHECK(check_necessary(TargetSequence::from_ranks({0, 0, 0})).pass);
    // Torsion strictly between j0 and n - 1 is not excluded by the necessary conditions.
    std::vector<AbelianGroup> g{AbelianGroup{}, AbelianGroup::free(1), AbelianGroup(0, {Integer(2)}),
                                AbelianGroup{}, AbelianGroup::free(2)};
    CHECK(check_necessary(TargetSequence(GradedGroup(g))).pass);
  }

  TEST_CASE("strict increase examples") {
    CHECK(check_strict_increase(TargetSequence::from_ranks({0, 1, 2, 3})));
    CHECK_FALSE(check_strict_increase(TargetSequence::from_ranks({0, 1, 1, 3})));
    CHECK(check_strict_increase(TargetSequence::from_ranks({0, 0, 0, 0})));
    CHECK_FALSE(check_strict_increase(TargetSequence::from_ranks({1, 2, 3})));
    CHECK_THROWS_AS(check_strict_increase(with_torsion(3, 1, 2)), UnsupportedTorsion);
  }

  TEST_CASE("mirrored increase examples") {
    CHECK(check_mirrored_increase(TargetSequence::from_ranks({0, 3, 2, 4, 7})));
    CHECK_FALSE(check_mirrored_increase(TargetSequence::from_ranks({0, 5, 1, 2, 3})));
    CHECK(check_mirrored_increase(TargetSequence::from_ranks({0, 1, 2, 3})));
    // Equality in the mirrored inequality is rejected: drop 3 - 1 = 2, rise 7 - 5 = 2.
    CHECK_FALSE(check_mirrored_increase(TargetSequence::from_ranks({0, 3, 1, 5, 7})));
    CHECK(check_mirrored_increase(TargetSequence::from_ranks({0, 3, 1, 4, 7})));
    CHECK_THROWS_AS(check_mirrored_increase(with_torsion(3, 1, 2)), UnsupportedTorsion);
  }

  TEST_CASE("top dominance examples") {
    CHECK(check_top_dominance(TargetSequence::from_ranks({0, 1, 1, 3})));
    CHECK_FALSE(check_top_dominance(TargetSequence::from_ranks({0, 2, 3, 4})));
    CHECK(check_top_dominance(TargetSequence::from_ranks({0, 0, 0, 5})));
    CHECK_THROWS_AS(check_top_dominance(with_torsion(3, 1, 2)), UnsupportedTorsion);
  }

  TEST_CASE("spheres and points planner examples") {
    const auto t = TargetSequence::from_ranks({0, 1, 1, 3});
    const Plan p = plan_spheres_and_points(t);
    CHECK(p.operations == std::vector{GeneratingManifold::sphere(2), GeneratingManifold::sphere(1), kPoint});
    CHECK(verify_plan(p, t));

    const Plan points = plan_spheres_and_points(TargetSequence::from_ranks({0, 0, 0, 4}));
    CHECK(points.operations == std::vector<GeneratingManifold>(4, kPoint));
    CHECK_THROWS_AS(plan_spheres_and_points(TargetSequence::from_ranks({0, 2, 3, 4})), StrategyInfeasible);
  }

  TEST_CASE("peeling examples") {
    auto r = plan_peel(TargetSequence::from_ranks({0, 1, 2, 3}));
    REQUIRE(r.ok());
    CHECK(r.plan->operations == std::vector{GeneratingManifold::connected_sum(2, {{1, 1}}), kPoint, kPoint});

    const auto worked = TargetSequence::from_ranks({0, 3, 2, 4, 7});
    r = plan_peel(worked);
    REQUIRE(r.ok());
    const auto s3 = GeneratingManifold::sphere(3), s1 = GeneratingManifold::sphere(1);
    CHECK(r.plan->operations ==
          std::vector{GeneratingManifold::connected_sum(3, {{1, 2}, {1, 2}}), s3, s3, s1, s1, kPoint, kPoint});
    CHECK(verify_plan(*r.plan, worked));

    r = plan_peel(TargetSequence::from_ranks({0, 1, 2}));
    REQUIRE(r.ok());
    CHECK(r.plan->operations == std::vector{s1, kPoint});
  }

  TEST_CASE("peeling leaves an odd midpoint unit to the next round") {
    // n = 4, j0 = 2: midpoint 3 with rank 3 -> one S^1xS^1 copy, one unit left.
    const auto t = TargetSequence::from_ranks({0, 0, 1, 3, 5});
    const auto r = plan_peel(t);
    REQUIRE(r.ok());
    CHECK(r.plan->operations.front() == GeneratingManifold::connected_sum(2, {{1, 1}}));
    CHECK(verify_plan(*r.plan, t));
  }

  TEST_CASE("peeling failure certificates") {
    const auto r = plan_peel(TargetSequence::from_ranks({0, 2, 1}));
    REQUIRE_FALSE(r.ok());
    CHECK(r.failure->degree == 2);
    CHECK(r.failure->round == 0);

    CHECK_THROWS_AS(plan_peel(with_torsion(3, 1, 2)), UnsupportedTorsion);
    CHECK_FALSE(plan_peel(TargetSequence::from_ranks({1, 1, 2})).ok());
  }

  TEST_CASE("verify_plan examples") {
    const auto t = TargetSequence::from_ranks({0, 1, 2, 3});
    CHECK(verify_plan(*plan_peel(t).plan, t));
    CHECK(verify_plan(Plan{3, BallBase{}, {}}, TargetSequence::from_ranks({0, 0, 0, 0})));
    const Plan one_point{1, BallBase{}, {kPoint}};
    CHECK(verify_plan(one_point, TargetSequence::from_ranks({0, 1})));
    CHECK_FALSE(verify_plan(one_point, TargetSequence::from_ranks({0, 2})));
    CHECK_THROWS_AS(verify_plan(one_point, TargetSequence::from_ranks({0, 0, 1})), InputError);
  }

  TEST_CASE("strict increase implies peeling success with forced structure") {
    testing::Rng rng(31);
    for (int trial = 0; trial < 300; ++trial) {
      const auto t = target_from(testing::strictly_increasing_ranks(rng));
      REQUIRE(check_strict_increase(t));
      CHECK(check_mirrored_increase(t));
      CHECK(check_necessary(t).pass);
      const auto r = plan_peel(t);
      REQUIRE(r.ok());
      CHECK(verify_plan(*r.plan, t));
      check_operation_structure(*r.plan, t);
      const auto non_spheres = std::count_if(r.plan->operations.begin(), r.plan->operations.end(),
                                             [](const GeneratingManifold& m) { return m.kind == ManifoldKind::ConnectedSum; });
      CHECK(non_spheres <= t.n());
    }
  }

  TEST_CASE("mirrored increase implies peeling success") {
    testing::Rng rng(37);
    for (int trial = 0; trial < 300; ++trial) {
      const auto t = target_from(testing::mirrored_increase_candidate(rng));
      REQUIRE(check_mirrored_increase(t));
      CHECK(check_necessary(t).pass);
      const auto r = plan_peel(t);
      REQUIRE(r.ok());
      CHECK(verify_plan(*r.plan, t));
      check_operation_structure(*r.plan, t);
    }
  }

  TEST_CASE("spheres and points on random dominated targets") {
    testing::Rng rng(41);
    for (int trial = 0; trial < 200; ++trial) {
      const auto t = target_from(testing::top_dominant_ranks(rng));
      REQUIRE(check_top_dominance(t));
      const Plan p = plan_spheres_and_points(t);
      CHECK(verify_plan(p, t));
      CHECK(Integer(p.operations.size()) == t[t.n()].rank());
      for (const auto& m : p.operations) CHECK(m.kind != ManifoldKind::ConnectedSum);
    }
  }

  TEST_CASE("assess verdicts") {
    auto r = assess(TargetSequence::from_ranks({0, 2, 1}));
    CHECK(r.verdict == Verdict::NecessaryViolated);
    CHECK_FALSE(r.checks.necessary);
    CHECK_FALSE(r.plan.has_value());

    r = assess(TargetSequence::from_ranks({0, 1, 1, 3}));
    CHECK(r.verdict == Verdict::Realized);
    CHECK(r.certificate.condition == "prop3");

    r = assess(TargetSequence::from_ranks({0, 3, 2, 4, 7}));
    CHECK(r.verdict == Verdict::Realized);
    CHECK(r.certificate.condition == "peel");
    CHECK(r.plan->operations.size() == 7);
    CHECK(r.checks.mirrored_increase);
    CHECK_FALSE(r.checks.strict_increase);

    r = assess(TargetSequence::from_ranks({0, 0, 0}));
    CHECK(r.verdict == Verdict::Realized);
    CHECK(r.plan->operations.empty());
    CHECK(r.certificate.condition == "empty");

    std::vector<AbelianGroup> g{AbelianGroup{}, AbelianGroup::free(1), AbelianGroup(0, {Integer(2)}),
                                AbelianGroup{}, AbelianGroup::free(2)};
    r = assess(TargetSequence(GradedGroup(g)));
    CHECK(r.verdict == Verdict::UnsupportedTorsion);
    CHECK(r.certificate.degrees == std::vector<int>{2});

    // Necessary violation wins over torsion.
    r = assess(with_torsion(3, 3, 2));
    CHECK(r.verdict == Verdict::NecessaryViolated);
  }

  TEST_CASE("assess never reports a realized plan that does not replay") {
    testing::Rng rng(43);
    int realized = 0, failed = 0;
    for (int trial = 0; trial < 500; ++trial) {
      const int n = testing::uniform(rng, 1, 6);
      std::vector<long> ranks(static_cast<std::size_t>(n) + 1, 0);
      for (int j = 1; j <= n; ++j) ranks[static_cast<std::size_t>(j)] = testing::uniform(rng, 0, 5);
      const auto t = target_from(ranks);
      const auto r = assess(t);
      if (r.verdict == Verdict::Realized) {
        ++realized;
        CHECK(verify_plan(*r.plan, t));
      } else {
        ++failed;
        CHECK_FALSE(r.plan.has_value());
      }
      if (r.checks.strict_increase) CHECK(r.checks.mirrored_increase);
      if (r.checks.mirrored_increase) CHECK(r.checks.necessary);
    }
    CHECK(realized > 0);
    CHECK(failed > 0);
  }
}
