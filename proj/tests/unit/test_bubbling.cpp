#include <algorithm>
#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "reeb/bubbling.hpp"
#include "reeb/errors.hpp"

using namespace reeb;

namespace {

const GeneratingManifold kPoint = GeneratingManifold::point();
const GeneratingManifold kTorus = GeneratingManifold::connected_sum(2, {{1, 1}});

GradedGroup ranks(std::initializer_list<long> r) { return GradedGroup::from_ranks(r); }

}  // namespace

TEST_SUITE("bubbling") {
  TEST_CASE("base models") {
    CHECK(special_generic_ball(2).homology == ranks({1, 0, 0}));
    CHECK(special_generic_ball(4).homology == ranks({1, 0, 0, 0, 0}));
    CHECK(special_generic_ball(1).homology == ranks({1, 0}));
    CHECK_THROWS_AS(special_generic_ball(0), InputError);

    CHECK(bouquet(3, 0).homology == special_generic_ball(3).homology);
    CHECK(bouquet(3, 2).homology == ranks({1, 0, 0, 2}));
    CHECK(bouquet(1, 1).homology == ranks({1, 1}));
    CHECK_THROWS_AS(bouquet(0, 1), InputError);
  }

  TEST_CASE("custom base needs a connected Reeb space") {
    CHECK_NOTHROW(custom_model(ranks({1, 3, 0})));
    CHECK_THROWS_AS(custom_model(ranks({0, 1})), InputError);
    CHECK_THROWS_AS(custom_model(GradedGroup({AbelianGroup(1, {Integer(2)}), AbelianGroup{}})), InputError);
    CHECK_THROWS_AS(custom_model(ranks({1})), InputError);
  }

  TEST_CASE("contribution examples") {
    CHECK(contribution(kPoint, 2) == ranks({0, 0, 1}));
    CHECK(contribution(GeneratingManifold::sphere(2), 3) == ranks({0, 1, 0, 1}));
    CHECK(contribution(kTorus, 3) == ranks({0, 1, 2, 1}));
    CHECK_THROWS_AS(contribution(GeneratingManifold::sphere(3), 3), DimensionError);
    CHECK_THROWS_AS(contribution(kTorus, 2), DimensionError);
  }

  TEST_CASE("apply_operation examples") {
    CHECK(apply_operation(special_generic_ball(2), kPoint).homology == ranks({1, 0, 1}));
    CHECK(apply_operation(special_generic_ball(3), GeneratingManifold::sphere(2)).homology == ranks({1, 1, 0, 1}));
    CHECK(apply_operation(bouquet(3, 1), kPoint).homology == ranks({1, 0, 0, 2}));
  }

  TEST_CASE("apply_plan and delta examples") {
    for (long l = 0; l <= 5; ++l) {
      Plan p{3, BallBase{}, std::vector<GeneratingManifold>(static_cast<std::size_t>(l), kPoint)};
      CHECK(apply_plan(p).homology == bouquet(3, l).homology);
    }
    const Plan p{3, BallBase{}, {kTorus, kPoint, kPoint}};
    CHECK(apply_plan(p).homology == ranks({1, 1, 2, 3}));
    CHECK(delta_of_plan(p) == ranks({0, 1, 2, 3}));

    const Plan empty{2, BouquetBase{Integer(4)}, {}};
    CHECK(apply_plan(empty) == bouquet(2, 4));
    CHECK(delta_of_plan(empty) == GradedGroup(2));
    CHECK(delta_of_plan(Plan{2, BallBase{}, {kPoint, kPoint}}) == ranks({0, 0, 2}));
  }

  TEST_CASE("custom base plans") {
    const GradedGroup h({AbelianGroup::free(1), AbelianGroup(0, {Integer(2)}), AbelianGroup{}});
    const Plan p{2, CustomBase{h}, {kPoint}};
    CHECK(apply_plan(p).homology == GradedGroup({AbelianGroup::free(1), AbelianGroup(0, {Integer(2)}),
                                                 AbelianGroup::free(1)}));
    CHECK_THROWS_AS(apply_plan(Plan{3, CustomBase{h}, {}}), InputError);
  }

  TEST_CASE("apply_plan reports the first failing operation") {
    const Plan p{3, BallBase{}, {kPoint, kTorus, GeneratingManifold::sphere(3), GeneratingManifold::sphere(4)}};
    try {
      (void)apply_plan(p);
      FAIL("expected PlanError");
    } catch (const PlanError& e) {
      CHECK(e.index() == 2);
    }
    Plan invalid{3, BallBase{}, {kPoint, GeneratingManifold{ManifoldKind::ConnectedSum, 2, {{1, 2}}}}};
    CHECK_THROWS_AS(delta_of_plan(invalid), PlanError);
  }

  TEST_CASE("engine invariants on random plans") {
    testing::Rng rng(23);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = testing::uniform(rng, 1, 8);
      Plan plan{n, BouquetBase{Integer(testing::uniform(rng, 0, 3))}, {}};
      const int ops = testing::uniform(rng, 0, 6);
      for (int k = 0; k < ops; ++k) {
        GeneratingManifold m = testing::random_manifold(rng, n - 1);
        plan.operations.push_back(m);
      }
      const GradedGroup delta = delta_of_plan(plan);
      const ReebModel base = make_base(n, plan.base);
      const ReebModel result = apply_plan(plan);

      CHECK(delta[n].rank() == ops);
      CHECK(delta.is_free());
      CHECK(result.homology == direct_sum(base.homology, delta));

      Plan shuffled = plan;
      std::shuffle(shuffled.operations.begin(), shuffled.operations.end(), rng);
      CHECK(delta_of_plan(shuffled) == delta);

      for (const auto& s : plan.operations) {
        const ReebModel after = apply_operation(base, s);
        for (int i = 0; i < n - s.dim; ++i) CHECK(after.homology[i] == base.homology[i]);
        CHECK(after.homology[n].rank() == base.homology[n].rank() + 1);
      }
    }
  }
}
