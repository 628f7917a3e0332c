#include <doctest.h>

#include "rds/errors.hpp"
#include "rds/graph.hpp"
#include "rds/recurrence.hpp"

using namespace rds;

TEST_CASE("cycle and path constructors") {
  const GraphSpec c3 = make_cycle(3);
  CHECK(c3.order == 3);
  CHECK(c3.edges.size() == 3);
  CHECK(c3.adjacency[1] == std::vector<int>{2, 3});
  CHECK(c3.adjacency[3] == std::vector<int>{1, 2});

  const GraphSpec p1 = make_path(1);
  CHECK(p1.order == 1);
  CHECK(p1.edges.empty());

  const GraphSpec p4 = make_path(4);
  CHECK(p4.edges.size() == 3);
  CHECK(p4.adjacency[1] == std::vector<int>{2});
  CHECK(p4.adjacency[2] == std::vector<int>{1, 3});

  CHECK_THROWS_AS(make_cycle(2), InvalidOrder);
  CHECK_THROWS_AS(make_path(0), InvalidOrder);
}

TEST_CASE("general graph validation") {
  CHECK_THROWS_AS(make_graph(0, {}), InvalidOrder);
  CHECK_THROWS_AS(make_graph(3, {{1, 1}}), InvalidVertex);
  CHECK_THROWS_AS(make_graph(3, {{1, 4}}), InvalidVertex);
  CHECK_THROWS_AS(make_graph(3, {{1, 2}, {2, 1}}), InvalidVertex);
  const GraphSpec g = make_graph(4, {{2, 1}, {3, 4}});
  CHECK(g.edges == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});
}

TEST_CASE("restrained domination predicate") {
  const GraphSpec c4 = make_cycle(4);
  CHECK(is_restrained_dominating(c4, {1, 2}));
  CHECK(is_restrained_dominating(c4, {1, 2, 3, 4}));
  // {1,3} dominates C_4 but leaves 2 and 4 with no neighbour outside
  CHECK_FALSE(is_restrained_dominating(c4, {1, 3}));
  CHECK_FALSE(is_restrained_dominating(c4, {}));
  CHECK_FALSE(is_restrained_dominating(c4, {1}));

  const GraphSpec c3 = make_cycle(3);
  CHECK(is_restrained_dominating(c3, {1}));
  CHECK(is_restrained_dominating(c3, {1, 2, 3}));
  CHECK_FALSE(is_restrained_dominating(c3, {1, 2}));

  CHECK_THROWS_AS(is_restrained_dominating(c4, {0}), InvalidVertex);
  CHECK_THROWS_AS(is_restrained_dominating(c4, {1, 5}), InvalidVertex);
  CHECK_THROWS_AS(is_restrained_dominating(c4, {2, 1}), InvalidVertex);
}

TEST_CASE("brute-force enumeration") {
  const GraphSpec c4 = make_cycle(4);
  const std::vector<VertexSet> sets = enumerate_rds(c4, 2);
  CHECK(sets == std::vector<VertexSet>{{1, 2}, {1, 4}, {2, 3}, {3, 4}});
  CHECK(enumerate_rds(c4, 1).empty());
  CHECK(enumerate_rds(c4, 0).empty());
  CHECK(enumerate_rds(c4, 4) == std::vector<VertexSet>{{1, 2, 3, 4}});
  CHECK(enumerate_rds(c4, 5).empty());

  CHECK(count_rds(make_cycle(9), 5) == 18);
  CHECK(count_rds(make_cycle(9), 4) == 0);

  const CoefficientRow row6 = count_rds_by_cardinality(make_cycle(6));
  CHECK(row6.at(2) == 3);
  CHECK(row6.at(4) == 6);
  CHECK(row6.at(6) == 1);
  CHECK(row6.at(3) == 0);
  CHECK(row6.sum() == 10);
}

TEST_CASE("enumeration limits") {
  CHECK_THROWS_AS(count_rds(make_cycle(12), 4, 10), OrderTooLarge);
  CHECK_THROWS_AS(enumerate_rds(make_cycle(64), 2, 100), OrderTooLarge);
  CHECK(count_rds(make_cycle(12), 4, 12) == 3);
}

TEST_CASE("complement components") {
  const GraphSpec c6 = make_cycle(6);
  CHECK(complement_component_sizes(c6, {1, 4}) == std::vector<int>{2, 2});
  CHECK(complement_component_sizes(c6, {1, 2, 3, 4, 5, 6}).empty());
  CHECK(complement_component_sizes(make_cycle(5), {}) == std::vector<int>{5});
  CHECK(complement_component_sizes(make_path(5), {3}) ==
        std::vector<int>{2, 2});
}

TEST_CASE("oracle rows match the recurrence rows") {
  for (int n = 3; n <= 12; ++n) {
    const CoefficientRow oracle = count_rds_by_cardinality(make_cycle(n));
    CHECK(oracle.counts == rdp_row(n).counts);
  }
}
