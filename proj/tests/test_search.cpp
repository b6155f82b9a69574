#include <doctest.h>

#include <algorithm>
#include <set>

#include "cws/search.hpp"
#include "cws/stabilizer.hpp"
#include "cws/verify.hpp"
#include "test_util.hpp"

using namespace cws;

TEST_CASE("family constructors and their preconditions") {
  const Graph ring = family(GraphFamily::ring, 5);
  CHECK(ring.edges() ==
        std::vector<std::pair<std::size_t, std::size_t>>{
            {0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});

  const Graph star3 = family(GraphFamily::star, 3);
  CHECK(star3.edges() ==
        std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 2}});

  const Graph prism = family(GraphFamily::double_ring, 6);
  CHECK(prism.degree(0) == 3);
  CHECK(prism.has_edge(0, 3));

  CHECK_THROWS_AS(family(GraphFamily::ring, 2), std::invalid_argument);
  CHECK_THROWS_AS(family(GraphFamily::double_ring, 7), std::invalid_argument);
  CHECK_THROWS_AS(family(GraphFamily::double_ring, 4), std::invalid_argument);
  CHECK_THROWS_AS(family(GraphFamily::star, 1), std::invalid_argument);
}

TEST_CASE("ring-5 exact search proves K = 6") {
  const SearchProblem problem = build_problem(family(GraphFamily::ring, 5), 2);
  const SearchResult result =
      search_clique(problem, SearchMode::exact, 10.0, 0);
  CHECK(result.K == 6);
  CHECK(result.exact);
  CHECK(result.codewords[0].none());

  // Exact results do not depend on the seed.
  const SearchResult again =
      search_clique(problem, SearchMode::exact, 10.0, 99);
  CHECK(again.codewords == result.codewords);
}

TEST_CASE("the published ((5,6,2)) codewords form a clique") {
  const SearchProblem problem = build_problem(family(GraphFamily::ring, 5), 2);
  const std::set<BitVec> forbidden(problem.forbidden_differences.begin(),
                                   problem.forbidden_differences.end());
  const std::vector<std::string> words = {"00000", "11010", "01101",
                                          "10110", "01011", "10101"};
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      const BitVec diff =
          BitVec::from_string(words[i]) ^ BitVec::from_string(words[j]);
      CHECK(!forbidden.count(diff));
    }
  }
}

TEST_CASE("heuristic search returns a verified code and respects stop_at") {
  const SearchProblem problem = build_problem(family(GraphFamily::ring, 9), 3);
  const SearchResult result =
      search_clique(problem, SearchMode::heuristic, 5.0, 1, 4);
  CHECK(result.K >= 4);
  CHECK(!result.exact);
  const CwsCode code{problem.graph, result.codewords, std::nullopt};
  CHECK(check_detection(code, 2).passed);
}

TEST_CASE("exact search refuses oversized problems") {
  const SearchProblem problem =
      build_problem(family(GraphFamily::ring, 21), 2);
  CHECK_THROWS_AS(search_clique(problem, SearchMode::exact, 1.0, 0),
                  std::runtime_error);
}

TEST_CASE("distance-1 searches accept everything") {
  const SearchProblem problem = build_problem(family(GraphFamily::ring, 4), 1);
  const SearchResult result =
      search_clique(problem, SearchMode::exact, 5.0, 0);
  CHECK(result.K == 16);  // the whole space forms a clique
  CHECK(result.exact);
}

TEST_CASE("ssw_code dimensions match the closed form") {
  CHECK(ssw_code(5).dimension() == 5);
  CHECK(ssw_code(7).dimension() == 22);
  CHECK(ssw_code(11).dimension() == 386);
  CHECK_THROWS_AS(ssw_code(4), std::invalid_argument);
  CHECK_THROWS_AS(ssw_code(6), std::invalid_argument);
  CHECK_THROWS_AS(ssw_code(3), std::invalid_argument);
}

TEST_CASE("ssw_code lives on the star graph, contains zero, distance 2") {
  for (std::size_t n : {5, 7}) {
    const CwsCode code = ssw_code(n);
    CHECK(code.graph == family(GraphFamily::star, n));
    CHECK(code.codewords[0].none());
    const DistanceResult d = distance(code, 2);
    CHECK(!d.lower_bound_only);
    CHECK(d.weight == 2);
  }
}

TEST_CASE("ssw_code(5) is not additive") {
  CHECK(!is_stabilizer_code(ssw_code(5)).has_value());
}
