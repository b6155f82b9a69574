#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "cws/gf2.hpp"
#include "cws/search.hpp"
#include "cws/standard_form.hpp"
#include "cws/verify.hpp"
#include "test_util.hpp"

using namespace cws;
using testutil::Mat;
using testutil::Vec;

namespace {

std::set<std::string> generator_strings(const PauliGroupSubset& s) {
  std::set<std::string> out;
  for (const PauliOperator& g : s.generators) out.insert(g.str());
  return out;
}

// Mirror of the tableau reduction's row-op phase rule, used to compare a
// generating set against the graph generators exactly.
std::vector<PauliOperator> rref_x_block(std::vector<PauliOperator> rows) {
  const std::size_t n = rows.size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < n; ++col) {
    std::size_t pivot = r;
    while (pivot < n && !rows[pivot].x_part().get(col)) ++pivot;
    if (pivot == n) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i != r && rows[i].x_part().get(col)) {
        rows[i] = multiply(rows[i], rows[r]);
      }
    }
    ++r;
  }
  return rows;
}

}  // namespace

TEST_CASE("graph_stabilizer of the 5-ring is ZXZII and cyclic shifts") {
  const Graph ring = family(GraphFamily::ring, 5);
  std::set<std::string> expect;
  const std::string base = "ZXZII";
  for (int s = 0; s < 5; ++s) {
    std::string rotated(5, 'I');
    for (int i = 0; i < 5; ++i) rotated[(i + s) % 5] = base[i];
    expect.insert(rotated);
  }
  CHECK(generator_strings(graph_stabilizer(ring)) == expect);
}

TEST_CASE("graph_stabilizer of the empty graph is single X's") {
  const PauliGroupSubset s = graph_stabilizer(Graph(3));
  CHECK(generator_strings(s) == std::set<std::string>{"XII", "IXI", "IIX"});
}

TEST_CASE("graph_stabilizer of the 10-vertex double ring, golden list") {
  const Graph prism = family(GraphFamily::double_ring, 10);
  const std::vector<std::string> expect = {
      "XZIIZZIIII", "ZXZIIIZIII", "IZXZIIIZII", "IIZXZIIIZI", "ZIIZXIIIIZ",
      "ZIIIIXZIIZ", "IZIIIZXZII", "IIZIIIZXZI", "IIIZIIIZXZ", "IIIIZZIIZX"};
  const PauliGroupSubset s = graph_stabilizer(prism);
  REQUIRE(s.generators.size() == 10);
  for (std::size_t l = 0; l < 10; ++l) {
    CHECK(s.generators[l].str() == expect[l]);
  }
}

TEST_CASE("translate_error on the 5-ring: golden entries") {
  const Graph ring = family(GraphFamily::ring, 5);
  CHECK(translate_error(ring, PauliOperator::single(5, 1, 'Z')).str() ==
        "01000");
  CHECK(translate_error(ring, PauliOperator::single(5, 0, 'X')).str() ==
        "01001");
  CHECK(translate_error(ring, PauliOperator::single(5, 2, 'Y')).str() ==
        "01110");
  CHECK_THROWS_AS(translate_error(ring, PauliOperator(4)),
                  std::invalid_argument);
}

TEST_CASE("translate_error ignores the phase") {
  const Graph ring = family(GraphFamily::ring, 5);
  const auto e = PauliOperator::from_string("IXIIZ");
  const auto minus_e = PauliOperator::from_string("-IXIIZ");
  CHECK(translate_error(ring, e) == translate_error(ring, minus_e));
}

TEST_CASE("translate_error_set: counts and linearity") {
  const Graph ring9 = family(GraphFamily::ring, 9);
  const auto set = translate_error_set(ring9, 2);
  CHECK(set.size() == 351);
  for (const TranslatedError& t : set) {
    CHECK(t.x_support == t.error.x_part());
    CHECK(t.classical == translate_error(ring9, t.error));
  }

  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    const auto a = testutil::random_pauli(rng, 9);
    const auto b = testutil::random_pauli(rng, 9);
    CHECK(translate_error(ring9, multiply(a, b)) ==
          (translate_error(ring9, a) ^ translate_error(ring9, b)));
  }
}

TEST_CASE("translate_error on the empty graph returns the Z part") {
  const Graph g(4);
  std::mt19937_64 rng(29);
  for (int t = 0; t < 20; ++t) {
    BitVec v(4);
    for (int q = 0; q < 4; ++q) v.set(q, rng() & 1u);
    const PauliOperator e(BitVec(4), v, 0);
    CHECK(translate_error(g, e) == v);
  }
}

TEST_CASE("translate_error kernel: zero image and zero X part is identity") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 50; ++t) {
    const Graph g = testutil::random_graph(rng, 2 + rng() % 5);
    const std::size_t n = g.num_vertices();
    BitVec v(n);
    for (std::size_t q = 0; q < n; ++q) v.set(q, rng() & 1u);
    const PauliOperator e(BitVec(n), v, 0);
    if (translate_error(g, e).none()) {
      CHECK(e.is_identity());
    }
  }
}

TEST_CASE("Lemma: any error acts as +/- Z^{Cl(E)} on the graph state") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    const Graph g = testutil::random_graph(rng, n);
    const CwsCode code{g, {BitVec(n)}, std::nullopt};
    const Vec psi = build_statevector(code)[0];
    for (const PauliOperator& e : enumerate_errors(n, std::min<int>(n, 3))) {
      const Vec lhs = testutil::apply_pauli(e, psi);
      const PauliOperator zcl(BitVec(n), translate_error(g, e), 0);
      const Vec rhs = testutil::apply_pauli(zcl, psi);
      const double match = std::min((lhs - rhs).norm(), (lhs + rhs).norm());
      CHECK(match < 1e-9);
    }
  }
  // Larger systems, random errors with uniform phase stripped.
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 7 + rng() % 4;  // up to 10 qubits
    const Graph g = testutil::random_graph(rng, n);
    const CwsCode code{g, {BitVec(n)}, std::nullopt};
    const Vec psi = build_statevector(code)[0];
    for (int k = 0; k < 20; ++k) {
      const PauliOperator e = testutil::random_pauli(rng, n).phaseless();
      const Vec lhs = testutil::apply_pauli(e, psi);
      const PauliOperator zcl(BitVec(n), translate_error(g, e), 0);
      const Vec rhs = testutil::apply_pauli(zcl, psi);
      const double match = std::min((lhs - rhs).norm(), (lhs + rhs).norm());
      CHECK(match < 1e-9);
    }
  }
}

TEST_CASE("to_standard_form: fixed point on graph-form input") {
  const Graph ring = family(GraphFamily::ring, 5);
  const std::vector<PauliOperator> word_ops = {
      PauliOperator(5), PauliOperator::from_string("ZZZZZ")};
  const auto [code, circuit] = to_standard_form(graph_stabilizer(ring),
                                                word_ops);
  CHECK(circuit.is_identity());
  CHECK(code.graph == ring);
  REQUIRE(code.codewords.size() == 2);
  CHECK(code.codewords[0].str() == "00000");
  CHECK(code.codewords[1].str() == "11111");
}

TEST_CASE("to_standard_form: GHZ stabilizer reduces to a graph") {
  PauliGroupSubset ghz{3,
                       {PauliOperator::from_string("XXX"),
                        PauliOperator::from_string("ZZI"),
                        PauliOperator::from_string("IZZ")}};
  const auto [code, circuit] = to_standard_form(ghz, {PauliOperator(3)});
  // Conjugated generators generate exactly the graph stabilizer.
  std::vector<PauliOperator> conj;
  for (const PauliOperator& g : ghz.generators) {
    conj.push_back(conjugate(g, circuit));
  }
  const auto reduced = rref_x_block(conj);
  const auto expect = graph_stabilizer(code.graph).generators;
  REQUIRE(reduced.size() == expect.size());
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    CHECK(reduced[i] == expect[i]);
  }

  // Codespace preservation: C|S> is the graph state, up to global phase.
  const Vec before = testutil::stabilizer_state(ghz);
  const Vec after = testutil::stabilizer_state(graph_stabilizer(code.graph));
  const Vec mapped = testutil::local_circuit_matrix(circuit) * before;
  CHECK(std::abs(std::abs(after.dot(mapped)) - 1.0) < 1e-9);
}

TEST_CASE("to_standard_form: GHZ-type star presentation yields star graph") {
  for (std::size_t n : {5, 7}) {
    PauliGroupSubset stab{n, {}};
    BitVec v(n);
    for (std::size_t q = 1; q < n; ++q) v.set(q, true);
    stab.generators.emplace_back(BitVec::unit(n, 0), v, 0);
    for (std::size_t q = 1; q < n; ++q) {
      stab.generators.emplace_back(BitVec::unit(n, q), BitVec::unit(n, 0), 0);
    }
    const auto [code, circuit] = to_standard_form(stab, {PauliOperator(n)});
    CHECK(code.graph == family(GraphFamily::star, n));
    CHECK(circuit.is_identity());
  }
}

TEST_CASE("to_standard_form: random local-Clifford scrambles of graphs") {
  std::mt19937_64 rng(41);
  const LocalGate gate_pool[5] = {LocalGate::H, LocalGate::P, LocalGate::X,
                                  LocalGate::Y, LocalGate::Z};
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    const Graph g = testutil::random_graph(rng, n);
    LocalCliffordCircuit scramble(n);
    for (std::size_t q = 0; q < n; ++q) {
      const std::size_t len = rng() % 4;
      for (std::size_t i = 0; i < len; ++i) {
        scramble.gates[q].push_back(gate_pool[rng() % 5]);
      }
    }
    PauliGroupSubset stab{n, {}};
    for (const PauliOperator& s : graph_stabilizer(g).generators) {
      stab.generators.push_back(conjugate(s, scramble));
    }
    REQUIRE(is_valid_stabilizer(stab));

    const auto [code, circuit] = to_standard_form(stab, {PauliOperator(n)});
    std::vector<PauliOperator> conj;
    for (const PauliOperator& s : stab.generators) {
      conj.push_back(conjugate(s, circuit));
    }
    const auto reduced = rref_x_block(conj);
    const auto expect = graph_stabilizer(code.graph).generators;
    REQUIRE(reduced.size() == expect.size());
    for (std::size_t i = 0; i < reduced.size(); ++i) {
      CHECK(reduced[i] == expect[i]);
    }
  }
}

TEST_CASE("to_standard_form translates the first codeword to zero") {
  const Graph ring = family(GraphFamily::ring, 5);
  const auto [code, circuit] =
      to_standard_form(graph_stabilizer(ring),
                       {PauliOperator::from_string("ZZIII"),
                        PauliOperator::from_string("IIZZZ")});
  CHECK(circuit.is_identity());
  REQUIRE(code.codewords.size() == 2);
  CHECK(code.codewords[0].str() == "00000");
  CHECK(code.codewords[1].str() == "11111");  // the pairwise difference
}

TEST_CASE("to_standard_form rejects bad input") {
  const Graph ring = family(GraphFamily::ring, 5);
  auto stab = graph_stabilizer(ring);

  // Repeated word operators up to phase collapse the dimension.
  CHECK_THROWS_AS(
      to_standard_form(stab, {PauliOperator::from_string("ZZZZZ"),
                              PauliOperator::from_string("-ZZZZZ")}),
      std::invalid_argument);
  // A word operator equal to another one times a stabilizer element.
  CHECK_THROWS_AS(
      to_standard_form(stab, {PauliOperator(5),
                              PauliOperator::from_string("ZXZII")}),
      std::invalid_argument);

  // Not maximal.
  stab.generators.pop_back();
  CHECK_THROWS_AS(to_standard_form(stab, {PauliOperator(5)}),
                  std::invalid_argument);

  // Anticommuting generators.
  PauliGroupSubset bad{1,
                       {PauliOperator::from_string("X"),
                        PauliOperator::from_string("Z")}};
  CHECK_THROWS_AS(to_standard_form(bad, {PauliOperator(1)}),
                  std::invalid_argument);
}

TEST_CASE("build_problem facts used by search") {
  const Graph ring5 = family(GraphFamily::ring, 5);
  const SearchProblem p = build_problem(ring5, 2);
  CHECK(p.forbidden_differences.size() == 15);
  CHECK(p.forced_constraints.empty());

  const SearchProblem trivial = build_problem(ring5, 1);
  CHECK(trivial.forbidden_differences.empty());
  CHECK(trivial.forced_constraints.empty());

  const Graph prism = family(GraphFamily::double_ring, 10);
  const SearchProblem dp = build_problem(prism, 3);
  std::set<BitVec> expect;
  for (const TranslatedError& t : translate_error_set(prism, 2)) {
    if (t.classical.any()) expect.insert(t.classical);
  }
  CHECK(dp.forbidden_differences.size() == expect.size());
  CHECK(dp.forbidden_differences.size() <= 435);
}
