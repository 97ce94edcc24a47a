#include "doctest.h"

#include <cstdlib>
#include <map>
#include <set>

#include "ctxlab/error.hpp"
#include "ctxlab/logic.hpp"
#include "ctxlab/states.hpp"

#include "oracle.hpp"

using namespace ctxlab;

namespace {

// A pasting with two states and a never-true atom q: the subset context
// {y,z} inside {q,y,z} forces q = 0 in every state.
Logic nonunital_fixture() { return build_logic({{"y", "z"}, {"q", "y", "z"}}); }

// A pasting whose atoms a and b are truthed by exactly the same state, so
// no two-valued state separates them.
Logic inseparable_fixture() { return build_logic({{"a", "x", "y"}, {"b", "x", "y"}}); }

std::vector<std::uint8_t> row(std::initializer_list<int> bits) {
  std::vector<std::uint8_t> out;
  for (int b : bits) out.push_back(static_cast<std::uint8_t>(b));
  return out;
}

}  // namespace

TEST_CASE("two-intertwined has the five two-valued states in canonical order") {
  StateSet states = enumerate_states(catalog("two-intertwined"));
  REQUIRE(states.size() == 5);
  // Atom order a,b,c,d,e; true-first order puts the a-state first.
  CHECK(states.row(0) == row({1, 0, 0, 0, 0}));
  CHECK(states.row(1) == row({0, 1, 0, 1, 0}));
  CHECK(states.row(2) == row({0, 1, 0, 0, 1}));
  CHECK(states.row(3) == row({0, 0, 1, 1, 0}));
  CHECK(states.row(4) == row({0, 0, 1, 0, 1}));
  CHECK(states.rows() == testutil::brute_force_states(catalog("two-intertwined")));
}

TEST_CASE("three-chain and pentagon state counts match the exhaustive oracle") {
  StateSet chain = enumerate_states(catalog("three-chain"));
  CHECK(chain.size() == 8);
  CHECK(chain.rows() == testutil::brute_force_states(catalog("three-chain")));

  StateSet pentagon = enumerate_states(catalog("pentagon"));
  CHECK(pentagon.size() == 11);
  CHECK(pentagon.rows() == testutil::brute_force_states(catalog("pentagon")));
}

TEST_CASE("odd two-cycles are stateless, even ones have exactly two states") {
  CHECK(enumerate_states(catalog("cycle", {3, 2})).size() == 0);
  for (int n = 3; n <= 12; ++n) {
    StateSet states = enumerate_states(catalog("cycle", {n, 2}));
    CHECK(states.size() == (n % 2 == 0 ? 2 : 0));
  }
}

TEST_CASE("is_admissible checks the exactly-one rule") {
  Logic logic = catalog("two-intertwined");
  std::map<std::string, int> assignment{
      {"a", 1}, {"b", 0}, {"c", 0}, {"d", 0}, {"e", 0}};
  CHECK(is_admissible(logic, assignment));

  assignment["a"] = 0;
  CHECK_FALSE(is_admissible(logic, assignment));

  assignment["b"] = 1;
  assignment["c"] = 1;
  CHECK_FALSE(is_admissible(logic, assignment));

  std::map<std::string, int> partial{{"a", 1}};
  CHECK_THROWS_AS(is_admissible(logic, partial), Error);
  try {
    is_admissible(logic, partial);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::missing_atom);
  }

  std::map<std::string, int> out_of_range{
      {"a", 2}, {"b", 0}, {"c", 0}, {"d", 0}, {"e", 0}};
  CHECK_THROWS_AS(is_admissible(logic, out_of_range), Error);
}

TEST_CASE("classification ladder levels") {
  CHECK(classify(catalog("two-intertwined")).level == Level::separating);
  CHECK(classify(catalog("pentagon")).level == Level::separating);
  CHECK(classify(catalog("three-chain")).level == Level::separating);
  CHECK(classify(catalog("cycle", {3, 2})).level == Level::stateless);

  Classification stateless = classify(catalog("cycle", {5, 2}));
  CHECK(stateless.level == Level::stateless);
  CHECK_FALSE(stateless.nonempty);
  CHECK_FALSE(stateless.unital);
  CHECK_FALSE(stateless.separating);

  Logic nonunital = nonunital_fixture();
  Classification nu = classify(nonunital);
  CHECK(nu.level == Level::nonunital);
  CHECK(nu.nonempty);
  CHECK_FALSE(nu.unital);
  REQUIRE(nu.nonunital_atoms.size() == 1);
  CHECK(nonunital.atom_id(nu.nonunital_atoms[0]) == "q");

  Logic inseparable = inseparable_fixture();
  Classification ui = classify(inseparable);
  CHECK(ui.level == Level::unital_inseparable);
  CHECK(ui.unital);
  CHECK_FALSE(ui.separating);
  REQUIRE(ui.inseparable_pairs.size() == 1);
  CHECK(inseparable.atom_id(ui.inseparable_pairs[0].first) == "a");
  CHECK(inseparable.atom_id(ui.inseparable_pairs[0].second) == "b");
}

TEST_CASE("partition logic reproduces the two-intertwined blocks") {
  Logic logic = catalog("two-intertwined");
  StateSet states = enumerate_states(logic);
  PartitionLogic partition = partition_logic(logic, states);

  CHECK(partition.atom_blocks[logic.atom_index("a")] == std::vector<int>{1});
  CHECK(partition.atom_blocks[logic.atom_index("b")] == std::vector<int>{2, 3});
  CHECK(partition.atom_blocks[logic.atom_index("c")] == std::vector<int>{4, 5});
  CHECK(partition.atom_blocks[logic.atom_index("d")] == std::vector<int>{2, 4});
  CHECK(partition.atom_blocks[logic.atom_index("e")] == std::vector<int>{3, 5});

  REQUIRE(partition.context_partitions.size() == 2);
  CHECK(partition.context_partitions[0] ==
        std::vector<std::vector<int>>{{1}, {2, 3}, {4, 5}});
  CHECK(partition.context_partitions[1] ==
        std::vector<std::vector<int>>{{1}, {2, 4}, {3, 5}});
}

TEST_CASE("partition logic corner cases") {
  Logic pair = build_logic({{"a", "b"}});
  PartitionLogic partition = partition_logic(pair, enumerate_states(pair));
  CHECK(partition.atom_blocks[0] == std::vector<int>{1});
  CHECK(partition.atom_blocks[1] == std::vector<int>{2});

  Logic nonunital = nonunital_fixture();
  PartitionLogic np = partition_logic(nonunital, enumerate_states(nonunital));
  CHECK(np.atom_blocks[nonunital.atom_index("q")].empty());

  Logic stateless = catalog("cycle", {3, 2});
  CHECK_THROWS_AS(partition_logic(stateless, enumerate_states(stateless)), Error);
}

TEST_CASE("partition blocks partition the index set in every context") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 40; ++trial) {
    Logic logic = testutil::random_pasting(rng, 12, 5);
    StateSet states = enumerate_states(logic);
    if (states.empty()) continue;
    PartitionLogic partition = partition_logic(logic, states);
    for (const auto& blocks : partition.context_partitions) {
      std::set<int> seen;
      size_t total = 0;
      for (const auto& block : blocks) {
        total += block.size();
        seen.insert(block.begin(), block.end());
      }
      CHECK(total == seen.size());               // pairwise disjoint
      CHECK(seen.size() == static_cast<size_t>(states.size()));
      if (!seen.empty()) {
        CHECK(*seen.begin() == 1);
        CHECK(*seen.rbegin() == states.size());  // covers {1..N}
      }
    }
  }
}

TEST_CASE("faithfulness link between partition blocks and classification") {
  std::mt19937 rng(90210);
  for (int trial = 0; trial < 40; ++trial) {
    Logic logic = testutil::random_pasting(rng, 12, 5);
    StateSet states = enumerate_states(logic);
    if (states.empty()) continue;
    Classification cls = classify(logic, states);
    PartitionLogic partition = partition_logic(logic, states);

    std::set<std::pair<int, int>> inseparable(cls.inseparable_pairs.begin(),
                                              cls.inseparable_pairs.end());
    for (int a = 0; a < logic.atom_count(); ++a)
      for (int b = a + 1; b < logic.atom_count(); ++b)
        CHECK((partition.atom_blocks[a] == partition.atom_blocks[b]) ==
              (inseparable.count({a, b}) > 0));

    std::set<int> nonunital(cls.nonunital_atoms.begin(), cls.nonunital_atoms.end());
    for (int a = 0; a < logic.atom_count(); ++a)
      CHECK(partition.atom_blocks[a].empty() == (nonunital.count(a) > 0));
  }
}

TEST_CASE("gadget relations on the two-intertwined logic") {
  Logic logic = catalog("two-intertwined");
  StateSet states = enumerate_states(logic);

  CHECK(gadget_relation(logic, states, "b", "a").kind == GadgetKind::tifs);
  // States 2 and 3 truth b but differ on d.
  CHECK(gadget_relation(logic, states, "b", "d").kind == GadgetKind::mixed);
  CHECK(gadget_relation(logic, states, "a", "a").kind == GadgetKind::tits);
  CHECK_THROWS_AS(gadget_relation(logic, states, "zz", "a"), Error);

  Logic nonunital = nonunital_fixture();
  StateSet nstates = enumerate_states(nonunital);
  CHECK(gadget_relation(nonunital, nstates, "q", "y").kind == GadgetKind::vacuous);
}

TEST_CASE("implication checking on the three-chain") {
  Logic logic = catalog("three-chain");
  StateSet states = enumerate_states(logic);

  ImplicationResult both = check_implication(logic, states, {"c", "g"}, "d");
  CHECK(both.holds);
  CHECK_FALSE(both.vacuous);
  CHECK(both.witness.has_value());

  // c=1, e=1 is admissible and has d=0.
  ImplicationResult single = check_implication(logic, states, {"c"}, "d");
  CHECK_FALSE(single.holds);
  REQUIRE(single.counterexample.has_value());
  int cex = *single.counterexample - 1;
  CHECK(states.value(cex, logic.atom_index("c")) == 1);
  CHECK(states.value(cex, logic.atom_index("d")) == 0);

  // Empty premise set quantifies over all states.
  ImplicationResult empty = check_implication(logic, states, {}, "a");
  CHECK_FALSE(empty.holds);
  CHECK_FALSE(empty.vacuous);

  // a and b share a context, so the premises are unsatisfiable together.
  Logic two = catalog("two-intertwined");
  StateSet two_states = enumerate_states(two);
  ImplicationResult vac = check_implication(two, two_states, {"a", "b"}, "c");
  CHECK(vac.holds);
  CHECK(vac.vacuous);
}

TEST_CASE("enumeration equals the exhaustive oracle on random pastings") {
  std::mt19937 rng(1337);
  for (int trial = 0; trial < 60; ++trial) {
    Logic logic = testutil::random_pasting(rng);
    StateSet states = enumerate_states(logic);
    CHECK(states.rows() == testutil::brute_force_states(logic));

    Classification cls = classify(logic, states);
    if (cls.separating) CHECK(cls.unital);
    if (cls.unital) CHECK(cls.nonempty);
  }
}

TEST_CASE("enumeration order is identical across parallelism settings") {
  Logic pentagon = catalog("pentagon");
  auto reference = enumerate_states(pentagon, 1).rows();
  for (unsigned threads : {2u, 3u, 4u, 8u})
    CHECK(enumerate_states(pentagon, threads).rows() == reference);

  // Same via the environment variable.
  for (const char* setting : {"1", "2", "4", "0"}) {
    setenv("CONTEXTUALITY_LAB_THREADS", setting, 1);
    CHECK(enumerate_states(pentagon).rows() == reference);
  }
  unsetenv("CONTEXTUALITY_LAB_THREADS");

  std::mt19937 rng(5150);
  for (int trial = 0; trial < 10; ++trial) {
    Logic logic = testutil::random_pasting(rng);
    CHECK(enumerate_states(logic, 1).rows() == enumerate_states(logic, 4).rows());
  }
}
