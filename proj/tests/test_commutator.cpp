#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "oracles.hpp"
#include "ualg/commutator.hpp"

using namespace ualg;

namespace {

Partition z6_theta() { return Partition::from_labels({0, 1, 2, 0, 1, 2}); }

std::set<Tuple> store_as_set(const Subpower& s) {
  std::set<Tuple> out;
  for (TupleId id = 0; id < s.size(); ++id) out.insert(s.tuple(id));
  return out;
}

}  // namespace

TEST_CASE("cube addresses read as big-endian numerals") {
  CubeAddress last = CubeAddress::from_index(3, 7);
  CHECK(last.is_last());
  CHECK(last.place(0) == 1);
  CubeAddress a4 = CubeAddress::from_index(3, 4);  // address (1,0,0)
  CHECK(a4.place(0) == 1);
  CHECK(a4.place(1) == 0);
  CHECK(a4.place(2) == 0);
  CHECK_FALSE(a4.is_last());
}

TEST_CASE("standard generator expansion follows the hyperface pattern") {
  StandardGenerator dir0{2, 0, 1, 4};
  CHECK(dir0.expand() == Tuple{1, 1, 4, 4});
  StandardGenerator dir1{2, 1, 1, 4};
  CHECK(dir1.expand() == Tuple{1, 4, 1, 4});
  StandardGenerator threed{3, 2, 0, 5};
  CHECK(threed.expand() == Tuple{0, 5, 0, 5, 0, 5, 0, 5});
}

TEST_CASE("standard generator lists") {
  FiniteAlgebra a = builtin_algebra("paper-z6");
  SUBCASE("zero congruence gives only diagonal tuples") {
    std::vector<Partition> thetas(2, Partition::zero(6));
    std::vector<Tuple> gens = standard_generators(a, thetas);
    CHECK(gens.size() == 12);  // n constant tuples per direction
    std::set<Tuple> distinct(gens.begin(), gens.end());
    CHECK(distinct.size() == 6);
    for (const Tuple& g : distinct) {
      CHECK(std::all_of(g.begin(), g.end(), [&](Element v) { return v == g[0]; }));
    }
  }
  SUBCASE("theta pairs expand on both faces") {
    std::vector<Partition> thetas(2, z6_theta());
    std::vector<Tuple> gens = standard_generators(a, thetas);
    CHECK(gens.size() == 24);  // 12 ordered theta-pairs per direction
    CHECK(std::count(gens.begin(), gens.end(), Tuple{1, 1, 4, 4}) == 1);
    CHECK(std::count(gens.begin(), gens.end(), Tuple{1, 4, 1, 4}) == 1);
  }
  SUBCASE("full congruence on a 2-element set, 3 directions") {
    FiniteAlgebra b = builtin_algebra("paper-b");
    std::vector<Partition> thetas(3, Partition::one(2));
    CHECK(standard_generators(b, thetas).size() == 12);  // 3 * 4 ordered pairs
  }
  SUBCASE("non-congruence rejected") {
    std::vector<Partition> thetas(2, Partition::from_labels({0, 0, 2, 2, 4, 4}));
    CHECK_THROWS_AS(standard_generators(a, thetas), std::invalid_argument);
  }
}

TEST_CASE("cube generation") {
  FiniteAlgebra a = builtin_algebra("paper-z6");
  SUBCASE("zero congruences give the diagonal") {
    std::vector<Partition> thetas(2, Partition::zero(6));
    Subpower m = cube(a, thetas);
    CHECK(m.closed());
    CHECK(m.size() == 6);
  }
  SUBCASE("theta square closes and contains the diagonal") {
    std::vector<Partition> thetas(2, z6_theta());
    Subpower m = cube(a, thetas);
    CHECK(m.closed());
    for (Element x = 0; x < 6; ++x) {
      Tuple diag(4, x);
      CHECK(m.contains(diag));
    }
    // Independent fixpoint oracle over explicit tuple sets.
    CHECK(store_as_set(m) == oracles::naive_closure(a, 4, standard_generators(a, thetas)));
  }
  SUBCASE("full square cube of the z6 expansion, against the oracle") {
    std::vector<Partition> thetas(2, Partition::one(6));
    Subpower m = cube(a, thetas);
    CHECK(m.closed());
    CHECK(store_as_set(m) == oracles::naive_closure(a, 4, standard_generators(a, thetas)));
  }
  SUBCASE("unary algebras only produce face-patterned tuples") {
    FiniteAlgebra u = corpus::unary_cycle3();
    std::vector<Partition> thetas(2, Partition::one(3));
    Subpower m = cube(u, thetas);
    REQUIRE(m.closed());
    for (TupleId id = 0; id < m.size(); ++id) {
      Tuple t = m.tuple(id);
      bool row_pattern = t[0] == t[1] && t[2] == t[3];
      bool col_pattern = t[0] == t[2] && t[1] == t[3];
      CHECK((row_pattern || col_pattern));
    }
  }
}

TEST_CASE("higher commutator of zero congruences vanishes") {
  FiniteAlgebra a = builtin_algebra("paper-z6");
  std::vector<Partition> thetas(2, Partition::zero(6));
  CommutatorResult r = two_term_higher_commutator(a, thetas, CommutatorMode::exact);
  CHECK(r.value.is_zero());
  CHECK(r.witnesses.empty());
  CHECK(r.decided == Decided::exact);
}

TEST_CASE("unary algebras have vanishing square commutator") {
  for (int ops = 1; ops <= 2; ++ops) {
    for (int n = 1; n <= 3; ++n) {
      for (const FiniteAlgebra& u : corpus::all_unary_algebras(n, ops)) {
        std::vector<Partition> thetas(2, Partition::one(n));
        CommutatorResult r = two_term_higher_commutator(u, thetas, CommutatorMode::exact);
        CHECK(r.decided == Decided::exact);
        CHECK(r.value.is_zero());
        // Decided commutator value and the zero test must agree.
        CHECK(is_supernilpotent(u, Partition::one(n), 1).verdict == Verdict::yes);
      }
    }
  }
}

TEST_CASE("the z6 expansion has a verifiable dimension-3 collision") {
  FiniteAlgebra a = builtin_algebra("paper-z6");
  std::vector<Partition> thetas(3, Partition::one(6));
  CommutatorResult r =
      two_term_higher_commutator(a, thetas, CommutatorMode::zero_test);
  REQUIRE(!r.witnesses.empty());
  CHECK(r.decided == Decided::zero_test_only);
  CHECK_FALSE(r.value.is_zero());

  const CubeWitness& w = r.witnesses.front();
  CHECK(r.cube.contains(w.s));
  CHECK(r.cube.contains(w.t));
  REQUIRE(w.s.size() == 8);
  CHECK(std::equal(w.s.begin(), w.s.end() - 1, w.t.begin()));
  CHECK(w.s.back() != w.t.back());
  CHECK(w.s.back() == w.s_last);
  CHECK(w.t.back() == w.t_last);
  CHECK(r.value.related(w.s_last, w.t_last));
}

TEST_CASE("supernilpotence verdicts") {
  SUBCASE("abelian groups are class-1 supernilpotent") {
    for (const char* name : {"cyclic-2", "cyclic-3", "cyclic-4", "klein4"}) {
      FiniteAlgebra g = builtin_algebra(name);
      SupernilpotenceResult r = is_supernilpotent(g, Partition::one(g.size()), 1);
      CHECK(r.verdict == Verdict::yes);
    }
  }
  SUBCASE("zero congruence is supernilpotent at any class") {
    FiniteAlgebra a = builtin_algebra("paper-z6");
    SupernilpotenceResult r = is_supernilpotent(a, Partition::zero(6), 2);
    CHECK(r.verdict == Verdict::yes);
  }
  SUBCASE("the z6 expansion is not class-2 supernilpotent") {
    FiniteAlgebra a = builtin_algebra("paper-z6");
    SupernilpotenceResult r = is_supernilpotent(a, Partition::one(6), 2);
    REQUIRE(r.verdict == Verdict::no);
    REQUIRE(r.witness.has_value());
    CHECK(r.cube.contains(r.witness->s));
    CHECK(r.cube.contains(r.witness->t));
  }
  SUBCASE("starved budgets return unknown") {
    FiniteAlgebra a = builtin_algebra("paper-z6");
    SupernilpotenceResult r = is_supernilpotent(a, Partition::one(6), 2, Budget{5, 5});
    CHECK(r.verdict == Verdict::unknown);
  }
}

TEST_CASE("binary term-condition commutator") {
  FiniteAlgebra a = builtin_algebra("paper-z6");
  const Partition zero = Partition::zero(6);
  const Partition one = Partition::one(6);
  const Partition theta = z6_theta();

  SUBCASE("zero arguments annihilate") {
    CHECK(tc_commutator(a, zero, one).is_zero());
    CHECK(tc_commutator(a, one, zero).is_zero());
    CHECK(tc_commutator(a, zero, zero).is_zero());
  }
  SUBCASE("[1,theta] = 0") { CHECK(tc_commutator(a, one, theta).is_zero()); }
  SUBCASE("[1,1] = theta") { CHECK(tc_commutator(a, one, one) == theta); }
  SUBCASE("monotone in both arguments over the three-chain") {
    std::vector<Partition> chain{zero, theta, one};
    for (const Partition& a1 : chain)
      for (const Partition& b1 : chain)
        for (const Partition& a2 : chain)
          for (const Partition& b2 : chain) {
            if (!(a1.refines(a2) && b1.refines(b2))) continue;
            CHECK(tc_commutator(a, a1, b1).refines(tc_commutator(a, a2, b2)));
          }
  }
}

TEST_CASE("commutator zero-class equals the derived subgroup") {
  for (const FiniteAlgebra& g : corpus::small_groups()) {
    REQUIRE(oracles::group_axioms_hold(g));
    Partition one = Partition::one(g.size());
    Partition commutator = tc_commutator(g, one, one);

    Subset derived = oracles::derived_subgroup(g);
    Subset zero_class(g.size());
    for (Element x = 0; x < g.size(); ++x)
      if (commutator.related(x, 0)) zero_class.add(x);
    CHECK(zero_class == derived);
  }
}

TEST_CASE("nilpotence classes") {
  CHECK(nilpotence_class(builtin_algebra("paper-z6"), 5) == 2);
  CHECK(nilpotence_class(builtin_algebra("cyclic-4"), 5) == 1);
  CHECK(nilpotence_class(builtin_algebra("klein4"), 5) == 1);
  CHECK(nilpotence_class(corpus::one_element(), 3) == 1);
  CHECK(nilpotence_class(corpus::s3(), 6) == std::nullopt);  // not nilpotent
  CHECK(nilpotence_class(corpus::d4(), 6) == 2);
  CHECK(nilpotence_class(corpus::q8(), 6) == 2);
}

TEST_CASE("two-block centrality of the theta pair algebra") {
  FiniteAlgebra a = builtin_algebra("paper-z6");
  CHECK(verify_delta_centrality(a, z6_theta()));
  CHECK_FALSE(verify_delta_centrality(a, Partition::one(6)));
  CHECK(verify_delta_centrality(a, Partition::zero(6)));
}

TEST_CASE("commutator result text form is stable") {
  FiniteAlgebra a = builtin_algebra("cyclic-2");
  std::vector<Partition> thetas(2, Partition::one(2));
  CommutatorResult r = two_term_higher_commutator(a, thetas, CommutatorMode::exact);
  CHECK(r.to_text() == "value: 0|1\ndecided: exact\ncube size: 8 (closed)\nwitnesses: 0\n");
}
