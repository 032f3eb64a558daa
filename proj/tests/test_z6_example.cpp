#include <doctest.h>

#include <algorithm>
#include <set>

#include "corpus.hpp"
#include "ualg/lattice.hpp"
#include "ualg/z6_example.hpp"

using namespace ualg;

namespace {

Subpower universe_subpower(const FiniteAlgebra& a) {
  std::vector<Tuple> gens;
  for (Element x = 0; x < a.size(); ++x) gens.push_back({x});
  return Subpower::generate(a, 1, gens);
}

Subpower square_from(const FiniteAlgebra& a, std::vector<Tuple> gens) {
  return Subpower::generate(a, 2, gens);
}

}  // namespace

TEST_CASE("z6 expansion detection") {
  CHECK(is_z6_expansion(builtin_algebra("paper-z6")));
  CHECK(is_z6_expansion(corpus::z6_group()));
  CHECK_FALSE(is_z6_expansion(builtin_algebra("cyclic-4")));
  CHECK_FALSE(is_z6_expansion(corpus::s3()));  // size 6 but not mod-6 addition
}

TEST_CASE("the idempotent slice term") {
  FiniteAlgebra a = builtin_algebra("paper-z6");
  // e(x) = 4x fixes {0,2,4} and kills the 2-part; e(e(x)) = e(x).
  auto e = [&](Element x) {
    Element args[] = {x, x};
    Element twice = a.eval("+", args);
    Element args2[] = {twice, twice};
    return a.eval("+", args2);
  };
  std::set<Element> image;
  for (Element x = 0; x < 6; ++x) {
    image.insert(e(x));
    CHECK(e(e(x)) == e(x));
  }
  CHECK(image == std::set<Element>{0, 2, 4});
}

TEST_CASE("sylow slice of the algebra itself") {
  FiniteAlgebra a = builtin_algebra("paper-z6");
  SylowSlice slice = sylow3(a, universe_subpower(a));
  CHECK(slice.dim == 1);
  REQUIRE(slice.v3.size() == 3);
  CHECK(slice.v3[0] == Tuple{0});
  CHECK(slice.v3[1] == Tuple{2});
  CHECK(slice.v3[2] == Tuple{4});
}

TEST_CASE("sylow slice of the sampled subdirect squares") {
  FiniteAlgebra a = builtin_algebra("paper-z6");
  SUBCASE("the square generated by (1,5)") {
    Subpower d = square_from(a, {{1, 5}});
    CHECK(d.size() == 6);
    SylowSlice slice = sylow3(a, d);
    CHECK(slice.dim == 1);
    REQUIRE(slice.v3.size() == 3);
    CHECK(slice.v3[0] == Tuple{0, 0});
    CHECK(slice.v3[1] == Tuple{2, 4});
    CHECK(slice.v3[2] == Tuple{4, 2});
  }
  SUBCASE("the full square") {
    std::vector<Tuple> all;
    for (Element x = 0; x < 6; ++x)
      for (Element y = 0; y < 6; ++y) all.push_back({x, y});
    Subpower d = square_from(a, std::move(all));
    SylowSlice slice = sylow3(a, d);
    CHECK(slice.dim == 2);
    CHECK(slice.v3.size() == 9);
  }
  SUBCASE("diagonal over the proper subuniverse is not subdirect but still slices") {
    Subpower d = square_from(a, {{0, 0}, {3, 3}});
    SylowSlice slice = sylow3(a, d);
    CHECK(slice.dim == 0);
    REQUIRE(slice.v3.size() == 1);
    CHECK(slice.v3[0] == Tuple{0, 0});
  }
}

TEST_CASE("sylow slices are subgroups of the additive reduct") {
  FiniteAlgebra a = builtin_algebra("paper-z6");
  for (auto gens : {std::vector<Tuple>{{1, 5}}, std::vector<Tuple>{{1, 1}, {0, 3}}}) {
    Subpower d = square_from(a, gens);
    SylowSlice slice = sylow3(a, d);
    std::set<Tuple> v3(slice.v3.begin(), slice.v3.end());
    CHECK(v3.count(Tuple{0, 0}) == 1);
    for (const Tuple& x : v3) {
      Tuple neg{static_cast<Element>((6 - x[0]) % 6), static_cast<Element>((6 - x[1]) % 6)};
      CHECK(v3.count(neg) == 1);
      for (const Tuple& y : v3) {
        Tuple args[] = {x, y};
        Tuple sum = a.eval_componentwise("+", args);
        CHECK(v3.count(sum) == 1);
      }
      // additive order divides 3
      Tuple args[] = {x, x};
      Tuple twice = a.eval_componentwise("+", args);
      Tuple args2[] = {twice, x};
      CHECK(a.eval_componentwise("+", args2) == Tuple{0, 0});
    }
  }
}

TEST_CASE("plus/minus splits") {
  FiniteAlgebra a = builtin_algebra("paper-z6");
  SUBCASE("on the algebra itself both polarities pick one of {2,4}") {
    SylowSlice slice = sylow3(a, universe_subpower(a));
    PlusMinusSplit lex_min = plus_minus_split(a, slice, SplitPolarity::lex_min);
    REQUIRE(lex_min.p.size() == 1);
    CHECK(lex_min.p[0] == Tuple{2});
    CHECK(lex_min.minus_p[0] == Tuple{4});
    PlusMinusSplit lex_max = plus_minus_split(a, slice, SplitPolarity::lex_max);
    CHECK(lex_max.p[0] == Tuple{4});
  }
  SUBCASE("trivial slice gives the empty split") {
    Subpower d = square_from(a, {{0, 0}, {3, 3}});
    PlusMinusSplit split = plus_minus_split(a, sylow3(a, d));
    CHECK(split.p.empty());
  }
  SUBCASE("nine-element slice splits four against four") {
    std::vector<Tuple> all;
    for (Element x = 0; x < 6; ++x)
      for (Element y = 0; y < 6; ++y) all.push_back({x, y});
    Subpower d = square_from(a, std::move(all));
    PlusMinusSplit split = plus_minus_split(a, sylow3(a, d));
    CHECK(split.p.size() == 4);
    CHECK(split.minus_p.size() == 4);
  }
}

TEST_CASE("sum identity") {
  FiniteAlgebra a = builtin_algebra("paper-z6");
  SUBCASE("over the algebra itself, both polarities") {
    Subpower d = universe_subpower(a);
    for (SplitPolarity pol : {SplitPolarity::lex_min, SplitPolarity::lex_max}) {
      SumIdentityReport r = verify_sum_identity(a, d, pol);
      CHECK(r.ok());
      CHECK(r.sum == Tuple{3});
      CHECK(r.expected_off_kernel == 2);
    }
  }
  SUBCASE("over the sampled squares") {
    for (auto gens : {std::vector<Tuple>{{1, 5}}, std::vector<Tuple>{{1, 1}, {0, 3}}}) {
      Subpower d = square_from(a, gens);
      for (SplitPolarity pol : {SplitPolarity::lex_min, SplitPolarity::lex_max}) {
        SumIdentityReport r = verify_sum_identity(a, d, pol);
        CHECK(r.ok());
        CHECK(r.sum == Tuple{3, 3});
      }
    }
  }
  SUBCASE("over the full square the off-kernel count is 6 per coordinate") {
    std::vector<Tuple> all;
    for (Element x = 0; x < 6; ++x)
      for (Element y = 0; y < 6; ++y) all.push_back({x, y});
    Subpower d = square_from(a, std::move(all));
    SumIdentityReport r = verify_sum_identity(a, d);
    CHECK(r.ok());
    CHECK(r.expected_off_kernel == 6);
    CHECK(r.off_kernel_counts == std::vector<std::size_t>{6, 6});
  }
  SUBCASE("non-subdirect inputs are rejected") {
    Subpower d = square_from(a, {{0, 0}, {3, 3}});
    CHECK_THROWS_AS(verify_sum_identity(a, d), std::invalid_argument);
  }
}

TEST_CASE("ideal obstruction") {
  FiniteAlgebra a = builtin_algebra("paper-z6");
  SUBCASE("vacuous over the algebra itself: no two-class congruence exists") {
    IdealObstructionReport r = verify_ideal_obstruction(a, universe_subpower(a));
    CHECK(r.ok);
    CHECK(r.vacuous);
    CHECK(r.two_class_congruences == 0);
  }
  SUBCASE("the anti-diagonal square is isomorphic to the algebra: vacuous") {
    IdealObstructionReport r = verify_ideal_obstruction(a, square_from(a, {{1, 5}}));
    CHECK(r.ok);
    CHECK(r.vacuous);
  }
  SUBCASE("the diagonal square is isomorphic to the algebra: vacuous") {
    std::vector<Tuple> diag;
    for (Element x = 0; x < 6; ++x) diag.push_back({x, x});
    IdealObstructionReport r = verify_ideal_obstruction(a, square_from(a, diag));
    CHECK(r.ok);
    CHECK(r.vacuous);
  }
  SUBCASE("the twelve-element square keeps c inside every applicable ideal") {
    Subpower d = square_from(a, {{1, 1}, {0, 3}});
    CHECK(d.size() == 12);
    IdealObstructionReport r = verify_ideal_obstruction(a, d);
    CHECK(r.ok);
  }
  SUBCASE("quotients by applicable congruences satisfy c = 0") {
    Subpower d = square_from(a, {{1, 1}, {0, 3}});
    FiniteAlgebra abstract = d.as_algebra("d12");
    SylowSlice slice = sylow3(a, d);
    Tuple zero_tuple{0, 0};
    Element zero_id = static_cast<Element>(*d.find(zero_tuple));
    for (const Partition& delta : congruence_lattice(abstract)) {
      if (delta.block_count() != 2) continue;
      bool applicable = true;
      for (const Tuple& t : slice.v3)
        if (!delta.related(static_cast<Element>(*d.find(t)), zero_id)) applicable = false;
      if (!applicable) continue;
      FiniteAlgebra q = quotient_algebra(abstract, delta);
      Element c_class = q.eval("c", {});
      Element c_args[] = {c_class, c_class};
      Element zero_class = q.eval("+", c_args);
      CHECK(c_class == zero_class);
    }
  }
  SUBCASE("bound and subdirectness preconditions") {
    std::vector<Tuple> all;
    for (Element x = 0; x < 6; ++x)
      for (Element y = 0; y < 6; ++y) all.push_back({x, y});
    Subpower d = square_from(a, std::move(all));
    CHECK_THROWS_AS(verify_ideal_obstruction(a, d, 16), std::invalid_argument);
    Subpower diag_b = square_from(a, {{0, 0}, {3, 3}});
    CHECK_THROWS_AS(verify_ideal_obstruction(a, diag_b), std::invalid_argument);
  }
}

TEST_CASE("the full example suite passes and is deterministic") {
  ExampleReport report = verify_z6_example();
  CHECK(report.all_ok());
  CHECK(report.checks.size() >= 15);

  bool witness_found = false;
  for (const ExampleCheck& c : report.checks)
    if (c.section == "supernilpotence" && c.status == CheckStatus::pass &&
        c.name == "class-2 witness search")
      witness_found = true;
  CHECK(witness_found);

  std::string first = report.to_text();
  CHECK(first.find("suite: PASS") != std::string::npos);
  CHECK(verify_z6_example().to_text() == first);
}
