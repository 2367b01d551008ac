#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "circnet/network.hpp"

#include <random>

#include "circnet/randomnet.hpp"
#include "circnet/walks.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace circnet;
using circnet::testing::load_fixture;

TEST_CASE("fig1 parses with the documented boundary structure") {
  Network n = load_fixture("fig1.json");
  CHECK(n.n() == 5);
  CHECK(n.source_positions() == std::vector<int>{1, 4});
  CHECK(n.interior.size() == 13);
  CHECK(n.edges.size() == 22);
  CHECK(validate(n).empty());
  CHECK(is_perfectly_oriented(n));
}

TEST_CASE("fig6 parses in non-planar mode") {
  Network n = load_fixture("fig6.json");
  CHECK(n.n() == 4);
  CHECK(n.source_positions() == std::vector<int>{1, 4});
  CHECK_FALSE(n.planar);
  CHECK(validate(n).empty());
  CHECK(is_perfectly_oriented(n));
}

TEST_CASE("round trip: parse then serialize is stable") {
  for (auto* file : {"fig1.json", "fig6.json"}) {
    Network n = load_fixture(file);
    std::string once = serialize_network(n);
    Network again = parse_network(once);
    CHECK(serialize_network(again) == once);
  }
}

TEST_CASE("empty network is valid") {
  Network n;
  n.name = "empty";
  n.planar = true;
  n.boundary = {{"b1", Role::Source}, {"b2", Role::Sink}};
  CHECK(validate(n).empty());
  CHECK(is_perfectly_oriented(n));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_network("{"), Error);
  CHECK_THROWS_AS(parse_network("{\"planar\": true}"), Error);

  // Boundary vertex of degree 2.
  std::string doc = R"({
    "name": "bad", "planar": true,
    "boundary": [{"id": "b1", "role": "source"}, {"id": "b2", "role": "sink"}],
    "interior": ["v"],
    "edges": [{"id": "e1", "tail": "b1", "head": "v", "weight": "e1"},
              {"id": "e2", "tail": "b1", "head": "v", "weight": "e2"}],
    "rotation": {"v": [["e1", "head"], ["e2", "head"]]}
  })";
  try {
    parse_network(doc);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BoundaryDegree);
  }
}

TEST_CASE("validate reports dangling vertices and duplicate ids") {
  Network n;
  n.planar = false;
  n.boundary = {{"b1", Role::Source}, {"b2", Role::Sink}};
  n.edges = {{"e1", "b1", "ghost", WeightExpr::variable("e1")}};
  auto v = validate(n);
  REQUIRE(v.size() == 1);
  CHECK(v[0].code == Errc::DanglingVertex);

  Network d;
  d.planar = false;
  d.boundary = {{"b1", Role::Source}, {"b1", Role::Sink}};
  auto vd = validate(d);
  REQUIRE(vd.size() == 1);
  CHECK(vd[0].code == Errc::DuplicateId);
}

TEST_CASE("planar mode demands a consistent rotation") {
  Network n = load_fixture("fig1.json");
  n.rotation.erase("u5");
  auto v = validate(n);
  REQUIRE(!v.empty());
  CHECK(v[0].code == Errc::MissingRotation);

  Network m = load_fixture("fig1.json");
  std::swap(m.rotation["u5"], m.rotation["u6"]);
  CHECK(!validate(m).empty());

  Network f6 = load_fixture("fig6.json");
  f6.rotation["u1"] = {};
  CHECK(!validate(f6).empty());  // rotation forbidden off planar mode
}

TEST_CASE("perfectly oriented predicate") {
  // 2-in 2-out interior vertex.
  Network n;
  n.planar = false;
  n.boundary = {{"b1", Role::Source},
                {"b2", Role::Source},
                {"b3", Role::Sink},
                {"b4", Role::Sink}};
  n.interior = {"v", "w"};
  n.edges = {{"e1", "b1", "v", WeightExpr::variable("e1")},
             {"e2", "b2", "v", WeightExpr::variable("e2")},
             {"e3", "v", "b3", WeightExpr::variable("e3")},
             {"e4", "v", "b4", WeightExpr::variable("e4")},
             {"e5", "v", "w", WeightExpr::variable("e5")},
             {"e6", "w", "v", WeightExpr::variable("e6")}};
  CHECK_FALSE(is_perfectly_oriented(n));

  // Invariance under relabeling of interior vertices and edges.
  Network relabeled = load_fixture("fig1.json");
  for (auto& e : relabeled.edges) e.id = "E_" + e.id;
  for (auto& [v, rot] : relabeled.rotation)
    for (auto& h : rot) h.edge = "E_" + h.edge;
  CHECK(is_perfectly_oriented(relabeled));
}

TEST_CASE("blowup vertices") {
  CHECK(blowup_vertices(load_fixture("fig1.json")).empty());
  CHECK(blowup_vertices(circnet::testing::star4()) == std::set<std::string>{"v"});

  // 4-valent with pattern in,in,out,out: two switches only.
  Network n = circnet::testing::star4();
  n.edges = {{"x1", "b1", "v", WeightExpr::variable("x1")},
             {"x2", "b3", "v", WeightExpr::variable("x2")},
             {"x3", "v", "b2", WeightExpr::variable("x3")},
             {"x4", "v", "b4", WeightExpr::variable("x4")}};
  n.rotation["v"] = {{"x1", EdgeEnd::Head},
                     {"x2", EdgeEnd::Head},
                     {"x3", EdgeEnd::Tail},
                     {"x4", EdgeEnd::Tail}};
  CHECK(blowup_vertices(n).empty());

  CHECK_THROWS_AS(blowup_vertices(load_fixture("fig6.json")), Error);
}

TEST_CASE("prune removes dead interior matter") {
  Network n = load_fixture("fig1.json");
  CHECK(serialize_network(prune_interior_sources_sinks(n)) == serialize_network(n));

  n.interior.push_back("island");
  n.rotation["island"] = {};
  Network pruned = prune_interior_sources_sinks(n);
  CHECK_FALSE(pruned.is_interior("island"));

  // A dead chain: interior sink fed by another interior vertex.
  Network m;
  m.planar = false;
  m.boundary = {{"b1", Role::Source}, {"b2", Role::Sink}};
  m.interior = {"v", "w", "x"};
  m.edges = {{"e1", "b1", "v", WeightExpr::variable("e1")},
             {"e2", "v", "b2", WeightExpr::variable("e2")},
             {"e3", "v", "w", WeightExpr::variable("e3")},
             {"e4", "w", "x", WeightExpr::variable("e4")}};
  Network mp = prune_interior_sources_sinks(m);
  CHECK(mp.interior == std::vector<std::string>{"v"});
  CHECK(mp.edges.size() == 2);
  // Walk sets between boundary vertices are untouched.
  auto before = enumerate_walks(m, 1, 2, 8);
  auto after = enumerate_walks(mp, 1, 2, 8);
  CHECK(before.size() == after.size());
  for (size_t i = 0; i < before.size(); ++i) CHECK(before[i] == after[i]);
}

TEST_CASE("degree-two suppression glues weights") {
  Network m;
  m.planar = false;
  m.boundary = {{"b1", Role::Source}, {"b2", Role::Sink}};
  m.interior = {"v"};
  m.edges = {{"e1", "b1", "v", parse_weight("u")},
             {"e2", "v", "b2", parse_weight("w")}};
  Network s = suppress_degree_two(m);
  CHECK(s.interior.empty());
  REQUIRE(s.edges.size() == 1);
  CHECK(s.edges[0].tail == "b1");
  CHECK(s.edges[0].head == "b2");
  CHECK(s.edges[0].weight.str() == "u*w");

  CHECK(serialize_network(suppress_degree_two(load_fixture("fig1.json"))) ==
        serialize_network(load_fixture("fig1.json")));

  // Chain of three degree-2 vertices collapses to one four-factor edge.
  Network c;
  c.planar = false;
  c.boundary = {{"b1", Role::Source}, {"b2", Role::Sink}};
  c.interior = {"v1", "v2", "v3"};
  c.edges = {{"e1", "b1", "v1", parse_weight("p")},
             {"e2", "v1", "v2", parse_weight("q")},
             {"e3", "v2", "v3", parse_weight("r")},
             {"e4", "v3", "b2", parse_weight("s")}};
  Network cs = suppress_degree_two(c);
  REQUIRE(cs.edges.size() == 1);
  CHECK(cs.edges[0].weight.str() == "p*q*r*s");
  // Measurement agrees after the weight-monomial substitution.
  CHECK(measurement_series(c, 1, 2, 6).poly == measurement_series(cs, 1, 2, 6).poly);

  // A loop at a degree-2 vertex is rejected rather than guessed at.
  Network l;
  l.planar = false;
  l.boundary = {{"b1", Role::Source}};
  l.interior = {"v"};
  l.edges = {{"e1", "v", "v", parse_weight("u")}};
  CHECK_THROWS_AS(suppress_degree_two(l), Error);
}

TEST_CASE("prune and suppress preserve measurement series on random networks") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Network n = random_network(NetKind::PerfectlyOriented, seed);
    // Grafting dead matter onto a live network must not change measurements.
    Network padded = n;
    padded.interior.push_back("zz_dead");
    if (padded.planar) padded.rotation["zz_dead"] = {};
    Network back = prune_interior_sources_sinks(padded);
    auto I = n.source_positions();
    for (int i : I)
      for (int j = 1; j <= n.n(); ++j)
        CHECK(measurement_series(n, i, j, 10).poly ==
              measurement_series(back, i, j, 10).poly);
  }
}

TEST_CASE("random generator emits the advertised shapes") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    Network po = random_network(NetKind::PerfectlyOriented, seed);
    CHECK(validate(po).empty());
    CHECK(is_perfectly_oriented(po));
    CHECK(po.planar);
    CHECK(po.edges.size() <= 22);

    Network gen = random_network(NetKind::General, seed);
    CHECK(validate(gen).empty());
    CHECK_FALSE(is_perfectly_oriented(gen));
    CHECK(gen.planar);

    Network ac = random_network(NetKind::Acyclic, seed);
    CHECK(validate(ac).empty());
    CHECK(is_perfectly_oriented(ac));

    Network np = random_network(NetKind::NonPlanar, seed);
    CHECK(validate(np).empty());
    CHECK(is_perfectly_oriented(np));
    CHECK_FALSE(np.planar);
  }
  // Determinism: same seed, same document.
  CHECK(serialize_network(random_network(NetKind::General, 5)) ==
        serialize_network(random_network(NetKind::General, 5)));
}
