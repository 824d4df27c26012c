#include <sstream>

#include "doctest.h"
#include "edqc/analysis.hpp"
#include "edqc/graph.hpp"
#include "edqc/io.hpp"
#include "edqc/rng.hpp"
#include "test_helpers.hpp"

using namespace edqc;
using edqc::testing::complete;
using edqc::testing::k4_minus_edge;
using edqc::testing::path;
using edqc::testing::triangle;

TEST_CASE("build_graph collapses duplicates and drops self-loops") {
  Graph g = Graph::from_edges({{0, 1}, {1, 0}, {1, 1}});
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge(0, 1));
}

TEST_CASE("build_graph handles the empty edge list") {
  Graph g = Graph::from_edges({});
  CHECK(g.vertex_count() == 0);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("build_graph on K5") {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  for (std::uint64_t u = 0; u < 5; ++u)
    for (std::uint64_t v = u + 1; v < 5; ++v) edges.push_back({u, v});
  Graph g = Graph::from_edges(edges);
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 10);
  CHECK(g.max_degree() == 4);
}

TEST_CASE("non-dense labels are relabeled with the mapping retained") {
  Graph g = Graph::from_edges({{100, 7}, {7, 100000}});
  CHECK(g.vertex_count() == 3);
  CHECK(g.original_label(0) == 7);
  CHECK(g.original_label(1) == 100);
  CHECK(g.original_label(2) == 100000);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(0, 2));
  CHECK(!g.has_edge(1, 2));
}

TEST_CASE("a label seen only in self-loops is dropped") {
  Graph g = Graph::from_edges({{0, 1}, {2, 2}});
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
}

TEST_CASE("graph invariants hold on random instances") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    Graph g = gen_er(60, 0.15, seed);
    std::uint64_t degree_sum = 0;
    std::uint32_t max_deg = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      auto nbrs = g.neighbors(v);
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        if (i > 0) CHECK(nbrs[i - 1] < nbrs[i]);  // strictly ascending, no duplicates
        CHECK(nbrs[i] != v);
        CHECK(g.has_edge(nbrs[i], v));  // symmetry
      }
      degree_sum += nbrs.size();
      max_deg = std::max<std::uint32_t>(max_deg, g.degree(v));
    }
    CHECK(degree_sum == 2 * g.edge_count());
    CHECK(max_deg == g.max_degree());
  }
}

TEST_CASE("rebuilding from the edge list reproduces the graph") {
  Graph g = gen_er(40, 0.2, 9);
  Graph h = Graph::from_edges(g.edge_list());
  CHECK(h.vertex_count() == g.vertex_count());
  CHECK(h.edge_count() == g.edge_count());
  CHECK(h.edge_list() == g.edge_list());
}

TEST_CASE("subset density is exact") {
  Graph g = k4_minus_edge();
  std::vector<VertexId> all{0, 1, 2, 3};
  CHECK(subset_density(g, all) == Rational{5, 6});  // a valid 0.8-quasi-clique

  Graph k5 = complete(5);
  std::vector<VertexId> s5{0, 1, 2, 3, 4};
  CHECK(subset_density(k5, s5) == Rational{1, 1});

  Graph p3 = path(3);
  std::vector<VertexId> s3{0, 1, 2};
  CHECK(subset_density(p3, s3) == Rational{2, 3});
}

TEST_CASE("density convention for tiny subsets") {
  Graph g = path(3);
  std::vector<VertexId> one{1};
  std::vector<VertexId> none{};
  CHECK(subset_density(g, one) == Rational{1, 1});
  CHECK(subset_density(g, none) == Rational{1, 1});
}

TEST_CASE("density equals 1 exactly when the subgraph is complete") {
  RandomStream rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = gen_er(20, 0.4, 100 + trial);
    std::vector<VertexId> s;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (rng.next_below(3) == 0) s.push_back(v);
    if (s.size() < 2) continue;
    Rational d = subset_density(g, s);
    CHECK(d.value() >= 0.0);
    CHECK(d.value() <= 1.0);
    bool is_complete = true;
    for (std::size_t i = 0; i < s.size() && is_complete; ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (!g.has_edge(s[i], s[j])) {
          is_complete = false;
          break;
        }
    CHECK((d == Rational{1, 1}) == is_complete);
  }
}

TEST_CASE("tracker updates match the examples") {
  SUBCASE("triangle") {
    Graph g = triangle();
    SubsetDensityTracker t(g);
    t.add(0);
    t.add(1);
    CHECK(t.internal_edges() == 1);
    t.add(2);
    CHECK(t.internal_edges() == 3);
  }
  SUBCASE("star leaves share no edges") {
    Graph g = edqc::testing::star(4);
    SubsetDensityTracker t(g);
    t.add(0);
    t.add(1);
    CHECK(t.internal_edges() == 1);
    t.add(2);  // second leaf adds only the center edge
    CHECK(t.internal_edges() == 2);
    t.remove(0);
    CHECK(t.internal_edges() == 0);
  }
  SUBCASE("K4 minus an edge") {
    Graph g = k4_minus_edge();
    SubsetDensityTracker t(g);
    t.add(0);
    t.add(1);
    t.add(2);  // mutually adjacent triple
    CHECK(t.internal_edges() == 3);
    t.add(3);
    CHECK(t.internal_edges() == 5);
  }
  SUBCASE("removal mirrors") {
    Graph g = triangle();
    SubsetDensityTracker t(g);
    t.add(0);
    t.add(1);
    t.add(2);
    t.remove(1);
    CHECK(t.internal_edges() == 1);
    SubsetDensityTracker single(g);
    single.add(2);
    single.remove(2);
    CHECK(single.size() == 0);
    CHECK(single.internal_edges() == 0);
  }
}

TEST_CASE("tracker contract violations throw") {
  Graph g = triangle();
  SubsetDensityTracker t(g);
  t.add(0);
  CHECK_THROWS_AS(t.add(0), std::invalid_argument);
  CHECK_THROWS_AS(t.remove(1), std::invalid_argument);
}

TEST_CASE("tracker always equals the brute recount") {
  RandomStream rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = gen_er(10 + trial * 2, 0.25, 500 + trial);
    SubsetDensityTracker t(g);
    std::vector<VertexId> members;
    for (int step = 0; step < 60; ++step) {
      bool removing = !members.empty() && rng.next_below(3) == 0;
      if (removing) {
        std::size_t i = rng.next_below(members.size());
        VertexId v = members[i];
        members.erase(members.begin() + i);
        t.remove(v);
      } else {
        VertexId v = static_cast<VertexId>(rng.next_below(g.vertex_count()));
        if (t.contains(v)) continue;
        std::uint64_t before = t.internal_edges();
        t.add(v);
        t.remove(v);
        CHECK(t.internal_edges() == before);  // add then remove restores the state
        t.add(v);
        members.push_back(v);
      }
      CHECK(t.internal_edges() == count_internal_edges(g, members));
      CHECK(t.size() == members.size());
    }
  }
}

TEST_CASE("edge-list loader") {
  SUBCASE("comments and a path") {
    std::istringstream in("# comment\n0 1\n1 2\n");
    Graph g = load_edge_list(in);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
  }
  SUBCASE("extra columns are ignored") {
    std::istringstream in("0 1 5.0\n");
    Graph g = load_edge_list(in);
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
  }
  SUBCASE("malformed token reports the line") {
    std::istringstream in("0 x\n");
    CHECK_THROWS_WITH_AS(load_edge_list(in), doctest::Contains("line 1"), ParseError);
  }
  SUBCASE("malformed token on a later line") {
    std::istringstream in("% header\n0 1\n2 potato\n");
    try {
      load_edge_list(in);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("label overflow is rejected") {
    std::istringstream in("99999999999999999999999 1\n");
    CHECK_THROWS_AS(load_edge_list(in), ParseError);
  }
  SUBCASE("negative labels are rejected") {
    std::istringstream in("-1 2\n");
    CHECK_THROWS_AS(load_edge_list(in), ParseError);
  }
}

TEST_CASE("MatrixMarket loader keeps the declared universe") {
  std::istringstream in(
      "%%MatrixMarket matrix coordinate pattern symmetric\n"
      "% a comment\n"
      "5 5 3\n"
      "2 1\n"
      "3 1\n"
      "3 2\n");
  Graph g = load_matrix_market(in);
  CHECK(g.vertex_count() == 5);  // vertices 4 and 5 stay as degree-0
  CHECK(g.edge_count() == 3);
  CHECK(g.degree(3) == 0);
  CHECK(g.degree(4) == 0);
  CHECK(g.has_edge(0, 1));
}

TEST_CASE("MatrixMarket round-trip preserves the graph") {
  Graph g = gen_er(30, 0.1, 11);
  std::ostringstream out;
  write_matrix_market(g, out);
  std::istringstream in(out.str());
  Graph h = load_matrix_market(in);
  CHECK(h.vertex_count() == g.vertex_count());
  CHECK(h.edge_count() == g.edge_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK(h.degree(v) == g.degree(v));
}
