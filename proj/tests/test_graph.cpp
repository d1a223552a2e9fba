#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "modcert/edgelist.hpp"
#include "modcert/errors.hpp"
#include "modcert/generators.hpp"
#include "modcert/graph.hpp"
#include "test_graphs.hpp"

using namespace modcert;
using modcert::testing::barbell;

namespace {

errc thrown_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected modcert::Error");
  return errc::too_large;
}

}  // namespace

TEST_CASE("build validates and computes degrees") {
  std::vector<std::pair<int, int>> k2 = {{0, 1}};
  Graph g = Graph::build(2, k2);
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(1) == 1);
  CHECK(g.volume() == 2);
  CHECK(g.edge_count() == 1);

  Graph k4 = make_complete(4);
  CHECK(k4.volume() == 12);
  CHECK(k4.edge_count() == 6);

  std::vector<std::pair<int, int>> dup = {{0, 1}, {0, 1}};
  CHECK(thrown_code([&] { Graph::build(3, dup); }) == errc::duplicate_edge);
  std::vector<std::pair<int, int>> rev_dup = {{0, 1}, {1, 0}};
  CHECK(thrown_code([&] { Graph::build(2, rev_dup); }) == errc::duplicate_edge);
  std::vector<std::pair<int, int>> loop = {{0, 0}};
  CHECK(thrown_code([&] { Graph::build(1, loop); }) == errc::self_loop);
  std::vector<std::pair<int, int>> range = {{0, 3}};
  CHECK(thrown_code([&] { Graph::build(3, range); }) == errc::index_out_of_range);
  std::vector<std::pair<int, int>> iso = {{0, 1}};
  CHECK(thrown_code([&] { Graph::build(3, iso); }) == errc::isolated_vertex);
}

TEST_CASE("vertex sets cache size and volume") {
  Graph g = barbell();
  std::vector<int> bad = {0, 6};
  CHECK(thrown_code([&] { VertexSet(g, bad); }) == errc::index_out_of_range);
  std::vector<int> vs = {0, 1, 2};
  VertexSet s(g, vs);
  CHECK(s.size() == 3);
  CHECK(s.volume() == 7);
  VertexSet c = s.complement(g);
  CHECK(c.size() == 3);
  CHECK(c.volume() == 7);
  CHECK(s.volume() + c.volume() == g.volume());
  CHECK(c.vertices() == std::vector<int>{3, 4, 5});
  CHECK(!c.contains(0));
  CHECK(c.contains(3));
}

TEST_CASE("edge counts between sets") {
  Graph g = barbell();
  std::vector<int> left = {0, 1, 2}, right = {3, 4, 5};
  VertexSet s(g, left), t(g, right);
  CHECK(edge_count_between(g, s, t) == 1);
  CHECK(internal_edge_ends(g, s) == 6);
  CHECK(boundary_edge_count(g, s) == 1);
  VertexSet all = VertexSet::full_set(g);
  CHECK(edge_count_between(g, all, all) == g.volume());
}

TEST_CASE("connectivity and bipartiteness") {
  CHECK(is_connected(make_complete(4)));
  CHECK(!is_bipartite(make_complete(4)));
  CHECK(is_connected(make_cycle(4)));
  CHECK(is_bipartite(make_cycle(4)));
  std::vector<std::pair<int, int>> disjoint = {{0, 1}, {2, 3}};
  Graph two_edges = Graph::build(4, disjoint);
  CHECK(!is_connected(two_edges));
  CHECK(is_bipartite(two_edges));
}

TEST_CASE("structure classification") {
  Classification c4 = classify_structure(make_cycle(4));
  CHECK(c4.kind == StructureKind::CompleteMultipartite);
  REQUIRE(c4.parts.size() == 2);
  CHECK(c4.parts[0] == std::vector<int>{0, 2});
  CHECK(c4.parts[1] == std::vector<int>{1, 3});

  CHECK(classify_structure(make_star(4)).kind == StructureKind::Star);
  CHECK(classify_structure(make_path(3)).kind == StructureKind::Star);  // P_3 = K_{1,2}
  CHECK(classify_structure(make_complete(2)).kind == StructureKind::Star);  // priority
  CHECK(classify_structure(make_complete(5)).kind == StructureKind::Complete);
  CHECK(classify_structure(barbell()).kind == StructureKind::Other);
  CHECK(classify_structure(make_path(5)).kind == StructureKind::Other);

  std::vector<std::pair<int, int>> disjoint = {{0, 1}, {2, 3}};
  Graph two_edges = Graph::build(4, disjoint);
  CHECK(thrown_code([&] { classify_structure(two_edges); }) == errc::disconnected);
}

TEST_CASE("classification of generated complete multipartite graphs") {
  std::vector<std::vector<int>> size_lists = {{2, 2}, {2, 3}, {1, 2, 3}, {3, 3, 3}, {1, 1, 4},
                                              {2, 2, 2, 2}};
  for (const auto& sizes : size_lists) {
    Graph g = make_complete_multipartite(sizes);
    Classification cls = classify_structure(g);
    CHECK(cls.kind != StructureKind::Other);
    // part sizes are recovered up to order
    std::multiset<std::size_t> expected(sizes.begin(), sizes.end());
    std::multiset<std::size_t> got;
    for (const auto& part : cls.parts) got.insert(part.size());
    CHECK(expected == got);
  }
  std::vector<int> all_singletons = {1, 1, 1, 1};
  CHECK(classify_structure(make_complete_multipartite(all_singletons)).kind ==
        StructureKind::Complete);
  std::vector<int> star_sizes = {1, 5};
  CHECK(classify_structure(make_complete_multipartite(star_sizes)).kind == StructureKind::Star);
}

TEST_CASE("generators") {
  CHECK(make_complete(4).edge_count() == 6);
  std::vector<int> s22 = {2, 2};
  Graph cm = make_complete_multipartite(s22);
  CHECK(cm.edge_count() == 4);
  for (int v = 0; v < 4; ++v) CHECK(cm.degree(v) == 2);
  CHECK(make_cycle(3).edge_count() == 3);
  CHECK(make_path(5).edge_count() == 4);
  CHECK(make_star(6).degree(0) == 5);

  CHECK(thrown_code([] { make_complete(1); }) == errc::too_small);
  CHECK(thrown_code([] { make_cycle(2); }) == errc::too_small);
  std::vector<int> one_part = {4};
  CHECK(thrown_code([&] { make_complete_multipartite(one_part); }) == errc::too_small);
}

TEST_CASE("planted partition density and determinism") {
  std::vector<int> sizes = {10, 10};
  Graph g = make_planted_partition(sizes, 0.9, 0.05, 1);
  CHECK(is_connected(g));
  long long within = 0, across = 0;
  for (const auto& [u, v] : g.edges()) {
    bool same = (u < 10) == (v < 10);
    (same ? within : across) += 1;
  }
  // 90 within-pairs per block at 0.9 vs 100 cross pairs at 0.05
  CHECK(within > 4 * across);

  Graph again = make_planted_partition(sizes, 0.9, 0.05, 1);
  CHECK(g.edges() == again.edges());
  Graph other = make_planted_partition(sizes, 0.9, 0.05, 2);
  CHECK(g.edges() != other.edges());
}

TEST_CASE("edge list parsing") {
  Graph path = read_edge_list("0 1\n1 2\n");
  CHECK(path.vertex_count() == 3);
  CHECK(path.edge_count() == 2);

  Graph k2 = read_edge_list("# comment\n0 1\n");
  CHECK(k2.vertex_count() == 2);

  Graph with_header = read_edge_list("#n 3\n0 1\n1 2\n");
  CHECK(with_header.vertex_count() == 3);

  CHECK(thrown_code([] { read_edge_list("0 0\n"); }) == errc::self_loop);
  CHECK(thrown_code([] { read_edge_list("0 1\nnope\n"); }) == errc::parse_error);
  CHECK(thrown_code([] { read_edge_list("0 1 2\n"); }) == errc::parse_error);
  CHECK(thrown_code([] { read_edge_list(""); }) == errc::parse_error);

  try {
    read_edge_list("0 1\n\n0 two\n");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("edge list round trip is a fixpoint on the corpus") {
  for (const auto& [name, g] : modcert::testing::corpus()) {
    CAPTURE(name);
    std::string once = write_edge_list(g);
    Graph parsed = read_edge_list(once);
    CHECK(write_edge_list(parsed) == once);
    CHECK(parsed.vertex_count() == g.vertex_count());
    CHECK(parsed.edges() == g.edges());
  }
}

TEST_CASE("degree sum and cut volume identities on random subsets") {
  std::mt19937_64 rng(42);
  for (const auto& [name, g] : modcert::testing::corpus()) {
    CAPTURE(name);
    long long degree_sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v) degree_sum += g.degree(v);
    CHECK(degree_sum == 2 * g.edge_count());

    for (int trial = 0; trial < 100; ++trial) {
      std::vector<int> members;
      for (int v = 0; v < g.vertex_count(); ++v)
        if (rng() & 1) members.push_back(v);
      VertexSet s(g, members);
      CHECK(internal_edge_ends(g, s) + boundary_edge_count(g, s) == s.volume());
    }
  }
}
