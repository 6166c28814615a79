#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>

#include <zlib.h>

#include "support/graph_gen.hpp"
#include "wstream/errors.hpp"
#include "wstream/graph.hpp"

using namespace wstream;

namespace {

std::vector<VertexId> stream_ids(const AdjacencyGraph& g, const StreamOrder& order) {
    VertexStream s = make_stream(g, order);
    std::vector<VertexId> ids;
    while (auto rec = s.next()) {
        ids.push_back(rec->id);
    }
    return ids;
}

} // namespace

TEST_CASE("parse_edge_list normalizes input") {
    SUBCASE("triangle transcribes directly") {
        const EdgeList e = parse_edge_list("1 2\n2 3\n3 1\n");
        CHECK(e.edges == std::vector<Edge>{{1, 2}, {2, 3}, {1, 3}});
    }
    SUBCASE("reversed duplicates merge, self-loops drop") {
        const EdgeList e = parse_edge_list("1 2\n2 1\n1 1\n");
        CHECK(e.edges == std::vector<Edge>{{1, 2}});
    }
    SUBCASE("comment lines skip") {
        const EdgeList e = parse_edge_list("# comment\n1 2\n");
        CHECK(e.edges == std::vector<Edge>{{1, 2}});
    }
    SUBCASE("empty input gives empty list") {
        CHECK(parse_edge_list("").edges.empty());
        CHECK(parse_edge_list("# only comments\n").edges.empty());
    }
    SUBCASE("tabs and extra whitespace accepted") {
        const EdgeList e = parse_edge_list("1\t2\n  2   3  \n");
        CHECK(e.edges == std::vector<Edge>{{1, 2}, {2, 3}});
    }
}

TEST_CASE("parse_edge_list rejects malformed lines with line numbers") {
    CHECK_THROWS_WITH_AS(parse_edge_list("1 2\nx 3\n"),
                         "vertex ids must be non-negative integers (line 2)",
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_edge_list("1 2 3\n"),
                         "expected two vertex ids, got 3 tokens (line 1)", ParseError);
    CHECK_THROWS_AS(parse_edge_list("1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("1 2\n\n-1 2\n"), ParseError);
    try {
        parse_edge_list("1 2\n2 3\nbad line here\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("build_adjacency produces symmetric sorted adjacency") {
    SUBCASE("path graph") {
        EdgeList e;
        e.add(1, 2);
        e.add(2, 3);
        const AdjacencyGraph g = build_adjacency(e);
        CHECK(g.n() == 3);
        CHECK(g.m() == 2);
        CHECK(g.neighbors(1) == std::vector<VertexId>{2});
        CHECK(g.neighbors(2) == std::vector<VertexId>{1, 3});
        CHECK(g.neighbors(3) == std::vector<VertexId>{2});
    }
    SUBCASE("triangle has all degrees 2") {
        const AdjacencyGraph g = build_adjacency(parse_edge_list("1 2\n2 3\n3 1\n"));
        for (const VertexId v : g.vertices()) {
            CHECK(g.degree(v) == 2);
        }
    }
    SUBCASE("empty list yields empty graph") {
        const AdjacencyGraph g = build_adjacency(EdgeList{});
        CHECK(g.n() == 0);
        CHECK(g.m() == 0);
    }
}

TEST_CASE("3elt dataset counts" * doctest::description("needs WSTREAM_DATA_DIR")) {
    const auto path = testgen::real_dataset_path("3elt");
    if (!path) {
        MESSAGE("skipped: real 3elt file not present");
        return;
    }
    const AdjacencyGraph g = build_adjacency(parse_edge_list_file(*path));
    CHECK(g.n() == 4200);
    CHECK(g.m() == 13722);
}

TEST_CASE("make_stream orders") {
    const AdjacencyGraph path = build_adjacency(parse_edge_list("1 2\n2 3\n"));

    SUBCASE("as-read preserves first-appearance order") {
        CHECK(stream_ids(path, StreamOrder::as_read()) ==
              std::vector<VertexId>{1, 2, 3});
    }
    SUBCASE("uniform random is deterministic per seed") {
        CHECK(stream_ids(path, StreamOrder::uniform_random(9)) ==
              stream_ids(path, StreamOrder::uniform_random(9)));
    }
    SUBCASE("triangle seed-1 permutation (pinned seeded Fisher-Yates)") {
        const AdjacencyGraph tri = build_adjacency(parse_edge_list("1 2\n2 3\n3 1\n"));
        VertexStream s = make_stream(tri, StreamOrder::uniform_random(1));
        std::vector<VertexRecord> records;
        while (auto rec = s.next()) {
            records.push_back(*rec);
        }
        REQUIRE(records.size() == 3);
        // mt19937_64(1) bounded draws: next_below(3)=2, then next_below(2)=0.
        // Fisher-Yates on [1,2,3]: swap(a[2],a[2]) then swap(a[1],a[0]) -> [2,1,3].
        CHECK(records[0].id == 2);
        CHECK(records[1].id == 1);
        CHECK(records[2].id == 3);
        for (const VertexRecord& r : records) {
            CHECK(r.neighbors.size() == 2);
        }
    }
    SUBCASE("each record carries the full adjacency list") {
        VertexStream s = make_stream(path, StreamOrder::as_read());
        while (auto rec = s.next()) {
            CHECK(rec->neighbors == path.neighbors(rec->id));
        }
    }
}

TEST_CASE("stream and adjacency invariants over random graphs") {
    for (const std::uint64_t seed : {11ULL, 12ULL, 13ULL, 14ULL}) {
        const EdgeList e = testgen::erdos_renyi(40 + 30 * seed, 0.08, seed);
        const AdjacencyGraph g = build_adjacency(e);

        // degree sum = 2m and symmetry
        std::size_t degree_sum = 0;
        for (const VertexId u : g.vertices()) {
            degree_sum += g.degree(u);
            CHECK(!std::binary_search(g.neighbors(u).begin(), g.neighbors(u).end(), u));
            for (const VertexId v : g.neighbors(u)) {
                const auto& back = g.neighbors(v);
                CHECK(std::binary_search(back.begin(), back.end(), u));
            }
        }
        CHECK(degree_sum == 2 * g.m());

        // stream covers every vertex exactly once
        std::vector<VertexId> ids = stream_ids(g, StreamOrder::uniform_random(seed));
        CHECK(ids.size() == g.n());
        std::vector<VertexId> sorted_ids = ids;
        std::sort(sorted_ids.begin(), sorted_ids.end());
        CHECK(std::adjacent_find(sorted_ids.begin(), sorted_ids.end()) ==
              sorted_ids.end());

        // different seeds are permutations of each other
        std::vector<VertexId> other = stream_ids(g, StreamOrder::uniform_random(seed + 1));
        std::sort(other.begin(), other.end());
        CHECK(other == sorted_ids);
    }
}

TEST_CASE("serialization round-trips") {
    const std::string text = "5 1\n1 2\n4 2\n2 5\n# note\n3 1\n";
    const EdgeList first = parse_edge_list(text);
    const std::string serialized = serialize_edge_list(first);
    const EdgeList second = parse_edge_list(serialized);

    CHECK(first.sorted_edges() == second.sorted_edges());
    CHECK(serialize_edge_list(second) == serialized);

    SUBCASE("serialized form is sorted canonical pairs") {
        CHECK(serialized == "1\t2\n1\t3\n1\t5\n2\t4\n2\t5\n");
    }
}

TEST_CASE("gz files decompress transparently") {
    const std::string plain_path = "test_graph_tmp.txt";
    const std::string gz_path = "test_graph_tmp.txt.gz";
    {
        std::ofstream out(plain_path);
        out << "1 2\n2 3\n3 1\n";
    }
    gzFile gz = gzopen(gz_path.c_str(), "wb");
    REQUIRE(gz != nullptr);
    const std::string content = "1 2\n2 3\n3 1\n";
    gzwrite(gz, content.data(), static_cast<unsigned>(content.size()));
    gzclose(gz);

    const EdgeList from_plain = parse_edge_list_file(plain_path);
    const EdgeList from_gz = parse_edge_list_file(gz_path);
    CHECK(from_plain.sorted_edges() == from_gz.sorted_edges());
    CHECK(from_gz.edges.size() == 3);

    std::remove(plain_path.c_str());
    std::remove(gz_path.c_str());

    CHECK_THROWS_AS(parse_edge_list_file("does_not_exist.txt"), IoError);
}
