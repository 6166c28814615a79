#include <doctest.h>

#include <cmath>

#include "support/graph_gen.hpp"
#include "wstream/errors.hpp"
#include "wstream/metrics.hpp"

using namespace wstream;

TEST_CASE("edge_cut counts each undirected edge once") {
    const AdjacencyGraph path = build_adjacency(parse_edge_list("1 2\n2 3\n3 4\n"));

    SUBCASE("half-half split of the path cuts one of three edges") {
        PartitionState st(2, 0);
        st.assign(1, 0);
        st.assign(2, 0);
        st.assign(3, 1);
        st.assign(4, 1);
        const auto [cut, ratio] = edge_cut(path, st);
        CHECK(cut == 1);
        CHECK(ratio == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    }
    SUBCASE("single partition cuts nothing") {
        PartitionState st(1, 0);
        for (const VertexId v : path.vertices()) {
            st.assign(v, 0);
        }
        const auto [cut, ratio] = edge_cut(path, st);
        CHECK(cut == 0);
        CHECK(ratio == 0.0);
    }
    SUBCASE("triangle with singleton partitions cuts everything") {
        const AdjacencyGraph tri = build_adjacency(parse_edge_list("1 2\n2 3\n3 1\n"));
        PartitionState st(3, 0);
        st.assign(1, 0);
        st.assign(2, 1);
        st.assign(3, 2);
        const auto [cut, ratio] = edge_cut(tri, st);
        CHECK(cut == 3);
        CHECK(ratio == 1.0);
    }
    SUBCASE("unassigned vertex is named in the error") {
        PartitionState st(2, 0);
        st.assign(1, 0);
        st.assign(2, 0);
        st.assign(3, 1);
        CHECK_THROWS_WITH_AS(edge_cut(path, st), "vertex 4 is unassigned", DataError);
    }
    SUBCASE("empty graph has ratio zero") {
        const AdjacencyGraph empty = build_adjacency(EdgeList{});
        const PartitionState st(2, 0);
        const auto [cut, ratio] = edge_cut(empty, st);
        CHECK(cut == 0);
        CHECK(ratio == 0.0);
    }
}

TEST_CASE("load_imbalance is the population standard deviation") {
    CHECK(load_imbalance({10, 10}) == 0.0);
    CHECK(load_imbalance({1, 3}) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(load_imbalance({0, 4}) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(load_imbalance({5}) == 0.0);
    CHECK_THROWS_AS(load_imbalance({}), ConfigError);

    SUBCASE("shifting every load leaves it unchanged") {
        const std::vector<std::uint64_t> base{3, 9, 4, 12};
        const double reference = load_imbalance(base);
        std::vector<std::uint64_t> shifted;
        for (const std::uint64_t v : base) {
            shifted.push_back(v + 17);
        }
        CHECK(load_imbalance(shifted) == doctest::Approx(reference).epsilon(1e-12));
    }
    SUBCASE("scaling every load scales it linearly") {
        const std::vector<std::uint64_t> base{3, 9, 4, 12};
        const double reference = load_imbalance(base);
        std::vector<std::uint64_t> scaled;
        for (const std::uint64_t v : base) {
            scaled.push_back(v * 5);
        }
        CHECK(load_imbalance(scaled) == doctest::Approx(5.0 * reference).epsilon(1e-12));
    }
}

TEST_CASE("fast edge-cut path equals brute force over the edge list") {
    for (const std::uint64_t seed : {81ULL, 82ULL, 83ULL}) {
        const EdgeList edges = testgen::erdos_renyi(150, 0.08, seed);
        const AdjacencyGraph g = build_adjacency(edges);
        RunSpec spec;
        spec.algorithm = Algorithm::wstream;
        spec.k = 4;
        spec.window = 10;
        spec.slack = 3;
        spec.seed = seed;
        spec.order = StreamOrder::uniform_random(seed);
        const auto [st, report] = measure_run_with_state(g, spec);

        std::uint64_t brute = 0;
        for (const Edge& e : edges.edges) {
            if (st.partition_of(e.first) != st.partition_of(e.second)) {
                ++brute;
            }
        }
        CHECK(report.cut_edges == brute);
        CHECK(report.edge_cut_ratio >= 0.0);
        CHECK(report.edge_cut_ratio <= 1.0);
    }
}

TEST_CASE("edge-cut ratio is invariant under partition relabeling") {
    const AdjacencyGraph g = build_adjacency(testgen::erdos_renyi(100, 0.08, 91));
    RunSpec spec;
    spec.k = 3;
    spec.window = 8;
    spec.slack = 2;
    spec.seed = 7;
    spec.order = StreamOrder::uniform_random(7);
    const auto [st, report] = measure_run_with_state(g, spec);

    PartitionState relabeled(st.k(), st.slack());
    for (const auto& [v, p] : st.assignment()) {
        relabeled.assign(v, (p + 1) % st.k()); // cyclic relabeling
    }
    CHECK(edge_cut(g, relabeled).first == report.cut_edges);
}

TEST_CASE("measure_run") {
    const AdjacencyGraph g = build_adjacency(testgen::erdos_renyi(200, 0.04, 101));

    SUBCASE("single partition reports zero cut and zero imbalance") {
        RunSpec spec;
        spec.k = 1;
        spec.window = 4;
        spec.slack = 0;
        const QualityReport r = measure_run(g, spec);
        CHECK(r.edge_cut_ratio == 0.0);
        CHECK(r.load_imbalance == 0.0);
        CHECK(r.elapsed_seconds >= 0.0);
    }
    SUBCASE("same seed reproduces everything except wall time") {
        RunSpec spec;
        spec.k = 4;
        spec.window = 12;
        spec.slack = 5;
        spec.seed = 3;
        spec.order = StreamOrder::uniform_random(3);
        const QualityReport a = measure_run(g, spec);
        const QualityReport b = measure_run(g, spec);
        CHECK(a.cut_edges == b.cut_edges);
        CHECK(a.edge_cut_ratio == b.edge_cut_ratio);
        CHECK(a.load_imbalance == b.load_imbalance);
        CHECK(a.loads == b.loads);
    }
    SUBCASE("every algorithm fills the report") {
        for (const Algorithm algo :
             {Algorithm::wstream, Algorithm::ldg, Algorithm::hashing}) {
            RunSpec spec;
            spec.algorithm = algo;
            spec.k = 4;
            spec.window = 8;
            spec.slack = 10;
            spec.seed = 5;
            spec.order = StreamOrder::uniform_random(5);
            const QualityReport r = measure_run(g, spec);
            std::uint64_t total = 0;
            for (const std::uint64_t load : r.loads) {
                total += load;
            }
            CHECK(total == g.n());
            CHECK(r.edge_cut_ratio >= 0.0);
            CHECK(r.edge_cut_ratio <= 1.0);
        }
    }
}

TEST_CASE("replica-scale imbalance stays within the slack-forced envelope") {
    // With slack 100 the per-step gap never exceeds 100, which caps the
    // population standard deviation at 50. The published measurement for
    // this configuration is a single-digit value; seeds vary.
    const AdjacencyGraph g = testgen::dataset_or_replica("grqc");
    RunSpec spec;
    spec.algorithm = Algorithm::wstream;
    spec.k = 16;
    spec.window = 100;
    spec.slack = 100;
    spec.seed = 1;
    spec.order = StreamOrder::uniform_random(1);
    const QualityReport r = measure_run(g, spec);
    CHECK(r.load_imbalance <= 50.0);
}

TEST_CASE("algorithm names round-trip") {
    for (const Algorithm algo :
         {Algorithm::wstream, Algorithm::ldg, Algorithm::hashing}) {
        CHECK(algorithm_from_name(algorithm_name(algo)) == algo);
    }
    CHECK_THROWS_AS(algorithm_from_name("metis"), ConfigError);
}
