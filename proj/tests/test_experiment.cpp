#include "doctest.h"

#include <algorithm>
#include <sstream>
#include <string>

#include "cascade/catalog.hpp"
#include "cascade/errors.hpp"
#include "cascade/experiment.hpp"
#include "cascade/io.hpp"
#include "helpers.hpp"

using namespace cascade;
using testing::edges1;

namespace {

std::string csv_of(const SweepConfig& cfg) {
    std::ostringstream os;
    write_csv(os, run_sweep(cfg).records);
    return os.str();
}

}  // namespace

TEST_SUITE("experiment") {

TEST_CASE("round-robin schedule") {
    const auto one = schedule_round_robin(4, 1, 9);
    REQUIRE(one.size() == 4);
    std::vector<NodeId> targets;
    for (const auto& iv : one) targets.push_back(*iv.target);
    std::sort(targets.begin(), targets.end());
    CHECK(targets == std::vector<NodeId>{0, 1, 2, 3});

    const auto three = schedule_round_robin(6, 3, 9);
    REQUIRE(three.size() == 18);
    for (std::size_t r = 0; r < 3; ++r) {
        std::vector<int> seen(6, 0);
        for (std::size_t k = 0; k < 6; ++k) ++seen[*three[r * 6 + k].target];
        CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
    }

    CHECK(schedule_round_robin(12, 2, 5) == schedule_round_robin(12, 2, 5));
    CHECK(schedule_round_robin(12, 2, 5) != schedule_round_robin(12, 2, 6));
    CHECK_THROWS_AS(schedule_round_robin(4, 0, 1), ArgumentError);
}

TEST_CASE("generate_dataset") {
    const auto chain = find_catalog("minimal_chain")->model();
    const auto d = generate_dataset(chain, 1, 0, 3);
    CHECK(d.n == 4);
    CHECK(d.episodes.size() == 4);

    const auto mixed = generate_dataset(chain, 2, 3, 3);
    REQUIRE(mixed.episodes.size() == 11);
    for (std::size_t e = 0; e < 8; ++e) CHECK_FALSE(mixed.episodes[e].intervention.is_observational());
    for (std::size_t e = 8; e < 11; ++e) CHECK(mixed.episodes[e].intervention.is_observational());

    // Blocking the root of the worked-example labeling silences everything.
    const auto pt = find_catalog("parallel_triggers_example")->model(0.1);
    std::ostringstream os;
    write_dataset(os, generate_dataset(pt, 1, 0, 0));
    CHECK(os.str().find("\n10 000000000000\n") != std::string::npos);
}

TEST_CASE("catalog edge lists are exact") {
    struct Golden {
        const char* name;
        std::size_t n;
        EdgeSet edges;
    };
    const std::vector<Golden> golden{
        {"minimal_chain", 4, edges1({{3, 4}, {4, 1}, {1, 2}})},
        {"sequential_chain", 11, edges1({{3, 9}, {9, 6}, {6, 8}, {8, 4}, {4, 7}, {7, 2}, {2, 1}, {1, 5}, {5, 10}, {10, 11}})},
        {"parallel_triggers", 12,
         edges1({{2, 10}, {10, 5}, {5, 9}, {9, 8}, {8, 1}, {1, 11}, {10, 6}, {6, 3}, {3, 4}, {4, 7}, {7, 12}})},
        {"intertwined_mechanisms", 13,
         edges1({{6, 3}, {3, 7}, {7, 5}, {3, 12}, {12, 10}, {10, 2}, {2, 13}, {13, 9}, {9, 8}, {8, 4}, {4, 11}, {11, 1}})},
        {"linear_slot_machine", 16,
         edges1({{11, 9}, {9, 13}, {13, 1}, {1, 4}, {4, 2}, {2, 7}, {7, 6}, {6, 3}, {3, 15}, {15, 16}, {16, 10}, {10, 12},
                 {12, 14}, {14, 5}, {5, 8}})},
        {"large_slot_machine", 24,
         edges1({{18, 9}, {9, 1}, {1, 12}, {12, 23}, {23, 21}, {21, 13}, {13, 17}, {9, 22}, {22, 8}, {9, 15}, {15, 6},
                 {6, 14}, {14, 20}, {20, 3}, {3, 24}, {24, 5}, {5, 19}, {19, 11}, {11, 16}, {16, 10}, {10, 4}, {4, 7},
                 {7, 2}})},
    };
    for (const auto& g : golden) {
        INFO(g.name);
        const auto entry = find_catalog(g.name);
        REQUIRE(entry);
        CHECK(entry->n == g.n);
        CHECK(entry->tree().size() == g.n);
        CHECK(entry->tree().edges() == g.edges);
        CHECK(entry->failure_prob == 0.0);
    }
    CHECK(find_catalog("synthetic_parallel_triggers_0.1")->tree() == find_catalog("parallel_triggers")->tree());
    CHECK(find_catalog("synthetic_large_slot_machine_0.1")->tree() == find_catalog("large_slot_machine")->tree());
    CHECK(find_catalog("synthetic_large_slot_machine_0.1")->failure_prob == 0.1);
    CHECK(find_catalog("parallel_triggers_example")->tree() == testing::parallel_triggers_example());
    CHECK_FALSE(find_catalog("nope"));
    CHECK_THROWS(parse_chains("1->"));
}

TEST_CASE("graph and model files") {
    std::istringstream g("# comment\nN 4\n3 4\n4 1  # trailing\n\n1 2\n");
    const auto tree = read_tree(g);
    CHECK(tree == testing::minimal_chain());

    std::ostringstream out;
    write_tree(out, tree);
    std::istringstream back(out.str());
    CHECK(read_tree(back) == tree);

    auto parse_error = [](const std::string& text) {
        std::istringstream in(text);
        try {
            (void)read_graph(in);
        } catch (const FormatError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(parse_error("3 4\n").find("line 1") != std::string::npos);
    CHECK(parse_error("N 3\n1 5\n").find("line 2") != std::string::npos);
    CHECK(parse_error("N 3\n1 x\n").find("line 2") != std::string::npos);
    CHECK(parse_error("N 3\n1 1\n") != "");
    CHECK(parse_error("") != "");

    std::istringstream not_tree("N 3\n1 2\n");
    CHECK_THROWS_AS(read_tree(not_tree), FormatError);

    std::istringstream model_text("N 3\nP * 0.25\n1 2\n2 3\n");
    const auto m = read_model(model_text);
    CHECK(m.uniform_failure() == 0.25);
    CHECK(m.success(2) == 0.75);
    std::istringstream per_node("N 2\n1 2\nP 2 0.5\n");
    const auto pm = read_model(per_node);
    CHECK(pm.success(1) == 0.5);
    CHECK(pm.success(0) == 1.0);
    std::istringstream bad_p("N 2\n1 2\nP 2 1.0\n");
    CHECK_THROWS_AS(read_model(bad_p), FormatError);
}

TEST_CASE("dataset and trace files") {
    std::istringstream in("N 4\n- 1111\n- 0101\n2 0001\n4 0000\n");
    const auto d = read_dataset(in);
    REQUIRE(d.episodes.size() == 4);
    CHECK(d.episodes[2].intervention == Intervention::block(1));
    CHECK(d.episodes[1].activations == testing::bits("0101"));

    std::istringstream short_row("N 4\n- 111\n");
    CHECK_THROWS_AS(read_dataset(short_row), FormatError);
    std::istringstream bad_target("N 4\n9 1111\n");
    CHECK_THROWS_AS(read_dataset(bad_target), FormatError);
    std::istringstream bad_bit("N 2\n- 12\n");
    CHECK_THROWS_AS(read_dataset(bad_bit), FormatError);

    std::istringstream scen("N 2\n1 2\nM 1 2 teleport 1\n");
    CHECK_THROWS_AS(read_scenario(scen), FormatError);
    std::istringstream partial("N 3\n1 2\n2 3\nM 1 2 contact 1\n");
    CHECK_THROWS_AS(read_scenario(partial), FormatError);
}

TEST_CASE("property: files round-trip") {
    for (std::uint64_t s = 0; s < 100; ++s) {
        const auto tree = random_tree(1 + s % 15, s);
        const auto model = CascadeModel::uniform(tree, 0.1 * static_cast<double>(s % 5));

        std::ostringstream mo;
        write_model(mo, model);
        std::istringstream mi(mo.str());
        const auto m2 = read_model(mi);
        REQUIRE(m2.tree() == tree);
        REQUIRE(m2.success() == model.success());

        const auto data = generate_dataset(model, 1 + s % 2, s % 3, s);
        std::ostringstream dout;
        write_dataset(dout, data);
        std::istringstream din(dout.str());
        const auto d2 = read_dataset(din);
        REQUIRE(d2.n == data.n);
        REQUIRE(d2.episodes == data.episodes);

        const auto mm = MechanizedModel::uniform(model, {MechanismKind::contact, 0.1 + 0.3 * static_cast<double>(s % 4)});
        const auto traces = simulate_observational_traces(mm, 3, s);
        std::ostringstream tout;
        write_traces(tout, traces);
        std::istringstream tin(tout.str());
        const auto t2 = read_traces(tin);
        REQUIRE(t2.traces.size() == traces.traces.size());
        for (std::size_t k = 0; k < traces.traces.size(); ++k) {
            REQUIRE(t2.traces[k].episode == traces.traces[k].episode);
            REQUIRE(t2.traces[k].activation_time == traces.traces[k].activation_time);
            REQUIRE(t2.traces[k].collisions == traces.traces[k].collisions);
        }
    }
}

TEST_CASE("sweep config parsing") {
    const auto cfg = parse_sweep_config(R"({"model": "minimal_chain", "failure": [0, 0.1], "n_per_object": [1, 2],
                                            "seeds": 7, "seed": 3, "delta": 0.1})");
    CHECK(cfg.model == "minimal_chain");
    CHECK(cfg.failure == std::vector<double>{0.0, 0.1});
    CHECK(cfg.n_per_object == std::vector<std::size_t>{1, 2});
    CHECK(cfg.seeds == 7);
    CHECK(cfg.seed == 3);
    CHECK(cfg.delta == 0.1);
    CHECK(parse_sweep_config(R"({"model": "m", "failure": 0.2, "n_per_object": [4]})").failure == std::vector<double>{0.2});

    CHECK_THROWS_AS(parse_sweep_config("{"), FormatError);
    CHECK_THROWS_AS(parse_sweep_config(R"({"n_per_object": [1]})"), FormatError);
    CHECK_THROWS_AS(parse_sweep_config(R"({"model": "m", "n_per_object": []})"), FormatError);
    CHECK_THROWS_AS(parse_sweep_config(R"({"model": "m", "n_per_object": [0]})"), FormatError);
    CHECK_THROWS_AS(parse_sweep_config(R"({"model": "m", "n_per_object": [1], "failure": 1.0})"), FormatError);
    CHECK_THROWS_AS(parse_sweep_config(R"({"model": "m", "n_per_object": [1], "seeds": 0})"), FormatError);
}

TEST_CASE("sweeps") {
    SweepConfig cfg;
    cfg.model = "minimal_chain";
    cfg.n_per_object = {1, 2};
    cfg.seeds = 10;
    const auto r = run_sweep(cfg);
    CHECK(r.records.size() == 20);
    REQUIRE(r.settings.size() == 1);
    CHECK(r.settings[0].m_min == std::optional<std::size_t>{1});
    CHECK(r.records.front().seed == 0);
    CHECK(r.records.back().n_per_object == 2);

    std::ostringstream summary;
    print_sweep_summary(summary, r);
    CHECK(summary.str().find("M_min: 1") != std::string::npos);

    SweepConfig ls;
    ls.model = "synthetic_large_slot_machine_0.1";
    ls.n_per_object = {1};
    ls.seeds = 2;
    std::ostringstream ls_summary;
    print_sweep_summary(ls_summary, run_sweep(ls));
    CHECK(ls_summary.str().find("sample complexity bound (delta = 0.05): 51") != std::string::npos);

    SweepConfig pt;
    pt.model = "synthetic_parallel_triggers_0.1";
    pt.n_per_object = {1, 3};
    pt.seeds = 20;
    pt.seed = 42;
    std::ostringstream pt_summary;
    print_sweep_summary(pt_summary, run_sweep(pt));
    CHECK(pt_summary.str().find("q_min: 0.478") != std::string::npos);
    const auto csv = csv_of(pt);
    CHECK(csv == csv_of(pt));
    CHECK(csv.rfind(csv_header() + "\n", 0) == 0);

    SweepConfig noisy = pt;
    noisy.failure = {0.2};
    noisy.n_per_object = {1, 12};
    noisy.seeds = 100;
    const auto nr = run_sweep(noisy);
    REQUIRE(nr.points.size() == 2);
    CHECK(nr.points[1].mean_skeleton_shd <= nr.points[0].mean_skeleton_shd);
    for (const auto& p : nr.points) {
        CHECK(p.exact_fraction >= 0.0);
        CHECK(p.exact_fraction <= 1.0);
    }
}

TEST_CASE("csv rows") {
    RunRecord rec{"m", 0.1, 3, 7, {0.5, 1.0, 2.0 / 3.0, 1, 1}, 0.0};
    CHECK(to_csv(rec) == "m,0.1,3,7,1,1,0.500000,1.000000,0.666667,0,0.000000");
    rec.p.reset();
    rec.metrics.shd = 0;
    CHECK(to_csv(rec) == "m,,3,7,0,1,0.500000,1.000000,0.666667,1,0.000000");
}

}  // TEST_SUITE
