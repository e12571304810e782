#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <set>

#include "mcmd/bench/csv.hpp"
#include "mcmd/bench/experiments.hpp"
#include "mcmd/bench/objectives.hpp"
#include "mcmd/oracles.hpp"

using namespace mcmd;
using namespace mcmd::bench;

namespace {

namespace fs = std::filesystem;

fs::path fresh_dir(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / "mcmd-tests" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
}

} // namespace

TEST_CASE("example function values") {
    CHECK(example_function(0.0) == 1.0);
    CHECK(example_function(3.0) ==
          doctest::Approx(-1.4111302618846769).epsilon(1e-12));

    BenchObjective obj = make_example_objective();
    CHECK(obj.f_star > 1.0);   // beats f(0)
    double x_star = obj.optimizers.front()[0];
    CHECK(std::abs(x_star) < 0.1);
    // The scan's maximizer is a stationary point of the closed form.
    double h = 1e-5;
    CHECK(example_function(x_star) >= example_function(x_star + h));
    CHECK(example_function(x_star) >= example_function(x_star - h));
    obj.self_check();
}

TEST_CASE("negative Branin optima and a spot value") {
    const double pi = std::numbers::pi;
    const double target = -5.0 / (4.0 * pi);
    CHECK(std::abs(branin_negative(-pi, 491.0 / 40.0) - target) < 1e-9);
    CHECK(std::abs(branin_negative(pi, 91.0 / 40.0) - target) < 1e-9);
    CHECK(std::abs(branin_negative(3.0 * pi, 99.0 / 40.0) - target) < 1e-9);
    CHECK(branin_negative(0.0, 0.0) ==
          doctest::Approx(-55.60211264227026).epsilon(1e-12));

    BenchObjective obj = make_branin_objective();
    CHECK(obj.domain.dim() == 2);
    obj.self_check();
}

TEST_CASE("objective registry self-checks at construction") {
    for (const char* name : {"example-1d", "branin", "constant"}) {
        BenchObjective obj = objective_by_name(name);
        for (const auto& x : obj.optimizers)
            CHECK(std::abs(obj.evaluate(x) - obj.f_star) <= 1e-9);
    }
    CHECK_THROWS_AS(objective_by_name("unknown"), std::invalid_argument);
}

TEST_CASE("format_double round-trips through the reader") {
    Rng rng(1);
    fs::path dir = fresh_dir("csv-roundtrip");
    std::vector<std::vector<std::string>> rows;
    std::vector<double> values;
    for (int i = 0; i < 200; ++i) {
        double v = (uniform01(rng) - 0.5) * std::pow(10.0, int(uniform01(rng) * 12) - 6);
        values.push_back(v);
        rows.push_back({format_double(v), std::to_string(i)});
    }
    write_csv(dir / "t.csv", {"value", "index"}, rows);
    CsvTable table = read_csv(dir / "t.csv");
    REQUIRE(table.rows.size() == 200);
    CHECK(table.column("value") == 0);
    CHECK(table.column("missing") == -1);
    for (int i = 0; i < 200; ++i) CHECK(table.as_double(i, 0) == values[i]);
}

TEST_CASE("the reader rejects ragged and empty files") {
    fs::path dir = fresh_dir("csv-bad");
    {
        std::ofstream out(dir / "ragged.csv", std::ios::binary);
        out << "a,b\n1,2\n3\n";
    }
    CHECK_THROWS(read_csv(dir / "ragged.csv"));
    {
        std::ofstream out(dir / "empty.csv", std::ios::binary);
    }
    CHECK_THROWS(read_csv(dir / "empty.csv"));
    CHECK_THROWS(read_csv(dir / "absent.csv"));
}

TEST_CASE("config JSON round-trips and accepts overrides") {
    ExperimentConfig cfg = default_config("regret-1d");
    CHECK(cfg.methods.size() == 4);
    CHECK(cfg.seeds.size() == 50);

    apply_override(cfg, "mcmd.n_particles=555");
    CHECK(cfg.mcmd.n_particles == 555);
    apply_override(cfg, "seeds=[3,9]");
    REQUIRE(cfg.seeds.size() == 2);
    CHECK(cfg.seeds[1] == 9);
    apply_override(cfg, "objective=constant");
    CHECK(cfg.objective == "constant");
    CHECK_THROWS_AS(apply_override(cfg, "no-equals-sign"), std::invalid_argument);

    fs::path dir = fresh_dir("config");
    {
        std::ofstream out(dir / "c.json", std::ios::binary);
        out << config_to_json(cfg);
    }
    ExperimentConfig back = config_from_json_file(dir / "c.json");
    CHECK(back.mcmd.n_particles == 555);
    CHECK(back.objective == "constant");
    CHECK(back.seeds == cfg.seeds);
}

TEST_CASE("config validation catches bad setups") {
    ExperimentConfig cfg = default_config("regret-1d");
    cfg.seeds.clear();
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);

    cfg = default_config("regret-1d");
    cfg.methods.push_back(cfg.methods.front());   // duplicate label
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);

    CHECK_THROWS_AS(default_config("bogus"), std::invalid_argument);
}

TEST_CASE("branin defaults scale the GP to the scanned range") {
    ExperimentConfig cfg = default_config("regret-branin");
    CHECK(cfg.gp.length_scales == std::vector<double>{2.25, 2.25});
    CHECK(cfg.gp.signal_variance > 100.0);   // the function spans hundreds
    CHECK(cfg.gp.prior_mean < -10.0);
    CHECK(cfg.objective == "branin");
}

TEST_CASE("mcmd-demo writes the expected curve set deterministically") {
    ExperimentConfig cfg = default_config("mcmd-demo");
    cfg.demo.grid_size = 128;
    cfg.demo.brute_samples = 20000;
    cfg.demo.demo_particles = 2000;
    cfg.mcmd.rounds = 10;

    fs::path dir_a = fresh_dir("demo-a");
    cfg.out_dir = dir_a.string();
    CHECK(cmd_mcmd_demo(cfg) == 0);

    CsvTable table = read_csv(dir_a / "distributions.csv");
    REQUIRE(table.header ==
            std::vector<std::string>{"grid_x0", "density", "label", "round"});

    std::map<std::pair<std::string, std::string>, int> counts;
    int label_col = table.column("label");
    int round_col = table.column("round");
    for (std::size_t r = 0; r < table.rows.size(); ++r)
        counts[{table.rows[r][label_col], table.rows[r][round_col]}] += 1;

    // 10 round curves plus 2 reference curves, all on the shared grid.
    CHECK(counts.size() == 12);
    for (const auto& [key, n] : counts) CHECK(n == 128);
    CHECK(counts.count({"bruteforce", "0"}) == 1);
    CHECK(counts.count({"limit", "0"}) == 1);
    for (int round = 1; round <= 10; ++round)
        CHECK(counts.count({"mcmd", std::to_string(round)}) == 1);

    // Densities are nonnegative and the curves integrate to roughly one.
    int density_col = table.column("density");
    double mass = 0.0;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        double d = table.as_double(r, density_col);
        CHECK(d >= 0.0);
        if (table.rows[r][label_col] == "limit") mass += d;
    }
    CHECK(mass * 6.0 / 127.0 == doctest::Approx(1.0).epsilon(0.02));

    // Byte-identical rerun.
    fs::path dir_b = fresh_dir("demo-b");
    cfg.out_dir = dir_b.string();
    CHECK(cmd_mcmd_demo(cfg) == 0);
    CHECK(slurp(dir_a / "distributions.csv") == slurp(dir_b / "distributions.csv"));
}

TEST_CASE("demo round 10 lies closer to the limit curve than round 1") {
    ExperimentConfig cfg = default_config("mcmd-demo");
    cfg.demo.grid_size = 128;
    cfg.demo.brute_samples = 5000;
    cfg.demo.demo_particles = 4000;
    fs::path dir = fresh_dir("demo-tv");
    cfg.out_dir = dir.string();
    REQUIRE(cmd_mcmd_demo(cfg) == 0);

    CsvTable table = read_csv(dir / "distributions.csv");
    int label_col = table.column("label");
    int round_col = table.column("round");
    int density_col = table.column("density");
    auto curve = [&](const std::string& label, const std::string& round) {
        Vector v(cfg.demo.grid_size);
        int i = 0;
        for (std::size_t r = 0; r < table.rows.size(); ++r)
            if (table.rows[r][label_col] == label && table.rows[r][round_col] == round)
                v[i++] = table.as_double(r, density_col);
        REQUIRE(i == cfg.demo.grid_size);
        return Vector(v / v.sum());
    };

    Vector limit = curve("limit", "0");
    double tv1 = oracles::tv_distance(curve("mcmd", "1"), limit);
    double tv10 = oracles::tv_distance(curve("mcmd", "10"), limit);
    CHECK(tv10 < tv1);
}

TEST_CASE("regret on a constant objective is identically zero") {
    ExperimentConfig cfg = default_config("regret-1d");
    cfg.objective = "constant";
    cfg.seeds = {1, 2, 3};
    cfg.n_iters = 4;
    cfg.mcmd.n_particles = 120;
    cfg.mcmd.rounds = 2;
    fs::path dir = fresh_dir("regret-constant");
    cfg.out_dir = dir.string();
    REQUIRE(cmd_regret(cfg) == 0);

    CsvTable mean = read_csv(dir / "mean_regret.csv");
    int cum_col = mean.column("mean_cumulative_regret");
    REQUIRE(mean.rows.size() == 4 * 4);   // methods x iterations
    for (std::size_t r = 0; r < mean.rows.size(); ++r)
        CHECK(mean.as_double(r, cum_col) == 0.0);
}

TEST_CASE("mean curves equal the re-aggregated per-seed traces") {
    ExperimentConfig cfg = default_config("regret-1d");
    cfg.seeds = {11, 12, 13};
    cfg.n_iters = 6;
    cfg.mcmd.n_particles = 150;
    cfg.mcmd.rounds = 3;
    fs::path dir = fresh_dir("regret-agg");
    cfg.out_dir = dir.string();
    REQUIRE(cmd_regret(cfg) == 0);

    CsvTable traces = read_csv(dir / "traces.csv");
    int m_col = traces.column("method");
    int it_col = traces.column("iteration");
    int cum_col = traces.column("cumulative_regret");
    int inst_col = traces.column("instant_regret");
    REQUIRE(traces.rows.size() == 4 * 3 * 6);

    std::map<std::pair<std::string, int>, std::pair<double, int>> agg;
    std::map<std::pair<std::string, int>, double> agg_inst;
    for (std::size_t r = 0; r < traces.rows.size(); ++r) {
        auto key = std::make_pair(traces.rows[r][m_col],
                                  int(traces.as_double(r, it_col)));
        agg[key].first += traces.as_double(r, cum_col);
        agg[key].second += 1;
        agg_inst[key] += traces.as_double(r, inst_col);
    }

    CsvTable mean = read_csv(dir / "mean_regret.csv");
    int mm_col = mean.column("method");
    int mit_col = mean.column("iteration");
    int mcum_col = mean.column("mean_cumulative_regret");
    int minst_col = mean.column("mean_instant_regret");
    for (std::size_t r = 0; r < mean.rows.size(); ++r) {
        auto key = std::make_pair(mean.rows[r][mm_col],
                                  int(mean.as_double(r, mit_col)));
        REQUIRE(agg.count(key) == 1);
        double expected = agg[key].first / agg[key].second;
        CHECK(mean.as_double(r, mcum_col) == doctest::Approx(expected).epsilon(1e-12));
        CHECK(mean.as_double(r, minst_col) ==
              doctest::Approx(agg_inst[key] / agg[key].second).epsilon(1e-12));
    }

    // Cumulative regret is non-decreasing within every trace.
    CsvTable status = read_csv(dir / "run_status.csv");
    for (std::size_t r = 0; r < status.rows.size(); ++r)
        CHECK(status.rows[r][3] == "0");
    std::map<std::pair<std::string, std::string>, double> last;
    int seed_col = traces.column("seed");
    for (std::size_t r = 0; r < traces.rows.size(); ++r) {
        auto key = std::make_pair(traces.rows[r][m_col], traces.rows[r][seed_col]);
        double cum = traces.as_double(r, cum_col);
        if (last.count(key)) CHECK(cum >= last[key] - 1e-9);
        last[key] = cum;
    }
}

TEST_CASE("regret runs are byte-deterministic given config and seed") {
    ExperimentConfig cfg = default_config("regret-1d");
    cfg.seeds = {7};
    cfg.n_iters = 5;
    cfg.methods = {{AcquisitionKind::Thompson, 2.0, 0.1},
                   {AcquisitionKind::EI, 2.0, 0.1}};
    cfg.mcmd.n_particles = 200;
    cfg.mcmd.rounds = 3;

    fs::path dir_a = fresh_dir("regret-det-a");
    cfg.out_dir = dir_a.string();
    REQUIRE(cmd_regret(cfg) == 0);
    fs::path dir_b = fresh_dir("regret-det-b");
    cfg.out_dir = dir_b.string();
    cfg.threads = 2;   // fan-out must not affect the bytes
    REQUIRE(cmd_regret(cfg) == 0);
    CHECK(slurp(dir_a / "traces.csv") == slurp(dir_b / "traces.csv"));
    CHECK(slurp(dir_a / "mean_regret.csv") == slurp(dir_b / "mean_regret.csv"));
}

TEST_CASE("oracle-check passes on the default fixtures") {
    ExperimentConfig cfg = default_config("oracle-check");
    cfg.mcmd.n_particles = 4000;
    cfg.mcmd.rounds = 60;
    fs::path dir = fresh_dir("oracle-ok");
    cfg.out_dir = dir.string();
    CHECK(cmd_oracle_check(cfg) == 0);

    CsvTable report = read_csv(dir / "oracle_report.csv");
    CHECK(report.rows.size() >= 5);
    int status_col = report.column("status");
    for (std::size_t r = 0; r < report.rows.size(); ++r)
        CHECK(report.rows[r][status_col] == "pass");
}

TEST_CASE("oracle-check fails loudly on a corrupted win matrix") {
    ExperimentConfig cfg = default_config("oracle-check");
    cfg.inject_corruption = true;
    fs::path dir = fresh_dir("oracle-bad");
    cfg.out_dir = dir.string();
    CHECK(cmd_oracle_check(cfg) != 0);

    CsvTable report = read_csv(dir / "oracle_report.csv");
    int status_col = report.column("status");
    bool any_fail = false;
    for (std::size_t r = 0; r < report.rows.size(); ++r)
        any_fail = any_fail || report.rows[r][status_col] == "fail";
    CHECK(any_fail);
}
