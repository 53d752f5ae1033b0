#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lb/bench.hpp"
#include "lb/kernels.hpp"
#include "lb/random.hpp"

using namespace lb;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) lines.push_back(line);
    return lines;
}

BenchResult fake_result(std::size_t dim, Variant variant, double ns) {
    BenchResult r;
    r.config.dim = dim;
    r.config.variant = variant;
    r.config.reps = 1000;
    r.config.warmup = 10;
    r.profile_name = "native-fast";
    r.ns_per_step = ns;
    r.gflops = derived_gflops(dim, ns);
    r.gbs = derived_gbs(dim, ns);
    r.checksum = cplx{0.25, -1.5};
    return r;
}

BenchResult fake_failure(std::size_t dim, Variant variant, const std::string& why) {
    BenchResult r;
    r.config.dim = dim;
    r.config.variant = variant;
    r.profile_name = "native-fast";
    r.failed = true;
    r.error = why;
    return r;
}

}  // namespace

TEST_SUITE("bench") {

TEST_CASE("derived metrics reproduce the measured-table values") {
    struct Row {
        std::size_t d;
        double ns;
        double gflops;
        double gbs;
    };
    const Row rows[] = {
        {3, 62.0, 10.4, 25.5},
        {9, 3242.0, 16.2, 33.2},
        {27, 295028.0, 14.4, 28.9},
    };
    for (const Row& row : rows) {
        CHECK(std::abs(derived_gflops(row.d, row.ns) - row.gflops) <= 0.1);
        CHECK(std::abs(derived_gbs(row.d, row.ns) - row.gbs) <= 0.1);
    }
}

TEST_CASE("derived metric ratio equals the arithmetic intensity") {
    for (std::size_t d : {std::size_t{1}, std::size_t{3}, std::size_t{9}, std::size_t{27}}) {
        const double gflops = derived_gflops(d, 97.0);
        const double gbs = derived_gbs(d, 97.0);
        const double d2 = double(d) * double(d);
        const double ai = 8.0 * d2 * d2 / ((d2 * d2 + 2.0 * d2) * 16.0);
        CHECK(gflops / gbs == doctest::Approx(ai).epsilon(1e-12));
    }
}

TEST_CASE("run_bench fills in derived fields consistently") {
    BenchConfig cfg;
    cfg.dim = 3;
    cfg.variant = Variant::aos;
    cfg.reps = 2000;
    cfg.profile = "opt";
    const BenchResult r = run_bench(cfg);
    CHECK(!r.failed);
    CHECK(r.profile_name == "opt");
    CHECK(r.ns_per_step > 0.0);
    CHECK(r.gflops == derived_gflops(3, r.ns_per_step));
    CHECK(r.gbs == derived_gbs(3, r.ns_per_step));
}

TEST_CASE("empty profile name selects the default") {
    BenchConfig cfg;
    cfg.dim = 2;
    cfg.variant = Variant::soa;
    cfg.reps = 3000;
    const BenchResult r = run_bench(cfg);
    CHECK(r.profile_name == default_profile().name);
}

TEST_CASE("identical configs give bitwise identical checksums") {
    BenchConfig cfg;
    cfg.dim = 3;
    cfg.variant = Variant::soa;
    cfg.reps = 700;
    cfg.warmup = 5;
    cfg.seed = 123;
    const BenchResult a = run_bench(cfg);
    const BenchResult b = run_bench(cfg);
    CHECK(a.checksum == b.checksum);
}

TEST_CASE("checksum does not depend on the reps count") {
    BenchConfig cfg;
    cfg.dim = 3;
    cfg.variant = Variant::aos;
    cfg.reps = 3000;
    const cplx c1 = run_bench(cfg).checksum;
    cfg.reps = 6000;
    const cplx c2 = run_bench(cfg).checksum;
    CHECK(c1 == c2);

    cfg.variant = Variant::soa;
    cfg.reps = 3000;
    const cplx c3 = run_bench(cfg).checksum;
    cfg.reps = 6000;
    CHECK(run_bench(cfg).checksum == c3);
}

TEST_CASE("timed run matches an untimed replay of the same chain") {
    BenchConfig cfg;
    cfg.dim = 3;
    cfg.variant = Variant::aos;
    cfg.reps = 400;
    cfg.warmup = 7;
    cfg.seed = 99;
    cfg.profile = "baseline";
    const BenchResult r = run_bench(cfg);

    const std::size_t n = 9;
    auto rng = make_rng(cfg.seed);
    MatrixAoS pm = random_matrix(rng, n, n);
    for (auto& z : pm.data) z *= cplx{1.0 / 9.0, 0.0};
    const VectorAoS v0 = random_matrix(rng, n, 1);

    const KernelProfile* kp = find_profile("baseline");
    REQUIRE(kp != nullptr);
    VectorAoS a = v0;
    VectorAoS b(n, 1);
    cplx* cur = a.data.data();
    cplx* nxt = b.data.data();
    for (std::size_t s = 0; s < cfg.warmup + cfg.reps; ++s) {
        kp->step_aos(pm.data.data(), cur, nxt, n);
        std::swap(cur, nxt);
    }
    cplx sum{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) sum += cur[i];
    CHECK(sum == r.checksum);
    CHECK(sum != cplx{0.0, 0.0});  // short chains must not have decayed to zero yet
}

TEST_CASE("run_bench rejects bad configs") {
    BenchConfig cfg;
    cfg.dim = 0;
    CHECK_THROWS_AS((void)run_bench(cfg), std::invalid_argument);

    cfg = BenchConfig{};
    cfg.reps = 0;
    CHECK_THROWS_AS((void)run_bench(cfg), std::invalid_argument);

    cfg = BenchConfig{};
    cfg.profile = "turbo";
    CHECK_THROWS_AS((void)run_bench(cfg), std::invalid_argument);
}

TEST_CASE("a block near the timer tick is refused or measured, never garbage") {
    // A single d = 1 step lasts a few nanoseconds, which may or may not clear
    // the ten-tick threshold depending on how fine the clock measures on this
    // host. Both outcomes are legitimate; silent nonsense is not.
    BenchConfig cfg;
    cfg.dim = 1;
    cfg.reps = 1;
    cfg.warmup = 0;
    try {
        const BenchResult r = run_bench(cfg);
        CHECK(r.ns_per_step > 0.0);
        CHECK(std::isfinite(r.ns_per_step));
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("resolution") != std::string::npos);
    }
}

TEST_CASE("run_matrix is dim-major, variant-minor") {
    const std::vector<BenchResult> rs =
        run_matrix({2, 3}, {Variant::aos, Variant::soa}, 600, 5);
    REQUIRE(rs.size() == 4);
    CHECK(rs[0].config.dim == 2);
    CHECK(rs[0].config.variant == Variant::aos);
    CHECK(rs[1].config.dim == 2);
    CHECK(rs[1].config.variant == Variant::soa);
    CHECK(rs[2].config.dim == 3);
    CHECK(rs[2].config.variant == Variant::aos);
    CHECK(rs[3].config.dim == 3);
    CHECK(rs[3].config.variant == Variant::soa);
    for (const auto& r : rs) CHECK(!r.failed);
}

TEST_CASE("run_matrix single cell agrees with run_bench") {
    BenchConfig cfg;
    cfg.dim = 3;
    cfg.variant = Variant::soa;
    cfg.reps = 800;
    cfg.warmup = 10;
    const std::vector<BenchResult> rs = run_matrix({3}, {Variant::soa}, 800, 10);
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].checksum == run_bench(cfg).checksum);
}

TEST_CASE("run_matrix contains per-cell failures") {
    // An unknown profile fails every cell, but each failure stays in its own
    // row with the config and message intact.
    const std::vector<BenchResult> bad =
        run_matrix({2, 3}, {Variant::soa}, 500, 5, 42, "turbo");
    REQUIRE(bad.size() == 2);
    for (const auto& r : bad) {
        CHECK(r.failed);
        CHECK(!r.error.empty());
        CHECK(r.error.find("turbo") != std::string::npos);
    }
    CHECK(bad[0].config.dim == 2);
    CHECK(bad[1].config.dim == 3);

    // A one-rep d = 1 block may be refused as sub-resolution; whether or not
    // it is, the d = 27 cell after it still runs and measures.
    const std::vector<BenchResult> rs = run_matrix({1, 27}, {Variant::aos}, 1, 0);
    REQUIRE(rs.size() == 2);
    if (rs[0].failed) CHECK(!rs[0].error.empty());
    CHECK(!rs[1].failed);  // a d = 27 step is microseconds, far above any tick
    CHECK(rs[1].ns_per_step > 0.0);
}

TEST_CASE("run_matrix with no dims is empty") {
    CHECK(run_matrix({}, {Variant::aos}, 100, 1).empty());
}

TEST_CASE("compare ranks by bandwidth with the measured-table ordering") {
    const std::vector<BenchResult> rs = {
        fake_result(3, Variant::aos, 62.0),
        fake_result(3, Variant::soa, 35.0),
        fake_result(3, Variant::simd, 47.0),
    };
    const std::vector<DimRanking> ranked = compare(rs);
    REQUIRE(ranked.size() == 1);
    CHECK(ranked[0].dim == 3);
    REQUIRE(ranked[0].entries.size() == 3);
    CHECK(ranked[0].entries[0].variant == Variant::soa);
    CHECK(ranked[0].entries[1].variant == Variant::simd);
    CHECK(ranked[0].entries[2].variant == Variant::aos);
    CHECK(ranked[0].entries[0].ratio == doctest::Approx(62.0 / 35.0).epsilon(1e-12));
    CHECK(std::abs(ranked[0].entries[0].ratio - 1.77) < 0.005);
    CHECK(ranked[0].entries[2].ratio == 1.0);
}

TEST_CASE("compare breaks ties by variant order") {
    const std::vector<BenchResult> rs = {
        fake_result(3, Variant::simd, 50.0),
        fake_result(3, Variant::aos, 50.0),
    };
    const std::vector<DimRanking> ranked = compare(rs);
    REQUIRE(ranked.size() == 1);
    REQUIRE(ranked[0].entries.size() == 2);
    CHECK(ranked[0].entries[0].variant == Variant::aos);
    CHECK(ranked[0].entries[1].variant == Variant::simd);
    CHECK(ranked[0].entries[0].ratio == 1.0);
    CHECK(ranked[0].entries[1].ratio == 1.0);
}

TEST_CASE("compare groups dims in ascending order and drops failures") {
    const std::vector<BenchResult> rs = {
        fake_result(9, Variant::aos, 3242.0),
        fake_result(3, Variant::aos, 62.0),
        fake_failure(3, Variant::simd, "unavailable"),
        fake_failure(27, Variant::aos, "refused"),
    };
    const std::vector<DimRanking> ranked = compare(rs);
    REQUIRE(ranked.size() == 2);
    CHECK(ranked[0].dim == 3);
    CHECK(ranked[1].dim == 9);
    CHECK(ranked[0].entries.size() == 1);
}

TEST_CASE("variant names round trip") {
    CHECK(std::string(to_string(Variant::aos)) == "aos");
    CHECK(std::string(to_string(Variant::soa)) == "soa");
    CHECK(std::string(to_string(Variant::simd)) == "simd");
    CHECK(variant_from_string("aos") == Variant::aos);
    CHECK(variant_from_string("soa") == Variant::soa);
    CHECK(variant_from_string("simd") == Variant::simd);
    CHECK(!variant_from_string("avx512").has_value());
}

TEST_CASE("csv output follows the schema") {
    const std::vector<BenchResult> rs = {
        fake_result(3, Variant::soa, 35.0),
        fake_failure(9, Variant::simd, "simd variant unavailable"),
    };
    std::ostringstream os;
    write_csv(os, rs, "test-machine");
    const std::vector<std::string> lines = lines_of(os.str());
    REQUIRE(lines.size() == 5);

    CHECK(lines[0].rfind("# lindbench ", 0) == 0);
    CHECK(lines[0].find(" machine-profile=test-machine") != std::string::npos);
    CHECK(lines[1] ==
          "profile,dim,variant,reps,warmup,ns_per_step,gflops,gbs,checksum_re,checksum_im");

    CHECK(lines[2].rfind("native-fast,3,soa,1000,10,35,", 0) == 0);
    CHECK(lines[2].find(",0.25,-1.5") != std::string::npos);

    CHECK(lines[3].rfind("# failed: dim=9 variant=simd:", 0) == 0);
    CHECK(lines[4].rfind("native-fast,9,simd,", 0) == 0);
    CHECK(lines[4].find("nan,nan,nan,nan,nan") != std::string::npos);
}

TEST_CASE("csv checksum columns survive a parse round trip") {
    BenchResult r = fake_result(3, Variant::aos, 62.0);
    r.checksum = cplx{1.0 / 3.0, -2.0 / 7.0};
    std::ostringstream os;
    write_csv(os, {r}, "m");
    const std::vector<std::string> lines = lines_of(os.str());
    REQUIRE(lines.size() == 3);

    std::vector<std::string> fields;
    std::istringstream row(lines[2]);
    std::string field;
    while (std::getline(row, field, ',')) fields.push_back(field);
    REQUIRE(fields.size() == 10);
    CHECK(std::stod(fields[8]) == 1.0 / 3.0);
    CHECK(std::stod(fields[9]) == -2.0 / 7.0);
}

TEST_CASE("json output parses and mirrors the csv fields") {
    const std::vector<BenchResult> rs = {
        fake_result(3, Variant::soa, 35.0),
        fake_failure(9, Variant::simd, "simd variant unavailable"),
    };
    std::ostringstream os;
    write_json(os, rs, "test-machine");
    const nlohmann::json doc = nlohmann::json::parse(os.str());

    CHECK(doc.at("machine_profile") == "test-machine");
    CHECK(doc.at("timestamp").is_string());
    REQUIRE(doc.at("results").size() == 2);

    const auto& ok = doc["results"][0];
    CHECK(ok.at("profile") == "native-fast");
    CHECK(ok.at("dim") == 3);
    CHECK(ok.at("variant") == "soa");
    CHECK(ok.at("reps") == 1000);
    CHECK(ok.at("warmup") == 10);
    CHECK(ok.at("ns_per_step") == doctest::Approx(35.0));
    CHECK(ok.at("gflops") == doctest::Approx(derived_gflops(3, 35.0)));
    CHECK(ok.at("gbs") == doctest::Approx(derived_gbs(3, 35.0)));
    CHECK(ok.at("checksum_re") == doctest::Approx(0.25));
    CHECK(!ok.contains("failed"));

    const auto& bad = doc["results"][1];
    CHECK(bad.at("failed") == true);
    CHECK(bad.at("error") == "simd variant unavailable");
    CHECK(!bad.contains("ns_per_step"));
}

}  // TEST_SUITE
