#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "jetinv/suites.hpp"

using namespace jetinv;

TEST_CASE("suite reports are byte deterministic") {
    SuiteConfig cfg;
    cfg.suite = "lowrel";
    cfg.n = 2;
    cfg.trials = 3;
    cfg.seed = 42;
    std::string a = run_suite(cfg).to_json();
    std::string b = run_suite(cfg).to_json();
    CHECK(a == b);

    cfg.seed = 43;
    CHECK(run_suite(cfg).to_json() != a);
}

TEST_CASE("every suite runs clean at a small size") {
    for (const std::string name :
         {"invariance", "counts", "syzygy", "lowrel", "eikonal", "compat", "forms", "tresse",
          "frames"}) {
        SuiteConfig cfg;
        cfg.suite = name;
        cfg.n = 2;
        cfg.order = 3;
        cfg.trials = 2;
        cfg.seed = 7;
        Report rep = run_suite(cfg);
        INFO(name);
        CHECK(rep.failure_count == 0);
        CHECK(!rep.records.empty());
        for (const auto& r : rep.records) {
            CHECK((r.kind == "exact" || r.kind == "numeric" || r.kind == "recorded"));
        }
    }
}

TEST_CASE("bad configurations are rejected with the offending field") {
    SuiteConfig cfg;
    cfg.suite = "lowrel";
    cfg.trials = 0;
    try {
        run_suite(cfg);
        FAIL("expected BadConfig");
    } catch (const BadConfig& e) {
        CHECK(std::string(e.what()).find("trials") != std::string::npos);
    }

    cfg.trials = 1;
    cfg.n = 1;
    try {
        run_suite(cfg);
        FAIL("expected BadConfig");
    } catch (const BadConfig& e) {
        CHECK(std::string(e.what()).find("n") != std::string::npos);
    }

    cfg.n = 2;
    cfg.suite = "nonsense";
    CHECK_THROWS_AS(run_suite(cfg), BadConfig);
}

TEST_CASE("report emission round trips") {
    SuiteConfig cfg;
    cfg.suite = "compat";
    cfg.n = 2;
    cfg.trials = 2;
    cfg.seed = 5;
    Report rep = run_suite(cfg);
    std::string path = "/tmp/jetinv_report_test.json";
    emit_report(rep, path);
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == rep.to_json());
    std::remove(path.c_str());

    CHECK_THROWS_AS(emit_report(rep, "/nonexistent-dir/x.json"), Error);
}

TEST_CASE("empty-ish report serializes") {
    Report rep;
    rep.suite = "manual";
    rep.config.suite = "manual";
    finalize(rep);
    std::string s = rep.to_json();
    CHECK(s.find("\"failure_count\": 0") != std::string::npos);
    CHECK(s.find("wall") == std::string::npos);
}

TEST_CASE("float formatting carries 17 significant digits") {
    CHECK(fmt_float(1.0) == "1");
    std::string s = fmt_float(1.0 / 3.0);
    CHECK(s.substr(0, 10) == "0.33333333");
    CHECK(s.size() >= 17);
}
