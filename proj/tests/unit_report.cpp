#include <set>

#include <doctest.h>
#include <json.hpp>

#include "qdeform/report.hpp"

using namespace qdeform;

TEST_SUITE("report") {
    TEST_CASE("status and exit semantics") {
        Report r{"x", {}, {}};
        CHECK(r.ok());
        r.add_info("x/info", "1");
        CHECK(r.ok());
        r.add_number("x/small", 1e-14, true);
        CHECK(r.ok());
        r.add(CheckItem{"x/bad", false, "b*a", "", false});
        CHECK_FALSE(r.ok());
        CheckItem info{"x/bad-info", false, "b*a", "", true};
        Report s{"y", {}, {}};
        s.add(info);
        CHECK(s.ok());
        CHECK(s.items[0].status == Status::info);
    }

    TEST_CASE("JSON layout") {
        Report r = run_suite("yangbaxter", SuiteOptions{});
        auto j = nlohmann::json::parse(report_json(r));
        CHECK(j["suite"] == "yangbaxter");
        CHECK(j["toolchain"]["version"] == kVersion);
        CHECK(j["toolchain"]["q0"] == 0.7);
        CHECK(j["toolchain"]["dim"] == 16);
        REQUIRE(j["items"].size() == 4);
        for (const auto& i : j["items"]) {
            CHECK(i["status"] == "pass");
            CHECK(i["residual"] == "0");
        }
    }

    TEST_CASE("unknown suite") { CHECK_THROWS_AS(run_suite("nosuch", SuiteOptions{}), AlgebraError); }

    TEST_CASE("deterministic ordering across runs") {
        SuiteOptions o;
        o.dim = 10;
        Report a = run_suite("all", o), b = run_suite("all", o);
        REQUIRE(a.items.size() == b.items.size());
        for (std::size_t i = 0; i < a.items.size(); ++i) CHECK(a.items[i].id == b.items[i].id);
        CHECK(a.ok());
        // suites appear in the listed order
        CHECK(a.items.front().id.rfind("yangbaxter/", 0) == 0);
        CHECK(a.items.back().id.rfind("quotient/", 0) == 0);
    }

    TEST_CASE("every listed suite passes at the defaults") {
        for (const auto& n : suite_names()) {
            Report r = run_suite(n, SuiteOptions{});
            CHECK_MESSAGE(r.ok(), n);
            CHECK_FALSE(r.items.empty());
        }
    }

    TEST_CASE("ids are unique") {
        Report r = run_suite("all", SuiteOptions{});
        std::set<std::string> ids;
        for (const auto& i : r.items) CHECK_MESSAGE(ids.insert(i.id).second, i.id);
    }
}
