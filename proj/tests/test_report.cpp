#include <doctest.h>
#include <json.hpp>

#include <sstream>

#include "gbound/report.hpp"

using namespace gbound;

namespace {

SuiteOptions quiet()
{
    SuiteOptions o;
    o.timing = false;
    return o;
}

std::string render(const std::vector<ClaimRow>& rows, Format f)
{
    std::ostringstream s;
    emit(rows, f, s);
    return s.str();
}

} // namespace

TEST_CASE("truncation windows")
{
    CHECK(in_truncation_window(Interval(2.4273, 2.4274), 2.427));
    CHECK(in_truncation_window(Interval(2.4279), 2.427));
    CHECK_FALSE(in_truncation_window(Interval(2.428), 2.427));
    CHECK_FALSE(in_truncation_window(Interval(2.4269), 2.427));
    CHECK(in_truncation_window(Interval(2.4265, 2.4271), 2.427));
    CHECK(in_truncation_window(Interval(14.0), 14.0, 0));
    CHECK_FALSE(in_truncation_window(Interval(13.0), 14.0, 0));
}

TEST_CASE("selection")
{
    CHECK(run_suite({}).empty());
    CHECK_THROWS_AS((void)run_suite({"NOPE"}), std::invalid_argument);
    const auto rows = run_suite({"GAMMA2", "THM1_A3", "GAMMA2"}, quiet());
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].claim_id == "THM1_A3");
    CHECK(rows[1].claim_id == "GAMMA2");
    CHECK(all_claim_ids().size() == 15);
    CHECK(all_claim_ids()[9] == "EDGE_TABLE");
}

TEST_CASE("claim rows")
{
    const ClaimRow a3 = run_claim("THM1_A3", quiet());
    CHECK(a3.status == Status::Pass);
    // mpmath: 3a^2 + (2/sqrt3) sqrt(1 - a^2) at a = 297/400
    CHECK(a3.computed.contains(2.4273903612006525));
    CHECK(a3.kind == "UPPER_END");
    CHECK(a3.runtime_ms == 0.0);

    const ClaimRow g2 = run_claim("GAMMA2", quiet());
    CHECK(g2.status == Status::Pass);
    CHECK(in_truncation_window(g2.computed, 0.662));

    const ClaimRow f4 = objective_row(ObjectiveId::F4, quiet());
    CHECK(f4.claim_id == "f4");
    CHECK(f4.status == Status::Pass);
    CHECK(f4.kind == "INTERIOR");
}

TEST_CASE("edge table reports each constant")
{
    const ClaimRow e = run_claim("EDGE_TABLE", quiet());
    CHECK(e.paper_value == 14.0);
    CHECK(e.published_digits == 0);
    // g8(a) = 1.40199..., below the window of the quoted 1.402
    int failing = 0;
    for (const std::string& n : e.notes) {
        if (n.find("FAIL") != std::string::npos) {
            ++failing;
            CHECK(n.rfind("g8(a)", 0) == 0);
        }
    }
    CHECK(failing == 1);
    CHECK(e.computed == Interval(13.0));
    CHECK(e.status == Status::Fail);
}

TEST_CASE("exhausted budget is inconclusive")
{
    SuiteOptions o = quiet();
    o.cfg.max_boxes = 5;
    CHECK(run_claim("THM2_D43", o).status == Status::Inconclusive);
    o.cfg.max_boxes = 0;
    CHECK_THROWS_AS((void)run_claim("THM2_D43", o), std::invalid_argument);
}

TEST_CASE("emit")
{
    const auto rows = run_suite({"THM1_A3"}, quiet());
    const nlohmann::json j = nlohmann::json::parse(render(rows, Format::Json));
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 1);
    CHECK(j[0]["status"] == "PASS");
    CHECK(j[0]["claim_id"] == "THM1_A3");
    for (const char* key : {"claim_id", "paper_value", "lo", "hi", "argmax_x", "argmax_y", "kind", "status",
                            "runtime_ms"}) {
        CHECK(j[0].contains(key));
    }
    CHECK(j[0].size() == 9);

    const std::string csv = render(rows, Format::Csv);
    CHECK(csv.rfind("claim_id,paper_value,lo,hi,argmax_x,argmax_y,kind,status,runtime_ms\n", 0) == 0);
    CHECK(csv.find("THM1_A3,2.427,") != std::string::npos);

    const std::string table = render(rows, Format::Table);
    CHECK(table.find("THM1_A3") != std::string::npos);
    CHECK(table.find("PASS") != std::string::npos);

    CHECK(render({}, Format::Json) == "[]\n");
    CHECK(parse_format("csv") == Format::Csv);
    CHECK_THROWS_AS((void)parse_format("xml"), std::invalid_argument);
    CHECK_THROWS_AS(emit(rows, Format::Json, std::string("/nonexistent-dir/out.json")), std::runtime_error);
}

TEST_CASE("full report is reproducible")
{
    const auto a = run_suite(all_claim_ids(), quiet());
    const auto b = run_suite(all_claim_ids(), quiet());
    CHECK(a.size() == 15);
    CHECK(render(a, Format::Json) == render(b, Format::Json));
    CHECK(render(a, Format::Csv) == render(b, Format::Csv));
}
