#include "richelot/cli.hpp"
#include "richelot/serialize.hpp"

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using richelot::Json;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

Result run(const std::vector<std::string> &args)
{
    std::ostringstream out, err;
    const int code = richelot::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch()
{
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("richelot_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write(const std::string &name, const std::string &text)
{
    const auto path = scratch() / name;
    std::ofstream(path) << text;
    return path.string();
}

const char *example_octic = R"({"model":"hyperelliptic","field":{"p":17,"k":1},"f":[-1,0,0,0,0,0,0,0,1]})";

bool validates(const Json &curve, const std::string &name)
{
    return run({"validate", write(name, curve.dump())}).code == 0;
}

} // namespace

TEST_CASE("decompose the example octic")
{
    const auto r = run({"decompose", write("ex.json", example_octic)});
    REQUIRE(r.code == 0);
    const auto j = r.json();
    CHECK(j["schema_version"] == 1);
    CHECK(j["certificate_status"] == "consistent");
    const auto kinds = j["kinds"].get<std::vector<std::string>>();
    CHECK(std::find(kinds.begin(), kinds.end(), "COMPLETE") != kinds.end());
    CHECK(std::find(kinds.begin(), kinds.end(), "HYP_SPLIT") != kinds.end());
    int i = 0;
    for (const auto &s : j["hyp_split"]) {
        CHECK(validates(s["E"], "e" + std::to_string(i) + ".json"));
        CHECK(validates(s["C_tau"], "g" + std::to_string(i++) + ".json"));
    }
    CHECK(run({"decompose", write("ex.json", example_octic), "--threads", "3"}).out == r.out);
}

TEST_CASE("count, lpoly, validate")
{
    const auto file = write("ex.json", example_octic);
    const auto v = run({"validate", file});
    CHECK(v.code == 0);
    CHECK(v.json()["genus"] == 3);
    const auto c = run({"count", file, "--n", "2"});
    CHECK(c.json()["counts"] == Json::parse("[[1,28],[2,316]]"));
    CHECK(c.json()["L"].is_null());
    const auto l = run({"lpoly", file});
    CHECK(l.json()["L"] == Json::parse("[1,10,63,268,1071,2890,4913]"));
    CHECK(l.json()["q"] == 17);
    CHECK(run({"count", file, "--n", "3"}).json()["L"] == l.json()["L"]);
    CHECK(run({"--pretty", "lpoly", file}).out.find('\n') < run({"--pretty", "lpoly", file}).out.size() - 1);
}

TEST_CASE("involutions and quotients")
{
    const auto file = write("ex.json", example_octic);
    const auto inv = run({"involutions", file});
    REQUIRE(inv.code == 0);
    const auto records = inv.json()["involutions"];
    CHECK(records.size() == 10);
    for (const auto &r : records)
        CHECK(r["delta"].get<int>() == 8 - 4 * r["quotient_genus"].get<int>());
    CHECK(inv.json()["order_four"].size() == 4);

    const auto q = run({"quotients", file});
    REQUIRE(q.code == 0);
    const auto qj = q.json();
    int i = 0;
    for (const auto &e : qj["quotients"]) {
        CHECK(e.contains("provenance"));
        CHECK(validates(e, "q" + std::to_string(i++) + ".json"));
    }
    CHECK(i == 10);

    const auto fermat = write("fermat.json", R"({"model":"quartic","field":{"p":5},"f":{"4,0,0":1,"0,4,0":1,"0,0,4":-1}})");
    const auto fq = run({"quotients", fermat});
    REQUIRE(fq.code == 0);
    CHECK(fq.json()["quotients"].size() >= 3);
    const auto ext = run({"involutions", fermat, "--extend", "2"});
    CHECK(ext.code == 0);
    CHECK(ext.json()["field"]["k"] == 2);
}

TEST_CASE("howe build")
{
    const auto r4 = run({"howe", "build", "--f1", "0,1,0,1", "--f2", "[0,2,0,2]", "--p", "11"});
    REQUIRE(r4.code == 0);
    CHECK(r4.json()["r"] == 4);
    CHECK(r4.json()["genus"] == 1);
    CHECK(r4.json()["quotients"].is_null());
    CHECK(r4.json()["branch_count"] == 0);

    const auto r2 = run({"howe", "build", "--f1", "0,-6,11,-6,1", "--f2", "0,20,-29,10,-1", "--p", "11"});
    REQUIRE(r2.code == 0);
    CHECK(r2.json()["r"] == 2);
    CHECK(r2.json()["branch_count"] == 4);
    CHECK(r2.json()["quotients"].size() == 3);
    CHECK(validates(r2.json()["curve"], "howe.json"));
    const auto r2j = r2.json();
    for (const auto &e : r2j["quotients"])
        CHECK(validates(e, "howe_e.json"));
    const auto hq = run({"quotients", write("howe.json", r2.json()["curve"].dump())});
    CHECK(hq.code == 0);
    CHECK(hq.json()["quotients"].size() == 3);

    CHECK(run({"howe", "build", "--f1", "0,1,0,1", "--f2", "0,1,0,1", "--p", "11"}).code == 1);
    CHECK(run({"howe", "build", "--f1", "0,x", "--f2", "1", "--p", "11"}).code == 1);
}

TEST_CASE("census is deterministic and its tallies are consistent")
{
    const std::vector<std::string> args{"census", "--p", "11", "--model", "quartic", "--samples", "20", "--seed", "7"};
    const auto a = run(args), b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const auto j = a.json();
    CHECK(j["sampled"] == 20);
    CHECK(j["with_long_involution"] == j["quartic_split"].get<int>() + j["hyp_split"].get<int>());
    CHECK(j["complete"].get<int>() <= j["with_long_involution"].get<int>());

    const auto h = run({"census", "--p", "7", "--model", "hyperelliptic", "--samples", "20", "--seed", "3"});
    REQUIRE(h.code == 0);
    CHECK(h.json()["with_long_involution"] == h.json()["hyp_split"]);
    CHECK(run({"census", "--p", "7", "--model", "cubic"}).code == 1);
}

TEST_CASE("exit codes")
{
    CHECK(run({}).code == 1);
    CHECK(run({"validate"}).code == 1);
    CHECK(run({"--help"}).code == 0);
    const auto missing = run({"validate", (scratch() / "missing.json").string()});
    CHECK(missing.code == 1);
    CHECK(!missing.err.empty());
    CHECK(run({"validate", write("broken.json", "{ not json")}).code == 1);
    CHECK(run({"validate", write("sing.json", R"({"model":"hyperelliptic","field":{"p":17},"f":[0,0,0,0,0,0,0,1,1]})")})
              .code == 1);
    CHECK(run({"count", write("ex.json", example_octic), "--n", "8"}).code == 3);
    const auto big = write("big.json", R"({"model":"quartic","field":{"p":101},"f":{"4,0,0":1,"0,4,0":1,"0,0,4":1}})");
    CHECK(run({"involutions", big}).code == 3);
    CHECK(run({"involutions", write("g1.json", R"({"model":"genus1","field":{"p":7},"f":[1,0,0,1]})")}).code == 1);
}
