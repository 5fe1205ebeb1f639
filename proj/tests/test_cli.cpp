#include "doctest.h"

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <vector>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run cli(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + PLKERNEL_CLI + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string& name) { return std::string(PLK_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("documented examples") {
    auto counts = cli("prism-r 1 --counts");
    CHECK(counts.status == 0);
    CHECK(counts.out == "vertices=5 edges=7 triangles=3 chi=1\n");

    auto torus = cli("homology " + data("torus.dset"));
    CHECK(torus.status == 0);
    CHECK(torus.out == "H_0 = Z, H_1 = Z^2, H_2 = Z\n");

    auto bad = cli("validate " + data("bad.cplx"));
    CHECK(bad.status == 2);
    CHECK(bad.out.find("intersection not a common face") != std::string::npos);
    CHECK(bad.out.find("witness") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(cli("validate " + data("square.cplx")).status == 0);
    CHECK(cli("validate " + data("missing.cplx")).status == 1);
    CHECK(cli("frobnicate").status == 1);
    CHECK(cli("prism-r 1 --bogus").status == 1);
    // Floats are rejected.
    CHECK(cli("slice " + data("graph.fam") + " 0.5").status == 1);
    CHECK(cli("rmap 1,0 1").status == 1);
    CHECK(cli("prism-r 3 --counts", "PLKERNEL_CAP=2").status == 1);
    CHECK(cli("prism-r 2 --counts", "PLKERNEL_CAP=2").status == 0);
    auto na = cli("nerve " + data("nonassoc.cat"));
    CHECK(na.status == 2);
    CHECK(na.out.find("witness: f g h") != std::string::npos);
    // λ on the boundary of the target simplex.
    CHECK(cli("fiber " + data("hexagon.map") + " 1").status == 1);
}

TEST_CASE("operations through the CLI") {
    auto fiber = cli("fiber " + data("hexagon.map") + " 1/2");
    CHECK(fiber.status == 0);
    CHECK(fiber.out.find("v 0 0 1/2\nv 1 2 1/2\n") != std::string::npos);

    auto slice = cli("slice " + data("graph.fam") + " 1/2");
    CHECK(slice.out == "complex slice ambient=1\nv 0 2\ns 0\n");

    CHECK(cli("pullback " + data("pull.map") + " " + data("pull.fam")).out.starts_with("family pullback"));
    CHECK(cli("hornfill " + data("horn21.fam") + " 2 1").status == 0);
    CHECK(cli("hornfill " + data("horn21.fam") + " 2 0").status != 0);
    CHECK(cli("subdivide " + data("square.cplx") + " -r 2").out.starts_with("complex square_sd2"));

    auto demo = cli("nerve " + data("demo.cat") + " --max-degree 2");
    CHECK(demo.status == 0);
    CHECK(demo.out.find("strings_2=320") != std::string::npos);
    CHECK(demo.out.find("H_0 = Z\n") != std::string::npos);

    auto rmap = cli("rmap 0,0 1");
    CHECK(rmap.out.find("(b{0,1},1) -> (b{0},1)") != std::string::npos);
}

TEST_CASE("json reports") {
    auto j = nlohmann::json::parse(cli("--json prism-k 2 --counts").out);
    CHECK(j["f_vector"] == nlohmann::json::array({6, 12, 10, 3}));
    CHECK(j["chi"] == 1);

    auto bad = cli("validate --json " + data("bad.cplx"));
    CHECK(bad.status == 2);
    auto b = nlohmann::json::parse(bad.out);
    CHECK(b["status"] == "invalid");
    CHECK(b["reason"] == "intersection not a common face");

    auto err = cli("--json homology " + data("missing.dset"));
    CHECK(err.status == 1);
    CHECK(nlohmann::json::parse(err.out)["error"] == "StructuralError");

    auto h = nlohmann::json::parse(cli("--json homology " + data("torus.dset")).out);
    CHECK(h["homology"][1]["betti"] == 2);
}

TEST_CASE("OFF export") {
    auto off = cli("export-off R 2");
    CHECK(off.status == 0);
    CHECK(off.out.starts_with("OFF\n10 "));
    CHECK(off.out.find("0.500000000000") != std::string::npos);
    auto low = cli("export-off K 1 --precision 3");
    CHECK(low.out.starts_with("nOFF\n2\n4 2 0\n"));
    CHECK(low.out.find("1.000 0.000") != std::string::npos);
    CHECK(cli("export-off R 4").status == 1);
    CHECK(cli("export-off Q 1").status == 1);
}

TEST_CASE("repeated runs are byte-identical") {
    for (const auto& args : std::vector<std::string>{"prism-r 3", "--json prism-r 2 --labels", "nerve " + data("demo.cat"),
                             "export-off K 3", "subdivide " + data("square.cplx") + " -r 2"}) {
        auto a = cli(args), b = cli(args);
        CHECK(a.status == 0);
        CHECK(a.out == b.out);
    }
}
