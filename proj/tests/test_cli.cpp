#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sgspectra/cli.hpp"
#include "sgspectra/signed_graph.hpp"
#include "sgspectra/spectral.hpp"

using namespace sgs;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
    json parsed() const { return json::parse(out); }
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("sgspec_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("fixture and spectrum pipeline") {
    TempDir tmp;
    auto fx = run({"fixture", "sk8", "--out", tmp.file("sk8.sg"), "--json"});
    CHECK(fx.exit_code == 0);
    json j = fx.parsed();
    CHECK(j["command"] == "fixture");
    CHECK(j["status"] == "ok");
    CHECK(j["data"]["n"] == 8);
    CHECK(j["data"]["m"] == 28);
    CHECK(j["data"]["negative_edges"] == 9);

    // the written file re-parses to the fixture
    CHECK(read_sg_file(tmp.file("sk8.sg")) == sk8());

    auto sp = run({"spectrum", tmp.file("sk8.sg"), "--json"});
    CHECK(sp.exit_code == 0);
    json s = sp.parsed();
    CHECK(s["data"]["charpoly"] == "[425, 0, -620, 0, 222, 0, -28, 0, 1]");
    auto vals = s["data"]["eigenvalues"].get<std::vector<double>>();
    REQUIRE(vals.size() == 8);
    for (int i = 0; i < 8; ++i) CHECK(vals[i] == doctest::Approx(-vals[7 - i]).epsilon(1e-9));

    auto cp = run({"charpoly", tmp.file("sk8.sg")});
    CHECK(cp.exit_code == 0);
    CHECK(cp.out.find("[425, 0, -620, 0, 222, 0, -28, 0, 1]") != std::string::npos);
}

TEST_CASE("checks report ok/refuted with matching exit codes") {
    TempDir tmp;
    run({"fixture", "sk8", "--out", tmp.file("sk8.sg")});

    auto sym = run({"check", "sym-spectrum", tmp.file("sk8.sg"), "--json"});
    CHECK(sym.exit_code == 0);
    CHECK(sym.parsed()["status"] == "ok");

    auto ss = run({"check", "sign-symmetric", tmp.file("sk8.sg"), "--json"});
    CHECK(ss.exit_code == 1);
    CHECK(ss.parsed()["status"] == "refuted");
    CHECK(ss.parsed()["data"]["sign_symmetric"] == false);

    write_sg_file(tmp.file("k2p.sg"), SignedGraph::from_edge_list(2, {{0, 1, 1}}));
    write_sg_file(tmp.file("k2n.sg"), SignedGraph::from_edge_list(2, {{0, 1, -1}}));

    auto si = run({"check", "switching-iso", tmp.file("k2p.sg"), tmp.file("k2n.sg"), "--json"});
    CHECK(si.exit_code == 0);
    CHECK(si.parsed()["data"]["witness"]["switch_set"] == json::array({1}));

    auto iso = run({"check", "iso", tmp.file("k2p.sg"), tmp.file("k2n.sg"), "--json"});
    CHECK(iso.exit_code == 1);

    auto cosp = run({"check", "cospectral", tmp.file("k2p.sg"), tmp.file("k2n.sg"), "--json"});
    CHECK(cosp.exit_code == 0);
    CHECK(cosp.parsed()["data"]["charpoly"] == "[-1, 0, 1]");

    auto coiso = run({"check", "coiso", tmp.file("k2p.sg"), tmp.file("k2p.sg"), "--root", "0,1",
                      "--json"});
    CHECK(coiso.exit_code == 0);
}

TEST_CASE("neps subcommand matches the eigenvalue sum rule") {
    TempDir tmp;
    write_sg_file(tmp.file("a.sg"), SignedGraph::from_edge_list(2, {{0, 1, 1}}));
    write_sg_file(tmp.file("b.sg"), SignedGraph::from_edge_list(2, {{0, 1, -1}}));

    auto ne = run({"neps", tmp.file("a.sg"), tmp.file("b.sg"), "--basis", "10,01", "--out",
                   tmp.file("c.sg"), "--json"});
    CHECK(ne.exit_code == 0);
    CHECK(ne.parsed()["data"]["n"] == 4);

    auto sp = run({"spectrum", tmp.file("c.sg"), "--json"});
    auto vals = sp.parsed()["data"]["eigenvalues"].get<std::vector<double>>();
    // pairwise sums of {-1,1} and {-1,1}
    std::vector<double> expect{-2.0, 0.0, 0.0, 2.0};
    REQUIRE(vals.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(vals[i] == doctest::Approx(expect[i]).epsilon(1e-9));

    auto cert = run({"neps-certify", tmp.file("a.sg"), tmp.file("b.sg"), "--basis", "10,01",
                     "--json"});
    CHECK(cert.exit_code == 0);
    CHECK(cert.parsed()["data"]["certificate"] == "certified");

    std::ofstream(tmp.file("basis.txt")) << "# cartesian\n10\n01\n";
    auto file_form = run({"neps", tmp.file("a.sg"), tmp.file("b.sg"), "--basis-file",
                          tmp.file("basis.txt"), "--json"});
    CHECK(file_form.exit_code == 0);
    CHECK(file_form.parsed()["data"]["n"] == 4);

    auto both = run({"neps", tmp.file("a.sg"), tmp.file("b.sg"), "--basis", "10", "--basis-file",
                     tmp.file("basis.txt"), "--json"});
    CHECK(both.exit_code == 2);
}

TEST_CASE("rooted product subcommands") {
    TempDir tmp;
    run({"fixture", "sk8", "--out", tmp.file("sk8.sg")});
    write_sg_file(tmp.file("p2.sg"), SignedGraph::from_edge_list(2, {{0, 1, 1}}));

    auto rp = run({"rooted-product", tmp.file("sk8.sg"), tmp.file("p2.sg"), "--root", "0",
                   "--copies", "8", "--out", tmp.file("big.sg"), "--json"});
    CHECK(rp.exit_code == 0);
    CHECK(rp.parsed()["data"]["n"] == 16);
    CHECK(rp.parsed()["data"]["m"] == 36);

    SignedGraph big = read_sg_file(tmp.file("big.sg"));
    CHECK(has_symmetric_spectrum(big));

    auto rc = run({"rooted-certify", tmp.file("sk8.sg"), tmp.file("p2.sg"), "--root", "0",
                   "--json"});
    CHECK(rc.exit_code == 0);
    CHECK(rc.parsed()["data"]["certificate"] == "certified");

    auto clique = run({"check", "sign-symmetric", tmp.file("big.sg"), "--clique", "--json"});
    CHECK(clique.exit_code == 1);
    CHECK(clique.parsed()["data"]["method"] == "clique-restriction");
}

TEST_CASE("search subcommands write indexed results") {
    TempDir tmp;
    auto sc = run({"search", "cospectral-rooted", "--n", "6", "--out", tmp.file("pairs"),
                   "--json"});
    CHECK(sc.exit_code == 0);
    json j = sc.parsed();
    REQUIRE(j["data"]["count"] == 1);
    CHECK(j["data"]["pairs"][0]["whole_poly"] == "[0, 0, 0, 0, -4, 0, 1]");

    json index = json::parse(std::ifstream(tmp.file("pairs") + "/index.json"));
    CHECK(index["pairs"].size() == 1);
    SignedGraph a = read_sg_file(index["pairs"][0]["a"]["file"]);
    SignedGraph b = read_sg_file(index["pairs"][0]["b"]["file"]);
    CHECK(are_cospectral(a, b));

    write_sg_file(tmp.file("k3.sg"),
                  SignedGraph::from_edge_list(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}));
    auto sig = run({"search", "signatures", tmp.file("k3.sg"), "--predicate",
                    "sym-not-sign-symmetric", "--json"});
    CHECK(sig.exit_code == 1);  // refuted: no hits
    CHECK(sig.parsed()["data"]["count"] == 0);

    run({"fixture", "sk8", "--out", tmp.file("sk8.sg")});
    auto sample = run({"search", "signatures", tmp.file("sk8.sg"), "--predicate",
                       "sym-not-sign-symmetric", "--seed", "7", "--samples", "5", "--include",
                       tmp.file("sk8.sg"), "--out", tmp.file("hits"), "--json"});
    CHECK(sample.exit_code == 0);
    CHECK(sample.parsed()["data"]["count"].get<int>() >= 1);
    SignedGraph hit = read_sg_file(sample.parsed()["data"]["hits"][0]["file"]);
    CHECK(hit == sk8());
}

TEST_CASE("help and empty invocations") {
    auto help = run({"--help"});
    CHECK(help.exit_code == 0);
    CHECK(help.out.find("spectrum") != std::string::npos);

    auto none = run({});
    CHECK(none.exit_code == 2);
}

TEST_CASE("error paths carry distinct reason codes") {
    TempDir tmp;
    auto unknown = run({"frobnicate"});
    CHECK(unknown.exit_code == 2);

    auto missing = run({"spectrum", tmp.file("absent.sg"), "--json"});
    CHECK(missing.exit_code == 2);
    CHECK(missing.parsed()["data"]["code"] == "io");

    std::ofstream(tmp.file("bad.sg")) << "2 1\n0 1 maybe\n";
    auto bad = run({"spectrum", tmp.file("bad.sg"), "--json"});
    CHECK(bad.exit_code == 2);
    CHECK(bad.parsed()["data"]["code"] == "parse");
    CHECK(bad.parsed()["data"]["message"].get<std::string>().find("line 2") != std::string::npos);

    write_sg_file(tmp.file("big.sg"), SignedGraph(13));
    auto limit = run({"check", "sign-symmetric", tmp.file("big.sg"), "--json"});
    CHECK(limit.exit_code == 2);
    CHECK(limit.parsed()["data"]["code"] == "limit");

    auto badbasis = run({"neps", tmp.file("big.sg"), "--basis", "00", "--json"});
    CHECK(badbasis.exit_code == 2);
    CHECK(badbasis.parsed()["data"]["code"] == "invalid");
}

TEST_CASE("json schema is stable and outputs are reproducible") {
    TempDir tmp;
    run({"fixture", "sk8", "--out", tmp.file("sk8.sg")});
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"spectrum", tmp.file("sk8.sg"), "--json"},
             {"check", "sym-spectrum", tmp.file("sk8.sg"), "--json"},
             {"check", "sign-symmetric", tmp.file("sk8.sg"), "--json"},
         }) {
        auto first = run(args);
        auto second = run(args);
        CHECK(first.out == second.out);
        json j = first.parsed();
        CHECK(j.contains("command"));
        CHECK(j.contains("status"));
        CHECK(j.contains("data"));
    }
}
