#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "wildclass/cli.hpp"
#include "wildclass/group.hpp"
#include "wildclass/io.hpp"

using namespace wildclass;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / "wildclass_cli_test";
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(const std::vector<std::string>& args) {
    Run r;
    r.code = cli_run(args, r.out, r.err);
    return r;
}

}  // namespace

TEST_CASE("group gen writes parseable groups") {
    TempDir tmp;
    Run r = cli({"group", "gen", "--family", "cyclic", "--n", "6", "-o", tmp.file("c6.grp")});
    REQUIRE(r.code == 0);
    CHECK(parse_grp(read_file(tmp.file("c6.grp"))) == make_cyclic(6));

    // json mirror by extension
    cli({"group", "gen", "--family", "dihedral", "--n", "3", "-o", tmp.file("s3.json")});
    CHECK(parse_grp_json(read_file(tmp.file("s3.json"))) == make_dihedral(3));

    Run bad = cli({"group", "gen", "--family", "heisenberg", "--p", "6"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("not_prime") != std::string::npos);
}

TEST_CASE("group iso exit codes") {
    TempDir tmp;
    cli({"group", "gen", "--family", "cyclic", "--n", "4", "-o", tmp.file("c4.grp")});
    write_file(tmp.file("v4.grp"),
               serialize_grp(make_direct_product(make_cyclic(2), make_cyclic(2))));

    CHECK(cli({"group", "iso", tmp.file("c4.grp"), tmp.file("c4.grp")}).code == 0);
    CHECK(cli({"group", "iso", tmp.file("c4.grp"), tmp.file("v4.grp")}).code == 1);
    CHECK(cli({"group", "iso", tmp.file("c4.grp"), tmp.file("missing.grp")}).code == 2);
}

TEST_CASE("reduce gamma round trip through files") {
    TempDir tmp;
    write_file(tmp.file("s3.grp"), serialize_grp(make_dihedral(3)));
    REQUIRE(cli({"reduce", "gamma", tmp.file("s3.grp"), "-o", tmp.file("s3.cdg")}).code == 0);
    REQUIRE(cli({"reduce", "gamma-inv", tmp.file("s3.cdg"), "-o", tmp.file("back.grp")}).code == 0);
    CHECK(cli({"group", "iso", tmp.file("s3.grp"), tmp.file("back.grp")}).code == 0);

    // pruned mode round-trips too
    REQUIRE(cli({"reduce", "gamma", tmp.file("s3.grp"), "--pruned", "-o",
                 tmp.file("s3p.cdg")}).code == 0);
    REQUIRE(cli({"reduce", "gamma-inv", tmp.file("s3p.cdg"), "-o",
                 tmp.file("backp.grp")}).code == 0);
    CHECK(cli({"group", "iso", tmp.file("s3.grp"), tmp.file("backp.grp")}).code == 0);
}

TEST_CASE("reduce incidence emits lattice covers and a role map") {
    TempDir tmp;
    write_file(tmp.file("p2.graph"), "2 1\n1 2\n");
    REQUIRE(cli({"reduce", "incidence", tmp.file("p2.graph"), "--extended", "-o",
                 tmp.file("p2.lat")}).code == 0);
    FinitePoset p = parse_lat(read_file(tmp.file("p2.lat")));
    CHECK(p.size() == 8);
    CHECK(fs::exists(tmp.file("p2.lat.roles.json")));
    std::string roles = read_file(tmp.file("p2.lat.roles.json"));
    CHECK(roles.find("Inf") != std::string::npos);
    CHECK(roles.find("Sup") != std::string::npos);
    CHECK(roles.find("p{1,2}") != std::string::npos);

    // plain incidence: a digraph
    REQUIRE(cli({"reduce", "incidence", tmp.file("p2.graph"), "-o",
                 tmp.file("p2.cdg")}).code == 0);
    CHECK(parse_cdg(read_file(tmp.file("p2.cdg"))).num_nodes() == 3);
}

TEST_CASE("lattice check subcommands and exit codes") {
    TempDir tmp;
    // M3 as a cover file: 1 bottom, 2/3/4 middles, 5 top
    write_file(tmp.file("m3.lat"), "5 6\n1 2\n1 3\n1 4\n2 5\n3 5\n4 5\n");
    CHECK(cli({"lattice", "check", tmp.file("m3.lat"), "--distributive"}).code == 1);
    CHECK(cli({"lattice", "check", tmp.file("m3.lat"), "--modular"}).code == 0);
    CHECK(cli({"lattice", "check", tmp.file("m3.lat"), "--find", "m3"}).code == 1);
    CHECK(cli({"lattice", "check", tmp.file("m3.lat"), "--find", "n5"}).code == 0);
    CHECK(cli({"lattice", "check", tmp.file("m3.lat"), "--crosscheck"}).code == 0);

    Run json = cli({"--json", "lattice", "check", tmp.file("m3.lat"), "--distributive"});
    CHECK(json.code == 1);
    CHECK(json.out.find("\"witness\"") != std::string::npos);

    // a chain is distributive
    write_file(tmp.file("chain.lat"), "3 2\n1 2\n2 3\n");
    CHECK(cli({"lattice", "check", tmp.file("chain.lat"), "--distributive"}).code == 0);

    // a non-lattice poset is an input error
    write_file(tmp.file("nolat.lat"), "4 3\n1 2\n1 3\n1 4\n");
    CHECK(cli({"lattice", "check", tmp.file("nolat.lat"), "--distributive"}).code == 2);
}

TEST_CASE("iso subcommand spans all structure kinds") {
    TempDir tmp;
    write_file(tmp.file("a.graph"), "3 2\n1 2\n2 3\n");
    write_file(tmp.file("b.graph"), "3 2\n2 1\n1 3\n");  // relabeling of the path
    write_file(tmp.file("k3.graph"), "3 3\n1 2\n1 3\n2 3\n");

    Run self = cli({"iso", "--kind", "graph", tmp.file("a.graph"), tmp.file("a.graph"),
                    "--witness"});
    CHECK(self.code == 0);
    CHECK(self.out.find("[1,2,3]") != std::string::npos);  // identity witness

    CHECK(cli({"iso", "--kind", "graph", tmp.file("a.graph"), tmp.file("b.graph")}).code == 0);
    CHECK(cli({"iso", "--kind", "graph", tmp.file("a.graph"), tmp.file("k3.graph")}).code == 1);

    write_file(tmp.file("m3.lat"), "5 6\n1 2\n1 3\n1 4\n2 5\n3 5\n4 5\n");
    write_file(tmp.file("n5.lat"), "5 5\n1 2\n2 3\n3 5\n1 4\n4 5\n");
    CHECK(cli({"iso", "--kind", "lattice", tmp.file("m3.lat"), tmp.file("n5.lat")}).code == 1);
    CHECK(cli({"iso", "--kind", "poset", tmp.file("m3.lat"), tmp.file("m3.lat")}).code == 0);

    write_file(tmp.file("x.cdg"), "2 2\n1 2 1\n1 2 2\n");
    write_file(tmp.file("y.cdg"), "2 2\n2 1 1\n2 1 2\n");
    write_file(tmp.file("z.cdg"), "2 2\n1 2 1\n2 1 2\n");
    CHECK(cli({"iso", "--kind", "cdigraph", tmp.file("x.cdg"), tmp.file("y.cdg")}).code == 0);
    CHECK(cli({"iso", "--kind", "cdigraph", tmp.file("x.cdg"), tmp.file("z.cdg")}).code == 1);

    CHECK(cli({"iso", "--kind", "nonsense", tmp.file("a.graph"), tmp.file("a.graph")}).code == 2);
}

TEST_CASE("matrix subcommands") {
    TempDir tmp;
    write_file(tmp.file("pairs.json"), R"({
      "first":  {"a": [[0,1],[0,0]], "b": [[1,0],[0,0]]},
      "second": {"a": [[0,0],[1,0]], "b": [[0,0],[0,1]]}
    })");
    // second = transpose-conjugate of first by the swap matrix
    CHECK(cli({"matrix", "simsim", tmp.file("pairs.json"), "--p", "2"}).code == 0);

    write_file(tmp.file("diff.json"), R"({
      "first":  {"a": [[0,0],[0,0]], "b": [[0,0],[0,0]]},
      "second": {"a": [[0,1],[0,0]], "b": [[0,0],[0,0]]}
    })");
    CHECK(cli({"matrix", "simsim", tmp.file("diff.json"), "--p", "2"}).code == 1);

    write_file(tmp.file("m1.json"), "[[0,1],[2,0]]");
    write_file(tmp.file("m2.json"), "[[0,2],[1,0]]");
    write_file(tmp.file("sym.json"), "[[1,0],[0,1]]");
    CHECK(cli({"matrix", "skewcong", tmp.file("m1.json"), tmp.file("m2.json"), "--p", "3"}).code == 0);
    CHECK(cli({"matrix", "skewcong", tmp.file("m1.json"), tmp.file("sym.json"), "--p", "3"}).code == 2);
}

TEST_CASE("verify pipelines run at reduced scale") {
    CHECK(cli({"verify", "theorem2", "--scale", "4"}).code == 0);
    CHECK(cli({"verify", "theorem3", "--scale", "2"}).code == 0);
    // the adjudication finds pentagons as soon as a graph has an edge or two
    // vertices, so the claim fails at any scale >= 2
    Run t4 = cli({"verify", "theorem4", "--scale", "2"});
    CHECK(t4.code == 1);
    CHECK(t4.out.find("claim FAILS") != std::string::npos);

    CHECK(cli({"verify", "theorem2", "--scale", "9"}).code == 2);  // out of bounds
}

TEST_CASE("json output is byte-identical across runs") {
    TempDir tmp;
    write_file(tmp.file("m3.lat"), "5 6\n1 2\n1 3\n1 4\n2 5\n3 5\n4 5\n");
    Run a = cli({"--json", "lattice", "check", tmp.file("m3.lat"), "--crosscheck"});
    Run b = cli({"--json", "lattice", "check", tmp.file("m3.lat"), "--crosscheck"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}

TEST_CASE("export produces dot and json") {
    TempDir tmp;
    write_file(tmp.file("p2.graph"), "2 1\n1 2\n");
    Run dot = cli({"export", tmp.file("p2.graph"), "--format", "dot"});
    CHECK(dot.code == 0);
    CHECK(dot.out.find("graph G {") != std::string::npos);

    write_file(tmp.file("chain.lat"), "3 2\n1 2\n2 3\n");
    Run hasse = cli({"export", tmp.file("chain.lat"), "--format", "dot"});
    CHECK(hasse.out.find("digraph H {") != std::string::npos);
    CHECK(hasse.out.find("1 -> 2") != std::string::npos);

    Run json = cli({"export", tmp.file("p2.graph"), "--format", "json"});
    CHECK(json.out.find("\"type\": \"graph\"") != std::string::npos);

    CHECK(cli({"export", tmp.file("nonexistent.xyz"), "--format", "dot"}).code == 2);
}

TEST_CASE("help exits zero") {
    CHECK(cli({"--help"}).code == 0);
}
