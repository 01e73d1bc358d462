#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

// End-to-end checks against the built binary (path in NETDIFF_BIN).

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

std::string bin() {
    const char* p = std::getenv("NETDIFF_BIN");
    REQUIRE_MESSAGE(p != nullptr, "NETDIFF_BIN must point at the built binary");
    return p;
}

int run(const std::string& args) {
    const std::string cmd = bin() + " " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("netdiff-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

fs::path write_k3(const fs::path& dir) {
    const fs::path p = dir / "k3.tsv";
    std::ofstream out(p);
    out << "a b\na c\nb a\nb c\nc a\nc b\n";
    return p;
}

} // namespace

TEST_CASE("spectral prints lambda1 and exits 0") {
    TempDir tmp;
    fs::path g = write_k3(tmp.path);
    CHECK(run("spectral --graph " + g.string() + " --out " + tmp.path.string()) == 0);
    CHECK(fs::exists(tmp.path / "spectral-manifest.json"));
}

TEST_CASE("exit codes: usage 1, data error 2, numeric error 3") {
    TempDir tmp;
    fs::path g = write_k3(tmp.path);
    CHECK(run("frobnicate") == 1);
    CHECK(run("spectral --graph " + (tmp.path / "missing.tsv").string()) == 2);
    CHECK(run("acentrality --graph " + g.string() + " --alpha 2.0 --out " +
              tmp.path.string()) == 3);
}

TEST_CASE("pagerank writes scores TSV with ranks") {
    TempDir tmp;
    fs::path g = write_k3(tmp.path);
    REQUIRE(run("pagerank --graph " + g.string() + " --out " + tmp.path.string()) == 0);
    std::string tsv = slurp(tmp.path / "pagerank_scores.tsv");
    CHECK(tsv.find("a\t") != std::string::npos);
    CHECK(tsv.find("\t1\n") != std::string::npos);
}

TEST_CASE("synth is byte-reproducible for a fixed seed") {
    TempDir tmp;
    const std::string a = (tmp.path / "a").string(), b = (tmp.path / "b").string();
    REQUIRE(run("synth --users 40 --cascades 60 --seed 9 --out " + a) == 0);
    REQUIRE(run("synth --users 40 --cascades 60 --seed 9 --out " + b) == 0);
    CHECK(slurp(fs::path(a) / "graph.tsv") == slurp(fs::path(b) / "graph.tsv"));
    CHECK(slurp(fs::path(a) / "activity.csv") == slurp(fs::path(b) / "activity.csv"));
    CHECK(slurp(fs::path(a) / "planted.tsv") == slurp(fs::path(b) / "planted.tsv"));
    CHECK(!slurp(fs::path(a) / "activity.csv").empty());
}

TEST_CASE("synth with zero cascades emits a valid empty log") {
    TempDir tmp;
    REQUIRE(run("synth --users 10 --cascades 0 --seed 1 --out " + tmp.path.string()) == 0);
    CHECK(slurp(tmp.path / "activity.csv") == "story_id,user_id,timestamp,kind\n");
}

TEST_CASE("sweep pipeline produces the five-column CSV") {
    TempDir tmp;
    const std::string sy = (tmp.path / "sy").string();
    REQUIRE(run("synth --users 50 --cascades 80 --seed 3 --out " + sy) == 0);
    REQUIRE(run("sweep --graph " + sy + "/graph.tsv --log " + sy +
                "/activity.csv --min-votes 2 --alpha-grid 0.1,0.5 --out " +
                tmp.path.string()) == 0);
    std::string csv = slurp(tmp.path / "sweep.csv");
    CHECK(csv.rfind("alpha,metric,estimate,correlation,excluded_reason", 0) == 0);
    CHECK(csv.find("nacentrality") != std::string::npos);
}
