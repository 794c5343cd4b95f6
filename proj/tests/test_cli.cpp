#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(TPMINORS_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("tpminors_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    void write(const std::string& name, const std::string& text) const { std::ofstream(dir_ / name) << text; }

    fs::path dir_;
};

}  // namespace

TEST_F(Cli, GridCensus) {
    ASSERT_EQ(run("construct grid --n 4 --out " + path("g.txt")).code, 0);
    auto r = run("census --order 2 --in " + path("g.txt"));
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "value,multiplicity\n1,9\n2,12\n3,6\n4,4\n6,4\n9,1\n");
    auto j = run("--format json census --order 2 --threads 3 --in " + path("g.txt"));
    EXPECT_EQ(j.code, 0);
    EXPECT_NE(j.out.find("{\"multiplicity\":12,\"value\":\"2\"}"), std::string::npos);
}

TEST_F(Cli, Tp2xnVerifies) {
    ASSERT_EQ(run("--seed 7 construct tp2xn --N 2 --out " + path("m.txt")).code, 0);
    auto r = run("verify --in " + path("m.txt"));
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "TP ok\n");
    auto c = run("count-equal --order 2 --value 1 --scope columns --in " + path("m.txt"));
    EXPECT_EQ(c.code, 0);
    EXPECT_GE(std::stoul(c.out), 16u);
}

TEST_F(Cli, VerifyFailureExitsOne) {
    write("bad.txt", "2 2\n1 2\n2 1\n");
    auto r = run("verify --in " + path("bad.txt"));
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, "not TP: order 2 minor I=(1,2) J=(1,2) = -3\n");
}

TEST_F(Cli, RectsOnSinglePoint) {
    write("p.json", R"({"points": [["1","1"]]})");
    auto r = run("rects --area 1 --in " + path("p.json"));
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "0\n");
    write("q.json", R"({"points": [[0,0],[1,1],[2,0],[3,1]]})");
    EXPECT_EQ(run("rects --area 1 --in " + path("q.json")).out, "2\n");
    EXPECT_EQ(run("rects --area 1 --mode both --in " + path("q.json")).out, "3\n");
}

TEST_F(Cli, MuAndCheckSt) {
    EXPECT_EQ(run("mu --a 1,2").out, "12\n");
    EXPECT_EQ(run("mu --a 1,2 --b 1,2 --nonzero").out, "2\n");
    ASSERT_EQ(run("construct elekes --N 3 --out " + path("e.json")).code, 0);
    auto r = run("check-st --in " + path("e.json"));
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "m=54 n=27 incidences=81 ok\n");
    EXPECT_EQ(run("check-st --constant 1/100 --in " + path("e.json")).code, 1);
}

TEST_F(Cli, ScanReport) {
    auto r = run("scan --family grid --sizes 4,6,8");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("size,count,k,div_k\n4,12,2,2\n", 0), 0u);
    EXPECT_NE(r.out.find("# slope="), std::string::npos);
    auto again = run("--threads 2 scan --family grid --sizes 4,6,8");
    EXPECT_EQ(again.out, r.out);
    auto bad = run("scan --family grid --sizes 1,2,3");
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.out.find("# error: size 1"), std::string::npos);
}

TEST_F(Cli, ExitCodes) {
    write("junk.txt", "2 2\n1 x\n");
    EXPECT_EQ(run("verify --in " + path("junk.txt")).code, 2);
    EXPECT_EQ(run("verify --in " + path("missing.txt")).code, 2);
    write("junk.json", "{not json");
    EXPECT_EQ(run("rects --in " + path("junk.json")).code, 2);
    EXPECT_EQ(run("construct grid --n 1").code, 1);
    EXPECT_EQ(run("construct power-sum --a 1,2 --b 1,2 --k 2").code, 1);
    EXPECT_EQ(run("census --order 5 --in " + path("junk.txt")).code, 2);
    EXPECT_EQ(run("bogus").code, 2);
    ASSERT_EQ(run("construct grid --n 3 --out " + path("g3.txt")).code, 0);
    EXPECT_EQ(run("census --order 5 --in " + path("g3.txt")).code, 1);
}
