// End-to-end checks of the command-line binary: exact output on pinned
// inputs, deterministic reports, and the documented exit codes.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "pcoh/io.hpp"

namespace fs = std::filesystem;
using namespace pcoh;

namespace {

const std::string kBin = PCOH_CLI_PATH;

fs::path work_dir() {
    fs::path dir = fs::temp_directory_path() / "pcoh_cli_test";
    fs::create_directories(dir);
    return dir;
}

int run(const std::string& args) {
    int status = std::system((kBin + " " + args).c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

const std::string kMaxTwo = "pcs\nweb: (1,*) (2,*)\nH: 0 1\nH: 1 0\nV: 1 1\n";

}  // namespace

TEST_CASE("cli computes norms exactly") {
    fs::path dir = work_dir();
    write_text_file((dir / "max2.pcs").string(), kMaxTwo);
    write_text_file((dir / "half.vec").string(), "vec: 1/2 1/2\n");
    fs::path out = dir / "norm_out.txt";
    REQUIRE(run("norm " + (dir / "half.vec").string() + " " + (dir / "max2.pcs").string() +
                " > " + out.string()) == 0);
    CHECK(read_text_file(out.string()) == "1/2\n");
}

TEST_CASE("cli space operations write loadable files") {
    fs::path dir = work_dir();
    write_text_file((dir / "one.pcs").string(), "pcs\nweb: *\nH: 1\nV: 1\n");
    fs::path prod = dir / "max2_built.pcs";
    REQUIRE(run("with " + (dir / "one.pcs").string() + " " + (dir / "one.pcs").string() +
                " -o " + prod.string()) == 0);
    CHECK(read_text_file(prod.string()) == kMaxTwo);

    fs::path dual_out = dir / "simplex2.pcs";
    REQUIRE(run("dual " + prod.string() + " -o " + dual_out.string()) == 0);
    Pcs dual = load_pcs(dual_out.string());
    RatVec ones;
    ones.set(0, rat(1));
    ones.set(1, rat(1));
    CHECK_FALSE(dual.member(ones));
    CHECK(dual.member(RatVec::unit(0)));
}

TEST_CASE("cli kernel round trip through matrix files") {
    fs::path dir = work_dir();
    const std::string ktext = "kernel r0,r1 u,v\nr0 u 1/2\nr0 v 1/4\nr1 v 1\n";
    write_text_file((dir / "k.kernel").string(), ktext);
    fs::path mat = dir / "mats" / "k.matrix";
    REQUIRE(run("kernel to-matrix " + (dir / "k.kernel").string() + " -o " + mat.string()) ==
            0);
    fs::path back = dir / "k_back.txt";
    REQUIRE(run("kernel from-matrix " + mat.string() + " > " + back.string()) == 0);
    CHECK(read_text_file(back.string()) == ktext);
}

TEST_CASE("cli suite runs pass and reports are byte-identical") {
    fs::path dir = work_dir();
    fs::path r1 = dir / "rep1.txt", r2 = dir / "rep2.txt";
    REQUIRE(run("suite example-3-6 --report " + r1.string() + " > /dev/null") == 0);
    REQUIRE(run("suite example-3-6 --report " + r2.string() + " > /dev/null") == 0);
    std::string a = read_text_file(r1.string());
    CHECK(a == read_text_file(r2.string()));
    CHECK(a.find("result: PASS") != std::string::npos);

    REQUIRE(run("suite kernels --instances 15 --seed 9 --report " + r1.string() +
                " > /dev/null") == 0);
    REQUIRE(run("suite kernels --instances 15 --seed 9 --report " + r2.string() +
                " > /dev/null") == 0);
    CHECK(read_text_file(r1.string()) == read_text_file(r2.string()));
}

TEST_CASE("cli rejects bad input with exit code 2") {
    fs::path dir = work_dir();
    write_text_file((dir / "bad.pcs").string(), "garbage\n");
    write_text_file((dir / "half.vec").string(), "vec: 1/2 1/2\n");
    CHECK(run("norm " + (dir / "half.vec").string() + " " + (dir / "bad.pcs").string() +
              " 2> /dev/null") == 2);
    CHECK(run("norm " + (dir / "half.vec").string() + " " + (dir / "missing.pcs").string() +
              " 2> /dev/null") == 2);
    CHECK(run("suite nonsense 2> /dev/null") == 2);
    CHECK(run("dual 2> /dev/null") == 2);
}
