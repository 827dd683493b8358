#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "oracle.hpp"

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& input = {}) {
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int status = badderlocks::cli::dispatch(args, in, out, err);
    return {status, out.str(), err.str()};
}

const std::string kFox = "The quick brown fox jumps over the lazy dog";

}  // namespace

TEST_CASE("cli classify") {
    auto r = run({"classify", "--bits", "64"}, kFox);
    CHECK(r.status == 0);
    CHECK(r.out == "4A0B6AAA2BA80913\n");

    r = run({"classify", "--bits", "64", "--grouped", "--engine", "ref"}, kFox);
    CHECK(r.out == "4A0B6AAA 2BA80913\n");

    r = run({"classify", "--bits", "60"}, kFox);
    CHECK(r.status == 2);
    CHECK(r.err.find("64, 128, 192") != std::string::npos);

    r = run({"classify", "--bits", "64", "--engine", "turbo"});
    CHECK(r.status == 2);
}

TEST_CASE("cli engines agree on arbitrary input") {
    std::mt19937_64 rng(61);
    for (const char* bits : {"64", "416", "4288"}) {
        const auto bytes = oracle::random_bytes(rng, 1 + rng() % 3000);
        const std::string input(bytes.begin(), bytes.end());
        const auto ref = run({"classify", "--bits", bits, "--engine", "ref"}, input);
        const auto fast = run({"classify", "--bits", bits, "--engine", "fast"}, input);
        CHECK(ref.status == 0);
        CHECK(ref.out == fast.out);
    }
}

TEST_CASE("cli reads --in files") {
    const std::string path = "cli_test_input.bin";
    {
        std::ofstream f(path, std::ios::binary);
        f << kFox;
    }
    CHECK(run({"classify", "--bits", "64", "--in", path}).out == "4A0B6AAA2BA80913\n");
    std::remove(path.c_str());
    CHECK(run({"classify", "--bits", "64", "--in", "no/such/file"}).status == 2);
}

TEST_CASE("cli expand") {
    CHECK(run({"expand"}).out == "2391C8E472391C8E47\n");
    const std::string first{'\0', '\1', '\2', '\3', '\4', '\5', '\6', '\7'};
    CHECK(run({"expand", "--grouped"}, first).out == "22 918924A2 59309A4E\n");
}

TEST_CASE("cli vectors") {
    auto r = run({"vectors", "--suite", "c1", "--check"});
    CHECK(r.status == 0);
    CHECK(r.out == "32/32 vectors match\n");
    CHECK(run({"vectors", "--suite", "c2-fox", "--check"}).out == "30/30 vectors match\n");
    CHECK(run({"vectors", "--suite", "c2-small", "--check", "--engine", "fast"}).out == "20/20 vectors match\n");
    CHECK(run({"vectors", "--suite", "c2-mixed", "--check"}).status == 0);

    r = run({"vectors", "--suite", "c1"});
    CHECK(r.status == 0);
    CHECK(r.out.starts_with("72\thex:0001020304050607\t22 918924A2 59309A4E\n"));

    CHECK(run({"vectors", "--suite", "c3"}).status == 2);
}

TEST_CASE("cli verify-params") {
    const auto r = run({"verify-params"});
    CHECK(r.status == 0);
    CHECK(r.out.find("30/30 entries verified") != std::string::npos);
}

TEST_CASE("cli bench") {
    const auto r = run({"bench", "--bits", "64", "--size", "1"});
    CHECK(r.status == 0);
    CHECK(r.out.find("engine=ref bytes_per_second=") != std::string::npos);
    CHECK(r.out.find("engine=fast bytes_per_second=") != std::string::npos);
    CHECK(run({"bench", "--bits", "65", "--size", "1"}).status == 2);
}

TEST_CASE("cli assemble") {
    // SHA-256 of the fox string is a well-known constant.
    const std::string sha = "D7A8FBB307D7809469CA9ABCB0082E4F8D5651E46D3CDB762D02D0BF37C9E592";
    auto r = run({"assemble", "--modulus-bits", "336", "--hash", "sha256"}, kFox);
    CHECK(r.status == 0);
    CHECK(r.out == "0001" "4A0B6AAA2BA80913" + sha + "\n");

    r = run({"assemble", "--modulus-bits", "256"}, kFox);
    CHECK(r.status == 2);
    CHECK(run({"assemble", "--modulus-bits", "2048", "--hash", "md5"}).status == 2);
}

TEST_CASE("cli usage errors and help") {
    CHECK(run({}).status == 2);
    CHECK(run({"frobnicate"}).status == 2);
    CHECK(run({"classify"}).status == 2);
    CHECK(run({"classify", "--bits", "64", "--unknown"}).status == 2);
    CHECK(run({"classify", "--bits", "sixty-four"}).status == 2);
    const auto help = run({"--help"});
    CHECK(help.status == 0);
    CHECK(help.out.find("classify") != std::string::npos);
}
