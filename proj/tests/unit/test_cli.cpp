#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = k3lat::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

TEST_CASE("roots") {
    CHECK(run({"roots", "E8", "--count"}).out == "240\n");
    CHECK(run({"roots", "2A(1)+A(2)", "--count"}).out == "10\n");
    Result r = run({"roots", "A(2)"});
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);
    auto j = nlohmann::json::parse(run({"--format", "json", "roots", "A(1)"}).out);
    CHECK(j["count"] == 2);
}

TEST_CASE("pex listing") {
    Result r = run({"pex", "--max", "240"});
    CHECK(r.code == 0);
    std::istringstream in(r.out);
    std::vector<int> v;
    for (int x; in >> x;) v.push_back(x);
    CHECK(v.size() == 99 + 14 + 1 + 3);
    CHECK(std::find(v.begin(), v.end(), 96) == v.end());
    CHECK(v.back() == 143);
}

TEST_CASE("verdict JSON with the format flag after the command") {
    Result r = run({"verdict", "57", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "GeneralType");
    CHECK(j["witness"]["source"] == "caseI");
    CHECK(j["witness"]["m"] == nlohmann::json::array({1, 2, 4, 6}));
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("table CSVs match the golden files") {
    for (const char* t : {"I", "II-10", "II-14", "III", "IV"}) {
        Result r = run({"--format", "csv", "tables", "--table", t});
        CHECK(r.code == 0);
        CHECK(r.out == slurp(std::string(K3LAT_GOLDEN_DIR) + "/table_" + t + ".csv"));
    }
    CHECK(run({"--format", "csv", "tables"}).code == k3lat::cli::kUsage);
}

TEST_CASE("identical invocations give identical output") {
    for (std::vector<std::string> args : {std::vector<std::string>{"--format", "json", "reflect", "--k3", "2", "--samples", "300"},
                                          std::vector<std::string>{"--threads", "3", "search", "77"},
                                          std::vector<std::string>{"--format", "csv", "verdict", "52"}}) {
        Result a = run(args), b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
    Result t1 = run({"--threads", "1", "search", "90"});
    Result t3 = run({"--threads", "3", "search", "90"});
    CHECK(t1.out == t3.out);
}

TEST_CASE("other commands") {
    CHECK(run({"repnum", "E7", "2"}).out == "126\n");
    CHECK(run({"repnum", "D6", "4", "--method", "brute"}).out == run({"repnum", "D6", "4"}).out);
    CHECK(run({"cmin", "30"}).out == "46/15 at a=19\n");
    CHECK(run({"enum", "E8", "4", "--count"}).out == "2160\n");
    CHECK(run({"theta", "D(6)", "--precision", "1"}).out == "0 1\n1 60\n");
    CHECK(run({"rst", "--m", "5", "--exponents", "1,4"}).out.find("sigma 1\n") == 0);
    CHECK(run({"rst", "--m", "4", "--exponents", "2,2,1", "--k", "2", "--l", "1"}).out == "3/2\n");
    CHECK(run({"rst", "--matrix", "0,1;1,0"}).out.find("sigma 1/2") != std::string::npos);
    CHECK(run({"bigphi", "--max", "100"}).out.find("violations 0") != std::string::npos);
    CHECK(run({"ineq", "96"}).out.find("mineqd true") != std::string::npos);
    Result d = run({"disc", "U(2)"});
    CHECK(d.out.find("two_elementary true") != std::string::npos);
    CHECK(d.out.find("delta 0") != std::string::npos);
    Result rf = run({"reflect", "U+<-12>", "--r=2,2,1"});
    CHECK(rf.out.find("class Neither") != std::string::npos);
    Result s = run({"--format", "csv", "search", "46", "--case", "I"});
    CHECK(s.out.find("46,caseI,\"(1,2,4,5)\"") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == k3lat::cli::kUsage);
    CHECK(run({"bogus"}).code == k3lat::cli::kUsage);
    CHECK(run({"roots", "E9"}).code == k3lat::cli::kUsage);
    CHECK(run({"--format", "xml", "roots", "E8"}).code == k3lat::cli::kUsage);
    CHECK(run({"reflect", "U", "--r=1,2,3"}).code == k3lat::cli::kUsage);
    CHECK(run({"reflect", "U+<-12>", "--r=2,2,0"}).code == k3lat::cli::kUsage);
    CHECK(run({"rst", "--matrix", "1,1;0,1"}).code == k3lat::cli::kFailure);
    Result big = run({"search", "200", "--exhaustive"});
    CHECK(big.code == k3lat::cli::kFailure);
    CHECK(big.err.find("error:") != std::string::npos);
    CHECK(run({"--help"}).code == k3lat::cli::kOk);
}

TEST_CASE("the installed binary honours exit codes and the thread variable") {
    const std::string bin = K3LAT_CLI_PATH;
    CHECK(std::system((bin + " roots E8 --count > /dev/null").c_str()) == 0);
    const int bad = std::system((bin + " roots E9 2> /dev/null").c_str());
    CHECK(WEXITSTATUS(bad) == 2);
    const int env = std::system(("K3LAT_THREADS=2 " + bin + " search 46 --case I > /dev/null 2>&1").c_str());
    CHECK(WEXITSTATUS(env) == 0);
}
