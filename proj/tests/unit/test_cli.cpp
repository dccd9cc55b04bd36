#include "dtq/cli.hpp"

#include <doctest.h>

#include <sstream>

using namespace dtq;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    for (auto& a : args) {
        if (a.ends_with(".quiver")) {
            a = std::string(DTQ_DATA_DIR) + "/" + a;
        }
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("dt and bps tables")
{
    const auto r = run({"dt", "--quiver", "k2.quiver", "--stability", "generic", "--box", "2,2"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("1,1\t-2") != std::string::npos);
    CHECK(run({"dt", "--quiver", "k2.quiver", "--stability", "generic", "--box", "2,2"}).out == r.out);

    const auto b = run({"bps", "--quiver", "k2.quiver", "--stability", "generic", "--box", "2,2"});
    CHECK(b.code == exit_ok);
    CHECK(b.out.find("2,2\t-1/2\t0\tyes") != std::string::npos);

    const auto j = run({"dt", "--quiver", "point.quiver", "--box", "2", "--format", "jsonl"});
    CHECK(j.code == exit_ok);
    CHECK(j.out.find("\"1/4\"") != std::string::npos);
}

TEST_CASE("wallcross and framed")
{
    const auto w = run({"wallcross", "--quiver", "k2.quiver", "--from", "generic", "--to", "dual", "--box", "2,2"});
    CHECK(w.code == exit_ok);
    CHECK_FALSE(w.out.empty());
    const auto f = run({"framed", "--quiver", "point.quiver", "--e", "5", "--box", "3"});
    CHECK(f.code == exit_ok);
    CHECK(f.out.find("2\t10") != std::string::npos);
}

TEST_CASE("demos and verify")
{
    CHECK(run({"demo", "conifold", "--box", "3,3"}).code == exit_ok);
    CHECK(run({"demo", "grassmannian", "--P", "5,6", "--max-m", "4"}).code == exit_ok);
    CHECK(run({"demo", "hilbert-points", "--chi", "-6", "--max-d", "4"}).code == exit_ok);
    const auto v = run({"verify", "--quiver", "a2.quiver", "--p", "2", "--cap", "2"});
    CHECK(v.code == exit_ok);
    CHECK(v.out.find("FAIL") == std::string::npos);
}

TEST_CASE("errors")
{
    CHECK(run({}).code == exit_error);
    CHECK(run({"dt", "--quiver", "conifold.quiver", "--box", "1,1"}).code == exit_error);
    CHECK(run({"dt", "--quiver", "conifold.quiver", "--box", "1,1", "--ignore-potential"}).code == exit_ok);
    CHECK(run({"dt", "--quiver", "missing.quiver", "--box", "1"}).code == exit_error);
    CHECK(run({"dt", "--quiver", "k2.quiver", "--box", "1"}).code == exit_error);
    CHECK(run({"verify", "--quiver", "k2.quiver", "--cap", "4"}).code == exit_error);
    const auto e = run({"dt", "--quiver", "k2.quiver", "--stability", "nope", "--box", "1,1"});
    CHECK(e.code == exit_error);
    CHECK_FALSE(e.err.empty());
}
