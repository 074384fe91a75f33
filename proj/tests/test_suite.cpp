#include <doctest.h>

#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "mbal/errors.hpp"
#include "mbal/suite.hpp"

using namespace mbal;

namespace {

SuiteConfig small_config()
{
    SuiteConfig c;
    c.set_exhaustive(2);
    c.set_random_sizes({3, 4});
    c.trials = 15;
    c.samples = 8;
    c.mutants = 20;
    c.seed = 5;
    return c;
}

int cli(const std::string& args)
{
    const std::string cmd = std::string{MBAL_CLI_PATH} + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace

TEST_CASE("small suite passes every criterion")
{
    const SuiteReport r = run_suite(small_config());
    REQUIRE(r.criteria.size() == 9);
    for (const CriterionResult& c : r.criteria) {
        CAPTURE(c.name);
        CHECK(c.passed());
        CHECK(c.checked > 0);
    }
    CHECK(r.passed());
}

TEST_CASE("suite output does not depend on the thread count")
{
    SuiteConfig one = small_config();
    SuiteConfig three = small_config();
    three.threads = 3;
    CHECK(suite_to_json(run_suite(one)).dump() == suite_to_json(run_suite(three)).dump());
}

TEST_CASE("suite configuration checks")
{
    SuiteConfig c = small_config();
    c.roundtrip_sizes = {0};
    CHECK_THROWS_AS((void)run_suite(c), InputError);
    c = small_config();
    c.samples = 0;
    CHECK_THROWS_AS((void)run_suite(c), InputError);
}

TEST_CASE("seeds and suite frames are reproducible")
{
    CHECK(derive_seed(1, {2, 3}) == derive_seed(1, {2, 3}));
    CHECK(derive_seed(1, {2, 3}) != derive_seed(1, {3, 2}));
    CHECK(suite_frame(5, 7, 11) == suite_frame(5, 7, 11));
    CHECK(frame_properties(suite_frame(5, 3, 11)).transitive);
}

TEST_CASE("cli exit codes")
{
    const std::string data = MBAL_TEST_DATA;
    CHECK(cli("box --frame " + data + "/f1.json --func " + data + "/f527.json") == 0);
    CHECK(cli("classify --frame " + data + "/f1.json") == 0);
    CHECK(cli("check-axioms --frame " + data + "/f1.json --laws all") == 0);
    CHECK(cli("check-axioms --frame " + data + "/f1.json --expr 'box a + 1' --laws M2") == 1);
    CHECK(cli("roundtrip --frame " + data + "/f1.json --expr 'box a + 1'") == 1);
    CHECK(cli("box --frame " + data + "/duplicate_edge.json --func " + data + "/f527.json") == 2);
    CHECK(cli("box --frame " + data + "/unknown_endpoint.json --func " + data + "/f527.json") == 2);
    CHECK(cli("check-axioms --frame " + data + "/f1.json --laws M9") == 2);
    CHECK(cli("eval --frame " + data + "/f1.json --expr 'box (f'") == 2);
    CHECK(cli("eval --frame " + data + "/f1.json --expr 'box g'") == 2);
    CHECK(cli("no-such-command") == 2);
    CHECK(cli("--seed 3 eval --frame " + data + "/f1.json --expr 'box f' --bind f=" + data + "/f527.json") == 0);
}
