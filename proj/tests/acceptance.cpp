// One line per acceptance criterion. Exit status is nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <map>

#include "indsub/verify.hpp"

using namespace indsub;

namespace {

struct Criterion {
    int id;
    const char* title;
    const char* suite;
    std::vector<std::string> props;  // empty: every property of the suite
    double budget;                   // seconds
};

const std::vector<Criterion> kCriteria = {
    {1, "fixed-point congruence", "chi-comp", {"fixed-point-congruence", "sub-lattice-hosts"}, 300},
    {2, "Sylow lattice identity", "sylow", {}, 120},
    {3, "sub-basis decomposition", "subbasis", {}, 60},
    {4, "#IndSub sub-basis expansion", "indsub-expansion", {"indsub-sub-expansion"}, 180},
    {5, "FPT path", "fpt", {}, 180},
    {6, "hom-expansion identity", "hom-expansion", {}, 180},
    {7, "end-to-end clique counting", "pipeline", {}, 300},
    {8, "lift identity", "lift", {}, 60},
    {9, "dichotomy never neither", "dichotomy", {}, 600},
    {10, "modular pipeline", "modular", {}, 180},
    {11, "parsimony", "parsimony", {}, 300},
    {12, "spot values", "spot", {}, 60},
};

} // namespace

int main(int argc, char** argv)
{
    const std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 7;
    std::map<std::string, SuiteReport> done;
    int failed = 0;
    for (const auto& c : kCriteria) {
        if (!done.count(c.suite)) done.emplace(c.suite, run_suite(c.suite, seed));
        const SuiteReport& r = done.at(c.suite);
        bool ok = true;
        std::string why;
        std::size_t checks = 0;
        for (const auto& p : r.properties) {
            if (!c.props.empty() && std::find(c.props.begin(), c.props.end(), p.name) == c.props.end()) continue;
            checks += p.checks;
            if (!p.pass) {
                ok = false;
                why += " [" + p.name + ": " + p.detail.dump() + "]";
            }
        }
        if (r.seconds > c.budget) {
            ok = false;
            why += " [over time budget]";
        }
        failed += !ok;
        std::printf("criterion %2d %-30s %s  checks=%zu  %.1fs%s\n", c.id, c.title, ok ? "PASS" : "FAIL", checks,
                    r.seconds, why.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria pass\n", int(kCriteria.size()) - failed, kCriteria.size());
    return failed ? 1 : 0;
}
