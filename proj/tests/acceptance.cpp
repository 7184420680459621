// Acceptance suite runner: one pass/fail line per criterion.
#include <cstdio>

#include "cubicgit/selftest.hpp"

int main(int argc, char** argv) {
    cubicgit::selftest::Options opts;
    if (argc > 1) opts.seed = std::strtoull(argv[1], nullptr, 10);
    auto results = cubicgit::selftest::run_all(opts);
    for (const auto& r : results)
        std::printf("%s criterion %2d [%s] (%.1f ms)%s%s\n", r.pass ? "PASS" : "FAIL",
                    r.id, r.name.c_str(), r.ms, r.detail.empty() ? "" : ": ",
                    r.detail.c_str());
    return cubicgit::selftest::all_passed(results) ? 0 : 1;
}
