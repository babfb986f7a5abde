// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if any fail.

#include "bidisc/verification.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

int main(int argc, char** argv) {
    const std::string root = argc > 1 ? argv[1] : BIDISC_TEST_CORPUS;
    const bidisc::Corpus corpus = bidisc::load_corpus(root);
    const bidisc::VerifyOptions options;

    const bidisc::VerificationReport first = bidisc::run_verification(corpus, options);
    bool all = true;
    for (const bidisc::CriterionResult& c : first.criteria) {
        std::string metrics;
        for (const auto& [k, v] : c.metrics) {
            metrics += " " + k + "=" + v;
        }
        std::printf("criterion %d %s: %s (%.2fs)%s\n", c.id, c.name.c_str(), c.pass ? "PASS" : "FAIL", c.seconds,
                    metrics.c_str());
        all = all && c.pass;
    }

    const bidisc::VerificationReport second = bidisc::run_verification(corpus, options);
    const bool same = bidisc::machine_output(first) == bidisc::machine_output(second);
    std::printf("criterion 10 determinism: %s (two runs, %zu bytes each)\n", same ? "PASS" : "FAIL",
                bidisc::machine_output(first).size());
    all = all && same;
    return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
