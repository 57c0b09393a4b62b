#include "acceptance.hpp"

#include <cstdio>
#include <exception>
#include <functional>
#include <vector>

using namespace galdist::acceptance;

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"hilbert symbol formula agrees with the Hensel oracle", hilbert_against_oracle},
        {"Hilbert reciprocity on random rational pairs", reciprocity},
        {"Hasse invariant is a congruence invariant", hasse_congruence},
        {"orbit counts match exhaustive enumeration", orbit_counts},
        {"signed involution enumeration matches brute force", involution_enumeration},
        {"Weyl representative identities hold exactly", representative_identities},
        {"admissible orbit count formula", admissible_counts},
        {"distinction witnesses are sound", distinction_soundness},
        {"cone recursion along graph edges", cone_recursion},
        {"descent terminates within the root bound", descent_termination},
        {"spinor norm laws", spinor_laws},
        {"quadratic character table matches golden file", prasad_table},
    };
    int failed = 0;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        Outcome out;
        const Stopwatch clock;
        try {
            out = run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        if (!out.passed) ++failed;
        std::printf("%s [%2d] %s (%s; %.2fs)\n", out.passed ? "PASS" : "FAIL", index, name, out.detail.c_str(),
                    clock.seconds());
        std::fflush(stdout);
    }
    std::printf("%d/%d criteria passed\n", index - failed, index);
    return failed == 0 ? 0 : 1;
}
