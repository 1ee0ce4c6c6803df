#pragma once

#include <string>
#include <vector>

namespace specseq {

struct VerifyReport {
    std::string suite;
    int cases = 0;
    std::vector<std::string> failures;

    void check(bool ok, const std::string& what) {
        ++cases;
        if (!ok) failures.push_back(what);
    }
    bool ok() const { return failures.empty(); }
    void merge(const VerifyReport& o) {
        cases += o.cases;
        for (auto& f : o.failures) failures.push_back("[" + o.suite + "] " + f);
    }
};

/// Names accepted by run_verify_suite (excluding "all").
const std::vector<std::string>& verify_suite_names();

/// Runs one named suite (or "all"). Throws std::invalid_argument on an
/// unknown name. Deterministic given (suite, seed).
VerifyReport run_verify_suite(const std::string& suite, unsigned seed);

}  // namespace specseq
