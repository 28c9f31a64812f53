#pragma once

#include <string>

namespace braidlift {

/// Outcome of a probe-based check: the number of cases evaluated and the first
/// counterexample, if any.
struct CheckReport {
    bool ok = true;
    long checked = 0;
    std::string failure;

    void fail(std::string witness) {
        if (!ok) return;
        ok = false;
        failure = std::move(witness);
    }
};

}  // namespace braidlift
