#pragma once

#include <string>

namespace superchar {

// Outcome of one identity check. `first_mismatch` is empty when passed.
struct VerificationReport {
    std::string identity;
    std::string params;
    bool passed = true;
    std::string first_mismatch;
    std::string note;  // e.g. cutoff warnings
};

}  // namespace superchar
