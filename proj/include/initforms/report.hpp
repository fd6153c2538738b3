#pragma once

namespace initforms {

// Outcome of a checker: the claimed equality/property held, its hypothesis
// was absent (nothing to check), or it failed outright. A failure for a
// hypothesis-verified theorem instance indicates an implementation bug.
enum class Status { verified, hypothesis_fails, failed };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::verified: return "verified";
        case Status::hypothesis_fails: return "hypothesis_fails";
        case Status::failed: return "failed";
    }
    return "unknown";
}

}  // namespace initforms
