#pragma once

#include <string>
#include <vector>

namespace qladder {

/// Outcome of one named verification. Every comparison records both sides in
/// rendered form, so a failure is diagnosable from the report alone.
struct CheckReport {
    std::string name;
    bool ok = true;
    std::vector<std::string> lines;     // human-readable comparisons, pass or fail
    std::vector<std::string> failures;  // subset that failed

    void compare(const std::string& what, const std::string& lhs,
                 const std::string& rhs, bool equal) {
        std::string line = what + ": " + lhs + (equal ? " == " : " != ") + rhs;
        lines.push_back(line);
        if (!equal) {
            ok = false;
            failures.push_back(line);
        }
    }

    void require(const std::string& what, bool cond) {
        lines.push_back(what + (cond ? ": ok" : ": FAILED"));
        if (!cond) {
            ok = false;
            failures.push_back(what);
        }
    }

    void note(const std::string& what) { lines.push_back(what); }

    void merge(const CheckReport& sub) {
        for (const auto& l : sub.lines) lines.push_back(sub.name + ": " + l);
        for (const auto& f : sub.failures) failures.push_back(sub.name + ": " + f);
        ok = ok && sub.ok;
    }
};

}  // namespace qladder
