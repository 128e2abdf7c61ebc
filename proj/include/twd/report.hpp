#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace twd {

/// Malformed input data (bad indices, wrong shapes, unparsable scalars).
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called on data violating its precondition. The message
/// carries the witness.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A tensor space would exceed the configured dimension cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Check {
    std::string name;
    bool passed = true;
    std::string witness; // empty on success
};

/// Named pass/fail verdicts, in the order they were run.
struct VerificationReport {
    std::vector<Check> checks;

    void add(std::string name, bool passed, std::string witness = {})
    {
        checks.push_back({std::move(name), passed, passed ? std::string{} : std::move(witness)});
    }

    void append(const VerificationReport& other, const std::string& prefix = {})
    {
        for (const auto& c : other.checks)
            checks.push_back({prefix + c.name, c.passed, c.witness});
    }

    bool passed() const
    {
        for (const auto& c : checks)
            if (!c.passed)
                return false;
        return true;
    }

    const Check* find(const std::string& name) const
    {
        for (const auto& c : checks)
            if (c.name == name)
                return &c;
        return nullptr;
    }
};

} // namespace twd
