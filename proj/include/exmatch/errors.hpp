#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace exmatch {

// Violated precondition or out-of-domain request. CLI exit code 1.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Node budget or enumeration cap exhausted; liftable by the caller.
// CLI exit code 2.
struct budget_error : std::runtime_error {
    std::uint64_t nodes;
    explicit budget_error(const std::string& what, std::uint64_t nodes_spent = 0)
        : std::runtime_error(what), nodes(nodes_spent) {}
};

// Broken internal invariant; always a bug. CLI exit code 3.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace exmatch
