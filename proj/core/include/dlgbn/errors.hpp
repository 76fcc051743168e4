#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dlgbn {

struct ParseError : std::runtime_error {
    ParseError(std::string msg, int line, int column)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                             std::to_string(column) + ": " + std::move(msg)),
          line(line),
          column(column) {}
    int line;
    int column;
};

struct GroundingError : std::runtime_error {
    explicit GroundingError(const std::string& msg)
        : std::runtime_error("grounding error: " + msg) {}
};

// Raised whenever an exhaustive scan would exceed a configured limit.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& msg)
        : std::runtime_error("cap exceeded: " + msg) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg)
        : std::runtime_error("invalid configuration: " + msg) {}
};

// Enumeration limits shared by all exhaustive operations.
struct Caps {
    int max_atoms_2v = 20;             // 2^n scans (states, transition graphs)
    int max_atoms_3v = 13;             // 3^n scans (sub-spaces, partial models)
    std::uint64_t max_cycles = 1'000'000;
    int max_ig_deps = 20;              // per-function dependency limit for influence graphs

    void require_2v(std::size_t atoms, const char* what) const;
    void require_3v(std::size_t atoms, const char* what) const;
};

}  // namespace dlgbn
