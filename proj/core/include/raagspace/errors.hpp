#ifndef RAAGSPACE_ERRORS_HPP
#define RAAGSPACE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace raagspace {

// Malformed input (schema violations, unreadable files).  CLI exit code 2.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Structurally well-formed input that violates a domain precondition
// (unknown vertex, incompatible partitions, degenerate metric).  CLI exit code 3.
struct semantic_error : std::runtime_error {
    explicit semantic_error(const std::string& what) : std::runtime_error(what) {}
};

// Resource limit reached (region enumeration cap).  CLI exit code 4.
struct cap_error : std::runtime_error {
    explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace raagspace

#endif
