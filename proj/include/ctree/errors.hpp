#pragma once

#include <stdexcept>
#include <string>

namespace ctree {

// Input outside an operation's domain (even node, zero, non-hub ladder start, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An iteration or depth budget ran out before the operation finished.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input (prefix strings, CLI integers).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Two independent derivations disagreed. Never silently corrected.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace ctree
