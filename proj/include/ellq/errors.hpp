#pragma once

#include <stdexcept>
#include <string>

namespace ellq {

/// Argument outside the mathematical domain of an operation.
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

/// A denominator factor vanished.  Distinct from domain_error so that
/// parameter scans can tell poles apart from plain constraint misses.
class pole_error : public std::domain_error {
public:
    explicit pole_error(const std::string& what) : std::domain_error(what) {}
};

}  // namespace ellq
