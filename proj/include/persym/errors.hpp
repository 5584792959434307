#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace persym {

/// Exhaustive sweep refused because 2^bits candidates exceed the configured budget.
class SearchSpaceTooLarge : public std::length_error {
public:
    SearchSpaceTooLarge(const std::string& what, int required_bits)
        : std::length_error(what), required_bits_(required_bits) {}
    int required_bits() const noexcept { return required_bits_; }

private:
    int required_bits_;
};

/// A closed form was evaluated below the smallest k for which it is stated.
class BelowValidityRange : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A quantity that must be an integer came out fractional.
class NonIntegralResult : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class InconsistentSystem : public std::runtime_error {
public:
    InconsistentSystem(const std::string& what, std::vector<std::size_t> rows)
        : std::runtime_error(what), rows_(std::move(rows)) {}
    /// Original indices of the equations that cannot be satisfied.
    const std::vector<std::size_t>& rows() const noexcept { return rows_; }

private:
    std::vector<std::size_t> rows_;
};

class UnderdeterminedSystem : public std::runtime_error {
public:
    UnderdeterminedSystem(const std::string& what, std::vector<std::size_t> columns)
        : std::runtime_error(what), columns_(std::move(columns)) {}
    /// Unknowns left without a pivot.
    const std::vector<std::size_t>& columns() const noexcept { return columns_; }

private:
    std::vector<std::size_t> columns_;
};

class CacheCorrupted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace persym
