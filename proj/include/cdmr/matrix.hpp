#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace cdmr {

// All matrix and vertex indices in the public API are 1-based.

/// Square matrix of non-negative integers, not yet known to be a metric.
class RawMatrix {
public:
    /// Throws std::invalid_argument unless entries.size() == n*n and n >= 1.
    RawMatrix(std::uint32_t n, std::vector<std::uint32_t> entries);

    std::uint32_t size() const noexcept { return n_; }
    std::uint32_t operator()(std::uint32_t i, std::uint32_t j) const { return entries_[(i - 1) * n_ + (j - 1)]; }
    const std::vector<std::uint32_t>& entries() const noexcept { return entries_; }

    friend bool operator==(const RawMatrix&, const RawMatrix&) = default;

private:
    std::uint32_t n_;
    std::vector<std::uint32_t> entries_;
};

struct ValidationError {
    enum class Kind { NotSquare, DiagonalNonzero, OffDiagonalZero, Asymmetric, TriangleViolation };

    Kind kind;
    /// Up to three 1-based indices; unused slots are 0.
    std::array<std::uint32_t, 3> witness{};

    std::string describe() const;

    friend bool operator==(const ValidationError&, const ValidationError&) = default;
};

const char* to_string(ValidationError::Kind kind) noexcept;

/// Symmetric non-negative integer metric with zero diagonal. Only obtainable
/// through validate(), so every instance satisfies the metric axioms.
class DistanceMatrix {
public:
    std::uint32_t size() const noexcept { return n_; }
    std::uint32_t operator()(std::uint32_t i, std::uint32_t j) const { return entries_[(i - 1) * n_ + (j - 1)]; }
    const std::vector<std::uint32_t>& entries() const noexcept { return entries_; }

    RawMatrix raw() const { return RawMatrix(n_, entries_); }

    friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

private:
    friend std::variant<DistanceMatrix, ValidationError> validate(const RawMatrix& m);

    DistanceMatrix(std::uint32_t n, std::vector<std::uint32_t> entries) : n_(n), entries_(std::move(entries)) {}

    std::uint32_t n_;
    std::vector<std::uint32_t> entries_;
};

/// Checks the metric axioms in the fixed order diagonal, symmetry,
/// positivity, triangle inequality; each scan is row-major. Returns the first
/// violation found.
std::variant<DistanceMatrix, ValidationError> validate(const RawMatrix& m);

/// Every violation, in the same order validate() would encounter them.
std::vector<ValidationError> validate_all(const RawMatrix& m);

/// Convenience for callers that know the input is a metric; throws
/// std::invalid_argument with the violation otherwise.
DistanceMatrix validated(const RawMatrix& m);

std::uint32_t max_entry(const DistanceMatrix& d) noexcept;

} // namespace cdmr
