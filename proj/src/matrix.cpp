#include "cdmr/matrix.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace cdmr {

RawMatrix::RawMatrix(std::uint32_t n, std::vector<std::uint32_t> entries) : n_(n), entries_(std::move(entries))
{
    if (n_ == 0)
        throw std::invalid_argument("matrix must have at least one row");
    if (entries_.size() != std::size_t{n_} * n_)
        throw std::invalid_argument("matrix entry count does not match n*n");
}

const char* to_string(ValidationError::Kind kind) noexcept
{
    switch (kind) {
    case ValidationError::Kind::NotSquare: return "NotSquare";
    case ValidationError::Kind::DiagonalNonzero: return "DiagonalNonzero";
    case ValidationError::Kind::OffDiagonalZero: return "OffDiagonalZero";
    case ValidationError::Kind::Asymmetric: return "Asymmetric";
    case ValidationError::Kind::TriangleViolation: return "TriangleViolation";
    }
    return "?";
}

std::string ValidationError::describe() const
{
    std::string s = to_string(kind);
    switch (kind) {
    case Kind::NotSquare:
        break;
    case Kind::DiagonalNonzero:
        s += " at (" + std::to_string(witness[0]) + "," + std::to_string(witness[0]) + ")";
        break;
    case Kind::OffDiagonalZero:
    case Kind::Asymmetric:
        s += " at (" + std::to_string(witness[0]) + "," + std::to_string(witness[1]) + ")";
        break;
    case Kind::TriangleViolation:
        s += " at (" + std::to_string(witness[0]) + "," + std::to_string(witness[1]) + "," +
             std::to_string(witness[2]) + ")";
        break;
    }
    return s;
}

namespace {

// Visits violations in the documented order; stops early when the callback
// returns false.
template <typename Visit>
void scan_violations(const RawMatrix& m, Visit&& visit)
{
    const std::uint32_t n = m.size();
    using Kind = ValidationError::Kind;

    for (std::uint32_t i = 1; i <= n; ++i)
        if (m(i, i) != 0 && !visit(ValidationError{Kind::DiagonalNonzero, {i, 0, 0}}))
            return;

    for (std::uint32_t i = 1; i <= n; ++i)
        for (std::uint32_t j = i + 1; j <= n; ++j)
            if (m(i, j) != m(j, i) && !visit(ValidationError{Kind::Asymmetric, {i, j, 0}}))
                return;

    for (std::uint32_t i = 1; i <= n; ++i)
        for (std::uint32_t j = 1; j <= n; ++j)
            if (i != j && m(i, j) == 0 && !visit(ValidationError{Kind::OffDiagonalZero, {i, j, 0}}))
                return;

    // witness (i, j, w): D_iw + D_wj < D_ij
    for (std::uint32_t i = 1; i <= n; ++i)
        for (std::uint32_t j = 1; j <= n; ++j)
            for (std::uint32_t w = 1; w <= n; ++w)
                if (std::uint64_t{m(i, w)} + m(w, j) < m(i, j) &&
                    !visit(ValidationError{Kind::TriangleViolation, {i, j, w}}))
                    return;
}

} // namespace

std::variant<DistanceMatrix, ValidationError> validate(const RawMatrix& m)
{
    std::optional<ValidationError> first;
    scan_violations(m, [&](const ValidationError& e) {
        first = e;
        return false;
    });
    if (first)
        return *first;
    return DistanceMatrix(m.size(), m.entries());
}

std::vector<ValidationError> validate_all(const RawMatrix& m)
{
    std::vector<ValidationError> all;
    scan_violations(m, [&](const ValidationError& e) {
        all.push_back(e);
        return true;
    });
    return all;
}

DistanceMatrix validated(const RawMatrix& m)
{
    auto result = validate(m);
    if (auto* e = std::get_if<ValidationError>(&result))
        throw std::invalid_argument("not a distance matrix: " + e->describe());
    return std::get<DistanceMatrix>(std::move(result));
}

std::uint32_t max_entry(const DistanceMatrix& d) noexcept
{
    return *std::max_element(d.entries().begin(), d.entries().end());
}

} // namespace cdmr
