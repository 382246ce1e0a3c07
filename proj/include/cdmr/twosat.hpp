#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace cdmr {

struct Literal {
    std::uint32_t variable; ///< 1-based
    bool negated = false;

    static Literal pos(std::uint32_t v) noexcept { return {v, false}; }
    static Literal neg(std::uint32_t v) noexcept { return {v, true}; }

    Literal operator~() const noexcept { return {variable, !negated}; }

    friend auto operator<=>(const Literal&, const Literal&) = default;
};

using Clause = std::pair<Literal, Literal>;

/// A 2-CNF formula. Unit clauses are written as a literal repeated twice.
/// Duplicate clauses are allowed.
class TwoSatInstance {
public:
    explicit TwoSatInstance(std::uint32_t variable_count) : variable_count_(variable_count) {}

    /// Throws std::invalid_argument if a literal references an undeclared variable.
    void add_clause(Literal a, Literal b);
    void add_unit(Literal a) { add_clause(a, a); }

    std::uint32_t variable_count() const noexcept { return variable_count_; }
    const std::vector<Clause>& clauses() const noexcept { return clauses_; }

    friend bool operator==(const TwoSatInstance&, const TwoSatInstance&) = default;

private:
    std::uint32_t variable_count_;
    std::vector<Clause> clauses_;
};

/// Truth value per variable; index 0 is variable 1.
using Assignment = std::vector<bool>;

inline bool value_of(const Assignment& a, Literal l) { return a[l.variable - 1] != l.negated; }

/// Implication graph + strongly connected components. Returns std::nullopt
/// iff the formula is unsatisfiable. Deterministic for a fixed clause order;
/// unconstrained variables come out false.
std::optional<Assignment> solve(const TwoSatInstance& inst);

/// True iff every clause has a true literal. Precondition: a.size() equals
/// inst.variable_count().
bool check(const TwoSatInstance& inst, const Assignment& a);

} // namespace cdmr
