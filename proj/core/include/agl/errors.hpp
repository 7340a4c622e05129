#pragma once

#include <stdexcept>
#include <string>

namespace agl {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Two operands (or a set and an operand) live in different groups.
struct MixedGroups : Error {
    explicit MixedGroups(const std::string& what = "operands belong to different groups") : Error(what) {}
};

// An element fails the membership invariant of its claimed group.
struct NotOnGroup : Error {
    explicit NotOnGroup(const std::string& what = "element does not satisfy the group membership invariant") : Error(what) {}
};

struct EmptySet : Error {
    explicit EmptySet(const std::string& what = "operation requires a non-empty set") : Error(what) {}
};

struct ConstantPolynomial : Error {
    explicit ConstantPolynomial(const std::string& what = "operation requires a non-constant polynomial") : Error(what) {}
};

struct ZeroPolynomial : Error {
    explicit ZeroPolynomial(const std::string& what = "operation requires a non-zero polynomial") : Error(what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what = "dimension mismatch") : Error(what) {}
};

// Integer factorisation ran out of its operation budget; never silently truncated.
struct FactorizationBudgetExceeded : Error {
    explicit FactorizationBudgetExceeded(const std::string& what = "factorization budget exceeded") : Error(what) {}
};

// Tuple-enumeration budget for brute-force counting was exceeded.
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what = "enumeration budget exceeded") : Error(what) {}
};

// A requested decision procedure does not exist for this input class.
struct Unsupported : Error {
    explicit Unsupported(const std::string& what = "unsupported operation for this input") : Error(what) {}
};

// A correspondence image over Q came out empty on a non-empty input;
// the complex fibers exist but none of them is rational.
struct IrrationalFiber : Error {
    explicit IrrationalFiber(const std::string& what = "correspondence fiber has no rational points") : Error(what) {}
};

// Hypothesis guards of the experiment harness.
struct TranslateCorrespondence : Error {
    explicit TranslateCorrespondence(const std::string& what = "correspondence is a translate of an algebraic subgroup") : Error(what) {}
};
struct DegenerateInput : Error {
    explicit DegenerateInput(const std::string& what = "polynomial is degenerate for the chosen group") : Error(what) {}
};
struct OffCurveGenerator : Error {
    explicit OffCurveGenerator(const std::string& what = "supplied generator is not on the curve") : Error(what) {}
};

struct MalformedConfig : Error {
    explicit MalformedConfig(const std::string& what = "malformed experiment configuration") : Error(what) {}
};

} // namespace agl
