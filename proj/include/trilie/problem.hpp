#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "trilie/expr.hpp"
#include "trilie/extension.hpp"

namespace trilie {

// Errors raised while loading or resolving a problem file. Messages carry
// file and line context. GuardViolation additionally names the guard whose
// value came out zero, so samplers can redraw.
struct ProblemError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct GuardViolation : ProblemError {
    std::string guard;
    GuardViolation(const std::string& where, std::string text)
        : ProblemError(where + ": guard violated: " + text + " = 0"), guard(std::move(text)) {}
};

// One structure-constant entry, still symbolic.
struct ProblemEntry {
    ExprPtr expr;
    std::size_t line = 0;
};

// A declared vector space with optional bracket entries. arity is 0 until a
// bracket line fixes it (2 or 3); arity-0 spaces resolve as abelian ternary.
struct SpaceDecl {
    std::string name;
    std::vector<std::string> basis;
    int arity = 0;
    std::map<std::size_t, ProblemEntry> entries;  // ternary: triple rank; binary: i*dim+j
    std::size_t line = 0;
};

struct ExtensionDecl {
    std::string name;
    std::size_t base = 0, fiber = 0;              // indices into Problem::spaces
    std::map<std::size_t, ProblemEntry> rho;      // pair_rank(gd,i,j) * hd + column
    std::map<std::size_t, ProblemEntry> nu;       // i * pair_count(hd) + pair_rank(hd,a,b)
    std::map<std::size_t, ProblemEntry> omega;    // triple_rank(gd,i,j,k)
    std::size_t line = 0;
};

struct Problem {
    std::string basename;
    std::vector<std::string> params;                       // declared order
    std::vector<std::pair<std::string, ExprPtr>> guards;   // (source text, parsed)
    std::vector<SpaceDecl> spaces;
    std::vector<ExtensionDecl> extensions;
    std::vector<std::string> tasks;
};

// The known task names, in canonical execution order.
const std::vector<std::string>& known_tasks();

// Parse and validate a .tlx file (versioned header line "tlx 1"; see the
// format notes in the README). No expressions are evaluated yet.
Problem load_problem(const std::string& path);

struct ResolvedExtension {
    std::string name;
    ExtensionDatum datum;
};
// Everything evaluated at one parameter assignment.
struct Resolved {
    std::vector<ThreeLieAlgebra> ternary;   // declaration order; abelian spaces included
    std::vector<LeibnizAlgebra> binary;
    std::vector<ResolvedExtension> extensions;
};

// Evaluate all entries at the assignment. The assignment must bind exactly
// the declared parameters; guards must evaluate nonzero (else GuardViolation).
Resolved resolve_problem(const Problem& p, const std::map<std::string, Scalar>& assignment);

}  // namespace trilie
