// Error types shared by all modules.
//
// HorizonError: a query needs information beyond what an oracle can answer
// exactly (truncated Toeplitz/WAP oracles declare a finite exact span).
// BudgetError: an exact search would exceed its configured size budget; the
// solvers never fall back to a heuristic answer.
// InputError: malformed or precondition-violating input.

#pragma once

#include <stdexcept>
#include <string>

namespace indep {

class HorizonError : public std::runtime_error {
public:
    explicit HorizonError(const std::string& what) : std::runtime_error(what) {}
};

class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace indep
