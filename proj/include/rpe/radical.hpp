#pragma once

// Nested radical expressions with explicit root-branch control.
//
// Prefix text form:
//   expr := INT | INT/INT | SYMBOL
//         | (add e e ...) | (sub e e) | (mul e e ...) | (div e e)
//         | (neg e) | (pow e INT)
//         | (sqrt e) | (cbrt e) | (root e N)
//         | (let SYM e body)
// A let-bound subexpression is a single shared node, so every use of the
// symbol sees the same branch choice. Example:
//   (let X (cbrt 55) (div (sqrt (add -1 (mul 80040 X))) 2))
//
// Each root node gets a sequential id in textual parse order. A branch
// assignment gives every root node an index b in [0, n); the node evaluates
// to principal * e^(2 pi i b / n), except that branch 0 of an odd root of a
// negative real is the real negative root.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rpe/real.hpp"

namespace rpe {

struct RadicalNode;
using RadicalPtr = std::shared_ptr<const RadicalNode>;

struct RadicalNode {
    enum class Op { constant, add, sub, mul, div, neg, pow, root };
    Op op = Op::constant;
    Rat value;                 // constant
    long exponent = 0;         // pow
    unsigned long root_n = 0;  // root
    int root_id = -1;          // root: slot in the branch assignment
    std::vector<RadicalPtr> args;
};

struct RadicalExpr {
    RadicalPtr top;
    std::vector<unsigned long> root_degrees;  // root_degrees[id] = n of that node
    size_t root_count() const { return root_degrees.size(); }
};

RadicalExpr parse_radical(std::string_view text);

using BranchAssignment = std::vector<unsigned long>;

// Shared nodes are evaluated once per call (memoized), so a let-bound root
// contributes a single branch choice. Throws eval_error when a divisor's
// magnitude falls below 10^(-P).
Complex eval_radical(const RadicalExpr& e, const BranchAssignment& br, const Ctx& c);

// All-principal (all-zeros) assignment.
Complex eval_radical(const RadicalExpr& e, const Ctx& c);

// First assignment in lexicographic order (by root id) whose value is real
// to 10^(-P/2) and within 10^(-(P-20)) of target. At most 8 root nodes.
std::optional<BranchAssignment> branch_search(const RadicalExpr& e, const Real& target,
                                              const Ctx& c);

std::string format_assignment(const BranchAssignment& br);

}  // namespace rpe
