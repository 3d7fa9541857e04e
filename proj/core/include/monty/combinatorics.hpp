#pragma once

#include "monty/rational.hpp"

#include <vector>

namespace monty {

// n! for n >= 0; throws std::domain_error on negative n.
BigInt factorial(long long n);

// Falling factorial n * (n-1) * ... * (n-k+1), k factors.
// k == 0 yields 1. Whenever fewer than k items are available (k > n,
// including every negative n) the count is exactly 0 — this zero rule is
// what lets compound counting formulas silently drop impossible branches.
// Throws std::domain_error on negative k.
BigInt falling_factorial(long long n, long long k);

// Binomial coefficient C(n, k) for n >= 0; 0 when k > n or k < 0.
BigInt binomial(long long n, long long k);

// Row n of Pascal's triangle: [C(n,0), ..., C(n,n)].
std::vector<BigInt> pascal_row(long long n);

}  // namespace monty
