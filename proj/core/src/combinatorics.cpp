#include "monty/combinatorics.hpp"

#include <stdexcept>

namespace monty {

BigInt factorial(long long n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  BigInt out = 1;
  for (long long i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt falling_factorial(long long n, long long k) {
  if (k < 0) throw std::domain_error("falling_factorial: negative length");
  if (k > n) return 0;
  BigInt out = 1;
  for (long long i = 0; i < k; ++i) out *= (n - i);
  return out;
}

BigInt binomial(long long n, long long k) {
  if (n < 0) throw std::domain_error("binomial: negative population");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt out = 1;
  for (long long i = 1; i <= k; ++i) {
    out *= (n - k + i);
    out /= i;  // exact: the first i factors of any falling factorial are divisible by i!
  }
  return out;
}

std::vector<BigInt> pascal_row(long long n) {
  if (n < 0) throw std::domain_error("pascal_row: negative row");
  std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
  row[0] = 1;
  for (long long k = 0; k < n; ++k) {
    row[static_cast<std::size_t>(k) + 1] = row[static_cast<std::size_t>(k)] * (n - k) / (k + 1);
  }
  return row;
}

}  // namespace monty
