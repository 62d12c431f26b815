#pragma once

#include <cstdint>
#include <vector>

// Helpers shared by the unit tests. Intentionally written from scratch so the
// tests do not lean on the code they check.
namespace testsupport {

using I = std::int64_t;

inline bool td_prime(I n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (I d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// gamma <= gmax with 6 gamma + sign prime
inline std::vector<I> td_gammas(int sign, I gmax) {
  std::vector<I> out;
  for (I g = 1; g <= gmax; ++g)
    if (td_prime(6 * g + sign)) out.push_back(g);
  return out;
}

inline I gcd(I a, I b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    I t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline I mod(I a, I m) { return ((a % m) + m) % m; }

}  // namespace testsupport
