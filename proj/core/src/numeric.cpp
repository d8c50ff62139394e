#include "schurkit/numeric.hpp"

#include "schurkit/errors.hpp"

namespace schurkit {

Int factorial(int n) {
  if (n < 0) throw ValidationError("factorial of a negative number");
  Int out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

Int binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int out = 1;
  for (long long i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;  // exact at every step
  }
  return out;
}

Int int_pow(long long base, int exp) {
  if (exp < 0) throw ValidationError("negative exponent");
  Int out = 1, b = base;
  for (int i = 0; i < exp; ++i) out *= b;
  return out;
}

Int exact_div(const Int& num, const Int& den) {
  if (den == 0) throw IntegrityError("division by zero");
  Int q = num / den;
  if (q * den != num)
    throw IntegrityError("expected exact division: " + num.str() + " / " + den.str());
  return q;
}

}  // namespace schurkit
