#include "capelli/bernoulli.hpp"

#include "capelli/error.hpp"

namespace capelli {

MPoly bernoulli_poly(long t) {
  if (t < 0) throw Error("BAD_REQUEST", "Bernoulli degree must be >= 0");
  const std::vector<std::string> vars{"z"};
  const MPoly z = MPoly::variable(vars, 0);
  MPoly result(vars);
  for (long i = 0; i <= t; ++i) {
    MPoly inner(vars);
    for (long j = 0; j <= i; ++j) {
      const Rational sign = (j % 2 == 0) ? Rational(1) : Rational(-1);
      MPoly shifted = (z + MPoly::constant(vars, Rational(j))).pow(t);
      inner += shifted * (sign * Rational(binomial(i, j)));
    }
    result += inner * frac(1, i + 1);
  }
  return result;
}

} // namespace capelli
