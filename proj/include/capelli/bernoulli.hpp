#ifndef CAPELLI_BERNOULLI_HPP
#define CAPELLI_BERNOULLI_HPP

#include "capelli/mpoly.hpp"

namespace capelli {

/// Bernoulli polynomial B_t(z) in the single variable "z", from the
/// closed form
///   B_t(z) = sum_{i=0}^{t} 1/(i+1) sum_{j=0}^{i} (-1)^j C(i,j) (z+j)^t.
/// B_0 = 1, B_1 = z - 1/2, B_2 = z^2 - z + 1/6, ...
MPoly bernoulli_poly(long t);

} // namespace capelli

#endif
