#include "g2crystal/cartan.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace g2 {

void check_index(int i) {
  if (i != 1 && i != 2) {
    throw std::invalid_argument("crystal index must be 1 or 2, got " +
                                std::to_string(i));
  }
}

void check_dominant(Weight lambda) {
  if (!is_dominant(lambda)) {
    throw std::invalid_argument("lambda must be dominant, got (" +
                                std::to_string(lambda.h1) + "," +
                                std::to_string(lambda.h2) + ")");
  }
}

Weight simple_root(int i) {
  check_index(i);
  return i == 1 ? Weight{2, -1} : Weight{-3, 2};
}

int pairing(Weight w, int i) {
  check_index(i);
  return i == 1 ? w.h1 : w.h2;
}

long long weyl_dim(Weight lambda) {
  check_dominant(lambda);
  const long long m = lambda.h1;
  const long long n = lambda.h2;
  __int128 p = 1;
  const long long factors[] = {m + 1,          n + 1,          m + n + 2,
                               m + 2 * n + 3,  m + 3 * n + 4,  2 * m + 3 * n + 5};
  for (long long f : factors) p *= f;
  p /= 120;  // always exact: the factors cover a full Weyl denominator
  if (p > std::numeric_limits<long long>::max()) {
    throw std::overflow_error("weyl_dim overflows long long");
  }
  return static_cast<long long>(p);
}

}  // namespace g2
