#pragma once

#include <gmpxx.h>

#include <vector>

namespace ihara {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

}  // namespace ihara
