#pragma once

#include <cstdint>

#include "wronski/combi.hpp"

namespace wronski {

// Character value chi^lambda(mu) by rim-hook removal; cached per (lambda, sorted mu).
std::int64_t chi(const Partition& lambda, const Composition& mu);
std::int64_t chi(const Partition& lambda, const Partition& mu);

// Frobenius formula by direct expansion. Refuses n > max_n.
std::int64_t chi_oracle(const Partition& lambda, const Composition& mu, int max_n = 8);

// Composition 2^{n2} 1^{n1}.
Composition two_one(int n2, int n1);

}  // namespace wronski
