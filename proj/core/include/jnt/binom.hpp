#pragma once

#include <cstdint>
#include <optional>

namespace jnt {

// Binomial coefficients by the additive Pascal recurrence, cached up to 512 rows.
// Entries that do not fit in 64 bits are held as a saturation sentinel; asking for
// one of them is a hard error, never an approximation.

// Throws std::overflow_error if C(v,k) exceeds 64 bits, std::out_of_range if v > 512.
std::uint64_t binomial(unsigned v, unsigned k);

// Same table lookup, but overflow yields nullopt instead of throwing.
std::optional<std::uint64_t> binomial_checked(unsigned v, unsigned k);

} // namespace jnt
