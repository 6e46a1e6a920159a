#pragma once

#include "kreg/linear_representation.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kreg {

/// t(n): parity of the number of ones in binary.  Basis (t, 1 - t).
LinearRepresentation thue_morse();
/// s_k(n): sum of base-k digits.  Basis (s_k, 1).
LinearRepresentation digit_sum(int k);
/// t_k(n) = 1 iff n = k^j - 1 for some j >= 0.  Basis (t_k, [n = 0]).
LinearRepresentation power_indicator(int k);
/// u_k = s_k * t_k, nonzero only at n = k^j - 1 where it equals (k - 1) j.
LinearRepresentation uk(int k);
/// lambda_3, completely multiplicative with lambda_3(3) = 1 and lambda_3(0) = 0.
LinearRepresentation lambda3();
/// Number of ones in the ternary expansion.
LinearRepresentation ones_count_ternary();

/// Builds by name: thue-morse, digit-sum, power-indicator, uk, lambda3,
/// ones-count-ternary, lambda3-partial-sums.  `base` applies to the
/// base-parametric names (default 2) and must match the fixed base otherwise.
LinearRepresentation builtin(std::string_view name, std::optional<int> base = std::nullopt);

std::vector<std::string> builtin_names();

}  // namespace kreg
