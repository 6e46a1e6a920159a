#include "kreg/builtins.hpp"

#include "kreg/error.hpp"

namespace kreg {

namespace {

IntMatrix mat2(long a, long b, long c, long d) {
  IntMatrix m(2, 2);
  m << Integer(a), Integer(b), Integer(c), Integer(d);
  return m;
}

IntRowVector row2(long a, long b) {
  IntRowVector v(2);
  v << Integer(a), Integer(b);
  return v;
}

IntColVector col2(long a, long b) {
  IntColVector v(2);
  v << Integer(a), Integer(b);
  return v;
}

}  // namespace

LinearRepresentation thue_morse() {
  return LinearRepresentation(2, {mat2(1, 0, 0, 1), mat2(0, 1, 1, 0)}, row2(0, 1), col2(1, 0), "thue-morse");
}

LinearRepresentation digit_sum(int k) {
  check_base(k);
  std::vector<IntMatrix> mats;
  for (int i = 0; i < k; ++i) mats.push_back(mat2(1, 0, i, 1));
  return LinearRepresentation(k, std::move(mats), row2(0, 1), col2(1, 0), "digit-sum(" + std::to_string(k) + ")");
}

LinearRepresentation power_indicator(int k) {
  check_base(k);
  std::vector<IntMatrix> mats(static_cast<std::size_t>(k), mat2(0, 0, 0, 0));
  // Appending 0 keeps "n = 0" and makes t_k(kn) = [n = 0]; appending k-1 keeps t_k.
  mats[0] = mat2(0, 0, 1, 1);
  mats[static_cast<std::size_t>(k - 1)] = mat2(1, 0, 0, 0);
  return LinearRepresentation(k, std::move(mats), row2(1, 1), col2(1, 0),
                              "power-indicator(" + std::to_string(k) + ")");
}

LinearRepresentation uk(int k) {
  return pointwise_product(digit_sum(k), power_indicator(k)).renamed("uk(" + std::to_string(k) + ")");
}

LinearRepresentation lambda3() {
  return LinearRepresentation(3, {mat2(1, 0, 0, 1), mat2(0, 0, 1, 1), mat2(0, 0, -1, 1)}, row2(0, 1), col2(1, 0),
                              "lambda3");
}

LinearRepresentation ones_count_ternary() {
  return LinearRepresentation(3, {mat2(1, 0, 0, 1), mat2(1, 0, 1, 1), mat2(1, 0, 0, 1)}, row2(0, 1), col2(1, 0),
                              "ones-count-ternary");
}

std::vector<std::string> builtin_names() {
  return {"thue-morse", "digit-sum", "power-indicator", "uk", "lambda3", "ones-count-ternary", "lambda3-partial-sums"};
}

LinearRepresentation builtin(std::string_view name, std::optional<int> base) {
  auto fixed = [&](int k) {
    if (base && *base != k)
      throw InvalidArgument(std::string(name) + " is only defined in base " + std::to_string(k));
  };
  if (name == "thue-morse") {
    fixed(2);
    return thue_morse();
  }
  if (name == "digit-sum") return digit_sum(base.value_or(2));
  if (name == "power-indicator") return power_indicator(base.value_or(2));
  if (name == "uk") return uk(base.value_or(2));
  if (name == "lambda3") {
    fixed(3);
    return lambda3();
  }
  if (name == "ones-count-ternary") {
    fixed(3);
    return ones_count_ternary();
  }
  if (name == "lambda3-partial-sums") {
    fixed(3);
    return partial_sum_representation(lambda3());
  }
  throw InvalidArgument("unknown builtin '" + std::string(name) + "'");
}

}  // namespace kreg
