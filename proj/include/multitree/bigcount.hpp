#ifndef MULTITREE_BIGCOUNT_HPP
#define MULTITREE_BIGCOUNT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace multitree {

/// Arbitrary-precision nonnegative count.
using BigCount = boost::multiprecision::cpp_int;

/// Exact binomial coefficient C(top, choose); 0 when choose > top.
inline BigCount binomial(const BigCount& top, std::uint64_t choose) {
  if (top < choose) return 0;
  BigCount result = 1;
  // result stays integral after each division: it equals C(top - choose + i, i).
  for (std::uint64_t i = 1; i <= choose; ++i) {
    result *= top - choose + i;
    result /= i;
  }
  return result;
}

inline BigCount binomial(std::uint64_t top, std::uint64_t choose) {
  return binomial(BigCount(top), choose);
}

inline std::string to_decimal(const BigCount& value) { return value.str(); }

/// Parses an unsigned decimal with no sign and no leading zeros (except "0").
inline BigCount parse_decimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty decimal");
  if (text.size() > 1 && text.front() == '0')
    throw std::invalid_argument("leading zero in decimal '" + std::string(text) + "'");
  for (char c : text)
    if (c < '0' || c > '9')
      throw std::invalid_argument("bad decimal '" + std::string(text) + "'");
  return BigCount(std::string(text));
}

}  // namespace multitree

#endif  // MULTITREE_BIGCOUNT_HPP
