#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ctxlab {

// Exact arithmetic scalar for everything where a yes/no answer must not
// depend on floating-point tolerance (hull membership, classical bounds).
using Rational = boost::multiprecision::cpp_rational;

using RationalVector = std::vector<Rational>;

// Accepts "p/q", integers and plain decimals ("0.25" -> 1/4). Signs allowed,
// no exponents. Returns nullopt on malformed input.
std::optional<Rational> parse_rational(std::string_view text);

// Canonical form: "p/q" with q > 1, plain integer otherwise.
std::string format_rational(const Rational& value);

double to_double(const Rational& value);

}  // namespace ctxlab
