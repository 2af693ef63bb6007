#pragma once

#include <string>
#include <string_view>

#include "bdc/exact.hpp"
#include "bdc_cli/cli.hpp"

namespace bdc::cli {

inline constexpr int kReportVersion = 1;

Json big(const BigInt& x);
Json big_vector(const IntVector& v);
Json matrix_json(const IntMatrix& m);
std::string rational(const Rational& q);
Json header(std::string_view command);

}  // namespace bdc::cli
