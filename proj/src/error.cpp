#include "kurank2/error.hpp"

#include <algorithm>

#include "kurank2/arith.hpp"

namespace kurank2 {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::UnitVector: return "UnitVector";
    case ErrorCode::NonPositiveOrientation: return "NonPositiveOrientation";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::NotNegative: return "NotNegative";
    case ErrorCode::Incompatible: return "Incompatible";
    case ErrorCode::FixedVector: return "FixedVector";
    case ErrorCode::NotInKuSpan: return "NotInKuSpan";
    case ErrorCode::Uncovered: return "Uncovered";
    case ErrorCode::NonCertifiableEntry: return "NonCertifiableEntry";
    case ErrorCode::ConditionFailed: return "ConditionFailed";
    case ErrorCode::ZeroClass: return "ZeroClass";
    case ErrorCode::OutOfSextant: return "OutOfSextant";
    case ErrorCode::InvalidBranch: return "InvalidBranch";
    case ErrorCode::TooFewArrows: return "TooFewArrows";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::BoundTooSmall: return "BoundTooSmall";
    case ErrorCode::ExcludedSum: return "ExcludedSum";
    case ErrorCode::NotInS: return "NotInS";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::OracleContradiction: return "OracleContradiction";
    case ErrorCode::IntegralityViolation: return "IntegralityViolation";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

bool is_internal(ErrorCode code) {
  switch (code) {
    case ErrorCode::OracleContradiction:
    case ErrorCode::IntegralityViolation:
    case ErrorCode::Unreachable:
    case ErrorCode::InternalInvariant:
      return true;
    default:
      return false;
  }
}

std::string to_string(Wide x) {
  if (x == 0) return "0";
  bool negative = x < 0;
  // work on the negative side so INT128_MIN does not overflow
  std::string digits;
  Wide y = negative ? x : -x;
  while (y != 0) {
    digits.push_back(static_cast<char>('0' - static_cast<int>(y % 10)));
    y /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

BigInt to_big(Wide x) { return BigInt(to_string(x)); }

std::string to_string(const Rational& q) {
  auto num = boost::multiprecision::numerator(q);
  auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace kurank2
