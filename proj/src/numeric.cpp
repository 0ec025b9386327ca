#include "kncross/numeric.hpp"
#include "kncross/error.hpp"

#include <sstream>

namespace kncross {

std::string to_decimal(const BigFloat& value, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << value;
  return os.str();
}

std::string to_fixed(const Rational& value, int places) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  const Rational scaled = abs(value) * scale;
  BigInt rounded = (2 * scaled.get_num() + scaled.get_den()) / (2 * scaled.get_den());
  std::string digits = rounded.get_str();
  if (static_cast<int>(digits.size()) <= places) digits.insert(0, places + 1 - digits.size(), '0');
  std::string out = value < 0 && rounded != 0 ? "-" : "";
  out += digits.substr(0, digits.size() - places);
  if (places > 0) out += "." + digits.substr(digits.size() - places);
  return out;
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::validation: return "validation";
    case ErrorCode::parse: return "parse_error";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::malformed_tableau: return "malformed_tableau";
    case ErrorCode::range_guard: return "range_guard";
    case ErrorCode::inexact_division: return "inexact_division";
    case ErrorCode::seed_mismatch: return "seed_mismatch";
  }
  return "unknown";
}

}  // namespace kncross
