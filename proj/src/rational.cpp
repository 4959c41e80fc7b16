#include "condagg/rational.hpp"

#include <cctype>

namespace condagg {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::MissingEmptySet: return "MissingEmptySet";
    case ErrorCode::MissingFullSet: return "MissingFullSet";
    case ErrorCode::OutOfRangeIndex: return "OutOfRangeIndex";
    case ErrorCode::NonZeroEmptySet: return "NonZeroEmptySet";
    case ErrorCode::MonotonicityViolation: return "MonotonicityViolation";
    case ErrorCode::NegativeValue: return "NegativeValue";
    case ErrorCode::ZeroFullSet: return "ZeroFullSet";
    case ErrorCode::DivergentIntegral: return "DivergentIntegral";
    case ErrorCode::GapOrOverlap: return "GapOrOverlap";
    case ErrorCode::SetNotInCollection: return "SetNotInCollection";
    case ErrorCode::NegativeComponent: return "NegativeComponent";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::MeasureNotOnPowerset: return "MeasureNotOnPowerset";
    case ErrorCode::BadLevels: return "BadLevels";
    case ErrorCode::InconsistentTargets: return "InconsistentTargets";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ZeroDivision: return "ZeroDivision";
  }
  return "Error";
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  // strip surrounding whitespace
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty number");

  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    s.erase(s.begin());
  }
  if (s.empty()) throw Error(ErrorCode::ParseError, "sign without digits: '" + text + "'");

  Rational result;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw Error(ErrorCode::ParseError, "bad fraction: '" + text + "'");
    }
    BigInt d(den);
    if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator: '" + text + "'");
    result = Rational(BigInt(num), d);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) {
      throw Error(ErrorCode::ParseError, "bad decimal: '" + text + "'");
    }
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) {
      throw Error(ErrorCode::ParseError, "bad decimal: '" + text + "'");
    }
    BigInt numerator = whole.empty() ? BigInt(0) : BigInt(whole);
    BigInt scale = 1;
    for (char c : frac) {
      numerator = numerator * 10 + (c - '0');
      scale *= 10;
    }
    result = Rational(numerator, scale);
  } else {
    if (!all_digits(s)) throw Error(ErrorCode::ParseError, "bad number: '" + text + "'");
    result = Rational(BigInt(s));
  }
  if (negative) result = -result;
  return result;
}

std::string to_fraction_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string to_decimal_string(const Rational& r, int significant_digits) {
  if (r == 0) return "0";
  if (significant_digits < 1) significant_digits = 1;

  BigInt num = numerator(r);
  const bool negative = num < 0;
  if (negative) num = -num;
  const BigInt den = denominator(r);

  BigInt whole = num / den;
  BigInt rem = num % den;

  std::string integer_part = whole.str();
  int significant_used = whole == 0 ? 0 : static_cast<int>(integer_part.size());

  std::string frac_digits;
  bool exact = rem == 0;
  if (!exact) {
    // for values below one, leading fractional zeros are not significant
    int budget = significant_used > 0 ? significant_digits - significant_used : significant_digits;
    bool seen_nonzero = significant_used > 0;
    while (rem != 0 && budget > 0) {
      rem *= 10;
      BigInt digit = rem / den;
      rem %= den;
      char d = static_cast<char>('0' + digit.convert_to<int>());
      frac_digits.push_back(d);
      if (d != '0') seen_nonzero = true;
      if (seen_nonzero) --budget;
    }
    exact = rem == 0;
    if (!exact) {
      // round half-up on the first dropped digit
      rem *= 10;
      if (rem / den >= 5) {
        int pos = static_cast<int>(frac_digits.size()) - 1;
        while (pos >= 0) {
          if (frac_digits[pos] != '9') {
            ++frac_digits[pos];
            break;
          }
          frac_digits[pos] = '0';
          --pos;
        }
        if (pos < 0) {
          whole += 1;
          integer_part = whole.str();
        }
      }
    }
  }
  while (!frac_digits.empty() && frac_digits.back() == '0') frac_digits.pop_back();

  std::string out = negative ? "-" : "";
  out += integer_part;
  if (!frac_digits.empty()) {
    out += ".";
    out += frac_digits;
  }
  return out;
}

const Rational& ExtRational::finite() const {
  if (infinite) throw Error(ErrorCode::IndexOutOfRange, "infinite value has no finite part");
  return value;
}

std::string to_fraction_string(const ExtRational& e) {
  return e.infinite ? "inf" : to_fraction_string(e.value);
}

std::string to_decimal_string(const ExtRational& e, int significant_digits) {
  return e.infinite ? "inf" : to_decimal_string(e.value, significant_digits);
}

}  // namespace condagg
