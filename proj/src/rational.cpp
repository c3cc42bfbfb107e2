#include "striptopo/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>

#include "striptopo/error.hpp"

namespace striptopo {

namespace {

Error bad_number(std::string_view text) {
  return Error(ErrorCode::BadEndpoints, "not an extended rational: '" + std::string(text) + "'");
}

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) throw bad_number(whole);
  return value;
}

}  // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::UnknownIntervalRef: return "UnknownIntervalRef";
    case ErrorCode::DoubleGluing: return "DoubleGluing";
    case ErrorCode::SelfGluing: return "SelfGluing";
    case ErrorCode::SameSideGluing: return "SameSideGluing";
    case ErrorCode::BadEndpoints: return "BadEndpoints";
    case ErrorCode::BadIntervalIndex: return "BadIntervalIndex";
    case ErrorCode::DisconnectedSurface: return "DisconnectedSurface";
    case ErrorCode::NotAChain: return "NotAChain";
    case ErrorCode::NotOpenStripComponent: return "NotOpenStripComponent";
    case ErrorCode::NonIncreasingInput: return "NonIncreasingInput";
    case ErrorCode::GraphsIntersect: return "GraphsIntersect";
    case ErrorCode::BadInterval: return "BadInterval";
    case ErrorCode::BadEps: return "BadEps";
    case ErrorCode::NonPositiveClearance: return "NonPositiveClearance";
    case ErrorCode::LevelRangeMismatch: return "LevelRangeMismatch";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string message, std::vector<std::string> ids)
    : std::runtime_error(std::move(message)), code_(code), ids_(std::move(ids)) {}

ParseError::ParseError(std::string message, std::size_t line, std::size_t column)
    : Error(ErrorCode::ParseError, std::move(message)), line_(line), column_(column) {}

ExtRational::ExtRational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::BadEndpoints, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / (g == 0 ? 1 : g);
  den_ = den / (g == 0 ? 1 : g);
}

ExtRational ExtRational::neg_inf() {
  ExtRational r;
  r.kind_ = Kind::NegInf;
  return r;
}

ExtRational ExtRational::pos_inf() {
  ExtRational r;
  r.kind_ = Kind::PosInf;
  return r;
}

ExtRational ExtRational::parse(std::string_view text) {
  if (text == "-inf") return neg_inf();
  if (text == "+inf" || text == "inf") return pos_inf();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return ExtRational(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
  }
  auto dot = text.find('.');
  if (text.find_first_of("eE") != std::string_view::npos) throw bad_number(text);
  if (dot == std::string_view::npos) return ExtRational(parse_int(text, text));

  // Exact decimal: "-2.75" -> -275/100.
  std::string digits(text.substr(0, dot));
  std::string_view frac = text.substr(dot + 1);
  if (frac.size() > 15) throw bad_number(text);
  digits += frac;
  std::int64_t den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  if (digits == "-" || digits == "+" || digits.empty()) throw bad_number(text);
  return ExtRational(parse_int(digits, text), den);
}

double ExtRational::to_double() const noexcept {
  switch (kind_) {
    case Kind::NegInf: return -std::numeric_limits<double>::infinity();
    case Kind::PosInf: return std::numeric_limits<double>::infinity();
    case Kind::Finite: break;
  }
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string ExtRational::to_string() const {
  if (kind_ == Kind::NegInf) return "-inf";
  if (kind_ == Kind::PosInf) return "+inf";
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

ExtRational ExtRational::operator-() const {
  if (kind_ == Kind::NegInf) return pos_inf();
  if (kind_ == Kind::PosInf) return neg_inf();
  return ExtRational(-num_, den_);
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (a.kind_ != ExtRational::Kind::Finite) return std::strong_ordering::equal;
  __extension__ using wide = __int128;
  const wide lhs = static_cast<wide>(a.num_) * b.den_;
  const wide rhs = static_cast<wide>(b.num_) * a.den_;
  return lhs <=> rhs;
}

}  // namespace striptopo
