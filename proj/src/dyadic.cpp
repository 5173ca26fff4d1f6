#include "braidcat/dyadic.hpp"

#include <stdexcept>

namespace braidcat {

namespace {
constexpr std::uint32_t kMaxExp = 62;
}

Dyadic::Dyadic(std::int64_t num, std::uint32_t exp) : num_(num), exp_(exp) {
  while (exp_ > 0 && num_ % 2 == 0) {
    num_ /= 2;
    exp_ -= 1;
  }
  if (num_ == 0) exp_ = 0;
  if (exp_ > kMaxExp) throw std::invalid_argument("dyadic exponent overflow");
}

Dyadic Dyadic::halved() const {
  if (num_ == 0) return *this;
  return Dyadic(num_, exp_ + 1);
}

Dyadic Dyadic::halved_up() const {
  // (num/2^e + 1)/2 = (num + 2^e) / 2^(e+1); numerator stays odd.
  return Dyadic(num_ + (std::int64_t{1} << exp_), exp_ + 1);
}

bool Dyadic::in_open_unit() const {
  return num_ > 0 && num_ < (std::int64_t{1} << exp_);
}

double Dyadic::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(std::int64_t{1} << exp_);
}

bool operator<(const Dyadic& a, const Dyadic& b) {
  // Compare a.num * 2^b.exp with b.num * 2^a.exp via 128-bit products.
  __int128 lhs = static_cast<__int128>(a.num_) << b.exp_;
  __int128 rhs = static_cast<__int128>(b.num_) << a.exp_;
  return lhs < rhs;
}

std::string Dyadic::str() const {
  return std::to_string(num_) + "/" + std::to_string(std::int64_t{1} << exp_);
}

Dyadic Dyadic::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 >= text.size())
    throw std::invalid_argument("dyadic parse error: expected p/q in '" + text + "'");
  std::int64_t num = 0, den = 0;
  try {
    std::size_t used = 0;
    num = std::stoll(text.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument("");
    std::string dstr = text.substr(slash + 1);
    den = std::stoll(dstr, &used);
    if (used != dstr.size()) throw std::invalid_argument("");
  } catch (...) {
    throw std::invalid_argument("dyadic parse error: bad integer in '" + text + "'");
  }
  if (den <= 0 || (den & (den - 1)) != 0)
    throw std::invalid_argument("dyadic parse error: denominator of '" + text +
                                "' is not a power of two");
  std::uint32_t exp = 0;
  while ((std::int64_t{1} << exp) < den) exp++;
  return Dyadic(num, exp);
}

}  // namespace braidcat
