#ifndef BRAIDCAT_DYADIC_HPP
#define BRAIDCAT_DYADIC_HPP

#include <cstdint>
#include <string>

namespace braidcat {

// Exact dyadic rational num / 2^exp, kept in lowest terms (num odd unless
// zero). Coordinates of configuration points always lie strictly inside
// (0,1); general values are allowed so arithmetic stays closed.
class Dyadic {
public:
  Dyadic() : num_(0), exp_(0) {}
  Dyadic(std::int64_t num, std::uint32_t exp);

  static Dyadic zero() { return Dyadic(); }
  static Dyadic one() { return Dyadic(1, 0); }
  static Dyadic half() { return Dyadic(1, 1); }

  std::int64_t num() const { return num_; }
  std::uint32_t exp() const { return exp_; }

  Dyadic halved() const;       // t/2
  Dyadic halved_up() const;    // (t+1)/2

  bool in_open_unit() const;   // 0 < t < 1
  double to_double() const;

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.num_ == b.num_ && a.exp_ == b.exp_;
  }
  friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
  friend bool operator<(const Dyadic& a, const Dyadic& b);
  friend bool operator>(const Dyadic& a, const Dyadic& b) { return b < a; }
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return !(b < a); }
  friend bool operator>=(const Dyadic& a, const Dyadic& b) { return !(a < b); }

  // "p/q" with q a power of two; lowest terms, e.g. "3/8", "1/2", "0/1".
  std::string str() const;
  static Dyadic parse(const std::string& text);  // throws std::invalid_argument

private:
  std::int64_t num_;
  std::uint32_t exp_;
};

}  // namespace braidcat

#endif
