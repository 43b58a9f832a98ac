#include "graph_essence/weight.hpp"

#include <cctype>
#include <ostream>

#include "graph_essence/errors.hpp"

namespace essence {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace

Weight::Weight(long numerator, long denominator) {
  if (denominator == 0) throw DomainError("zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Weight Weight::parse(std::string_view text) {
  std::string_view s = trim(text);
  const std::string original(s);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  mpq_class q;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw ParseError("bad rational literal '" + original + "'");
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + original + "'");
    q = mpq_class(mpz_class(std::string(num), 10), d);
    q.canonicalize();
  } else if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto whole = s.substr(0, dot);
    const auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)) || (whole.empty() && frac.empty()))
      throw ParseError("bad decimal literal '" + original + "'");
    std::string digits(whole);
    digits += frac;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    q = mpq_class(mpz_class(digits, 10), scale);
    q.canonicalize();
  } else {
    if (!all_digits(s)) throw ParseError("bad weight literal '" + original + "'");
    q = mpq_class(mpz_class(std::string(s), 10));
  }
  if (negative) q = -q;
  return Weight(std::move(q));
}

std::string Weight::str() const { return value_.get_str(); }

Weight Weight::abs() const { return Weight(mpq_class(::abs(value_))); }

Weight& Weight::operator+=(const Weight& rhs) {
  value_ += rhs.value_;
  return *this;
}

Weight& Weight::operator-=(const Weight& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Weight& Weight::operator*=(const Weight& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Weight& Weight::operator/=(const Weight& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero weight");
  value_ /= rhs.value_;
  return *this;
}

Weight Weight::operator-() const { return Weight(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Weight& w) {
  return os << w.str();
}

}  // namespace essence
