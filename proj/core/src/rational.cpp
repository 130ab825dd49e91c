#include "bargain/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace bargain {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.v_ == 0) throw std::invalid_argument("rational division by zero");
  v_ /= o.v_;
  return *this;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

bool integer_literal(std::string_view s) {
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
  return all_digits(s);
}

}  // namespace

Rational Rational::from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::string text(s);

  if (auto slash = text.find('/'); slash != std::string::npos) {
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!integer_literal(num) || !all_digits(den)) {
      throw std::invalid_argument("malformed rational literal: " + text);
    }
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0) {
      throw std::invalid_argument("malformed rational literal: " + text);
    }
    if (q.get_den() == 0) {
      throw std::invalid_argument("rational with zero denominator: " + text);
    }
    q.canonicalize();
    return Rational(std::move(q));
  }

  if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    bool neg = !whole.empty() && whole[0] == '-';
    if (neg) whole.erase(0, 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || !all_digits(frac)) {
      throw std::invalid_argument("malformed decimal literal: " + text);
    }
    mpz_class scaled(whole + frac, 10);
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, frac.size());
    mpq_class q(scaled, pow10);
    q.canonicalize();
    if (neg) q = -q;
    return Rational(std::move(q));
  }

  if (!integer_literal(text)) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
  mpq_class q{mpz_class(text, 10)};
  return Rational(std::move(q));
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

bool Rational::fits_int64() const {
  return mpz_fits_slong_p(v_.get_num_mpz_t()) && mpz_fits_slong_p(v_.get_den_mpz_t());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }

const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace bargain
