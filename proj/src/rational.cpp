#include "rcv/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace rcv {

std::int64_t floor_to_int(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q.get_si();
}

std::string to_decimal(const Rational& r, int places) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  const bool negative = sgn(r) < 0;
  mpz_class num = abs(r.get_num()) * scale;
  mpz_class scaled;
  mpz_tdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), r.get_den_mpz_t());

  std::string digits = scaled.get_str();
  if (static_cast<int>(digits.size()) <= places) {
    digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
  }
  std::string out;
  if (negative) out += '-';
  out += digits.substr(0, digits.size() - static_cast<std::size_t>(places));
  if (places > 0) {
    out += '.';
    out += digits.substr(digits.size() - static_cast<std::size_t>(places));
  }
  return out;
}

double round_to(const Rational& r, int places) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  Rational scaled = abs(r) * scale + Rational(1, 2);
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  double v = q.get_d() / scale.get_d();
  return sgn(r) < 0 ? -v : v;
}

Rational ceil_to_grid(const Rational& r, const mpz_class& den) {
  mpz_class num = r.get_num() * den;
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), r.get_den_mpz_t());
  Rational out(q, den);
  out.canonicalize();
  return out;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  const auto dot = text.find('.');
  if (dot == std::string::npos) {
    Rational r;
    if (r.set_str(text, 10) != 0) throw std::invalid_argument("not a number: " + text);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    r.canonicalize();
    return r;
  }
  std::string whole = text.substr(0, dot);
  std::string frac = text.substr(dot + 1);
  bool negative = false;
  if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) {
    negative = whole[0] == '-';
    whole.erase(0, 1);
  }
  if (whole.empty()) whole = "0";
  for (char ch : whole + frac) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("not a number: " + text);
  }
  mpz_class num(whole + frac, 10);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  Rational r(num, den);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

}  // namespace rcv
