#include "dtexact/rational.hpp"

#include <algorithm>
#include <cctype>

namespace dtexact {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

mpz_class pow10(std::size_t n) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, n);
  return r;
}

}  // namespace

std::optional<Rational> parse_decimal(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::string_view int_part = text;
  std::string_view frac_part;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    int_part = text.substr(0, dot);
    frac_part = text.substr(dot + 1);
    if (frac_part.empty()) return std::nullopt;
    if (!all_digits(frac_part)) return std::nullopt;
  }
  if (!all_digits(int_part)) return std::nullopt;

  mpz_class num(std::string(int_part), 10);
  num *= pow10(frac_part.size());
  if (!frac_part.empty()) num += mpz_class(std::string(frac_part), 10);
  if (negative) num = -num;

  Rational q(num, pow10(frac_part.size()));
  q.canonicalize();
  return q;
}

std::string to_decimal_string(const Rational& q) {
  mpz_class num = q.get_num();
  mpz_class den = q.get_den();  // positive, coprime with num

  unsigned long twos = 0;
  unsigned long fives = 0;
  mpz_class rest = den;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), 2)) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), 2);
    ++twos;
  }
  while (mpz_divisible_ui_p(rest.get_mpz_t(), 5)) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), 5);
    ++fives;
  }
  if (rest != 1) return num.get_str() + "/" + den.get_str();

  unsigned long digits = std::max(twos, fives);
  if (digits == 0) return num.get_str();

  mpz_class scaled = num;
  for (unsigned long i = twos; i < digits; ++i) scaled *= 2;
  for (unsigned long i = fives; i < digits; ++i) scaled *= 5;

  bool negative = scaled < 0;
  std::string body = mpz_class(abs(scaled)).get_str();
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  body.insert(body.size() - digits, ".");
  return negative ? "-" + body : body;
}

std::optional<Rational> parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = parse_decimal(text.substr(0, slash));
    auto den = parse_decimal(text.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    if (num->get_den() != 1 || den->get_den() != 1) return std::nullopt;
    Rational q(num->get_num(), den->get_num());
    q.canonicalize();
    return q;
  }
  return parse_decimal(text);
}

}  // namespace dtexact
