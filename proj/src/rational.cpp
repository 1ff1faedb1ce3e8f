#include "moflow/rational.hpp"

#include <stdexcept>

namespace moflow {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational rational_from_string(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(text)) {
      throw std::invalid_argument("not a rational: '" + text + "'");
    }
    return Rational(Integer(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den) || den[0] == '-' ||
      den[0] == '+') {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  Integer d(den);
  if (d == 0) {
    throw std::invalid_argument("zero denominator: '" + text + "'");
  }
  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_str();
}

std::string rationals_to_string(const std::vector<Rational>& values,
                                char separator) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out.push_back(separator);
    out += rational_to_string(values[i]);
  }
  return out;
}

std::vector<Rational> scale_to_coprime_integers(
    const std::vector<Rational>& values) {
  Integer den_lcm = 1;
  for (const auto& v : values) {
    Integer g;
    mpz_lcm(g.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
    den_lcm = g;
  }
  Integer num_gcd = 0;
  std::vector<Rational> scaled(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    scaled[i] = values[i] * den_lcm;
    Integer g;
    mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(),
            scaled[i].get_num().get_mpz_t());
    num_gcd = g;
  }
  if (num_gcd == 0) return scaled;  // zero vector
  for (auto& v : scaled) {
    v /= num_gcd;
  }
  return scaled;
}

}  // namespace moflow
