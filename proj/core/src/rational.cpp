#include "markoff/rational.hpp"

namespace markoff {

std::string approx_string(const Rational& q) {
  if (q == 0) return "0";
  mpf_class f(0, 256);
  mpf_set_q(f.get_mpf_t(), q.get_mpq_t());
  mp_exp_t exp10 = 0;
  std::string digits = f.get_str(exp10, 10, 6);
  std::string sign;
  if (!digits.empty() && digits[0] == '-') {
    sign = "-";
    digits.erase(digits.begin());
  }
  while (digits.size() < 6) digits.push_back('0');
  // value = 0.digits * 10^exp10
  return sign + digits.substr(0, 1) + "." + digits.substr(1) + "e" +
         std::to_string(static_cast<long>(exp10 - 1));
}

}  // namespace markoff
