#include "heckeforge/rational.hpp"

namespace heckeforge {

BigRational BigRational::from_string(const std::string& s) {
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw std::invalid_argument("BigRational: bad literal '" + s + "'");
  v.canonicalize();
  return BigRational(v);
}

BigRational BigRational::pow(long e) const {
  if (e == 0) return BigRational(1);
  if (is_zero()) {
    if (e < 0) throw std::domain_error("BigRational: 0^negative");
    return BigRational(0);
  }
  mpz_class n, d;
  unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), a);
  mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), a);
  return e > 0 ? BigRational(n, d) : BigRational(d, n);
}

BigRational BigRational::inverse() const {
  if (is_zero()) throw std::domain_error("BigRational: inverse of zero");
  return BigRational(den(), num());
}

std::string BigRational::str() const {
  if (den() == 1) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

}  // namespace heckeforge
