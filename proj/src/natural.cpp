#include "residue/natural.hpp"

#include <ostream>

namespace residue {

Natural Natural::parse(std::string_view text) {
  if (text.empty()) throw DomainError("Natural: empty string");
  for (char ch : text) {
    if (ch < '0' || ch > '9') {
      throw DomainError("Natural: not a decimal natural number: '" + std::string(text) + "'");
    }
  }
  Natural n;
  n.v_.set_str(std::string(text), 10);
  return n;
}

Natural Natural::from_mpz(mpz_class v) {
  if (sgn(v) < 0) throw DomainError("Natural: negative value " + v.get_str());
  Natural n;
  n.v_ = std::move(v);
  return n;
}

std::uint64_t Natural::to_u64() const {
  if (!fits_u64()) throw DomainError("Natural: value " + str() + " exceeds 64 bits");
  // unsigned long is 64-bit on the supported LP64 targets.
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return v_.get_ui();
}

std::uint64_t Natural::mod_u64(std::uint64_t m) const {
  if (m == 0) throw DomainError("Natural: modulus is zero");
  return mpz_fdiv_ui(v_.get_mpz_t(), m);
}

Natural& Natural::operator+=(const Natural& o) {
  v_ += o.v_;
  return *this;
}

Natural& Natural::operator-=(const Natural& o) {
  if (cmp(v_, o.v_) < 0) {
    throw DomainError("Natural: subtraction " + str() + " - " + o.str() + " is negative");
  }
  v_ -= o.v_;
  return *this;
}

Natural& Natural::operator*=(const Natural& o) {
  v_ *= o.v_;
  return *this;
}

Natural& Natural::operator/=(const Natural& o) {
  if (o.is_zero()) throw DomainError("Natural: division by zero");
  v_ /= o.v_;
  return *this;
}

Natural& Natural::operator%=(const Natural& o) {
  if (o.is_zero()) throw DomainError("Natural: modulus is zero");
  v_ %= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.str(); }

Natural isqrt(const Natural& n) { return Natural::from_mpz(sqrt(n.mpz())); }

bool is_perfect_square(const Natural& n) {
  return mpz_perfect_square_p(n.mpz().get_mpz_t()) != 0;
}

}  // namespace residue
