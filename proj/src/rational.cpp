#include "unitrep/rational.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

#include "unitrep/errors.hpp"

namespace unitrep {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) : v_(num, den) {
  if (den == 0) throw std::domain_error("zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  BigInt num;
  BigInt den = 1;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view p = s.substr(0, slash);
    std::string_view q = s.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) throw ParseError("bad rational '" + std::string(text) + "'");
    num = BigInt(std::string(p), 10);
    den = BigInt(std::string(q), 10);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || !all_digits(fp)) {
      throw ParseError("bad rational '" + std::string(text) + "'");
    }
    num = BigInt(std::string(ip.empty() ? "0" : ip) + std::string(fp), 10);
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
  } else {
    if (!all_digits(s)) throw ParseError("bad rational '" + std::string(text) + "'");
    num = BigInt(std::string(s), 10);
  }
  if (negative) num = -num;
  return Rational(num, den);
}

BigInt Rational::floor() const { return floor_div(v_.get_num(), v_.get_den()); }

BigInt Rational::ceil() const { return ceil_div(v_.get_num(), v_.get_den()); }

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

std::int64_t to_int64(const BigInt& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + v.get_str());
  return v.get_si();
}

const Rational& Bound::value() const {
  if (kind_ != Kind::kFinite) throw std::logic_error("value() of an infinite bound");
  return v_;
}

std::string Bound::str() const {
  switch (kind_) {
    case Kind::kNegInf: return "-inf";
    case Kind::kPosInf: return "+inf";
    case Kind::kFinite: break;
  }
  return v_.str();
}

Bound Bound::parse(std::string_view text) {
  if (text == "-inf") return neg_inf();
  if (text == "+inf" || text == "inf") return pos_inf();
  return Bound(Rational::parse(text));
}

bool operator==(const Bound& a, const Bound& b) {
  if (a.kind_ != b.kind_) return false;
  return a.kind_ != Bound::Kind::kFinite || a.v_ == b.v_;
}

std::strong_ordering operator<=>(const Bound& a, const Bound& b) {
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  if (a.kind_ != Bound::Kind::kFinite) return std::strong_ordering::equal;
  return a.v_ <=> b.v_;
}

std::ostream& operator<<(std::ostream& os, const Bound& b) { return os << b.str(); }

Bound max(const Bound& a, const Bound& b) { return a < b ? b : a; }
Bound min(const Bound& a, const Bound& b) { return b < a ? b : a; }

}  // namespace unitrep
