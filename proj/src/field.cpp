#include "ghrv/field.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>

#include "ghrv/error.hpp"

namespace ghrv {

namespace {

using UPoly = std::vector<std::uint64_t>;  // lowest coefficient first

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (n) {
    if (n & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    n >>= 1;
  }
  return r;
}

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

UPoly upoly_rem(UPoly a, const UPoly& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = powmod(m.back(), p - 2, p);
  while (a.size() > dm) {
    const std::uint64_t c = mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + p - mulmod(c, m[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

UPoly upoly_mulmod(const UPoly& a, const UPoly& b, const UPoly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    }
  }
  return upoly_rem(std::move(r), m, p);
}

// t^(p^k) mod m
UPoly frobenius_power_of_t(unsigned k, const UPoly& m, std::uint64_t p) {
  UPoly x = upoly_rem(UPoly{0, 1}, m, p);
  for (unsigned i = 0; i < k; ++i) {
    UPoly base = x;
    UPoly acc{1};
    std::uint64_t n = p;
    while (n) {
      if (n & 1) acc = upoly_mulmod(acc, base, m, p);
      base = upoly_mulmod(base, base, m, p);
      n >>= 1;
    }
    x = acc;
  }
  return x;
}

UPoly upoly_sub(UPoly a, const UPoly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

UPoly upoly_gcd(UPoly a, UPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = upoly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t checked_power(std::uint64_t p, unsigned e) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (q > (std::uint64_t{1} << 62) / p) {
      fail(ErrorCode::Precondition, "field order " + std::to_string(p) + "^" +
                                        std::to_string(e) + " too large");
    }
    q *= p;
  }
  return q;
}

FieldPtr cached(FieldKind kind, std::uint64_t p, unsigned e) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, unsigned>, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  const auto key = std::make_pair(p, e);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  UPoly modulus = (e == 1) ? UPoly{0, 1} : find_irreducible(p, e);
  auto f = std::make_shared<const Field>(kind, p, e, std::move(modulus));
  cache.emplace(key, f);
  return f;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % d == 0) return n == d;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_irreducible(const std::vector<std::uint64_t>& monic, std::uint64_t p) {
  if (monic.size() < 2 || monic.back() != 1) return false;
  const unsigned e = static_cast<unsigned>(monic.size() - 1);
  if (e == 1) return true;
  // m | t^(p^e) - t
  UPoly full = frobenius_power_of_t(e, monic, p);
  if (!upoly_sub(full, UPoly{0, 1}, p).empty()) return false;
  // gcd(t^(p^(e/r)) - t, m) = 1 for every prime r | e
  for (unsigned r : prime_divisors(e)) {
    UPoly h = upoly_sub(frobenius_power_of_t(e / r, monic, p), UPoly{0, 1}, p);
    UPoly g = upoly_gcd(monic, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<std::uint64_t> find_irreducible(std::uint64_t p, unsigned e) {
  UPoly m(e + 1, 0);
  m[e] = 1;
  for (;;) {
    if (m[0] != 0 && is_irreducible(m, p)) return m;
    // increment the lower coefficients as a base-p counter
    std::size_t i = 0;
    while (i < e) {
      if (++m[i] < p) break;
      m[i] = 0;
      ++i;
    }
    if (i == e) fail(ErrorCode::Precondition, "no irreducible polynomial found");
  }
}

Field::Field(FieldKind kind, std::uint64_t p, unsigned e, std::vector<std::uint64_t> modulus)
    : kind_(kind), p_(p), e_(e), q_(kind == FieldKind::Rational ? 0 : checked_power(p, e)),
      modulus_(std::move(modulus)) {}

FieldPtr Field::prime(std::uint64_t p) {
  if (!is_prime(p) || p >= (std::uint64_t{1} << 31)) {
    fail(ErrorCode::Precondition, "GF(p) needs a prime p < 2^31, got " + std::to_string(p));
  }
  return cached(FieldKind::Prime, p, 1);
}

FieldPtr Field::extension(std::uint64_t p, unsigned e, unsigned bound) {
  if (e < 2) fail(ErrorCode::Precondition, "extension degree must be at least 2");
  if (e > bound) {
    fail(ErrorCode::BoundExceeded, "extension degree " + std::to_string(e) +
                                       " exceeds bound " + std::to_string(bound));
  }
  return finite(p, e);
}

FieldPtr Field::finite(std::uint64_t p, unsigned e) {
  if (!is_prime(p) || p >= (std::uint64_t{1} << 31)) {
    fail(ErrorCode::Precondition, "characteristic must be a prime < 2^31");
  }
  if (e == 0) fail(ErrorCode::Precondition, "field degree must be positive");
  checked_power(p, e);
  return cached(e == 1 ? FieldKind::Prime : FieldKind::Extension, p, e);
}

FieldPtr Field::rationals() {
  static const FieldPtr qq = std::make_shared<const Field>(FieldKind::Rational, 0, 1, UPoly{});
  return qq;
}

FieldPtr Field::parse(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s == "QQ" || s == "Q") return rationals();
  if (s.size() > 4 && s.rfind("GF(", 0) == 0 && s.back() == ')') {
    const std::string digits = s.substr(3, s.size() - 4);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 18) {
      fail(ErrorCode::Format, "bad field order in '" + text + "'");
    }
    std::uint64_t q = std::stoull(digits);
    for (std::uint64_t p = 2; p * p <= q; ++p) {
      if (q % p == 0) {
        unsigned e = 0;
        std::uint64_t r = q;
        while (r % p == 0) {
          r /= p;
          ++e;
        }
        if (r != 1) fail(ErrorCode::Format, "GF(q) needs a prime power, got " + digits);
        return finite(p, e);
      }
    }
    return prime(q);
  }
  fail(ErrorCode::Format, "unknown field '" + text + "' (expected GF(q) or QQ)");
}

std::string Field::name() const {
  if (kind_ == FieldKind::Rational) return "QQ";
  return "GF(" + std::to_string(q_) + ")";
}

bool Field::same_as(const Field& other) const {
  return kind_ == other.kind_ && p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
}

bool Field::contains(const Field& sub) const {
  if (same_as(sub)) return true;
  return is_finite() && sub.kind_ == FieldKind::Prime && sub.p_ == p_;
}

FieldPtr Field::prime_field() const {
  if (kind_ == FieldKind::Rational) return rationals();
  return prime(p_);
}

std::vector<std::uint64_t> Field::digits(std::uint64_t code) const {
  std::vector<std::uint64_t> d(e_, 0);
  for (unsigned i = 0; i < e_; ++i) {
    d[i] = code % p_;
    code /= p_;
  }
  return d;
}

std::uint64_t Field::encode(const std::vector<std::uint64_t>& d) const {
  std::uint64_t code = 0;
  for (std::size_t i = d.size(); i-- > 0;) code = code * p_ + d[i];
  return code;
}

Scalar Field::zero() const {
  return kind_ == FieldKind::Rational ? Scalar(mpq_class(0)) : Scalar(std::uint64_t{0});
}

Scalar Field::one() const {
  return kind_ == FieldKind::Rational ? Scalar(mpq_class(1)) : Scalar(std::uint64_t{1});
}

Scalar Field::from_int(long long v) const {
  if (kind_ == FieldKind::Rational) return Scalar(mpq_class(mpz_class(std::to_string(v))));
  const long long m = static_cast<long long>(p_);
  return Scalar(static_cast<std::uint64_t>(((v % m) + m) % m));
}

Scalar Field::from_mpz(const mpz_class& v) const {
  if (kind_ == FieldKind::Rational) return Scalar(mpq_class(v));
  mpz_class r = v % mpz_class(std::to_string(p_));
  if (r < 0) r += mpz_class(std::to_string(p_));
  return Scalar(static_cast<std::uint64_t>(std::stoull(r.get_str())));
}

Scalar Field::from_rational(const mpq_class& v) const {
  if (kind_ == FieldKind::Rational) return Scalar(v);
  Scalar num = from_mpz(v.get_num());
  Scalar den = from_mpz(v.get_den());
  if (den.is_zero()) {
    fail(ErrorCode::Precondition, "denominator vanishes in " + name());
  }
  return div(num, den);
}

Scalar Field::coerce(const Scalar& s, const Field& from) const {
  if (s.is_rational()) return from_rational(s.rational());
  if (!contains(from)) {
    fail(ErrorCode::RingMismatch, "cannot map " + from.name() + " into " + name());
  }
  return s;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (kind_ == FieldKind::Rational) return Scalar(mpq_class(a.rational() + b.rational()));
  if (kind_ == FieldKind::Prime) return Scalar((a.code() + b.code()) % p_);
  auto da = digits(a.code());
  auto db = digits(b.code());
  for (unsigned i = 0; i < e_; ++i) da[i] = (da[i] + db[i]) % p_;
  return Scalar(encode(da));
}

Scalar Field::neg(const Scalar& a) const {
  if (kind_ == FieldKind::Rational) return Scalar(mpq_class(-a.rational()));
  if (kind_ == FieldKind::Prime) return Scalar((p_ - a.code()) % p_);
  auto da = digits(a.code());
  for (auto& d : da) d = (p_ - d) % p_;
  return Scalar(encode(da));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == FieldKind::Rational) return Scalar(mpq_class(a.rational() * b.rational()));
  if (kind_ == FieldKind::Prime) return Scalar(mulmod(a.code(), b.code(), p_));
  UPoly prod = upoly_mulmod(digits(a.code()), digits(b.code()), modulus_, p_);
  prod.resize(e_, 0);
  return Scalar(encode(prod));
}

Scalar Field::pow(Scalar a, std::uint64_t n) const {
  Scalar r = one();
  while (n) {
    if (n & 1) r = mul(r, a);
    a = mul(a, a);
    n >>= 1;
  }
  return r;
}

Scalar Field::inv(const Scalar& a) const {
  if (a.is_zero()) fail(ErrorCode::Precondition, "division by zero in " + name());
  if (kind_ == FieldKind::Rational) return Scalar(mpq_class(1 / a.rational()));
  return pow(a, q_ - 2);
}

Scalar Field::element(std::uint64_t code) const {
  if (!is_finite() || code >= q_) fail(ErrorCode::Precondition, "element code out of range");
  return Scalar(code);
}

Scalar Field::generator() const {
  if (kind_ != FieldKind::Extension) fail(ErrorCode::Precondition, name() + " has no extension generator");
  return Scalar(p_);
}

std::string Field::to_string(const Scalar& a) const {
  if (kind_ == FieldKind::Rational) return a.rational().get_str();
  if (kind_ == FieldKind::Prime) {
    const std::uint64_t v = a.code();
    if (v > p_ / 2) return "-" + std::to_string(p_ - v);
    return std::to_string(v);
  }
  const auto d = digits(a.code());
  std::string out;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += "+";
    const bool show_coeff = d[i] != 1 || i == 0;
    if (show_coeff) out += std::to_string(d[i]);
    if (i > 0) {
      if (show_coeff) out += "*";
      out += "a";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

Scalar Field::parse_scalar(const std::string& raw) const {
  std::string s;
  for (char ch : raw) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) fail(ErrorCode::Syntax, "empty scalar");
  auto parse_int = [&](const std::string& t) -> mpz_class {
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size() || !std::all_of(t.begin() + static_cast<long>(i), t.end(), ::isdigit)) {
      fail(ErrorCode::Syntax, "bad integer '" + t + "' in scalar '" + raw + "'");
    }
    return mpz_class(t[0] == '+' ? t.substr(1) : t);
  };
  if (kind_ != FieldKind::Extension || s.find('a') == std::string::npos) {
    if (auto slash = s.find('/'); slash != std::string::npos) {
      mpq_class q(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
      if (q.get_den() == 0) fail(ErrorCode::Syntax, "zero denominator in '" + raw + "'");
      q.canonicalize();
      return from_rational(q);
    }
    return from_mpz(parse_int(s));
  }
  // polynomial in the generator a: terms [c][*]a[^k] joined by + and -
  Scalar acc = zero();
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    const std::string term = s.substr(pos, end - pos);
    if (term.empty()) fail(ErrorCode::Syntax, "empty term in scalar '" + raw + "'");
    Scalar value = one();
    const auto apos = term.find('a');
    if (apos == std::string::npos) {
      value = from_mpz(parse_int(term));
    } else {
      std::string coeff = term.substr(0, apos);
      if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
      if (!coeff.empty()) value = from_mpz(parse_int(coeff));
      std::uint64_t k = 1;
      const std::string rest = term.substr(apos + 1);
      if (!rest.empty()) {
        if (rest[0] != '^') fail(ErrorCode::Syntax, "bad term '" + term + "'");
        k = static_cast<std::uint64_t>(parse_int(rest.substr(1)).get_ui());
      }
      value = mul(value, pow(generator(), k));
    }
    acc = negative ? sub(acc, value) : add(acc, value);
    pos = end;
  }
  return acc;
}

}  // namespace ghrv
