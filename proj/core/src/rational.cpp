#include "symspace/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>

namespace symspace {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::SpaceMismatch: return "SpaceMismatch";
    case Errc::IndeterminateForm: return "IndeterminateForm";
    case Errc::InfiniteBlock: return "InfiniteBlock";
    case Errc::WeightNotIntegrable: return "WeightNotIntegrable";
    case Errc::UnrepresentableTail: return "UnrepresentableTail";
    case Errc::NormInfinite: return "NormInfinite";
    case Errc::QuasiNormSpec: return "QuasiNormSpec";
    case Errc::InvalidConstant: return "InvalidConstant";
    case Errc::NegativeValues: return "NegativeValues";
    case Errc::TailPresent: return "TailPresent";
    case Errc::NotAChain: return "NotAChain";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::NotAMember: return "NotAMember";
  }
  return "UnknownError";
}

double to_double(const Rat& r) { return r.template convert_to<double>(); }

Rat rat_from_double(double d) {
  if (!std::isfinite(d)) raise(Errc::InvalidInput, "non-finite double");
  if (d == 0.0) return Rat(0);
  int exp = 0;
  double mant = std::frexp(d, &exp);  // d = mant * 2^exp, |mant| in [0.5, 1)
  // 53 mantissa bits make mant * 2^53 integral.
  auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  Int num(scaled);
  int e = exp - 53;
  if (e >= 0) return Rat(num << e, Int(1));
  return Rat(num, Int(1) << (-e));
}

std::string rat_to_string(const Rat& r) {
  Int num = numerator(r);
  Int den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

Int parse_int_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) raise(Errc::InvalidInput, "empty number in '" + std::string(whole) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      raise(Errc::InvalidInput, "bad rational '" + std::string(whole) + "'");
  }
  return Int(std::string(digits));
}

}  // namespace

Rat rat_from_string(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  auto slash = rest.find('/');
  Int num, den(1);
  if (slash == std::string_view::npos) {
    num = parse_int_digits(rest, text);
  } else {
    num = parse_int_digits(rest.substr(0, slash), text);
    den = parse_int_digits(rest.substr(slash + 1), text);
    if (den == 0) raise(Errc::InvalidInput, "zero denominator in '" + std::string(text) + "'");
  }
  if (negative) num = -num;
  return Rat(num, den);  // canonicalised by the two-integer constructor
}

Int ipow(Int base, unsigned exp) {
  Int out(1);
  while (exp != 0) {
    if (exp & 1u) out *= base;
    base *= base;
    exp >>= 1u;
  }
  return out;
}

Rat rpow(const Rat& base, unsigned exp) {
  return Rat(ipow(numerator(base), exp), ipow(denominator(base), exp));
}

std::optional<Int> iroot_exact(const Int& value, unsigned n) {
  if (n == 0) raise(Errc::InvalidInput, "zeroth root");
  if (n == 1) return value;
  if (value == 0) return Int(0);
  if (value < 0) {
    if (n % 2 == 0) return std::nullopt;
    auto r = iroot_exact(-value, n);
    if (!r) return std::nullopt;
    return -*r;
  }
  // Bisection on number of bits; inputs stay small in practice.
  Int lo(1), hi(2);
  while (ipow(hi, n) < value) hi <<= 1;
  while (lo < hi) {
    Int mid = (lo + hi) / 2;
    if (ipow(mid, n) < value)
      lo = mid + 1;
    else
      hi = mid;
  }
  if (ipow(lo, n) == value) return lo;
  return std::nullopt;
}

std::optional<Rat> rroot_exact(const Rat& value, unsigned n) {
  auto rn = iroot_exact(numerator(value), n);
  if (!rn) return std::nullopt;
  auto rd = iroot_exact(denominator(value), n);
  if (!rd) return std::nullopt;
  return Rat(*rn, *rd);
}

int root_sum_gap_sign(const Rat& A, const Rat& B, const Rat& C, unsigned b) {
  if (A < 0 || B < 0 || C < 0) raise(Errc::InvalidInput, "negative radicand");
  auto sign_of = [](const Rat& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); };
  switch (b) {
    case 1:
      return sign_of(B + C - A);
    case 2: {
      // gap = sqrt(B) + sqrt(C) - sqrt(A); compare A against (sqrt(B)+sqrt(C))^2.
      Rat d = A - B - C;
      if (d < 0) return 1;
      if (d == 0) return B * C == 0 ? 0 : 1;
      Rat lhs = d * d;
      Rat rhs = 4 * B * C;
      if (lhs < rhs) return 1;
      if (lhs == rhs) return 0;
      return -1;
    }
    case 3: {
      // With u^3=B, v^3=C, w^3=A and x=u, y=v, z=-w:
      //   x^3+y^3+z^3 - 3xyz = (x+y+z) * ((x-y)^2+(y-z)^2+(z-x)^2)/2,
      // whose second factor is positive unless u=v=w=0. Hence
      //   sign(u+v-w) = sign(B + C - A + 3*(ABC)^(1/3)).
      if (A == 0 && B == 0 && C == 0) return 0;
      Rat e = B + C - A;
      Rat abc = A * B * C;
      if (e >= 0) return (e == 0 && abc == 0) ? 0 : 1;
      Rat lhs = 27 * abc;
      Rat rhs = -(e * e * e);
      if (lhs > rhs) return 1;
      if (lhs == rhs) return 0;
      return -1;
    }
    default:
      raise(Errc::InvalidInput, "unsupported root order " + std::to_string(b));
  }
}

int precision_bits() {
  static const int bits = [] {
    if (const char* env = std::getenv("SYMSPACE_PRECISION")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end && *end == '\0' && v >= 1 && v <= 52) return static_cast<int>(v);
    }
    return 40;
  }();
  return bits;
}

double approx_tolerance() { return std::ldexp(1.0, -precision_bits()); }

double ExtRat::approx() const {
  return infinite_ ? std::numeric_limits<double>::infinity() : to_double(value_);
}

std::string ext_to_string(const ExtRat& e) {
  return e.is_infinite() ? "inf" : rat_to_string(e.finite());
}

ExtRat ext_from_string(std::string_view text) {
  if (text == "inf") return ExtRat::infinity();
  return ExtRat(rat_from_string(text));
}

}  // namespace symspace
