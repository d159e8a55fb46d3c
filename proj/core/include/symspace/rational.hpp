#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#ifndef SYMSPACE_USE_CPP_RATIONAL
#include <boost/multiprecision/gmp.hpp>
#endif

#include <optional>
#include <string>
#include <string_view>

#include "symspace/error.hpp"

namespace symspace {

#ifdef SYMSPACE_USE_CPP_RATIONAL
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
#else
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;
#endif

double to_double(const Rat& r);

// Exact conversion; every finite double is a dyadic rational.
Rat rat_from_double(double d);

// Canonical "p" / "p/q" rendering with q > 0 and gcd(p, q) = 1.
std::string rat_to_string(const Rat& r);

// Accepts "p", "p/q" and "-p/q" with decimal digits only. Throws
// Error(Errc::InvalidInput) on anything else, including q = 0.
Rat rat_from_string(std::string_view text);

Int ipow(Int base, unsigned exp);
Rat rpow(const Rat& base, unsigned exp);

// Exact n-th root when it exists. Negative bases are accepted for odd n.
std::optional<Int> iroot_exact(const Int& value, unsigned n);
std::optional<Rat> rroot_exact(const Rat& value, unsigned n);

// Sign of B^(1/b) + C^(1/b) - A^(1/b) for nonnegative rationals, decided in
// exact rational arithmetic. Supported roots: b in {1, 2, 3}.
int root_sum_gap_sign(const Rat& A, const Rat& B, const Rat& C, unsigned b);

// Comparison tolerance for floating-point norm values: 2^-precision_bits().
// The default of 40 can be overridden with the SYMSPACE_PRECISION variable.
int precision_bits();
double approx_tolerance();

// Rational extended by a single point at +infinity. Used for total masses,
// distribution-function values and integrals over infinite-mass sets.
class ExtRat {
 public:
  ExtRat() = default;
  ExtRat(Rat value) : value_(std::move(value)) {}
  ExtRat(int value) : value_(value) {}
  static ExtRat infinity() {
    ExtRat e;
    e.infinite_ = true;
    return e;
  }

  bool is_infinite() const { return infinite_; }
  const Rat& finite() const {
    if (infinite_) raise(Errc::InvalidInput, "expected a finite value");
    return value_;
  }

  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    if (a.infinite_ != b.infinite_) return false;
    return a.infinite_ || a.value_ == b.value_;
  }
  friend bool operator<(const ExtRat& a, const ExtRat& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const ExtRat& a, const ExtRat& b) { return a == b || a < b; }

  ExtRat operator+(const ExtRat& other) const {
    if (infinite_ || other.infinite_) return infinity();
    return ExtRat(value_ + other.value_);
  }

  double approx() const;

 private:
  bool infinite_ = false;
  Rat value_{};
};

std::string ext_to_string(const ExtRat& e);
ExtRat ext_from_string(std::string_view text);  // "inf" or a rational

}  // namespace symspace
