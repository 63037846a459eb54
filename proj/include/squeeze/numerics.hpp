#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace squeeze {

using BigInt = mpz_class;
// Always kept canonical: positive denominator, lowest terms. Construct via
// make_rational/parse_rational; arithmetic on canonical values stays canonical.
using Rational = mpq_class;

enum class Ordering { Less = -1, Equal = 0, Greater = 1 };

inline Ordering ordering_of(int sign) {
  return sign < 0 ? Ordering::Less : (sign > 0 ? Ordering::Greater : Ordering::Equal);
}

// Reduced fraction with positive denominator; throws std::domain_error on den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

// Accepts "p" or "p/q" with optional sign on either part; anything else throws
// std::invalid_argument naming the offending token.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& x);  // "p/q", or "p" when q == 1
std::string to_string(const BigInt& n);

BigInt floor_of(const Rational& x);
bool is_integral(const Rational& x);
int sign_of(const Rational& x);

// Ordering of x versus sqrt(y). Both arguments must be >= 0.
Ordering cmp_sqrt(const Rational& x, const Rational& y);

// (p + q*sqrt(5)) / r with r > 0. Comparisons are exact via sign analysis:
// sign(u + v*sqrt(5)) reduces to comparing u^2 with 5 v^2 when u, v have mixed signs.
struct Surd5 {
  BigInt p;
  BigInt q;
  BigInt r;

  Surd5(BigInt p_, BigInt q_, BigInt r_);

  int sign() const;
  Ordering cmp(const Surd5& other) const;    // this versus other
  Ordering cmp(const Rational& x) const;     // this versus x
};

Surd5 tau4();  // (7 + 3*sqrt(5)) / 2, the staircase accumulation point

// Ordering of the rational a versus tau^4. Never Equal for rational input.
Ordering cmp_tau4(const Rational& a);

enum class Side : int { Below = -1, Exact = 0, Above = 1 };

// A rational nudged by a one-sided infinitesimal. Total order:
// Below(a) < Exact(a) < Above(a) < Below(a') whenever a < a'.
// The only arithmetic provided is the sign of an affine form, which is all
// half-plane membership tests need.
struct PerturbedRational {
  Rational base;
  Side side = Side::Exact;

  // sign of c0 + c1*z where z denotes this perturbed value
  int affine_sign(const Rational& c0, const Rational& c1) const;
};

int cmp(const PerturbedRational& x, const PerturbedRational& y);
bool operator<(const PerturbedRational& x, const PerturbedRational& y);
bool operator==(const PerturbedRational& x, const PerturbedRational& y);

}  // namespace squeeze
