#pragma once

#include <utility>
#include <vector>

#include "squeeze/numerics.hpp"

namespace squeeze {

// w(a) for a = p/q >= 1: nonincreasing positive rationals with
//   sum w_i^2 = a,   sum w_i = a + 1 - 1/q,   q*w_i integral.
// The run lengths of equal weights are the regular continued-fraction
// partial quotients of a.
struct WeightExpansion {
  Rational a;
  std::vector<Rational> weights;
  std::vector<BigInt> multiplicities;  // [n0; n1, n2, ...]
};

// e0 - 1/(e1 - 1/(... - 1/er)) with every coefficient >= 2.
struct HJExpansion {
  std::vector<BigInt> coefficients;
};

enum class RunDirection { Horizontal, Vertical };

// Dot-diagram skeleton: alternating runs (horizontal first) whose counts are
// the multiplicities of a, plus the integer labels W_0 >= ... >= W_N = 1.
struct StaircaseDiagram {
  std::vector<std::pair<RunDirection, BigInt>> runs;
  std::vector<BigInt> labels;
};

// Largest expansion materialized by weight_expansion/labels/staircase.
// multiplicities() and length() have no such cap (they never materialize).
inline constexpr std::uint64_t kMaxExpansionLength = 2'000'000;

WeightExpansion weight_expansion(const Rational& a);   // a >= 1
std::vector<BigInt> multiplicities(const Rational& a); // CF partial quotients
std::vector<BigInt> labels(const Rational& a);         // q * w(a), last entry 1
BigInt length(const Rational& a);                      // number of weights

// Both Hirzebruch-Jung expansions, for p/q and for p/(p-q).
// Requires p > q >= 1 coprime.
std::pair<HJExpansion, HJExpansion> hj_expansion(const BigInt& p, const BigInt& q);

// Evaluate the nested expression back to a fraction (round-trip checkable).
Rational hj_value(const HJExpansion& e);

// Requires a = p/q > 2; for a <= 2 the companion fraction p/(p-q) is the one
// with a staircase, and the error says so.
StaircaseDiagram staircase(const Rational& a);

// Dot positions for a diagram, in (x, y) with x increasing leftward and y
// increasing downward from the first dot at (0, 0). The first dot is the
// white one; all others are black. Shared by the renderer and the
// consistency checks (black dots per row/column tie into the HJ expansions).
std::vector<std::pair<long, long>> staircase_dots(const StaircaseDiagram& d);

}  // namespace squeeze
