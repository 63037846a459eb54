#pragma once

#include <string>
#include <utility>
#include <vector>

#include "squeeze/numerics.hpp"

namespace squeeze {

// Candidate exceptional class (d; m_1,...,m_k). Normalized form keeps m sorted
// nonincreasing with zeros stripped. Negative entries (and, on junk input,
// negative d) appear only transiently during reduction and in terminal tuples
// such as (0; -1).
struct ClassTuple {
  BigInt d;
  std::vector<BigInt> m;

  static ClassTuple normalized(BigInt d, std::vector<BigInt> m);

  std::string to_string() const;  // "(d;m1,m2,...)"

  bool operator==(const ClassTuple& other) const = default;
};

// (d, m) lexicographic, ascending.
bool operator<(const ClassTuple& a, const ClassTuple& b);

struct ReductionTrace {
  ClassTuple start;
  std::vector<ClassTuple> steps;  // tuple after each move; last == terminal
  ClassTuple terminal;
  std::uint64_t move_count = 0;
};

// d^2 + 1 == sum m_i^2  and  3d - 1 == sum m_i
bool diophantine_check(const ClassTuple& t);

// (2d - m1 - m2 - m3; d - m2 - m3, d - m1 - m3, d - m1 - m2, m4, ...),
// re-sorted with zeros discarded. m is padded with zeros up to length 3.
ClassTuple cremona_move(const ClassTuple& t);

// Applies cremona_move while m1 + m2 + m3 > d and d > 0. Each applicable move
// strictly decreases d, so this terminates on every input; the d > 0 clause
// stops junk inputs from descending through negative degrees.
ReductionTrace reduce(const ClassTuple& t);

// diophantine_check and reduction terminates at (0; -1)
bool is_exceptional(const ClassTuple& t);

// d d' - sum m_i m_i', shorter vector zero-padded. Self-pairing of any
// Diophantine tuple is -1; distinct exceptional classes pair >= 0.
BigInt intersection(const ClassTuple& t, const ClassTuple& u);

// All exceptional classes with 1 <= d <= d_max, sorted by (d, m) ascending.
std::vector<ClassTuple> enumerate(const BigInt& d_max);

// All Diophantine solutions regardless of reducibility; superset of enumerate.
std::vector<ClassTuple> enumerate_diophantine_only(const BigInt& d_max);

// 1, 1, 2, 5, 13, 34, 89, ... with g(n+2) = 3 g(n+1) - g(n).
BigInt fibonacci_g(unsigned n);

// a_n = (g(n+1)/g(n))^2, b_n = g(n+2)/g(n); a_n < b_n < a_(n+1).
std::pair<Rational, Rational> fib_ab(unsigned n);

// (g(n+1); g(n) * w(b_n)) and (g(n) g(n+1); g(n)^2 * w(a_n), 1).
// Both scalings are integral because consecutive g are coprime.
ClassTuple fib_class_b(unsigned n);
ClassTuple fib_class_a(unsigned n);

}  // namespace squeeze
