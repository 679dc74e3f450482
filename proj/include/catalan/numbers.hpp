#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace catalan {

// Exact arbitrary-precision substrate. Every sequence value, series
// coefficient and bound comparison in this library goes through these
// two types; floating point never participates in a pass/fail decision.
using BigInt = mpz_class;
using BigRat = mpq_class;

// binom(n, k), exact. Zero when k > n.
BigInt binomial(unsigned long n, unsigned long k);

// 2^e and 4^e as exact integers.
BigInt pow2(unsigned long e);
BigInt pow4(unsigned long e);

// Number of bits in |x|. By GMP convention bit_length(0) == 1.
std::size_t bit_length(const BigInt& x);

std::string decimal(const BigInt& x);

// "p/q" in lowest terms; "p" when the denominator is 1.
std::string fraction(const BigRat& x);

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
// input or a zero denominator. The result is canonicalized.
BigRat parse_rational(const std::string& text);

// p/q with canonicalization (the raw mpq_class ctor skips it).
BigRat make_rational(long num, long den);

}  // namespace catalan
