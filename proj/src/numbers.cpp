#include "catalan/numbers.hpp"

#include <stdexcept>

namespace catalan {

BigInt binomial(unsigned long n, unsigned long k) {
    if (k > n) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt pow2(unsigned long e) {
    BigInt r(1);
    r <<= e;
    return r;
}

BigInt pow4(unsigned long e) {
    BigInt r(1);
    r <<= 2 * e;
    return r;
}

std::size_t bit_length(const BigInt& x) {
    return mpz_sizeinbase(x.get_mpz_t(), 2);
}

std::string decimal(const BigInt& x) {
    return x.get_str();
}

std::string fraction(const BigRat& x) {
    return x.get_str();
}

BigRat parse_rational(const std::string& text) {
    BigRat q;
    if (text.empty() || mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0) {
        throw std::invalid_argument("malformed rational: \"" + text + "\"");
    }
    if (q.get_den() == 0) {
        throw std::invalid_argument("zero denominator in rational: \"" + text + "\"");
    }
    q.canonicalize();
    return q;
}

BigRat make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace catalan
