#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <type_traits>
#include <stdexcept>
#include <string>
#include <vector>

namespace gp {

// Exact rational numbers over GMP. mpq_class leaves two-argument
// constructions un-canonicalized, which silently breaks comparisons, so this
// wrapper canonicalizes at every entry point; everything in the exact modules
// goes through this type, never through floating point.
class Rat : public mpq_class {
  public:
    Rat() : mpq_class() {}
    Rat(const mpq_class& q) : mpq_class(q) {}
    Rat(int n) : mpq_class(n) {}
    Rat(long n) : mpq_class(static_cast<signed long>(n)) {}
    Rat(long long n) : mpq_class(static_cast<signed long>(n)) {}
    Rat(unsigned long n) : mpq_class(static_cast<unsigned long>(n)) {}
    template <class N, class D,
              class = std::enable_if_t<std::is_integral_v<N> && std::is_integral_v<D>>>
    Rat(N num_in, D den_in) : mpq_class() {
        long num = static_cast<long>(num_in), den = static_cast<long>(den_in);
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        *static_cast<mpq_class*>(this) = mpq_class(num, den);
        canonicalize();
    }
    template <class T, class U>
    Rat(const __gmp_expr<T, U>& e) : mpq_class(e) {}
};

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

// Parses "p/q" or "p". Whitespace is not accepted.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline int rat_sign(const Rat& q) { return sgn(q); }

// Smallest integer >= q.
inline long rat_ceil(const Rat& q) {
    mpz_class z;
    mpz_cdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    if (!z.fits_slong_p()) throw std::overflow_error("ceil out of range");
    return z.get_si();
}

inline long rat_floor(const Rat& q) {
    mpz_class z;
    mpz_fdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    if (!z.fits_slong_p()) throw std::overflow_error("floor out of range");
    return z.get_si();
}

using RatVec = std::vector<Rat>;

inline Rat vec_sum(const RatVec& v) {
    Rat s = 0;
    for (const auto& x : v) s += x;
    return s;
}

}  // namespace gp
