#ifndef JACRES_FIELD_HPP
#define JACRES_FIELD_HPP

#include <gmpxx.h>

#include <string>

namespace jacres {

// Exact field element.  Rationals are kept canonical (reduced fraction);
// prime-field elements are integer residues in [0, p).
using Q = mpq_class;

class Field {
public:
    Field() = default;

    static Field rationals() { return Field(); }
    static Field prime_field(unsigned long p); // throws invalid_input unless p is prime

    unsigned long characteristic() const { return p_; }
    bool is_rationals() const { return p_ == 0; }

    // Canonical representative of an arbitrary exact value.
    Q reduce(const Q& v) const;

    Q add(const Q& a, const Q& b) const { return reduce(a + b); }
    Q sub(const Q& a, const Q& b) const { return reduce(a - b); }
    Q mul(const Q& a, const Q& b) const { return reduce(a * b); }
    Q neg(const Q& a) const { return reduce(-a); }
    Q inv(const Q& a) const; // throws invalid_input on zero
    Q div(const Q& a, const Q& b) const { return mul(a, inv(b)); }

    Q zero() const { return Q(0); }
    Q one() const { return Q(1); }
    Q from_integer(const mpz_class& z) const { return reduce(Q(z)); }
    Q from_long(long v) const { return reduce(Q(v)); }

    static bool is_zero(const Q& a) { return sgn(a) == 0; }

    bool operator==(const Field&) const = default;

private:
    unsigned long p_ = 0; // 0 encodes the rationals
};

// "p/q" (or plain "p") rendering; never decimals.
std::string to_string(const Q& v);

} // namespace jacres

#endif
