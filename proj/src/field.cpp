#include "jacres/field.hpp"

#include "jacres/errors.hpp"

namespace jacres {

Field Field::prime_field(unsigned long p) {
    mpz_class z(static_cast<unsigned long>(p));
    if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
        throw invalid_input("prime field modulus " + std::to_string(p) + " is not prime");
    Field f;
    f.p_ = p;
    return f;
}

Q Field::reduce(const Q& v) const {
    if (p_ == 0) {
        Q r = v;
        r.canonicalize();
        return r;
    }
    mpz_class p(p_);
    mpz_class num = v.get_num();
    mpz_class den = v.get_den();
    mpz_class dmod = den % p;
    if (dmod < 0) dmod += p;
    if (dmod == 0) throw invalid_input("division by zero in F_" + std::to_string(p_));
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), dmod.get_mpz_t(), p.get_mpz_t()) == 0)
        throw invalid_input("non-invertible denominator in F_" + std::to_string(p_));
    mpz_class r = (num % p) * dinv % p;
    if (r < 0) r += p;
    return Q(r);
}

Q Field::inv(const Q& a) const {
    if (is_zero(a)) throw invalid_input("division by zero");
    if (p_ == 0) {
        Q r = 1 / a;
        r.canonicalize();
        return r;
    }
    return reduce(Q(1) / a);
}

std::string to_string(const Q& v) {
    return v.get_str();
}

} // namespace jacres
