#ifndef JACRES_CAPS_HPP
#define JACRES_CAPS_HPP

namespace jacres {

// Resource caps.  Exceeding one raises inconclusive_error.
struct Caps {
    long max_steps = 1000000; // reduction steps per normal-form computation
    int max_degree = 40;      // truncation degree for linear-algebra models
    int order_cap = 12;       // largest k probed for membership in I^k
    int radical_cap = 8;      // largest k probed when verifying w^k in I
};

} // namespace jacres

#endif
