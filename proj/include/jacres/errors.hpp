#ifndef JACRES_ERRORS_HPP
#define JACRES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jacres {

// Malformed input text (system files, arc files, --poly expressions).
class parse_error : public std::runtime_error {
public:
    parse_error(std::string msg, int line, int col)
        : std::runtime_error(std::move(msg)), line(line), col(col) {}
    int line;
    int col;
};

// Input is well-formed but violates an operation precondition.
class invalid_input : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A resource cap was hit before an answer could be certified.  Never a
// wrong boolean: callers must treat this as "don't know".
class inconclusive_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An identity the library asserts unconditionally failed to hold.
class invariant_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace jacres

#endif
