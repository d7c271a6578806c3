#ifndef JACRES_RING_HPP
#define JACRES_RING_HPP

#include "jacres/field.hpp"

#include <memory>
#include <string>
#include <vector>

namespace jacres {

// Ambient polynomial/power-series ring: an ordered variable list over a
// field.  Cheap to copy; equality is structural.
class Ring {
public:
    Ring() = default;
    Ring(std::vector<std::string> vars, Field field);

    int nvars() const { return static_cast<int>(d_->vars.size()); }
    const std::vector<std::string>& vars() const { return d_->vars; }
    const std::string& var_name(int i) const { return d_->vars[i]; }
    const Field& field() const { return d_->field; }
    int var_index(const std::string& name) const; // -1 when absent

    bool operator==(const Ring& o) const {
        return d_ == o.d_ || (d_ && o.d_ && d_->vars == o.d_->vars && d_->field == o.d_->field);
    }

private:
    struct Data {
        std::vector<std::string> vars;
        Field field;
    };
    std::shared_ptr<const Data> d_;
};

} // namespace jacres

#endif
