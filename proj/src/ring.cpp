#include "jacres/ring.hpp"

#include "jacres/errors.hpp"

#include <set>

namespace jacres {

Ring::Ring(std::vector<std::string> vars, Field field) {
    if (vars.empty()) throw invalid_input("a ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty()) throw invalid_input("empty variable name");
        if (!seen.insert(v).second) throw invalid_input("duplicate variable name '" + v + "'");
    }
    auto d = std::make_shared<Data>();
    d->vars = std::move(vars);
    d->field = field;
    d_ = std::move(d);
}

int Ring::var_index(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
        if (d_->vars[i] == name) return i;
    return -1;
}

} // namespace jacres
