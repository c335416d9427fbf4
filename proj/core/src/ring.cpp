#include "klab/ring.hpp"

namespace klab {

std::shared_ptr<const Ring> Ring::projective(int n, FieldSpec field) {
    auto r = std::make_shared<Ring>();
    r->kind = Kind::Projective;
    r->nvars = n + 1;
    r->field = field;
    for (int i = 0; i <= n; ++i) r->names.push_back("X" + std::to_string(i));
    // X1 > X2 > ... > Xn > X0
    for (int i = 1; i <= n; ++i) r->priority.push_back(i);
    r->priority.push_back(0);
    return r;
}

std::shared_ptr<const Ring> Ring::affine(int n, FieldSpec field) {
    auto r = std::make_shared<Ring>();
    r->kind = Kind::Affine;
    r->nvars = n;
    r->field = field;
    for (int i = 1; i <= n; ++i) r->names.push_back("X" + std::to_string(i));
    for (int i = 0; i < n; ++i) r->priority.push_back(i);
    return r;
}

std::shared_ptr<const Ring> Ring::scratch(std::vector<std::string> names, FieldSpec field,
                                          std::vector<int> priority) {
    auto r = std::make_shared<Ring>();
    r->kind = Kind::Scratch;
    r->nvars = static_cast<int>(names.size());
    r->field = field;
    r->names = std::move(names);
    if (priority.empty())
        for (int i = 0; i < r->nvars; ++i) priority.push_back(i);
    r->priority = std::move(priority);
    return r;
}

} // namespace klab
