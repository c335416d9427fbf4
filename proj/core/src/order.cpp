#include "klab/order.hpp"

namespace klab {

namespace {

int degrevlex_compare(const Monomial& a, const Monomial& b, const std::vector<int>& priority,
                      std::size_t begin, std::size_t end) {
    std::uint32_t da = 0, db = 0;
    for (std::size_t k = begin; k < end; ++k) {
        da += a.exponent(priority[k]);
        db += b.exponent(priority[k]);
    }
    if (da != db) return da < db ? -1 : 1;
    // reverse-lex tie break: scan from the least significant variable;
    // larger exponent there means smaller monomial
    for (std::size_t k = end; k-- > begin;) {
        std::uint32_t ea = a.exponent(priority[k]);
        std::uint32_t eb = b.exponent(priority[k]);
        if (ea != eb) return ea > eb ? -1 : 1;
    }
    return 0;
}

int lex_compare(const Monomial& a, const Monomial& b, const std::vector<int>& priority) {
    for (int idx : priority) {
        std::uint32_t ea = a.exponent(idx);
        std::uint32_t eb = b.exponent(idx);
        if (ea != eb) return ea < eb ? -1 : 1;
    }
    return 0;
}

} // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b, const Ring& ring) const {
    const auto& pri = ring.priority;
    switch (kind) {
    case Kind::Degrevlex:
        return degrevlex_compare(a, b, pri, 0, pri.size());
    case Kind::Lex:
        return lex_compare(a, b, pri);
    case Kind::Block: {
        std::size_t f = static_cast<std::size_t>(front);
        int c = degrevlex_compare(a, b, pri, 0, f);
        if (c != 0) return c;
        return degrevlex_compare(a, b, pri, f, pri.size());
    }
    }
    return 0;
}

std::string MonomialOrder::to_string() const {
    switch (kind) {
    case Kind::Degrevlex: return "degrevlex";
    case Kind::Lex: return "lex";
    case Kind::Block: return "block(" + std::to_string(front) + ")";
    }
    return "?";
}

int canonical_compare(const Monomial& a, const Monomial& b, const Ring& ring) {
    return MonomialOrder::degrevlex().compare(a, b, ring);
}

} // namespace klab
