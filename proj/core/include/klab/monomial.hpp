#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "klab/error.hpp"

namespace klab {

// Exponent vector with cached total degree. The variable a slot refers to
// is fixed by the ring the monomial lives in.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0), deg_(0) {}
    explicit Monomial(std::vector<std::uint32_t> exps)
        : e_(std::move(exps)), deg_(std::accumulate(e_.begin(), e_.end(), 0u)) {}

    static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1) {
        Monomial m(nvars);
        m.e_[index] = power;
        m.deg_ = power;
        return m;
    }

    std::size_t nvars() const { return e_.size(); }
    std::uint32_t degree() const { return deg_; }
    std::uint32_t exponent(std::size_t i) const { return e_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return e_; }
    bool is_constant() const { return deg_ == 0; }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        r.deg_ += o.deg_;
        return r;
    }

    bool divides(const Monomial& o) const {
        if (deg_ > o.deg_) return false;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    // quotient o / this, valid only when this divides o
    Monomial quotient_into(const Monomial& o) const {
        Monomial r(o);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= e_[i];
        r.deg_ = o.deg_ - deg_;
        return r;
    }

    Monomial lcm(const Monomial& o) const {
        Monomial r(e_.size());
        std::uint32_t d = 0;
        for (std::size_t i = 0; i < e_.size(); ++i) {
            r.e_[i] = std::max(e_[i], o.e_[i]);
            d += r.e_[i];
        }
        r.deg_ = d;
        return r;
    }

    bool coprime_with(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > 0 && o.e_[i] > 0) return false;
        return true;
    }

    Monomial with_exponent(std::size_t i, std::uint32_t value) const {
        Monomial r(*this);
        r.deg_ = r.deg_ - r.e_[i] + value;
        r.e_[i] = value;
        return r;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

private:
    std::vector<std::uint32_t> e_;
    std::uint32_t deg_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::size_t h = 1469598103934665603ull;
        for (auto v : m.exponents()) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace klab
