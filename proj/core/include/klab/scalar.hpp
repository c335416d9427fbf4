#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "klab/error.hpp"

namespace klab {

// Coefficient field: the rationals (p == 0) or Z/p for a prime p.
struct FieldSpec {
    std::uint32_t p = 0;

    bool is_rational() const { return p == 0; }
    bool operator==(const FieldSpec& o) const { return p == o.p; }
    bool operator!=(const FieldSpec& o) const { return p != o.p; }
    std::string to_string() const;
};

bool is_prime_u32(std::uint64_t m);

// An exact field element. Rationals are kept canonical (lowest terms,
// positive denominator, mpq_class does this); prime-field values live in
// [0, p). The modulus travels with the value so mixed-field arithmetic can
// be rejected at runtime.
class Scalar {
public:
    Scalar() : v_(0), p_(0) {}

    static Scalar zero(FieldSpec f) { return from_int(0, f); }
    static Scalar one(FieldSpec f) { return from_int(1, f); }
    static Scalar from_int(long value, FieldSpec f);
    static Scalar rational(mpq_class q);
    static Scalar rational(long num, long den);
    static Scalar fp(long value, std::uint32_t p);
    // Parses "a" or "a/b" with optional leading '-'.
    static Scalar parse(const std::string& text, FieldSpec f);

    FieldSpec field() const { return FieldSpec{p_}; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const;
    Scalar pow(unsigned long e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Rational payload; only meaningful when the field is Q.
    const mpq_class& rational_value() const { return q_; }
    std::uint64_t fp_value() const { return static_cast<std::uint64_t>(v_); }

    // Canonical text form: "a" or "a/b" over Q, the representative over Z/p.
    std::string to_string() const;

private:
    Scalar(mpq_class q, std::int64_t v, std::uint32_t p) : q_(std::move(q)), v_(v), p_(p) {}
    void check_field(const Scalar& o) const {
        if (p_ != o.p_) fail("field_mismatch", "scalars from different fields");
    }

    mpq_class q_;     // used when p_ == 0
    std::int64_t v_;  // used when p_ != 0
    std::uint32_t p_;
};

} // namespace klab
