#include "klab/scalar.hpp"

namespace klab {

std::string FieldSpec::to_string() const {
    if (is_rational()) return "Q";
    return "Fp(" + std::to_string(p) + ")";
}

bool is_prime_u32(std::uint64_t m) {
    if (m < 2) return false;
    if (m % 2 == 0) return m == 2;
    for (std::uint64_t d = 3; d * d <= m; d += 2)
        if (m % d == 0) return false;
    return true;
}

namespace {

std::int64_t fp_normalize(std::int64_t v, std::uint32_t p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return r;
}

std::int64_t fp_inverse(std::int64_t a, std::uint32_t p) {
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) fail("not_invertible", "element has no inverse mod p");
    return fp_normalize(t, p);
}

} // namespace

Scalar Scalar::from_int(long value, FieldSpec f) {
    if (f.is_rational()) return Scalar(mpq_class(value), 0, 0);
    return Scalar(mpq_class(), fp_normalize(value, f.p), f.p);
}

Scalar Scalar::rational(mpq_class q) {
    q.canonicalize();
    return Scalar(std::move(q), 0, 0);
}

Scalar Scalar::rational(long num, long den) {
    if (den == 0) fail("division_by_zero", "zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(std::move(q), 0, 0);
}

Scalar Scalar::fp(long value, std::uint32_t p) {
    return Scalar(mpq_class(), fp_normalize(value, p), p);
}

Scalar Scalar::parse(const std::string& text, FieldSpec f) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    std::size_t slash = text.find('/', pos);
    std::string num = text.substr(pos, slash == std::string::npos ? std::string::npos : slash - pos);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (num.empty() || den.empty() ||
        num.find_first_not_of("0123456789") != std::string::npos ||
        den.find_first_not_of("0123456789") != std::string::npos)
        fail("bad_scalar", "cannot parse scalar '" + text + "'");
    mpq_class q{mpz_class(num), mpz_class(den)};
    if (q.get_den() == 0) fail("division_by_zero", "zero denominator in '" + text + "'");
    q.canonicalize();
    if (negative) q = -q;
    if (f.is_rational()) return Scalar(std::move(q), 0, 0);
    // map a/b into Z/p
    mpz_class n = q.get_num() % f.p;
    mpz_class d = q.get_den() % f.p;
    std::int64_t dn = fp_normalize(d.get_si(), f.p);
    if (dn == 0) fail("division_by_zero", "denominator of '" + text + "' vanishes mod p");
    std::int64_t nn = fp_normalize(n.get_si(), f.p);
    return Scalar(mpq_class(), fp_normalize(nn * fp_inverse(dn, f.p), f.p), f.p);
}

bool Scalar::is_zero() const {
    if (p_ == 0) return sgn(q_) == 0;
    return v_ == 0;
}

bool Scalar::is_one() const {
    if (p_ == 0) return q_ == 1;
    return v_ == 1;
}

Scalar Scalar::operator-() const {
    if (p_ == 0) return Scalar(-q_, 0, 0);
    return Scalar(mpq_class(), v_ == 0 ? 0 : static_cast<std::int64_t>(p_) - v_, p_);
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_field(o);
    if (p_ == 0) return Scalar(q_ + o.q_, 0, 0);
    return Scalar(mpq_class(), fp_normalize(v_ + o.v_, p_), p_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_field(o);
    if (p_ == 0) return Scalar(q_ - o.q_, 0, 0);
    return Scalar(mpq_class(), fp_normalize(v_ - o.v_, p_), p_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_field(o);
    if (p_ == 0) return Scalar(q_ * o.q_, 0, 0);
    return Scalar(mpq_class(), fp_normalize(v_ * o.v_, p_), p_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_field(o);
    if (o.is_zero()) fail("division_by_zero", "scalar division by zero");
    if (p_ == 0) return Scalar(q_ / o.q_, 0, 0);
    return Scalar(mpq_class(), fp_normalize(v_ * fp_inverse(o.v_, p_), p_), p_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) fail("division_by_zero", "inverse of zero");
    if (p_ == 0) return Scalar(1 / q_, 0, 0);
    return Scalar(mpq_class(), fp_inverse(v_, p_), p_);
}

Scalar Scalar::pow(unsigned long e) const {
    Scalar result = Scalar::one(field());
    Scalar base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

bool Scalar::operator==(const Scalar& o) const {
    if (p_ != o.p_) return false;
    if (p_ == 0) return q_ == o.q_;
    return v_ == o.v_;
}

std::string Scalar::to_string() const {
    if (p_ != 0) return std::to_string(v_);
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

} // namespace klab
