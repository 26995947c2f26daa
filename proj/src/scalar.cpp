#include "gsx/scalar.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

namespace gsx {

namespace mp = boost::multiprecision;

namespace {

// Inverse of a mod p via extended Euclid; a in [1, p).
BigInt mod_inverse(const BigInt& a0, const BigInt& p) {
    BigInt a = a0, b = p, x0 = 1, x1 = 0;
    while (b != 0) {
        BigInt q = a / b;
        BigInt t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    x0 %= p;
    if (x0 < 0)
        x0 += p;
    return x0;
}

} // namespace

Field Field::prime(const BigInt& p) {
    if (p < 2)
        throw input_error("field modulus must be a prime >= 2, got " + p.str());
    bool is_prime = (p == 2) || (p % 2 != 0 && mp::miller_rabin_test(p, 32));
    if (!is_prime)
        throw input_error("field modulus " + p.str() + " is not prime");
    return Field(p);
}

std::string Field::name() const {
    return is_rational() ? "Q" : "GF(" + modulus_.str() + ")";
}

Scalar::Scalar(const Field& f, BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)), mod_(f.modulus()) {
    canonicalize();
}

void Scalar::canonicalize() {
    if (den_ == 0)
        throw input_error("denominator zero");
    if (mod_ == 0) {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = mp::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0)
            den_ = 1;
    } else {
        num_ %= mod_;
        if (num_ < 0)
            num_ += mod_;
        if (den_ != 1) {
            BigInt d = den_ % mod_;
            if (d < 0)
                d += mod_;
            if (d == 0)
                throw input_error("denominator zero in GF(" + mod_.str() + ")");
            num_ = (num_ * mod_inverse(d, mod_)) % mod_;
            den_ = 1;
        }
    }
}

Field Scalar::field() const {
    // Modulus was validated when the field was first created.
    return Field(mod_);
}

void Scalar::check_same_field(const Scalar& o) const {
    if (mod_ != o.mod_)
        throw input_error("mixed coefficient fields: " + field().name() + " vs " + o.field().name());
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    if (r.num_ != 0) {
        if (mod_ == 0)
            r.num_ = -r.num_;
        else
            r.num_ = mod_ - r.num_;
    }
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar r(*this);
    if (mod_ == 0) {
        r.num_ = num_ * o.den_ + o.num_ * den_;
        r.den_ = den_ * o.den_;
    } else {
        r.num_ = num_ + o.num_;
    }
    r.canonicalize();
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar r(*this);
    r.num_ = num_ * o.num_;
    r.den_ = den_ * o.den_;
    r.canonicalize();
    return r;
}

Scalar Scalar::inverse() const {
    if (num_ == 0)
        throw input_error("division by zero");
    Scalar r(*this);
    if (mod_ == 0) {
        std::swap(r.num_, r.den_);
        r.canonicalize();
    } else {
        r.num_ = mod_inverse(num_, mod_);
    }
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(unsigned long e) const {
    Scalar base(*this);
    Scalar acc(*this);
    acc.num_ = 1;
    acc.den_ = 1;
    while (e != 0) {
        if (e & 1u)
            acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    return mod_ == o.mod_ && num_ == o.num_ && den_ == o.den_;
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
    auto parse_int = [](const std::string& s) -> BigInt {
        if (s.empty())
            throw input_error("empty numeric literal");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size())
            throw input_error("bad numeric literal '" + s + "'");
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw input_error("bad numeric literal '" + s + "'");
        return BigInt(s);
    };
    auto slash = text.find('/');
    if (slash == std::string::npos)
        return Scalar(f, parse_int(text));
    return Scalar(f, parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Scalar::render() const {
    if (den_ == 1)
        return num_.str();
    return num_.str() + "/" + den_.str();
}

} // namespace gsx
