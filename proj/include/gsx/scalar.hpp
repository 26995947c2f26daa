#ifndef GSX_SCALAR_HPP
#define GSX_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "gsx/errors.hpp"

namespace gsx {

using BigInt = boost::multiprecision::cpp_int;

// Coefficient domain: the rationals, or a prime field GF(p).
// modulus() == 0 means Q.
class Field {
public:
    static Field rationals() { return Field(0); }
    static Field prime(const BigInt& p);

    bool is_rational() const { return modulus_ == 0; }
    const BigInt& modulus() const { return modulus_; }

    bool operator==(const Field& o) const { return modulus_ == o.modulus_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    std::string name() const;

private:
    friend class Scalar;
    explicit Field(BigInt m) : modulus_(std::move(m)) {}
    BigInt modulus_;
};

// An exact field element. Rational values are kept reduced with positive
// denominator; GF(p) residues are kept in [0, p). All arithmetic is exact
// and checks that both operands live in the same field.
class Scalar {
public:
    Scalar() : num_(0), den_(1), mod_(0) {}
    Scalar(const Field& f, BigInt numerator, BigInt denominator = 1);

    static Scalar zero(const Field& f) { return Scalar(f, 0); }
    static Scalar one(const Field& f) { return Scalar(f, 1); }

    // Parses "n", "-n" or "n/d" (exact-string numerics). In GF(p) the value
    // is canonicalized mod p; a zero denominator is an input error.
    static Scalar parse(const Field& f, const std::string& text);

    Field field() const;
    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const; // o nonzero
    Scalar inverse() const;                  // *this nonzero
    Scalar pow(unsigned long e) const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // "-3/2" over Q, canonical residue over GF(p).
    std::string render() const;

private:
    void canonicalize();
    void check_same_field(const Scalar& o) const;

    BigInt num_;
    BigInt den_; // 1 in prime fields
    BigInt mod_; // 0 for Q
};

} // namespace gsx

#endif
