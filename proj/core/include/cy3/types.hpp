#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cy3 {

// All lattice data is exact 64-bit integer arithmetic; rationals appear only
// where a quotient is part of the answer (polar duals, Euler characteristics).
using Int = std::int64_t;
using LatticePoint = std::vector<Int>;
using IntMatrix = std::vector<std::vector<Int>>;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact rational number over Int, always stored reduced with a positive
/// denominator, so defaulted equality is value equality.
class Rational {
public:
    constexpr Rational() = default;
    Rational(Int n) : num_(n) {}  // NOLINT: implicit integer promotion intended
    Rational(Int n, Int d) : num_(n), den_(d) { normalize(); }

    Int numerator() const { return num_; }
    Int denominator() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(checked(__int128(a.num_) * b.den_ + __int128(b.num_) * a.den_),
                        checked(__int128(a.den_) * b.den_));
    }
    friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend bool operator<(const Rational& a, const Rational& b) {
        return __int128(a.num_) * b.den_ < __int128(b.num_) * a.den_;
    }

    friend Rational abs(const Rational& r) { return r.num_ < 0 ? -r : r; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        os << r.num_;
        if (r.den_ != 1) os << '/' << r.den_;
        return os;
    }

private:
    static Int checked(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN) throw Error("rational overflow");
        return static_cast<Int>(v);
    }
    void normalize() {
        if (den_ == 0) throw Error("zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Int num_ = 0;
    Int den_ = 1;
};

// Malformed input files. CLI exit code 2.
class ParseError : public Error {
public:
    using Error::Error;
};

// Violated operation preconditions. CLI exit code 3.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class NotFullDimensional : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class OriginNotInterior : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

// The polar dual has at least one non-integral vertex; the offending
// rational vertices are carried as witnesses.
class NonIntegralDual : public PreconditionError {
public:
    NonIntegralDual(std::string msg, std::vector<std::vector<Rational>> witnesses)
        : PreconditionError(std::move(msg)), witnesses_(std::move(witnesses)) {}

    const std::vector<std::vector<Rational>>& witnesses() const { return witnesses_; }

private:
    std::vector<std::vector<Rational>> witnesses_;
};

class NotReflexive : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class WrongDimension : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class TooLarge : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class RankTooLarge : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class EmptyRange : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

}  // namespace cy3
