#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace axred {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always kept canonical: gcd-reduced, denominator > 0.
/// No floating point conversion is offered anywhere; comparisons are exact.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long long n) : value_(n) {}  // NOLINT: implicit for literals
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        value_.assign(num, den);  // cpp_rational normalizes
    }

    const BigInt& num() const { return numerator(value_); }
    const BigInt& den() const { return denominator(value_); }

    bool is_zero() const { return value_ == 0; }
    bool is_negative() const { return value_ < 0; }

    Rational operator-() const { return Rational(-value_); }
    Rational abs() const { return value_ < 0 ? Rational(-value_) : *this; }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.value_ + b.value_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.value_ - b.value_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.value_ * b.value_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.value_ / b.value_);
    }
    Rational& operator+=(const Rational& b) { value_ += b.value_; return *this; }
    Rational& operator-=(const Rational& b) { value_ -= b.value_; return *this; }
    Rational& operator*=(const Rational& b) { value_ *= b.value_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    /// "3", "-3", "1/2", "-1/2". Whitespace is not accepted.
    static std::optional<Rational> parse(std::string_view text);

    std::string to_string() const;

private:
    using Rep = boost::multiprecision::cpp_rational;
    explicit Rational(Rep v) : value_(std::move(v)) {}
    Rep value_;
};

inline std::string Rational::to_string() const {
    std::string s = num().str();
    if (den() != 1) s += "/" + den().str();
    return s;
}

inline std::optional<Rational> Rational::parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    bool neg = false;
    size_t i = 0;
    if (text[0] == '-' || text[0] == '+') {
        neg = text[0] == '-';
        i = 1;
    }
    auto read_digits = [&](BigInt& out) -> bool {
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) return false;
        out = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            out = out * 10 + (text[i] - '0');
            ++i;
        }
        return true;
    };
    BigInt num, den = 1;
    if (!read_digits(num)) return std::nullopt;
    if (i < text.size() && text[i] == '/') {
        ++i;
        if (!read_digits(den) || den == 0) return std::nullopt;
    }
    if (i != text.size()) return std::nullopt;
    if (neg) num = -num;
    return Rational(num, den);
}

}  // namespace axred
