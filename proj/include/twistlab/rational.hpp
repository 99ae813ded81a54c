#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace twistlab {

/// Exact rational number, always reduced with a positive denominator.
///
/// Values whose numerator and denominator fit in 64 bits are stored inline;
/// anything larger spills to a heap-allocated GMP rational. The two forms
/// are never mixed for the same value: a big value that shrinks back into
/// range is demoted, so equality can compare representations directly.
class Rational {
public:
    Rational() noexcept : num_(0), den_(1) {}
    Rational(std::int64_t n) noexcept : num_(n), den_(1) {}  // NOLINT(implicit)
    Rational(int n) noexcept : num_(n), den_(1) {}           // NOLINT(implicit)
    Rational(std::int64_t n, std::int64_t d);
    explicit Rational(const mpq_class& q);

    Rational(const Rational& other);
    Rational(Rational&& other) noexcept;
    Rational& operator=(const Rational& other);
    Rational& operator=(Rational&& other) noexcept;
    ~Rational();

    /// Parses "n", "-n", "n/d" (arbitrary precision).
    static Rational parse(std::string_view text);

    [[nodiscard]] bool is_zero() const noexcept { return den_ == 1 && num_ == 0; }
    [[nodiscard]] bool is_one() const noexcept { return den_ == 1 && num_ == 1; }
    [[nodiscard]] bool is_integer() const;
    [[nodiscard]] int sign() const;
    [[nodiscard]] bool is_small() const noexcept { return den_ != 0; }

    [[nodiscard]] mpq_class to_mpq() const;
    [[nodiscard]] std::string numerator_string() const;
    [[nodiscard]] std::string denominator_string() const;
    /// "num/den", with "/1" kept so the format is uniform.
    [[nodiscard]] std::string to_string() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    /// this += a * b, the inner kernel of every sparse product.
    void add_product(const Rational& a, const Rational& b);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a);

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q);

private:
    void assign_mpq(const mpq_class& q);
    void release() noexcept;
    [[nodiscard]] const mpq_class& big() const noexcept { return *big_; }

    // den_ == 0 marks the big form; then big_ owns the value.
    union {
        std::int64_t num_;
        mpq_class* big_;
    };
    std::int64_t den_;
};

/// Generalized binomial coefficient C(q, k) = q(q-1)...(q-k+1) / k!.
Rational binomial(const Rational& q, unsigned k);

Rational factorial(unsigned k);

}  // namespace twistlab
