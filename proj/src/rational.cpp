#include "twistlab/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace twistlab {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
    if (a == 0) return b;
    if (b == 0) return a;
    // Fall back to 64-bit gcd as soon as both operands fit.
    while ((a >> 64) != 0 || (b >> 64) != 0) {
        u128 t = a % b;
        a = b;
        b = t;
        if (b == 0) return a;
    }
    return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
}

bool fits(i128 v) { return v >= kMin && v <= kMax; }

mpz_class to_mpz(i128 v) {
    bool neg = v < 0;
    u128 m = uabs(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(m >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(m)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

mpq_class mpq_from(std::int64_t n, std::int64_t d) {
    mpq_class q;
    mpz_set_si(q.get_num_mpz_t(), n);
    mpz_set_si(q.get_den_mpz_t(), d);
    return q;
}

bool mpz_to_i64(const mpz_class& z, std::int64_t& out) {
    if (!mpz_fits_slong_p(z.get_mpz_t())) return false;
    out = mpz_get_si(z.get_mpz_t());
    return true;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num_(0), den_(1) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    i128 nn = n;
    i128 dd = d;
    if (dd < 0) {
        nn = -nn;
        dd = -dd;
    }
    u128 g = gcd128(uabs(nn), static_cast<u128>(dd));
    if (g > 1) {
        nn /= static_cast<i128>(g);
        dd /= static_cast<i128>(g);
    }
    if (nn == 0) dd = 1;
    if (fits(nn) && fits(dd)) {
        num_ = static_cast<std::int64_t>(nn);
        den_ = static_cast<std::int64_t>(dd);
    } else {
        mpq_class q;
        q.get_num() = to_mpz(nn);
        q.get_den() = to_mpz(dd);
        assign_mpq(q);
    }
}

Rational::Rational(const mpq_class& q) : num_(0), den_(1) {
    mpq_class c(q);
    c.canonicalize();
    assign_mpq(c);
}

Rational::Rational(const Rational& other) : num_(0), den_(other.den_) {
    if (other.den_ == 0)
        big_ = new mpq_class(*other.big_);
    else
        num_ = other.num_;
}

Rational::Rational(Rational&& other) noexcept : num_(0), den_(other.den_) {
    if (other.den_ == 0) {
        big_ = other.big_;
        other.den_ = 1;
        other.num_ = 0;
    } else {
        num_ = other.num_;
    }
}

Rational& Rational::operator=(const Rational& other) {
    if (this == &other) return *this;
    if (other.den_ == 0) {
        if (den_ == 0) {
            *big_ = *other.big_;
        } else {
            big_ = new mpq_class(*other.big_);
            den_ = 0;
        }
    } else {
        release();
        num_ = other.num_;
        den_ = other.den_;
    }
    return *this;
}

Rational& Rational::operator=(Rational&& other) noexcept {
    if (this == &other) return *this;
    release();
    den_ = other.den_;
    if (other.den_ == 0) {
        big_ = other.big_;
        other.den_ = 1;
        other.num_ = 0;
    } else {
        num_ = other.num_;
    }
    return *this;
}

Rational::~Rational() { release(); }

void Rational::release() noexcept {
    if (den_ == 0) {
        delete big_;
        num_ = 0;
        den_ = 1;
    }
}

void Rational::assign_mpq(const mpq_class& q) {
    std::int64_t n = 0;
    std::int64_t d = 0;
    if (mpz_to_i64(q.get_num(), n) && mpz_to_i64(q.get_den(), d)) {
        release();
        num_ = n;
        den_ = d;
        return;
    }
    if (den_ == 0) {
        *big_ = q;
    } else {
        big_ = new mpq_class(q);
        den_ = 0;
    }
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    auto trim = [](std::string& v) {
        auto b = v.find_first_not_of(" \t");
        auto e = v.find_last_not_of(" \t");
        v = b == std::string::npos ? std::string() : v.substr(b, e - b + 1);
    };
    trim(s);
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty input");
    if (s.front() == '+') s.erase(0, 1);
    auto valid_int = [](const std::string& v) {
        std::size_t i = (!v.empty() && v[0] == '-') ? 1 : 0;
        if (i == v.size()) return false;
        for (; i < v.size(); ++i)
            if (v[i] < '0' || v[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    std::string n = s.substr(0, slash);
    std::string d = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(n) || !valid_int(d) || d.front() == '-')
        throw std::invalid_argument("Rational::parse: malformed '" + std::string(text) + "'");
    mpq_class q;
    q.get_num().set_str(n, 10);
    q.get_den().set_str(d, 10);
    if (q.get_den() == 0) throw std::domain_error("Rational::parse: zero denominator");
    q.canonicalize();
    return Rational(q);
}

bool Rational::is_integer() const {
    return den_ == 1 || (den_ == 0 && big_->get_den() == 1);
}

int Rational::sign() const {
    if (den_ != 0) return (num_ > 0) - (num_ < 0);
    return sgn(*big_);
}

mpq_class Rational::to_mpq() const {
    if (den_ == 0) return *big_;
    return mpq_from(num_, den_);
}

std::string Rational::numerator_string() const {
    if (den_ != 0) return std::to_string(num_);
    return big_->get_num().get_str();
}

std::string Rational::denominator_string() const {
    if (den_ != 0) return std::to_string(den_);
    return big_->get_den().get_str();
}

std::string Rational::to_string() const { return numerator_string() + "/" + denominator_string(); }

Rational& Rational::operator+=(const Rational& rhs) {
    if (den_ != 0 && rhs.den_ != 0) {
        if (den_ == 1 && rhs.den_ == 1) {
            std::int64_t r = 0;
            if (!__builtin_add_overflow(num_, rhs.num_, &r)) {
                num_ = r;
                return *this;
            }
        }
        if (den_ == rhs.den_) {
            // Same denominator: only a gcd against it is needed.
            i128 nn = static_cast<i128>(num_) + rhs.num_;
            u128 g2 = gcd128(uabs(nn), static_cast<u128>(den_));
            i128 rn = nn / static_cast<i128>(g2);
            i128 rd = static_cast<i128>(den_) / static_cast<i128>(g2);
            if (fits(rn)) {
                num_ = static_cast<std::int64_t>(rn);
                den_ = static_cast<std::int64_t>(rd);
                return *this;
            }
        }
        i128 n = static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_;
        if (n == 0) {
            num_ = 0;
            den_ = 1;
            return *this;
        }
        i128 d = static_cast<i128>(den_) * rhs.den_;
        u128 g = gcd128(uabs(n), static_cast<u128>(d));
        n /= static_cast<i128>(g);
        d /= static_cast<i128>(g);
        if (fits(n) && fits(d)) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
            return *this;
        }
    }
    assign_mpq(to_mpq() + rhs.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    if (rhs.den_ != 0 && rhs.num_ != kMin) {
        Rational neg;
        neg.num_ = -rhs.num_;
        neg.den_ = rhs.den_;
        return *this += neg;
    }
    assign_mpq(to_mpq() - rhs.to_mpq());
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    if (den_ != 0 && rhs.den_ != 0) {
        if (num_ == 0 || rhs.num_ == 0) {
            num_ = 0;
            den_ = 1;
            return *this;
        }
        if (den_ == 1 && rhs.den_ == 1) {
            std::int64_t r = 0;
            if (!__builtin_mul_overflow(num_, rhs.num_, &r)) {
                num_ = r;
                return *this;
            }
        }
        // Cross-cancel first so the products are already reduced.
        u128 g1 = gcd128(uabs(num_), static_cast<u128>(rhs.den_));
        u128 g2 = gcd128(uabs(rhs.num_), static_cast<u128>(den_));
        i128 n = (static_cast<i128>(num_) / static_cast<i128>(g1)) *
                 (static_cast<i128>(rhs.num_) / static_cast<i128>(g2));
        i128 d = (static_cast<i128>(den_) / static_cast<i128>(g2)) *
                 (static_cast<i128>(rhs.den_) / static_cast<i128>(g1));
        if (fits(n) && fits(d)) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
            return *this;
        }
    }
    assign_mpq(to_mpq() * rhs.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
    if (rhs.den_ != 0 && rhs.num_ != kMin) {
        Rational inv;
        inv.num_ = rhs.num_ < 0 ? -rhs.den_ : rhs.den_;
        inv.den_ = rhs.num_ < 0 ? -rhs.num_ : rhs.num_;
        return *this *= inv;
    }
    assign_mpq(to_mpq() / rhs.to_mpq());
    return *this;
}

void Rational::add_product(const Rational& a, const Rational& b) {
    if (den_ == 1 && a.den_ == 1 && b.den_ == 1) {
        std::int64_t p = 0;
        std::int64_t s = 0;
        if (!__builtin_mul_overflow(a.num_, b.num_, &p) && !__builtin_add_overflow(num_, p, &s)) {
            num_ = s;
            return;
        }
    }
    Rational p = a;
    p *= b;
    *this += p;
}

Rational operator-(const Rational& a) {
    if (a.den_ != 0 && a.num_ != kMin) {
        Rational r;
        r.num_ = -a.num_;
        r.den_ = a.den_;
        return r;
    }
    return Rational(mpq_class(-a.to_mpq()));
}

bool operator==(const Rational& a, const Rational& b) {
    if (a.den_ != 0 && b.den_ != 0) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.den_ == 0 && b.den_ == 0) return *a.big_ == *b.big_;
    return false;  // canonical forms never straddle
}

bool operator<(const Rational& a, const Rational& b) {
    if (a.den_ != 0 && b.den_ != 0)
        return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
    return a.to_mpq() < b.to_mpq();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
    os << q.numerator_string();
    if (!q.is_integer()) os << '/' << q.denominator_string();
    return os;
}

Rational factorial(unsigned k) {
    Rational r(1);
    for (unsigned i = 2; i <= k; ++i) r *= Rational(static_cast<std::int64_t>(i));
    return r;
}

Rational binomial(const Rational& q, unsigned k) {
    Rational r(1);
    for (unsigned j = 0; j < k; ++j) {
        r *= q - Rational(static_cast<std::int64_t>(j));
        r /= Rational(static_cast<std::int64_t>(j + 1));
    }
    return r;
}

}  // namespace twistlab
