#include "eulersum/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <ostream>

#include "eulersum/error.hpp"

namespace eulersum {

namespace {

bool all_digits(std::string_view text) {
    if (text.empty()) return false;
    for (char c : text) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) return false;
    }
    return true;
}

BigInt parse_integer(std::string_view text, std::string_view whole) {
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (!all_digits(text)) {
        throw DomainError("malformed rational: \"" + std::string(whole) + "\"");
    }
    BigInt value(std::string(text), 10);
    return negative ? BigInt(-value) : value;
}

BigInt power_of_ten(unsigned long exponent) {
    BigInt result;
    mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
    return result;
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) throw DomainError("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
    const std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
        throw DomainError("malformed rational: \"" + std::string(text) + "\"");
    }
    return Rational(parse_integer(text.substr(0, slash), text), BigInt(std::string(den_text), 10));
}

Rational Rational::from_decimal(std::string_view text) {
    const std::string_view whole = text;
    auto fail = [&]() -> Rational {
        throw DomainError("malformed decimal: \"" + std::string(whole) + "\"");
    };

    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }

    long exponent = 0;
    if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_text = text.substr(e + 1);
        text = text.substr(0, e);
        bool exp_negative = false;
        if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
            exp_negative = exp_text.front() == '-';
            exp_text.remove_prefix(1);
        }
        if (!all_digits(exp_text) || exp_text.size() > 6) return fail();
        exponent = std::strtol(std::string(exp_text).c_str(), nullptr, 10);
        if (exp_negative) exponent = -exponent;
    }

    std::string digits;
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        const std::string_view int_part = text.substr(0, dot);
        const std::string_view frac_part = text.substr(dot + 1);
        if (int_part.empty() && frac_part.empty()) return fail();
        if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part))) {
            return fail();
        }
        digits = std::string(int_part) + std::string(frac_part);
        exponent -= static_cast<long>(frac_part.size());
    } else {
        if (!all_digits(text)) return fail();
        digits = std::string(text);
    }

    BigInt mantissa(digits, 10);
    if (negative) mantissa = -mantissa;
    if (exponent >= 0) return Rational(BigInt(mantissa * power_of_ten(static_cast<unsigned long>(exponent))));
    return Rational(mantissa, power_of_ten(static_cast<unsigned long>(-exponent)));
}

Rational Rational::from_string(std::string_view text) {
    if (text.find('/') != std::string_view::npos) return parse(text);
    return from_decimal(text);
}

Rational Rational::operator-() const {
    Rational result;
    result.value_ = -value_;
    return result;
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw DomainError("rational division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::pow(long exponent) const {
    if (exponent < 0) {
        if (is_zero()) throw DomainError("zero raised to a negative power");
        return Rational(1) / pow(-exponent);
    }
    const auto e = static_cast<unsigned long>(exponent);
    BigInt num;
    BigInt den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), e);
    // Powers of coprime integers stay coprime.
    Rational result;
    result.value_ = mpq_class(num, den);
    return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

BigInt binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    BigInt result;
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return result;
}

}  // namespace eulersum
