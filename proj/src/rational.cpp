#include "omega/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "omega/errors.hpp"

namespace omega {

namespace {

using boost::multiprecision::mpz_int;

bool all_digits(std::string_view text)
{
    return !text.empty() && std::all_of(text.begin(), text.end(), [](unsigned char ch) { return std::isdigit(ch); });
}

[[noreturn]] void reject(std::string_view text)
{
    throw Error(ErrorKind::ParseError, "not an exact number: \"" + std::string(text) + "\"");
}

// Leading zeros would make GMP read the digits as octal.
mpz_int decimal_digits(std::string_view digits)
{
    const auto first = digits.find_first_not_of('0');
    return first == std::string_view::npos ? mpz_int(0) : mpz_int(std::string(digits.substr(first)));
}

mpz_int power_of_ten(std::size_t exponent)
{
    mpz_int result = 1;
    for (std::size_t i = 0; i < exponent; ++i)
        result *= 10;
    return result;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    const std::string_view original = text;
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);

    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }

    mpz_int numerator;
    mpz_int denominator = 1;
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto top = text.substr(0, slash);
        const auto bottom = text.substr(slash + 1);
        if (!all_digits(top) || !all_digits(bottom))
            reject(original);
        numerator = decimal_digits(top);
        denominator = decimal_digits(bottom);
        if (denominator == 0)
            throw Error(ErrorKind::ParseError, "zero denominator in \"" + std::string(original) + "\"");
    } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        const auto whole = text.substr(0, dot);
        const auto fraction = text.substr(dot + 1);
        if (!all_digits(whole) || !all_digits(fraction))
            reject(original);
        numerator = decimal_digits(std::string(whole) + std::string(fraction));
        denominator = power_of_ten(fraction.size());
    } else {
        if (!all_digits(text))
            reject(original);
        numerator = decimal_digits(text);
    }
    if (negative)
        numerator = -numerator;
    return Rational(numerator, denominator);
}

std::string to_string(const Rational& value)
{
    const auto& den = boost::multiprecision::denominator(value);
    if (den == 1)
        return boost::multiprecision::numerator(value).str();
    return boost::multiprecision::numerator(value).str() + "/" + den.str();
}

std::string to_decimal(const Rational& value, int digits)
{
    digits = std::max(digits, 0);
    const mpz_int num = boost::multiprecision::numerator(value);
    const mpz_int den = boost::multiprecision::denominator(value);
    const bool negative = num < 0;
    const mpz_int scaled = (negative ? mpz_int(-num) : num) * power_of_ten(static_cast<std::size_t>(digits));
    // round half away from zero
    const mpz_int rounded = (2 * scaled + den) / (2 * den);

    std::string body = rounded.str();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits))
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        body.insert(body.size() - static_cast<std::size_t>(digits), 1, '.');
        while (body.back() == '0')
            body.pop_back();
        if (body.back() == '.')
            body.pop_back();
    }
    if (negative && body != "0")
        body.insert(0, 1, '-');
    return body;
}

int sign(const Rational& value)
{
    return value.sign();
}

Rational dot(std::span<const Rational> lhs, std::span<const Rational> rhs)
{
    if (lhs.size() != rhs.size())
        throw std::invalid_argument("dot: size mismatch");
    Rational sum = 0;
    for (std::size_t i = 0; i < lhs.size(); ++i)
        sum += lhs[i] * rhs[i];
    return sum;
}

Vector matrix_vector(const Matrix& matrix, std::span<const Rational> x)
{
    Vector result;
    result.reserve(matrix.size());
    for (const auto& row : matrix)
        result.push_back(dot(row, x));
    return result;
}

}  // namespace omega
