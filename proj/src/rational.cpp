#include "hilbert_alloc/rational.hpp"

#include "hilbert_alloc/error.hpp"

#include <cctype>
#include <utility>

namespace hilbert_alloc {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
            return false;
        }
    }
    return true;
}

mpz_class parse_integer(std::string_view s)
{
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) {
        throw Error("malformed rational");
    }
    mpz_class z(std::string(s), 10);
    return negative ? mpz_class(-z) : z;
}

} // namespace

ExactRational::ExactRational(std::int64_t value)
{
    // mpq_class has no int64 constructor on every platform; go through mpz.
    value_ = mpq_class(mpz_class(std::to_string(value), 10));
}

ExactRational::ExactRational(std::int64_t numerator, std::int64_t denominator)
{
    if (denominator == 0) {
        throw Error("zero denominator");
    }
    value_ = mpq_class(mpz_class(std::to_string(numerator), 10), mpz_class(std::to_string(denominator), 10));
    value_.canonicalize();
}

ExactRational::ExactRational(const mpz_class& value) : value_(value) {}

ExactRational::ExactRational(mpq_class value) : value_(std::move(value))
{
    if (value_.get_den() == 0) {
        throw Error("zero denominator");
    }
    value_.canonicalize();
}

ExactRational ExactRational::parse(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())) != 0) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())) != 0) {
        text.remove_suffix(1);
    }
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return ExactRational(parse_integer(text));
    }
    const auto den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
        throw Error("malformed rational");
    }
    mpz_class num = parse_integer(text.substr(0, slash));
    mpz_class den(std::string(den_text), 10);
    if (den == 0) {
        throw Error("zero denominator");
    }
    return ExactRational(mpq_class(num, den));
}

std::string ExactRational::to_string() const
{
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string ExactRational::to_mixed_string() const
{
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    mpz_class whole;
    mpz_class rem;
    mpz_tdiv_qr(whole.get_mpz_t(), rem.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    std::string out;
    if (sgn(value_) < 0) {
        out = "-";
        whole = -whole;
        rem = -rem;
    }
    return out + whole.get_str() + " " + rem.get_str() + "/" + value_.get_den().get_str();
}

ExactRational& ExactRational::operator+=(const ExactRational& o)
{
    value_ += o.value_;
    return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& o)
{
    value_ -= o.value_;
    return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& o)
{
    value_ *= o.value_;
    return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& o)
{
    if (o.is_zero()) {
        throw Error("division by zero");
    }
    value_ /= o.value_;
    return *this;
}

ExactRational ExactRational::operator-() const
{
    return ExactRational(mpq_class(-value_));
}

std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b)
{
    const int c = cmp(a.value_, b.value_);
    if (c < 0) {
        return std::strong_ordering::less;
    }
    if (c > 0) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

} // namespace hilbert_alloc
