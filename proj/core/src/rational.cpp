#include "segcover/rational.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace segcover {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool is_integer_text(const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty number");
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }
    const std::size_t slash = text.find('/', pos);
    const std::size_t dot = text.find('.', pos);
    Rational value;
    if (slash != std::string::npos) {
        if (dot != std::string::npos) throw std::invalid_argument("mixed decimal and fraction: " + text);
        if (!is_integer_text(text, pos, slash) || !is_integer_text(text, slash + 1, text.size()))
            throw std::invalid_argument("malformed fraction: " + text);
        mpz_class num(text.substr(pos, slash - pos));
        mpz_class den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator: " + text);
        value = Rational(num, den);
        value.canonicalize();
    } else if (dot != std::string::npos) {
        const std::string int_part = text.substr(pos, dot - pos);
        const std::string frac_part = text.substr(dot + 1);
        if (int_part.empty() && frac_part.empty())
            throw std::invalid_argument("malformed decimal: " + text);
        if (!int_part.empty() && !is_integer_text(int_part, 0, int_part.size()))
            throw std::invalid_argument("malformed decimal: " + text);
        if (!frac_part.empty() && !is_integer_text(frac_part, 0, frac_part.size()))
            throw std::invalid_argument("malformed decimal: " + text);
        mpz_class scale = 1;
        for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
        mpz_class num = int_part.empty() ? mpz_class(0) : mpz_class(int_part);
        num *= scale;
        if (!frac_part.empty()) num += mpz_class(frac_part);
        value = Rational(num, scale);
        value.canonicalize();
    } else {
        if (!is_integer_text(text, pos, text.size()))
            throw std::invalid_argument("malformed integer: " + text);
        value = Rational(mpz_class(text.substr(pos)));
    }
    if (negative) value = -value;
    return value;
}

std::string format_rational(const Rational& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

namespace {

std::int64_t clamp_mpz(const mpz_class& z) {
    if (!z.fits_slong_p()) {
        return z < 0 ? std::numeric_limits<std::int64_t>::min()
                     : std::numeric_limits<std::int64_t>::max();
    }
    return static_cast<std::int64_t>(z.get_si());
}

}  // namespace

std::int64_t floor_to_int(const Rational& v) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
    return clamp_mpz(q);
}

std::int64_t ceil_to_int(const Rational& v) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
    return clamp_mpz(q);
}

}  // namespace segcover
