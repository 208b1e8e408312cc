#include "rational.hpp"

#include <cctype>
#include <sstream>

namespace pkv {

GaussianRational GaussianRational::make(long num, long den, long inum, long iden) {
    if (den == 0 || iden == 0) throw std::invalid_argument("zero denominator");
    mpq_class re(num, den);
    re.canonicalize();
    mpq_class im(inum, iden);
    im.canonicalize();
    return GaussianRational(re, im);
}

GaussianRational GaussianRational::operator/(const GaussianRational& o) const {
    if (o.is_zero()) throw std::invalid_argument("division by zero");
    mpq_class n = o.norm();
    return GaussianRational((re_ * o.re_ + im_ * o.im_) / n, (im_ * o.re_ - re_ * o.im_) / n);
}

double GaussianRational::to_double() const {
    if (im_ != 0) throw std::invalid_argument("complex value has no double form: " + str());
    return re_.get_d();
}

std::string GaussianRational::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    if (re_ != 0) out << re_.get_str();
    if (im_ != 0) {
        if (im_ > 0 && re_ != 0) out << "+";
        if (im_ < 0) out << "-";
        out << mpq_class(abs(im_)).get_str() << "*i";
    }
    return out.str();
}

namespace {

// One signed rational "[-]a[/b]" starting at pos; advances pos.
mpq_class parse_rational(const std::string& s, size_t& pos) {
    bool negative = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        negative = s[pos] == '-';
        ++pos;
    }
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) throw std::invalid_argument("expected digits in '" + s + "'");
    mpz_class num(s.substr(digits, pos - digits));
    mpz_class den(1);
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        size_t dstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == dstart) throw std::invalid_argument("expected denominator in '" + s + "'");
        den = mpz_class(s.substr(dstart, pos - dstart));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    }
    mpq_class q(negative ? mpz_class(-num) : num, den);
    q.canonicalize();
    return q;
}

}  // namespace

GaussianRational GaussianRational::parse(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    size_t pos = 0;
    mpq_class first = parse_rational(s, pos);
    if (pos == s.size()) return GaussianRational(first);
    if (s[pos] == 'i' && pos + 1 == s.size()) return GaussianRational(mpq_class(0), first);
    if (s[pos] != '+' && s[pos] != '-')
        throw std::invalid_argument("malformed literal '" + raw + "'");
    mpq_class second = parse_rational(s, pos);
    if (pos == s.size() || s[pos] != 'i' || pos + 1 != s.size())
        throw std::invalid_argument("malformed literal '" + raw + "' (expected trailing 'i')");
    return GaussianRational(first, second);
}

GaussianRational operator*(long s, const GaussianRational& q) {
    return GaussianRational(s * q.re(), s * q.im());
}

}  // namespace pkv
