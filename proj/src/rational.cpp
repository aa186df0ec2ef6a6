#include "runlat/rational.hpp"

namespace runlat {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw UsageError("empty rational literal");
    if (text.find_first_of(".eE") != std::string::npos)
        throw UsageError("rational literal required (num or num/den), got '" + text + "'");
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw UsageError("zero denominator in '" + text + "'");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw UsageError("bad rational literal '" + text + "': " + e.what());
    }
}

std::string format_rational(const Rational& q) {
    const Int num = boost::multiprecision::numerator(q);
    const Int den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

double to_double(const Rational& q) {
    return q.convert_to<double>();
}

Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Int result = 1;
    for (unsigned i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;
    }
    return result;
}

}  // namespace runlat
