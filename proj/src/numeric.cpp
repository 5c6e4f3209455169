#include "logcy/numeric.hpp"

#include <cctype>
#include <limits>

#include "logcy/errors.hpp"

namespace logcy {

namespace {

bool is_plain_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Int int_from_string(const std::string& s) {
    if (!is_plain_integer(s)) throw BadInputError("not an integer: '" + s + "'");
    Int z;
    if (z.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0)
        throw BadInputError("not an integer: '" + s + "'");
    return z;
}

Scalar scalar_from_string(const std::string& s) {
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
        Int num = int_from_string(s.substr(0, slash));
        Int den = int_from_string(s.substr(slash + 1));
        if (den == 0) throw BadInputError("zero denominator: '" + s + "'");
        Scalar q(num, den);
        q.canonicalize();
        return q;
    }
    const auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string head = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        if (frac.empty()) throw BadInputError("bad decimal: '" + s + "'");
        for (char c : frac)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw BadInputError("bad decimal: '" + s + "'");
        bool negative = !head.empty() && head[0] == '-';
        if (head.empty() || head == "-" || head == "+") head += "0";
        Int whole = int_from_string(head);
        Int numer;
        if (numer.set_str(frac, 10) != 0) throw BadInputError("bad decimal: '" + s + "'");
        Int den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        Scalar q(whole);
        Scalar part(numer, den);
        part.canonicalize();
        q += negative ? Scalar(-part) : part;
        return q;
    }
    return Scalar(int_from_string(s));
}

std::string to_string(const Int& z) { return z.get_str(); }

std::string to_string(const Scalar& q) { return q.get_str(); }

bool fits_int64(const Int& z) {
    static_assert(sizeof(long) == 8, "expects LP64");
    return z.fits_slong_p();
}

long long to_int64(const Int& z) {
    if (!fits_int64(z)) throw BadInputError("integer out of 64-bit range: " + z.get_str());
    return z.get_si();
}

}  // namespace logcy
