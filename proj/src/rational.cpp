#include "dioph/rational.hpp"

#include <cctype>

namespace dioph {

Rat ratFromString(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Rat r;
        if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
        if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
        r.canonicalize();
        return r;
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        Rat r;
        if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad integer literal: " + s);
        return r;
    }
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t fracLen = s.size() - dot - 1;
    if (fracLen == 0) throw std::invalid_argument("bad decimal literal: " + s);
    for (size_t i = (digits[0] == '-' || digits[0] == '+') ? 1 : 0; i < digits.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(digits[i])))
            throw std::invalid_argument("bad decimal literal: " + s);
    Int num(digits, 10);
    Int den = powInt(Int(10), fracLen);
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string ratToString(const Rat& r) {
    if (isInteger(r)) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string decimalString(const Rat& r, int digits) {
    if (digits < 0) throw std::invalid_argument("negative digit count");
    bool neg = r < 0;
    Rat a = absRat(r);
    Int scale = powInt(Int(10), static_cast<unsigned long>(digits));
    // round half away from zero on |r|
    Int scaled = floorInt(Rat(a * scale) + Rat(1, 2));
    Int ip = scaled / scale;
    Int fp = scaled % scale;
    std::string out = (neg && scaled != 0 ? "-" : "") + ip.get_str();
    if (digits > 0) {
        std::string frac = fp.get_str();
        out += "." + std::string(digits - frac.size(), '0') + frac;
    }
    return out;
}

}  // namespace dioph
