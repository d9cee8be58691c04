#include "graphlim/rational.hpp"

#include <ostream>
#include <cctype>

namespace graphlim {
namespace detail {

std::string i128_to_string(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    // careful with INT128_MIN: the values we produce never reach it,
    // but keep the conversion total anyway
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                              : static_cast<unsigned __int128>(v);
    std::string s;
    while (u > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    return std::string(s.rbegin(), s.rend());
}

int128 i128_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("bad integer literal: " + s);
    int128 v = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("bad integer literal: " + s);
        v = checked_mul(v, 10);
        v = checked_add(v, s[i] - '0');
    }
    return neg ? -v : v;
}

} // namespace detail

Rat Rat::from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rat(detail::i128_from_string(s), int128(1));
    return Rat(detail::i128_from_string(s.substr(0, slash)),
               detail::i128_from_string(s.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

} // namespace graphlim
