/*
 * Copyright 2026 The tvx Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "tvx/rat.hpp"

#include <cctype>
#include <stdexcept>

namespace tvx {

std::string to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {
bool valid_int(std::string_view s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}
std::string strip_plus(std::string_view s) {
    return std::string(!s.empty() && s[0] == '+' ? s.substr(1) : s);
}
}  // namespace

Rat parse_rat(std::string_view s) {
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    if (!valid_int(num)) throw std::invalid_argument("bad rational: " + std::string(s));
    Rat r;
    if (slash == std::string_view::npos) {
        r = Rat(mpz_class(strip_plus(num)));
    } else {
        std::string_view den = s.substr(slash + 1);
        if (!valid_int(den) || den[0] == '-' || den[0] == '+')
            throw std::invalid_argument("bad rational: " + std::string(s));
        mpz_class d(std::string{den});
        if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(s));
        r = Rat(mpz_class(strip_plus(num)), d);
    }
    r.canonicalize();
    return r;
}

Rat factorial(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rat(f);
}

Rat binomial(const Rat& top, int n) {
    Rat c = 1;
    for (int i = 0; i < n; ++i) {
        c *= top - i;
        c /= i + 1;
    }
    return c;
}

}  // namespace tvx
