/*
 * Copyright 2026 The tvx Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "tvx/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace tvx {

QLaurent::QLaurent(const Rat& c) {
    if (!tvx::is_zero(c)) terms_.emplace_back(0, c);
}

QLaurent::QLaurent(long c) : QLaurent(Rat(c)) {}

QLaurent QLaurent::monomial(int e, const Rat& c) {
    QLaurent p;
    if (!tvx::is_zero(c)) p.terms_.emplace_back(e, c);
    return p;
}

QLaurent QLaurent::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    QLaurent p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first)
            p.terms_.back().second += t.second;
        else
            p.terms_.push_back(std::move(t));
        if (tvx::is_zero(p.terms_.back().second)) p.terms_.pop_back();
    }
    return p;
}

int QLaurent::min_exponent() const {
    if (terms_.empty()) throw std::logic_error("min_exponent of zero polynomial");
    return terms_.front().first;
}

int QLaurent::max_exponent() const {
    if (terms_.empty()) throw std::logic_error("max_exponent of zero polynomial");
    return terms_.back().first;
}

Rat QLaurent::coefficient(int e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, int x) { return t.first < x; });
    if (it != terms_.end() && it->first == e) return it->second;
    return 0;
}

namespace {
std::vector<QLaurent::Term> merge(const std::vector<QLaurent::Term>& a,
                                  const std::vector<QLaurent::Term>& b, bool subtract) {
    std::vector<QLaurent::Term> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, subtract ? Rat(-b[j].second) : b[j].second);
            ++j;
        } else {
            Rat c = subtract ? Rat(a[i].second - b[j].second) : Rat(a[i].second + b[j].second);
            if (!is_zero(c)) out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}
}  // namespace

QLaurent& QLaurent::operator+=(const QLaurent& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge(terms_, o.terms_, false);
    return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge(terms_, o.terms_, true);
    return *this;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    if (ta.size() == 1 && tb.size() == 1)
        return QLaurent::monomial(ta[0].first + tb[0].first, ta[0].second * tb[0].second);
    int lo = ta.front().first + tb.front().first;
    int hi = ta.back().first + tb.back().first;
    std::vector<Rat> buf(static_cast<size_t>(hi - lo + 1));
    for (const auto& [ea, ca] : ta)
        for (const auto& [eb, cb] : tb) buf[static_cast<size_t>(ea + eb - lo)] += ca * cb;
    std::vector<QLaurent::Term> out;
    for (size_t i = 0; i < buf.size(); ++i)
        if (!is_zero(buf[i])) out.emplace_back(static_cast<int>(i) + lo, std::move(buf[i]));
    QLaurent r;
    r = QLaurent::from_terms(std::move(out));
    return r;
}

QLaurent& QLaurent::operator*=(const QLaurent& o) {
    *this = *this * o;
    return *this;
}

QLaurent& QLaurent::operator*=(const Rat& c) {
    if (tvx::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

QLaurent& QLaurent::operator/=(const Rat& c) {
    if (tvx::is_zero(c)) throw std::domain_error("division by zero");
    for (auto& t : terms_) t.second /= c;
    return *this;
}

QLaurent QLaurent::operator-() const {
    QLaurent r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

QLaurent QLaurent::shifted(int e) const {
    QLaurent r = *this;
    for (auto& t : r.terms_) t.first += e;
    return r;
}

QLaurent QLaurent::bar() const { return substitute_power(-1); }

QLaurent QLaurent::substitute_power(int j) const {
    if (j == 0) return QLaurent(eval_at_one());
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.emplace_back(t.first * j, t.second);
    return from_terms(std::move(out));
}

QLaurent QLaurent::negate_variable() const {
    QLaurent r = *this;
    for (auto& t : r.terms_)
        if (t.first % 2 != 0) t.second = -t.second;
    return r;
}

Rat QLaurent::eval_at_one() const {
    Rat s = 0;
    for (const auto& t : terms_) s += t.second;
    return s;
}

namespace {
std::string monomial_text(int e) {
    if (e == 0) return "1";
    if (e == 1) return "v";
    return "v^" + std::to_string(e);
}
}  // namespace

std::string QLaurent::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat mag = abs(c);
        bool neg = sgn(c) < 0;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        if (e == 0)
            out += tvx::to_string(mag);
        else if (mag == 1)
            out += monomial_text(e);
        else
            out += tvx::to_string(mag) + "*" + monomial_text(e);
    }
    return out;
}

QLaurent QLaurent::parse(std::string_view s) {
    std::string t;
    for (char ch : s)
        if (ch != ' ' && ch != '\t') t += ch;
    if (t.empty()) throw std::invalid_argument("empty Laurent polynomial");
    std::vector<std::string> pieces;
    size_t start = 0;
    for (size_t i = 1; i < t.size(); ++i) {
        if ((t[i] == '+' || t[i] == '-') && t[i - 1] != '^') {
            pieces.push_back(t.substr(start, i - start));
            start = i;
        }
    }
    pieces.push_back(t.substr(start));
    std::vector<Term> terms;
    for (std::string p : pieces) {
        bool neg = false;
        if (!p.empty() && (p[0] == '+' || p[0] == '-')) {
            neg = p[0] == '-';
            p = p.substr(1);
        }
        if (p.empty()) throw std::invalid_argument("bad Laurent term in: " + std::string(s));
        Rat c = 1;
        int e = 0;
        auto vpos = p.find('v');
        if (vpos == std::string::npos) {
            c = parse_rat(p);
        } else {
            std::string coef = p.substr(0, vpos);
            std::string mono = p.substr(vpos);
            if (!coef.empty()) {
                if (coef.back() != '*') throw std::invalid_argument("bad Laurent term: " + p);
                coef.pop_back();
                c = parse_rat(coef);
            }
            if (mono == "v") {
                e = 1;
            } else if (mono.rfind("v^", 0) == 0) {
                std::string ex = mono.substr(2);
                size_t used = 0;
                try {
                    e = std::stoi(ex, &used);
                } catch (const std::exception&) {
                    throw std::invalid_argument("bad exponent: " + p);
                }
                if (used != ex.size()) throw std::invalid_argument("bad exponent: " + p);
            } else {
                throw std::invalid_argument("bad Laurent term: " + p);
            }
        }
        if (neg) c = -c;
        terms.emplace_back(e, c);
    }
    return from_terms(std::move(terms));
}

QLaurent q_number(int m) {
    if (m == 0) return {};
    int a = m > 0 ? m : -m;
    std::vector<QLaurent::Term> out;
    for (int e = 1 - a; e <= a - 1; e += 2) out.emplace_back(e, Rat(m > 0 ? 1 : -1));
    return QLaurent::from_terms(std::move(out));
}

QLaurent q_number_at(int m, int j) { return q_number(m).substitute_power(j); }

bool is_bar_symmetric(const QLaurent& p) { return p.bar() == p; }

// ---- dense polynomial helpers ---------------------------------------------

namespace {

using Dense = std::vector<Rat>;  // coefficient of v^i at index i

Dense to_dense(const QLaurent& p, int shift) {
    Dense d(static_cast<size_t>(p.max_exponent() - shift + 1));
    for (const auto& [e, c] : p.terms()) d[static_cast<size_t>(e - shift)] = c;
    return d;
}

QLaurent from_dense(const Dense& d, int shift) {
    std::vector<QLaurent::Term> out;
    for (size_t i = 0; i < d.size(); ++i)
        if (!is_zero(d[i])) out.emplace_back(static_cast<int>(i) + shift, d[i]);
    return QLaurent::from_terms(std::move(out));
}

void trim(Dense& d) {
    while (!d.empty() && is_zero(d.back())) d.pop_back();
}

// q, r with a = q*b + r; b nonzero and trimmed.
void divmod(Dense a, const Dense& b, Dense& q, Dense& r) {
    trim(a);
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
    const Rat& lead = b.back();
    while (a.size() >= b.size()) {
        size_t shift = a.size() - b.size();
        Rat f = a.back() / lead;
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    r = std::move(a);
}

}  // namespace

std::optional<QLaurent> divide_exact(const QLaurent& num, const QLaurent& den) {
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    if (num.is_zero()) return QLaurent{};
    int ns = num.min_exponent();
    int ds = den.min_exponent();
    if (den.terms().size() == 1) {
        QLaurent r = num.shifted(-ds);
        r /= den.terms()[0].second;
        return r;
    }
    Dense q, r;
    divmod(to_dense(num, ns), to_dense(den, ds), q, r);
    if (!r.empty()) return std::nullopt;
    return from_dense(q, ns - ds);
}

QLaurent poly_gcd(const QLaurent& a, const QLaurent& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero()) return poly_gcd(b, b);
    if (b.is_zero()) return poly_gcd(a, a);
    Dense x = to_dense(a, a.min_exponent());
    Dense y = to_dense(b, b.min_exponent());
    trim(x);
    trim(y);
    while (!y.empty()) {
        Dense q, r;
        divmod(x, y, q, r);
        x = std::move(y);
        y = std::move(r);
        if (!y.empty()) {
            Rat l = y.back();
            for (auto& c : y) c /= l;
        }
    }
    Rat l = x.back();
    for (auto& c : x) c /= l;
    return from_dense(x, 0);
}

}  // namespace tvx
