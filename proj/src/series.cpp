/*
 * Copyright 2026 The tvx Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "tvx/series.hpp"

#include <bit>

namespace tvx {

bool Multidegree::is_zero() const {
    if (nil != 0) return false;
    for (auto e : exps)
        if (e != 0) return false;
    return true;
}

int Multidegree::central_total() const {
    int s = 0;
    for (auto e : exps) s += e;
    return s;
}

int Multidegree::total() const { return central_total() + std::popcount(nil); }

bool Multidegree::divisible_by(int j) const {
    if (nil != 0) return j == 1;
    for (auto e : exps)
        if (e % j != 0) return false;
    return true;
}

Multidegree Multidegree::divided_by(int j) const {
    Multidegree d = *this;
    for (auto& e : d.exps) e = static_cast<std::uint8_t>(e / j);
    return d;
}

SeriesContext::SeriesContext(std::vector<std::string> central_names, std::vector<int> orders,
                             std::vector<NilpotentLabel> nilpotent, int total_order)
    : names_(std::move(central_names)),
      orders_(std::move(orders)),
      nil_(std::move(nilpotent)),
      total_order_(total_order) {
    if (names_.size() != orders_.size()) throw std::invalid_argument("names/orders size mismatch");
    if (names_.size() > static_cast<size_t>(kMaxCentral))
        throw std::invalid_argument("too many central variables");
    if (nil_.size() > static_cast<size_t>(kMaxNilpotent))
        throw std::invalid_argument("too many nilpotent variables");
    for (int k : orders_)
        if (k < 1 || k > 200) throw std::invalid_argument("truncation order must be in [1, 200]");
    for (size_t i = 0; i < nil_.size(); ++i)
        for (size_t j = 0; j < i; ++j)
            if (nil_[i] == nil_[j]) throw std::invalid_argument("duplicate nilpotent label");
}

ContextPtr SeriesContext::make(std::vector<std::string> central_names, std::vector<int> orders,
                               std::vector<NilpotentLabel> nilpotent, int total_order) {
    return std::make_shared<const SeriesContext>(std::move(central_names), std::move(orders),
                                                 std::move(nilpotent), total_order);
}

ContextPtr SeriesContext::uniform(int n, int k) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("t" + std::to_string(i));
    return make(std::move(names), std::vector<int>(static_cast<size_t>(n), k));
}

int SeriesContext::nilpotent_index(int line, int level) const {
    for (size_t b = 0; b < nil_.size(); ++b)
        if (nil_[b].line == line && nil_[b].level == level) return static_cast<int>(b);
    return -1;
}

bool SeriesContext::admits(const Multidegree& d) const {
    for (size_t i = 0; i < static_cast<size_t>(kMaxCentral); ++i) {
        int limit = i < orders_.size() ? orders_[i] : 0;
        if (d.exps[i] > limit) return false;
    }
    if (nil_.size() < 64 && (d.nil >> nil_.size()) != 0) return false;
    if (total_order_ >= 0 && d.total() > total_order_) return false;
    return true;
}

std::optional<Multidegree> SeriesContext::multiply(const Multidegree& x, const Multidegree& y) const {
    if ((x.nil & y.nil) != 0) return std::nullopt;
    Multidegree d;
    d.nil = x.nil | y.nil;
    int total = 0;
    for (size_t i = 0; i < orders_.size(); ++i) {
        int e = x.exps[i] + y.exps[i];
        if (e > orders_[i]) return std::nullopt;
        d.exps[i] = static_cast<std::uint8_t>(e);
        total += e;
    }
    if (total_order_ >= 0 && total + std::popcount(d.nil) > total_order_) return std::nullopt;
    return d;
}

Multidegree SeriesContext::central(std::vector<int> exps) const {
    if (exps.size() > orders_.size()) throw std::invalid_argument("too many exponents");
    Multidegree d;
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] < 0 || exps[i] > 255) throw std::invalid_argument("exponent out of range");
        d.exps[i] = static_cast<std::uint8_t>(exps[i]);
    }
    return d;
}

Multidegree SeriesContext::nilpotent_monomial(std::uint64_t mask) const {
    Multidegree d;
    d.nil = mask;
    return d;
}

std::string SeriesContext::format(const Multidegree& d) const {
    std::string out;
    auto append = [&](const std::string& s) {
        if (!out.empty()) out += "*";
        out += s;
    };
    for (size_t i = 0; i < names_.size(); ++i) {
        if (d.exps[i] == 0) continue;
        append(d.exps[i] == 1 ? names_[i] : names_[i] + "^" + std::to_string(d.exps[i]));
    }
    for (size_t b = 0; b < nil_.size(); ++b)
        if ((d.nil >> b) & 1U)
            append("u" + std::to_string(nil_[b].line + 1) + "_" + std::to_string(nil_[b].level));
    return out.empty() ? "1" : out;
}

ContextPtr SeriesContext::with_total_order(int total) const {
    return make(names_, orders_, nil_, total);
}

std::vector<Rat> binomial_series(const Rat& exponent, int order) {
    if (order < 0) throw std::invalid_argument("binomial_series: negative order");
    std::vector<Rat> out;
    out.reserve(static_cast<size_t>(order) + 1);
    Rat c = 1;
    for (int n = 0; n <= order; ++n) {
        out.push_back(c);
        c *= exponent - n;
        c /= n + 1;
    }
    return out;
}

}  // namespace tvx
