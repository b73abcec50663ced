#pragma once

// Exact dyadic rationals k / 2^e.

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace trickle {

class Dyadic {
public:
    constexpr Dyadic() = default;
    constexpr Dyadic(std::int64_t n) : num_(n), exp_(0) {}

    // num / 2^exp, reduced to canonical form.
    static Dyadic make(std::int64_t num, int exp) {
        Dyadic d;
        d.assign(num, exp);
        return d;
    }

    std::int64_t numerator() const { return num_; }
    int exponent() const { return exp_; }
    bool is_integer() const { return exp_ == 0; }

    // Largest integer <= *this.
    std::int64_t floor() const {
        if (exp_ == 0) return num_;
        return num_ >> exp_;  // arithmetic shift rounds toward -inf
    }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
        int e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
        __int128 s = widen(a, e) + widen(b, e);
        return from_wide(s, e);
    }
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b) {
        int e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
        __int128 s = widen(a, e) - widen(b, e);
        return from_wide(s, e);
    }
    Dyadic operator-() const { return Dyadic(0) - *this; }

    // Multiplication by 2^k (k may be negative).
    Dyadic scaled(int k) const {
        if (num_ == 0) return Dyadic(0);
        if (k <= 0) return make_checked(num_, exp_ - k);
        int drop = k < exp_ ? k : exp_;
        __int128 n = static_cast<__int128>(num_);
        for (int i = drop; i < k; ++i) {
            n *= 2;
            if (n > INT64_MAX || n < INT64_MIN) throw std::overflow_error("dyadic overflow");
        }
        return from_wide(n, exp_ - drop);
    }
    Dyadic half() const { return scaled(-1); }

    // The integer k with *this == other * 2^k; throws if the ratio is not a power of two.
    int log2_ratio(const Dyadic& other) const {
        if (num_ == 0 || other.num_ == 0) throw std::domain_error("log2_ratio of zero");
        std::int64_t a = num_, b = other.num_;
        int k = other.exp_ - exp_;
        while (a % 2 == 0) { a /= 2; ++k; }
        while (b % 2 == 0) { b /= 2; --k; }
        if (a != b) throw std::domain_error("ratio is not a power of two");
        return k;
    }

    friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
        int e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
        __int128 x = widen(a, e), y = widen(b, e);
        if (x < y) return std::strong_ordering::less;
        if (x > y) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    friend bool operator==(const Dyadic& a, const Dyadic& b) = default;

    std::string str() const {
        if (exp_ == 0) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(std::int64_t{1} << exp_);
    }

    // Accepts "k" or "k/d" with d a power of two.
    static Dyadic parse(std::string_view s) {
        auto slash = s.find('/');
        std::int64_t num = parse_int(s.substr(0, slash), s);
        if (slash == std::string_view::npos) return Dyadic(num);
        std::int64_t den = parse_int(s.substr(slash + 1), s);
        if (den <= 0 || (den & (den - 1)) != 0)
            throw std::invalid_argument("denominator is not a power of two: " + std::string(s));
        int e = 0;
        while ((std::int64_t{1} << e) != den) ++e;
        return make_checked(num, e);
    }

private:
    std::int64_t num_ = 0;
    int exp_ = 0;

    static constexpr int max_exp = 62;

    static std::int64_t parse_int(std::string_view t, std::string_view whole) {
        if (t.empty()) throw std::invalid_argument("bad dyadic: " + std::string(whole));
        std::size_t i = 0;
        bool neg = false;
        if (t[0] == '-' || t[0] == '+') { neg = t[0] == '-'; i = 1; }
        if (i == t.size()) throw std::invalid_argument("bad dyadic: " + std::string(whole));
        __int128 v = 0;
        for (; i < t.size(); ++i) {
            if (t[i] < '0' || t[i] > '9') throw std::invalid_argument("bad dyadic: " + std::string(whole));
            v = v * 10 + (t[i] - '0');
            if (v > INT64_MAX) throw std::overflow_error("dyadic overflow: " + std::string(whole));
        }
        return static_cast<std::int64_t>(neg ? -v : v);
    }

    static __int128 widen(const Dyadic& d, int e) {
        __int128 n = d.num_;
        return n << (e - d.exp_);
    }

    static Dyadic from_wide(__int128 n, int e) {
        while (e > 0 && n % 2 == 0) { n /= 2; --e; }
        if (n > INT64_MAX || n < INT64_MIN) throw std::overflow_error("dyadic overflow");
        return make_checked(static_cast<std::int64_t>(n), e);
    }

    static Dyadic make_checked(std::int64_t num, int exp) {
        Dyadic d;
        d.assign(num, exp);
        return d;
    }

    void assign(std::int64_t num, int exp) {
        while (exp < 0) {
            if (__builtin_mul_overflow(num, 2, &num)) throw std::overflow_error("dyadic overflow");
            ++exp;
        }
        while (exp > 0 && num % 2 == 0) { num /= 2; --exp; }
        if (num == 0) exp = 0;
        if (exp > max_exp) throw std::overflow_error("dyadic exponent overflow");
        num_ = num;
        exp_ = exp;
    }
};

}  // namespace trickle

template <>
struct std::hash<trickle::Dyadic> {
    std::size_t operator()(const trickle::Dyadic& d) const noexcept {
        return std::hash<std::int64_t>{}(d.numerator()) * 31u + static_cast<std::size_t>(d.exponent());
    }
};
