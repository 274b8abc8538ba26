#pragma once

#include <cstdint>
#include <compare>
#include <string>

#include "gis/errors.hpp"

namespace gis {

// Exact signed benefit value. Profits and penalties are pre-scaled to
// integers at parse time (one global power-of-ten scale per instance), so
// every comparison a reduction rule makes is sharp. Overflow throws instead
// of wrapping.
class benefit {
public:
    constexpr benefit() = default;
    constexpr explicit benefit(std::int64_t raw) : v_(raw) {}

    constexpr std::int64_t raw() const { return v_; }

    friend benefit operator+(benefit a, benefit b) {
        std::int64_t r;
        if (__builtin_add_overflow(a.v_, b.v_, &r))
            throw overflow_error("benefit addition overflow");
        return benefit(r);
    }
    friend benefit operator-(benefit a, benefit b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r))
            throw overflow_error("benefit subtraction overflow");
        return benefit(r);
    }
    benefit operator-() const {
        if (v_ == INT64_MIN) throw overflow_error("benefit negation overflow");
        return benefit(-v_);
    }
    benefit& operator+=(benefit b) { *this = *this + b; return *this; }
    benefit& operator-=(benefit b) { *this = *this - b; return *this; }

    constexpr auto operator<=>(const benefit&) const = default;

    constexpr bool negative() const { return v_ < 0; }
    constexpr bool positive() const { return v_ > 0; }
    constexpr bool zero() const { return v_ == 0; }

    std::string str() const { return std::to_string(v_); }

private:
    std::int64_t v_ = 0;
};

inline benefit max(benefit a, benefit b) { return a < b ? b : a; }
inline benefit min(benefit a, benefit b) { return b < a ? b : a; }

// max(0, x): the "positive part" used by several reduction conditions.
inline benefit pos_part(benefit x) { return x.positive() ? x : benefit(0); }
// min(0, x)
inline benefit neg_part(benefit x) { return x.negative() ? x : benefit(0); }

}  // namespace gis
