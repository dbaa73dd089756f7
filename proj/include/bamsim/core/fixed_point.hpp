#pragma once

#include <compare>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>

namespace bamsim {

/// Exact decimal quantity stored as integer ticks (1/Scale units).
///
/// All bandwidth and time arithmetic in the library runs on these types so
/// that constraint boundaries compare exactly: 248.8 Mbps is 2488 ticks, not
/// a float that may sit on either side of the cap.
template <std::int64_t Scale, typename Tag>
class FixedPoint {
public:
    constexpr FixedPoint() = default;

    static constexpr FixedPoint from_ticks(std::int64_t ticks) {
        FixedPoint v;
        v.ticks_ = ticks;
        return v;
    }

    /// Rounds to the nearest representable tick.
    static FixedPoint from_double(double value) {
        return from_ticks(static_cast<std::int64_t>(std::llround(value * static_cast<double>(Scale))));
    }

    [[nodiscard]] constexpr std::int64_t ticks() const { return ticks_; }
    [[nodiscard]] constexpr bool is_zero() const { return ticks_ == 0; }
    [[nodiscard]] double to_double() const { return static_cast<double>(ticks_) / static_cast<double>(Scale); }

    constexpr FixedPoint& operator+=(FixedPoint rhs) {
        ticks_ += rhs.ticks_;
        return *this;
    }
    constexpr FixedPoint& operator-=(FixedPoint rhs) {
        ticks_ -= rhs.ticks_;
        return *this;
    }
    friend constexpr FixedPoint operator+(FixedPoint a, FixedPoint b) { return from_ticks(a.ticks_ + b.ticks_); }
    friend constexpr FixedPoint operator-(FixedPoint a, FixedPoint b) { return from_ticks(a.ticks_ - b.ticks_); }
    friend constexpr FixedPoint operator-(FixedPoint a) { return from_ticks(-a.ticks_); }

    friend constexpr auto operator<=>(FixedPoint, FixedPoint) = default;

    /// Fixed-digit decimal text, e.g. "248.8" (Scale 10) or "1.050" (Scale 1000).
    [[nodiscard]] std::string str() const {
        std::int64_t t = ticks_;
        std::string sign;
        if (t < 0) {
            sign = "-";
            t = -t;
        }
        std::string frac = std::to_string(t % Scale);
        frac.insert(0, fractional_digits() - frac.size(), '0');
        return sign + std::to_string(t / Scale) + "." + frac;
    }

    /// Strict parse of "[-]digits[.digits]" with at most `fractional_digits()`
    /// fractional digits. Returns nullopt on any malformed input.
    static std::optional<FixedPoint> parse(std::string_view text) {
        if (text.empty()) return std::nullopt;
        bool negative = false;
        std::size_t pos = 0;
        if (text[0] == '-' || text[0] == '+') {
            negative = text[0] == '-';
            pos = 1;
        }
        std::int64_t whole = 0;
        std::size_t whole_digits = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            whole = whole * 10 + (text[pos] - '0');
            ++pos;
            ++whole_digits;
        }
        if (whole_digits == 0) return std::nullopt;
        std::int64_t frac = 0;
        if (pos < text.size()) {
            if (text[pos] != '.') return std::nullopt;
            ++pos;
            std::size_t frac_digits = 0;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
                frac = frac * 10 + (text[pos] - '0');
                ++pos;
                ++frac_digits;
            }
            if (frac_digits == 0 || frac_digits > fractional_digits() || pos != text.size()) return std::nullopt;
            for (std::size_t i = frac_digits; i < fractional_digits(); ++i) frac *= 10;
        }
        std::int64_t ticks = whole * Scale + frac;
        return from_ticks(negative ? -ticks : ticks);
    }

    static constexpr std::size_t fractional_digits() {
        std::size_t digits = 0;
        for (std::int64_t s = Scale; s > 1; s /= 10) ++digits;
        return digits;
    }

private:
    std::int64_t ticks_ = 0;
};

/// Bandwidth at 0.1 Mbps resolution.
using Bandwidth = FixedPoint<10, struct BandwidthTag>;

/// Simulation time at 1 ms resolution.
using Seconds = FixedPoint<1000, struct SecondsTag>;

inline Bandwidth mbps(double value) { return Bandwidth::from_double(value); }
inline Seconds seconds(double value) { return Seconds::from_double(value); }

}  // namespace bamsim
