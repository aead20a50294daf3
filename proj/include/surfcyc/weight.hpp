#ifndef SURFCYC_WEIGHT_HPP
#define SURFCYC_WEIGHT_HPP

#include <cstdint>
#include <compare>
#include <limits>
#include <string>

namespace surfcyc {

/// Nonnegative 64-bit edge weight with a distinguished +infinity sentinel.
/// Addition saturates at infinity; comparisons treat infinity as maximal.
class Weight {
public:
    constexpr Weight() : v_(0) {}
    constexpr explicit Weight(std::int64_t v) : v_(v) {}

    static constexpr Weight infinity() {
        return Weight(std::numeric_limits<std::int64_t>::max());
    }
    static constexpr Weight zero() { return Weight(0); }

    constexpr bool is_infinite() const {
        return v_ == std::numeric_limits<std::int64_t>::max();
    }
    constexpr std::int64_t value() const { return v_; }

    constexpr Weight operator+(Weight o) const {
        if (is_infinite() || o.is_infinite()) return infinity();
        return Weight(v_ + o.v_);
    }
    Weight& operator+=(Weight o) { *this = *this + o; return *this; }

    constexpr auto operator<=>(const Weight&) const = default;

    std::string str() const {
        return is_infinite() ? "inf" : std::to_string(v_);
    }

private:
    std::int64_t v_;
};

} // namespace surfcyc

#endif
