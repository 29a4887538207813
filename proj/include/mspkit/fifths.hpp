#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "mspkit/rational.hpp"

namespace mspkit {

// A degree in the lattice (1/5)Z, stored as the integer numerator over the
// fixed denominator 5.  All arithmetic is exact integer arithmetic.
struct fifths {
    std::int64_t raw = 0;  // value = raw / 5

    constexpr fifths() = default;
    constexpr explicit fifths(std::int64_t raw_) : raw(raw_) {}

    static constexpr fifths from_integer(std::int64_t n) { return fifths{n * 5}; }

    constexpr bool is_integer() const { return raw % 5 == 0; }
    // Precondition: is_integer().
    std::int64_t to_integer() const {
        if (!is_integer()) throw std::domain_error("fifths: not an integer: " + str());
        return raw / 5;
    }

    constexpr bool is_zero() const { return raw == 0; }

    friend constexpr fifths operator+(fifths a, fifths b) { return fifths{a.raw + b.raw}; }
    friend constexpr fifths operator-(fifths a, fifths b) { return fifths{a.raw - b.raw}; }
    constexpr fifths operator-() const { return fifths{-raw}; }
    friend constexpr fifths operator*(std::int64_t k, fifths a) { return fifths{k * a.raw}; }
    fifths& operator+=(fifths o) { raw += o.raw; return *this; }
    fifths& operator-=(fifths o) { raw -= o.raw; return *this; }

    friend constexpr auto operator<=>(fifths, fifths) = default;

    rational to_rational() const { return rational(raw, 5); }

    std::string str() const {
        if (is_integer()) return std::to_string(raw / 5);
        return std::to_string(raw) + "/5";
    }
};

// Parses "n" or "p/q" with q | 5-compatible denominators (1 or 5).
fifths parse_fifths(const std::string& s);

}  // namespace mspkit
