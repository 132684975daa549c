#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>

namespace degdiam {

/// A group element as a short coordinate tuple. Unused slots stay zero so
/// that default comparison works regardless of tuple width.
struct Element {
    std::array<std::int64_t, 4> c{0, 0, 0, 0};
    std::size_t size = 0;

    constexpr Element() = default;
    constexpr Element(std::int64_t a, std::int64_t b) : c{a, b, 0, 0}, size(2) {}
    constexpr Element(std::int64_t a, std::int64_t b, std::int64_t d)
        : c{a, b, d, 0}, size(3) {}
    constexpr Element(std::int64_t a, std::int64_t b, std::int64_t d, std::int64_t e)
        : c{a, b, d, e}, size(4) {}

    constexpr std::int64_t operator[](std::size_t i) const { return c[i]; }
    constexpr std::int64_t& operator[](std::size_t i) { return c[i]; }

    friend constexpr bool operator==(const Element&, const Element&) = default;
    friend constexpr auto operator<=>(const Element&, const Element&) = default;
};

/// Renders as "[x,y]" etc., matching the bracket notation used in record files.
std::string to_string(const Element& e);

}  // namespace degdiam
