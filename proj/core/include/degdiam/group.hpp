#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "degdiam/element.hpp"
#include "degdiam/errors.hpp"

namespace degdiam {

/// 2x2 matrix over Z_n, row-major. Rows are the images of the basis vectors,
/// so row vectors multiply on the left: sigma(v) = v * M.
struct Mat2 {
    std::int64_t x = 1, y = 0, z = 0, t = 1;

    friend constexpr bool operator==(const Mat2&, const Mat2&) = default;
};

/// Z_m acting on Z_n through multiplication by the unit a.
/// Elements [x, y], law [x,y][u,v] = [x+u mod m, y*a^u + v mod n].
struct SemidirectCyclicSpec {
    std::int64_t m = 1;
    std::int64_t n = 2;
    std::int64_t a = 1;

    friend constexpr bool operator==(const SemidirectCyclicSpec&,
                                     const SemidirectCyclicSpec&) = default;
};

/// Z_m acting on Z_n x Z_n through the matrix sigma.
/// Elements [c, d, e], law [c,d,e][f,g,h] = [c+f mod m, [d,e]*sigma^f + [g,h] mod n].
struct SemidirectSquareSpec {
    std::int64_t m = 1;
    std::int64_t n = 2;
    Mat2 sigma{};

    friend constexpr bool operator==(const SemidirectSquareSpec&,
                                     const SemidirectSquareSpec&) = default;
};

/// The base group B = m x_a n acting on itself by conjugation. Elements are
/// pairs of base elements flattened to [x1, x2, x3, x4]; order (m*n)^2.
struct DoubledSpec {
    SemidirectCyclicSpec base{};

    friend constexpr bool operator==(const DoubledSpec&, const DoubledSpec&) = default;
};

using GroupSpec = std::variant<SemidirectCyclicSpec, SemidirectSquareSpec, DoubledSpec>;

enum class Family { cyclic, square, doubled };

Family family_of(const GroupSpec& spec);

/// Human-readable name, e.g. "15 x_4 77", "40 x_sigma 3^2", "[5 x_4 11]^2".
std::string describe(const GroupSpec& spec);

/// One defining relation, evaluated on concrete coordinates.
struct RelatorCheck {
    std::string name;
    bool holds;
};

/// A validated group: canonical parameters plus the cached action powers.
/// Immutable and cheap to copy; safe to share across threads.
class Group {
public:
    /// Canonicalizes parameters (entries reduced mod n, a mod n), checks the
    /// family's validity conditions, and precomputes the action power table.
    /// Throws BadParameter (m < 1, n < 2, or sizes beyond 64-bit-safe range),
    /// NotAUnit (gcd(a,n) != 1 or det(sigma) not a unit mod n),
    /// OrderMismatch (order of a or sigma does not divide m).
    static Group validate(GroupSpec spec);

    Family family() const;
    const GroupSpec& spec() const;
    std::int64_t order() const;
    /// Coordinate count of an element: 2, 3 or 4.
    std::size_t arity() const;
    /// True when the action is trivial (a = 1 or sigma = I): the group is
    /// abelian and useless as a record candidate.
    bool abelian() const;

    Element identity() const;
    Element multiply(const Element& g, const Element& h) const;
    Element inverse(const Element& g) const;
    /// g^k by binary exponentiation; k may be negative.
    Element power(const Element& g, std::int64_t k) const;
    /// Smallest k >= 1 with g^k = identity.
    std::int64_t element_order(const Element& g) const;

    /// Mixed-radix encoding, leftmost coordinate most significant.
    /// Bijection between elements and [0, order).
    std::int64_t index(const Element& g) const;
    Element unindex(std::int64_t i) const;

    /// Evaluates the family's defining relations on the coordinate unit
    /// vectors; failures are reported, not thrown.
    std::vector<RelatorCheck> check_presentation() const;

    /// Cached action powers: scalar a^k for k in [0, m) (cyclic, doubled).
    const std::vector<std::int64_t>& scalar_powers() const;
    /// Cached action powers: sigma^k for k in [0, m) (square).
    const std::vector<Mat2>& matrix_powers() const;

    struct Impl;  // opaque; defined with the implementation

private:
    explicit Group(std::shared_ptr<const Impl> impl);
    std::shared_ptr<const Impl> impl_;
};

}  // namespace degdiam
