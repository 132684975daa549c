#include "degdiam/group.hpp"

#include <numeric>
#include <sstream>
#include <utility>

namespace degdiam {
namespace {

// n stays below 2^31 so products of two residues fit in int64;
// m bounds the power-table length.
constexpr std::int64_t kMaxN = (std::int64_t{1} << 31) - 1;
constexpr std::int64_t kMaxM = std::int64_t{1} << 22;

std::int64_t mod(std::int64_t v, std::int64_t q) {
    std::int64_t r = v % q;
    return r < 0 ? r + q : r;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t q) {
    return a * b % q;  // a, b in [0, q), q < 2^31
}

Mat2 mat_identity() { return Mat2{1, 0, 0, 1}; }

Mat2 mat_mul(const Mat2& A, const Mat2& B, std::int64_t q) {
    return Mat2{
        (mulmod(A.x, B.x, q) + mulmod(A.y, B.z, q)) % q,
        (mulmod(A.x, B.y, q) + mulmod(A.y, B.t, q)) % q,
        (mulmod(A.z, B.x, q) + mulmod(A.t, B.z, q)) % q,
        (mulmod(A.z, B.y, q) + mulmod(A.t, B.t, q)) % q,
    };
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b, const char* what) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw BadParameter(std::string(what) + " exceeds the 64-bit-safe range");
    return r;
}

}  // namespace

std::string to_string(const Element& e) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < e.size; ++i) {
        if (i) os << ',';
        os << e.c[i];
    }
    os << ']';
    return os.str();
}

Family family_of(const GroupSpec& spec) {
    if (std::holds_alternative<SemidirectCyclicSpec>(spec)) return Family::cyclic;
    if (std::holds_alternative<SemidirectSquareSpec>(spec)) return Family::square;
    return Family::doubled;
}

std::string describe(const GroupSpec& spec) {
    std::ostringstream os;
    switch (family_of(spec)) {
        case Family::cyclic: {
            const auto& s = std::get<SemidirectCyclicSpec>(spec);
            os << s.m << " x_" << s.a << " " << s.n;
            break;
        }
        case Family::square: {
            const auto& s = std::get<SemidirectSquareSpec>(spec);
            os << s.m << " x_sigma " << s.n << "^2";
            break;
        }
        case Family::doubled: {
            const auto& s = std::get<DoubledSpec>(spec).base;
            os << "[" << s.m << " x_" << s.a << " " << s.n << "]^2";
            break;
        }
    }
    return os.str();
}

struct Group::Impl {
    GroupSpec spec;
    Family family = Family::cyclic;
    std::int64_t m = 1;
    std::int64_t n = 2;
    std::int64_t order = 2;
    std::size_t arity = 2;
    bool abelian = true;
    std::vector<std::int64_t> pow_scalar;
    std::vector<Mat2> pow_mat;

    void check_element(const Element& g) const {
        if (g.size != arity)
            throw CoordinateOutOfRange("element " + to_string(g) + " has arity " +
                                       std::to_string(g.size) + ", expected " +
                                       std::to_string(arity));
        for (std::size_t i = 0; i < arity; ++i) {
            const std::int64_t lim = coordinate_modulus(i);
            if (g.c[i] < 0 || g.c[i] >= lim)
                throw CoordinateOutOfRange("coordinate " + std::to_string(i) + " of " +
                                           to_string(g) + " outside [0, " +
                                           std::to_string(lim) + ")");
        }
    }

    std::int64_t coordinate_modulus(std::size_t i) const {
        switch (family) {
            case Family::cyclic: return i == 0 ? m : n;
            case Family::square: return i == 0 ? m : n;
            case Family::doubled: return (i % 2 == 0) ? m : n;
        }
        return n;
    }

    // Base-group helpers for the doubled family ([x,y] pairs in m x_a n).
    std::pair<std::int64_t, std::int64_t> base_mul(std::pair<std::int64_t, std::int64_t> g,
                                                   std::pair<std::int64_t, std::int64_t> h) const {
        return {(g.first + h.first) % m, (g.second * pow_scalar[h.first] + h.second) % n};
    }
    std::pair<std::int64_t, std::int64_t> base_inv(std::pair<std::int64_t, std::int64_t> g) const {
        const std::int64_t f = (m - g.first) % m;
        return {f, mod(-(g.second * pow_scalar[f] % n), n)};
    }
};

Group::Group(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

namespace {

// Shared by the cyclic and doubled validators: canonicalizes a, builds the
// scalar power table, and enforces the unit/order conditions.
void validate_base(SemidirectCyclicSpec& s, Group::Impl& impl) {
    if (s.m < 1) throw BadParameter("m must be >= 1, got " + std::to_string(s.m));
    if (s.n < 2) throw BadParameter("n must be >= 2, got " + std::to_string(s.n));
    if (s.n > kMaxN) throw BadParameter("n = " + std::to_string(s.n) + " exceeds " +
                                        std::to_string(kMaxN));
    if (s.m > kMaxM) throw BadParameter("m = " + std::to_string(s.m) + " exceeds " +
                                        std::to_string(kMaxM));
    s.a = mod(s.a, s.n);
    if (std::gcd(s.a, s.n) != 1)
        throw NotAUnit("a = " + std::to_string(s.a) + " is not a unit mod " +
                       std::to_string(s.n) + " (gcd " +
                       std::to_string(std::gcd(s.a, s.n)) + ")");
    impl.m = s.m;
    impl.n = s.n;
    impl.pow_scalar.resize(static_cast<std::size_t>(s.m));
    impl.pow_scalar[0] = 1;
    for (std::int64_t k = 1; k < s.m; ++k)
        impl.pow_scalar[static_cast<std::size_t>(k)] =
            mulmod(impl.pow_scalar[static_cast<std::size_t>(k - 1)], s.a, s.n);
    if (mulmod(impl.pow_scalar.back(), s.a, s.n) != 1)
        throw OrderMismatch("multiplicative order of a = " + std::to_string(s.a) +
                            " mod " + std::to_string(s.n) + " does not divide m = " +
                            std::to_string(s.m));
    impl.abelian = (s.a == 1);
}

}  // namespace

Group Group::validate(GroupSpec spec) {
    auto impl = std::make_shared<Impl>();
    if (auto* cyc = std::get_if<SemidirectCyclicSpec>(&spec)) {
        validate_base(*cyc, *impl);
        impl->family = Family::cyclic;
        impl->arity = 2;
        impl->order = checked_mul(cyc->m, cyc->n, "group order m*n");
    } else if (auto* sq = std::get_if<SemidirectSquareSpec>(&spec)) {
        if (sq->m < 1) throw BadParameter("m must be >= 1, got " + std::to_string(sq->m));
        if (sq->n < 2) throw BadParameter("n must be >= 2, got " + std::to_string(sq->n));
        if (sq->n > kMaxN) throw BadParameter("n = " + std::to_string(sq->n) +
                                              " exceeds " + std::to_string(kMaxN));
        if (sq->m > kMaxM) throw BadParameter("m = " + std::to_string(sq->m) +
                                              " exceeds " + std::to_string(kMaxM));
        Mat2& sg = sq->sigma;
        sg = Mat2{mod(sg.x, sq->n), mod(sg.y, sq->n), mod(sg.z, sq->n), mod(sg.t, sq->n)};
        const std::int64_t det = mod(sg.x * sg.t - sg.y * sg.z, sq->n);
        if (std::gcd(det, sq->n) != 1)
            throw NotAUnit("det(sigma) = " + std::to_string(det) + " is not a unit mod " +
                           std::to_string(sq->n));
        impl->m = sq->m;
        impl->n = sq->n;
        impl->pow_mat.resize(static_cast<std::size_t>(sq->m));
        impl->pow_mat[0] = mat_identity();
        for (std::int64_t k = 1; k < sq->m; ++k)
            impl->pow_mat[static_cast<std::size_t>(k)] =
                mat_mul(impl->pow_mat[static_cast<std::size_t>(k - 1)], sg, sq->n);
        if (!(mat_mul(impl->pow_mat.back(), sg, sq->n) == mat_identity()))
            throw OrderMismatch("order of sigma mod " + std::to_string(sq->n) +
                                " does not divide m = " + std::to_string(sq->m));
        impl->family = Family::square;
        impl->arity = 3;
        impl->order = checked_mul(checked_mul(sq->n, sq->n, "n^2"), sq->m, "group order m*n^2");
        impl->abelian = (sg == mat_identity());
    } else {
        auto& dbl = std::get<DoubledSpec>(spec);
        validate_base(dbl.base, *impl);
        impl->family = Family::doubled;
        impl->arity = 4;
        const std::int64_t mn = checked_mul(dbl.base.m, dbl.base.n, "base order m*n");
        impl->order = checked_mul(mn, mn, "group order (m*n)^2");
    }
    impl->spec = spec;
    return Group(std::move(impl));
}

Family Group::family() const { return impl_->family; }
const GroupSpec& Group::spec() const { return impl_->spec; }
std::int64_t Group::order() const { return impl_->order; }
std::size_t Group::arity() const { return impl_->arity; }
bool Group::abelian() const { return impl_->abelian; }

Element Group::identity() const {
    Element e;
    e.size = impl_->arity;
    return e;
}

Element Group::multiply(const Element& g, const Element& h) const {
    const Impl& im = *impl_;
    im.check_element(g);
    im.check_element(h);
    const std::int64_t m = im.m, n = im.n;
    switch (im.family) {
        case Family::cyclic: {
            const auto u = static_cast<std::size_t>(h[0]);
            return Element{(g[0] + h[0]) % m, (g[1] * im.pow_scalar[u] + h[1]) % n};
        }
        case Family::square: {
            const Mat2& M = im.pow_mat[static_cast<std::size_t>(h[0])];
            const std::int64_t d = (mulmod(g[1], M.x, n) + mulmod(g[2], M.z, n) + h[1]) % n;
            const std::int64_t e = (mulmod(g[1], M.y, n) + mulmod(g[2], M.t, n) + h[2]) % n;
            return Element{(g[0] + h[0]) % m, d, e};
        }
        case Family::doubled: {
            const auto& p = im.pow_scalar;
            const std::int64_t y1 = h[0], y3 = h[2];
            const std::int64_t c1 = (g[0] + y1) % m;
            const std::int64_t c2 = (g[1] * p[static_cast<std::size_t>(y1)] + h[1]) % n;
            const std::int64_t c3 = (g[2] + y3) % m;
            const std::int64_t c4 =
                mod(mulmod(g[3], p[static_cast<std::size_t>((y1 + y3) % m)], n) +
                        mulmod(h[1], p[static_cast<std::size_t>(y3)], n) -
                        mulmod(h[1], p[static_cast<std::size_t>((g[2] + y3) % m)], n) + h[3],
                    n);
            return Element{c1, c2, c3, c4};
        }
    }
    return identity();
}

Element Group::inverse(const Element& g) const {
    const Impl& im = *impl_;
    im.check_element(g);
    const std::int64_t m = im.m, n = im.n;
    switch (im.family) {
        case Family::cyclic: {
            const std::int64_t f = (m - g[0]) % m;
            return Element{f, mod(-(g[1] * im.pow_scalar[static_cast<std::size_t>(f)] % n), n)};
        }
        case Family::square: {
            const std::int64_t f = (m - g[0]) % m;
            const Mat2& M = im.pow_mat[static_cast<std::size_t>(f)];
            const std::int64_t d = mod(-((mulmod(g[1], M.x, n) + mulmod(g[2], M.z, n)) % n), n);
            const std::int64_t e = mod(-((mulmod(g[1], M.y, n) + mulmod(g[2], M.t, n)) % n), n);
            return Element{f, d, e};
        }
        case Family::doubled: {
            // (P, Q)^-1 = (P^-1, P Q^-1 P^-1) in the base group.
            const std::pair<std::int64_t, std::int64_t> P{g[0], g[1]}, Q{g[2], g[3]};
            const auto Pi = im.base_inv(P);
            const auto r = im.base_mul(im.base_mul(P, im.base_inv(Q)), Pi);
            return Element{Pi.first, Pi.second, r.first, r.second};
        }
    }
    return identity();
}

Element Group::power(const Element& g, std::int64_t k) const {
    impl_->check_element(g);
    Element base = g;
    std::uint64_t e = 0;
    if (k < 0) {
        base = inverse(g);
        e = static_cast<std::uint64_t>(-(k + 1)) + 1;
    } else {
        e = static_cast<std::uint64_t>(k);
    }
    Element acc = identity();
    while (e != 0) {
        if (e & 1) acc = multiply(acc, base);
        base = multiply(base, base);
        e >>= 1;
    }
    return acc;
}

std::int64_t Group::element_order(const Element& g) const {
    impl_->check_element(g);
    const Element id = identity();
    Element h = g;
    std::int64_t k = 1;
    while (!(h == id)) {
        h = multiply(h, g);
        ++k;
        if (k > impl_->order)
            throw Error("element_order exceeded |G|; broken multiplication law");
    }
    return k;
}

std::int64_t Group::index(const Element& g) const {
    const Impl& im = *impl_;
    im.check_element(g);
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < im.arity; ++i) idx = idx * im.coordinate_modulus(i) + g[i];
    return idx;
}

Element Group::unindex(std::int64_t i) const {
    const Impl& im = *impl_;
    if (i < 0 || i >= im.order)
        throw IndexOutOfRange("index " + std::to_string(i) + " outside [0, " +
                              std::to_string(im.order) + ")");
    Element g;
    g.size = im.arity;
    for (std::size_t k = im.arity; k-- > 0;) {
        const std::int64_t q = im.coordinate_modulus(k);
        g[k] = i % q;
        i /= q;
    }
    return g;
}

std::vector<RelatorCheck> Group::check_presentation() const {
    const Impl& im = *impl_;
    const std::int64_t m = im.m, n = im.n;
    const Element id = identity();
    std::vector<RelatorCheck> out;
    auto conj = [&](const Element& g, const Element& by) {
        return multiply(multiply(inverse(by), g), by);
    };
    auto expect = [&](std::string name, const Element& lhs, const Element& rhs) {
        out.push_back({std::move(name), lhs == rhs});
    };
    switch (im.family) {
        case Family::cyclic: {
            const auto& s = std::get<SemidirectCyclicSpec>(im.spec);
            const Element x{1 % m, 0}, y{0, 1};
            expect("x^m = 1", power(x, m), id);
            expect("y^n = 1", power(y, n), id);
            expect("x^-1 y x = y^a", conj(y, x), power(y, s.a));
            break;
        }
        case Family::square: {
            const auto& s = std::get<SemidirectSquareSpec>(im.spec);
            const Element a{1 % m, 0, 0}, b{0, 1, 0}, c{0, 0, 1};
            expect("a^m = 1", power(a, m), id);
            expect("b^n = 1", power(b, n), id);
            expect("c^n = 1", power(c, n), id);
            expect("b c = c b", multiply(b, c), multiply(c, b));
            expect("a^-1 b a = b^x c^y", conj(b, a),
                   multiply(power(b, s.sigma.x), power(c, s.sigma.y)));
            expect("a^-1 c a = b^z c^t", conj(c, a),
                   multiply(power(b, s.sigma.z), power(c, s.sigma.t)));
            break;
        }
        case Family::doubled: {
            const auto& s = std::get<DoubledSpec>(im.spec).base;
            const Element r{1 % m, 0, 0, 0}, sv{0, 1, 0, 0};
            const Element t{0, 0, 1 % m, 0}, u{0, 0, 0, 1};
            expect("r^m = 1", power(r, m), id);
            expect("s^n = 1", power(sv, n), id);
            expect("r^-1 s r = s^a", conj(sv, r), power(sv, s.a));
            expect("t^m = 1", power(t, m), id);
            expect("u^n = 1", power(u, n), id);
            expect("t^-1 u t = u^a", conj(u, t), power(u, s.a));
            expect("r^-1 t r = t", conj(t, r), t);
            expect("s^-1 t s = u^-1 t u", conj(t, sv), conj(t, u));
            expect("r^-1 u r = u^a", conj(u, r), power(u, s.a));
            expect("s^-1 u s = u", conj(u, sv), u);
            break;
        }
    }
    return out;
}

const std::vector<std::int64_t>& Group::scalar_powers() const { return impl_->pow_scalar; }
const std::vector<Mat2>& Group::matrix_powers() const { return impl_->pow_mat; }

}  // namespace degdiam
