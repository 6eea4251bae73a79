#pragma once

/**
 * @file torus_mcg.hpp
 * @brief 2x2 integer matrices as mapping classes of the torus.
 *
 * Matrices act on column vectors over the ordered basis (fiber, section)
 * of a framed boundary torus; composition is the matrix product. The
 * element type is a template parameter so exhaustive searches can run on
 * machine integers while the public alias IntMatrix2 stays arbitrary
 * precision.
 *
 * Involutions of GL2(Z) fall into four conjugacy classes: I, -I, the class
 * of diag(1,-1) and the class of the swap [[0,1],[1,0]]. The last two both
 * have det -1 and trace 0 and are told apart by reduction mod 2: diag(1,-1)
 * is the identity mod 2, the swap is not. involution_class() uses that
 * invariant; find_conjugator() is the brute-force oracle it is checked
 * against.
 */

#include "seifert/errors.hpp"
#include "seifert/numeric.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

namespace seifert {

template <class T>
struct basic_vector2 {
    T x{};
    T y{};

    friend bool operator==(const basic_vector2&, const basic_vector2&) = default;
};

/// Row-major [[a, b], [c, d]].
template <class T>
struct basic_matrix2 {
    T a{}, b{}, c{}, d{};

    static basic_matrix2 identity() { return {T(1), T(0), T(0), T(1)}; }

    friend bool operator==(const basic_matrix2&, const basic_matrix2&) = default;

    friend basic_matrix2 operator-(const basic_matrix2& m) { return {-m.a, -m.b, -m.c, -m.d}; }

    friend basic_matrix2 operator*(const basic_matrix2& l, const basic_matrix2& r)
    {
        return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
                l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
    }

    friend basic_vector2<T> operator*(const basic_matrix2& m, const basic_vector2<T>& v)
    {
        return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y};
    }
};

using IntMatrix2 = basic_matrix2<Integer>;
using IntVector2 = basic_vector2<Integer>;

template <class T>
basic_matrix2<T> mat_mul(const basic_matrix2<T>& l, const basic_matrix2<T>& r)
{
    return l * r;
}

template <class T>
T mat_det(const basic_matrix2<T>& m)
{
    return m.a * m.d - m.b * m.c;
}

template <class T>
T mat_trace(const basic_matrix2<T>& m)
{
    return m.a + m.d;
}

template <class T>
bool is_unimodular(const basic_matrix2<T>& m)
{
    const T det = mat_det(m);
    return det == T(1) || det == T(-1);
}

/// Inverse in GL2(Z); throws unless |det| = 1.
template <class T>
basic_matrix2<T> mat_inv(const basic_matrix2<T>& m)
{
    const T det = mat_det(m);
    if (det != T(1) && det != T(-1))
        throw PreconditionError("mat_inv: matrix is not in GL2(Z)");
    // det = +-1, so dividing by det is multiplying by det.
    return {m.d * det, -m.b * det, -m.c * det, m.a * det};
}

template <class T>
bool is_involution(const basic_matrix2<T>& m)
{
    return m * m == basic_matrix2<T>::identity();
}

enum class InvolutionClassLabel { Identity, MinusIdentity, ReflType, AntiType };

inline std::string to_string(InvolutionClassLabel l)
{
    switch (l) {
    case InvolutionClassLabel::Identity: return "Identity";
    case InvolutionClassLabel::MinusIdentity: return "MinusIdentity";
    case InvolutionClassLabel::ReflType: return "ReflType";
    case InvolutionClassLabel::AntiType: return "AntiType";
    }
    return "?";
}

template <class T>
InvolutionClassLabel involution_class(const basic_matrix2<T>& m)
{
    if (!is_involution(m)) throw PreconditionError("involution_class: matrix is not an involution");
    if (m == basic_matrix2<T>::identity()) return InvolutionClassLabel::Identity;
    if (m == -basic_matrix2<T>::identity()) return InvolutionClassLabel::MinusIdentity;
    // Remaining involutions have det -1, trace 0.
    auto even = [](const T& v) { return v % 2 == 0; };
    const bool identity_mod2 = even(m.a - 1) && even(m.b) && even(m.c) && even(m.d - 1);
    return identity_mod2 ? InvolutionClassLabel::ReflType : InvolutionClassLabel::AntiType;
}

namespace detail {

template <class T>
std::optional<basic_matrix2<T>> conjugator_search(const basic_matrix2<T>& from, const basic_matrix2<T>& to,
                                                  std::int64_t bound)
{
    for (std::int64_t a = -bound; a <= bound; ++a)
        for (std::int64_t b = -bound; b <= bound; ++b)
            for (std::int64_t c = -bound; c <= bound; ++c)
                for (std::int64_t d = -bound; d <= bound; ++d) {
                    const basic_matrix2<T> h{T(a), T(b), T(c), T(d)};
                    if (!is_unimodular(h)) continue;
                    // H A H^-1 = B  <=>  H A = B H for invertible H.
                    if (h * from == to * h) return h;
                }
    return std::nullopt;
}

inline bool fits_small(const IntMatrix2& m)
{
    const Integer lim = Integer(1) << 20;
    for (const Integer* v : {&m.a, &m.b, &m.c, &m.d})
        if (abs(*v) > lim) return false;
    return true;
}

inline basic_matrix2<std::int64_t> to_small(const IntMatrix2& m)
{
    return {m.a.convert_to<std::int64_t>(), m.b.convert_to<std::int64_t>(),
            m.c.convert_to<std::int64_t>(), m.d.convert_to<std::int64_t>()};
}

} // namespace detail

/// Exhaustive search for H in GL2(Z) with entries in [-bound, bound] and
/// H A H^-1 = B. The identity is tried first (bound >= 1), then the window
/// in lexicographic order on (a, b, c, d); the first hit is returned.
template <class T>
std::optional<basic_matrix2<T>> find_conjugator(const basic_matrix2<T>& from, const basic_matrix2<T>& to,
                                                std::int64_t bound)
{
    if (bound < 1) return std::nullopt;
    if (from == to) return basic_matrix2<T>::identity();
    return detail::conjugator_search(from, to, bound);
}

/// Arbitrary-precision overload. When all entries are small the search runs
/// on 64-bit integers (products stay below 2^43) and the result is widened.
inline std::optional<IntMatrix2> find_conjugator(const IntMatrix2& from, const IntMatrix2& to, std::int64_t bound)
{
    if (bound < 1) return std::nullopt;
    if (from == to) return IntMatrix2::identity();
    if (bound <= (std::int64_t(1) << 20) && detail::fits_small(from) && detail::fits_small(to)) {
        auto h = detail::conjugator_search(detail::to_small(from), detail::to_small(to), bound);
        if (!h) return std::nullopt;
        return IntMatrix2{h->a, h->b, h->c, h->d};
    }
    return detail::conjugator_search(from, to, bound);
}

/// "a,b;c,d"
inline std::string format_matrix(const IntMatrix2& m)
{
    return m.a.str() + "," + m.b.str() + ";" + m.c.str() + "," + m.d.str();
}

inline std::ostream& operator<<(std::ostream& os, const IntMatrix2& m)
{
    return os << "[[" << m.a << "," << m.b << "],[" << m.c << "," << m.d << "]]";
}

/// Parses "a,b;c,d" (whitespace allowed around entries).
inline IntMatrix2 parse_matrix(std::string_view text)
{
    std::array<Integer, 4> v;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    for (std::size_t i = 0; i < 4; ++i) {
        skip();
        std::size_t start = pos;
        std::string digits;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            if (text[pos] == '-') digits.push_back('-');
            ++pos;
        }
        std::size_t first = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') digits.push_back(text[pos++]);
        if (pos == first) throw ParseError(start, "expected integer matrix entry");
        v[i] = Integer(digits);
        skip();
        if (i == 3) break;
        const char sep = (i == 1) ? ';' : ',';
        if (pos >= text.size() || text[pos] != sep)
            throw ParseError(pos, std::string("expected '") + sep + "' in matrix \"a,b;c,d\"");
        ++pos;
    }
    if (pos != text.size()) throw ParseError(pos, "trailing characters after matrix");
    return {v[0], v[1], v[2], v[3]};
}

} // namespace seifert
