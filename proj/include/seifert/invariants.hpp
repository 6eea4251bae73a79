#pragma once

/**
 * @file invariants.hpp
 * @brief Seifert invariants: representation, notation, normalization and
 *        the two rational invariants (Euler number, orbifold Euler
 *        characteristic).
 *
 * A descriptor (g, o1 | (q1,p1), ..., (qk,pk), (1,b)) is stored as the base
 * surface, the exceptional pairs in written order, and the integer term b.
 * Pairs with q = 1 may appear in the pair list of an unnormalized
 * descriptor; normalize() folds them into b. Nothing is normalized
 * implicitly.
 *
 * Notation grammar (whitespace-insensitive):
 *
 *     descriptor := "(" INT "," base "|" pairs? ")"
 *     base       := "o1" | "n1"
 *     pairs      := pair ("," pair)*
 *     pair       := "(" INT "," INT ")"
 *
 * On parse, a final pair with q = 1 becomes b; every other pair is kept as
 * written. print() emits the (1,b) pair whenever b != 0 or the last kept
 * pair itself has q = 1, so parse(print(M)) == M for every descriptor.
 */

#include "seifert/errors.hpp"
#include "seifert/numeric.hpp"

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace seifert {

struct BaseSurface {
    Integer genus = 0;     ///< orientable genus, or number of crosscaps when !orientable
    bool orientable = true;

    /// Euler characteristic of the underlying surface.
    Integer euler_characteristic() const
    {
        return orientable ? Integer(2 - 2 * genus) : Integer(2 - genus);
    }

    friend bool operator==(const BaseSurface&, const BaseSurface&) = default;
};

struct ExceptionalPair {
    Integer q; ///< order, q >= 1
    Integer p;

    friend bool operator==(const ExceptionalPair&, const ExceptionalPair&) = default;
};

struct SeifertInvariants {
    BaseSurface base;
    std::vector<ExceptionalPair> exceptional;
    Integer b = 0;

    friend bool operator==(const SeifertInvariants&, const SeifertInvariants&) = default;
};

enum class GeometryType { S2xR, E3, H2xR, Other };

inline std::string to_string(GeometryType g)
{
    switch (g) {
    case GeometryType::S2xR: return "S2xR";
    case GeometryType::E3: return "E3";
    case GeometryType::H2xR: return "H2xR";
    case GeometryType::Other: break;
    }
    return "Other";
}

namespace detail {

class DescriptorParser {
public:
    explicit DescriptorParser(std::string_view text) : text_(text) {}

    SeifertInvariants parse()
    {
        SeifertInvariants m;
        expect('(');
        std::size_t genus_pos = skip_ws();
        m.base.genus = integer();
        if (m.base.genus < 0) throw ParseError(genus_pos, "genus must be non-negative");
        expect(',');
        std::size_t base_pos = skip_ws();
        if (consume("o1")) {
            m.base.orientable = true;
        } else if (consume("n1")) {
            m.base.orientable = false;
            if (m.base.genus < 1)
                throw ParseError(genus_pos, "non-orientable base needs at least one crosscap");
        } else {
            throw ParseError(base_pos, "expected base type 'o1' or 'n1'");
        }
        expect('|');

        std::vector<ExceptionalPair> pairs;
        if (peek() == '(') {
            pairs.push_back(pair());
            while (peek() == ',') {
                ++pos_;
                pairs.push_back(pair());
            }
        }
        expect(')');
        std::size_t end = skip_ws();
        if (end != text_.size()) throw ParseError(end, "trailing characters after descriptor");

        if (!pairs.empty() && pairs.back().q == 1) {
            m.b = pairs.back().p;
            pairs.pop_back();
        }
        m.exceptional = std::move(pairs);
        return m;
    }

private:
    std::size_t skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return pos_;
    }

    char peek()
    {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c)
    {
        skip_ws();
        if (pos_ >= text_.size())
            throw ParseError(pos_, std::string("unexpected end of input, expected '") + c + "'");
        if (text_[pos_] != c)
            throw ParseError(pos_, std::string("expected '") + c + "'");
        ++pos_;
    }

    bool consume(std::string_view word)
    {
        if (text_.substr(pos_, word.size()) == word) {
            pos_ += word.size();
            return true;
        }
        return false;
    }

    Integer integer()
    {
        std::size_t start = skip_ws();
        std::string digits;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            if (text_[pos_] == '-') digits.push_back('-');
            ++pos_;
        }
        std::size_t first_digit = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits.push_back(text_[pos_++]);
        if (pos_ == first_digit) throw ParseError(start, "expected integer");
        return Integer(digits);
    }

    ExceptionalPair pair()
    {
        std::size_t open = skip_ws();
        expect('(');
        std::size_t q_pos = skip_ws();
        Integer q = integer();
        expect(',');
        Integer p = integer();
        expect(')');
        if (q < 0) throw ParseError(q_pos, "fiber order q must be positive, got " + q.str());
        if (q == 0) throw ParseError(q_pos, "fiber order q must be positive, got 0");
        if (q >= 2 && gcd(p, q) != 1)
            throw ParseError(open, "pair (" + q.str() + "," + p.str() + ") is not coprime");
        return {q, p};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses Seifert notation; pairs are kept in written order, unnormalized.
inline SeifertInvariants parse_seifert(std::string_view text)
{
    return detail::DescriptorParser(text).parse();
}

inline std::string print_seifert(const SeifertInvariants& m)
{
    std::string out = "(" + m.base.genus.str() + (m.base.orientable ? ",o1|" : ",n1|");
    bool first = true;
    auto emit = [&](const Integer& q, const Integer& p) {
        if (!first) out += ",";
        first = false;
        out += "(" + q.str() + "," + p.str() + ")";
    };
    for (const auto& e : m.exceptional) emit(e.q, e.p);
    if (m.b != 0 || (!m.exceptional.empty() && m.exceptional.back().q == 1)) emit(1, m.b);
    out += ")";
    return out;
}

/// Folds (1,p) pairs into b and reduces every other pair to 0 < p < q.
inline SeifertInvariants normalize(const SeifertInvariants& m)
{
    SeifertInvariants out;
    out.base = m.base;
    out.b = m.b;
    for (const auto& e : m.exceptional) {
        if (e.q == 1) {
            out.b += e.p;
            continue;
        }
        Integer k = floor_div(e.p, e.q);
        out.exceptional.push_back({e.q, e.p - k * e.q});
        out.b += k;
    }
    return out;
}

inline bool is_normalized(const SeifertInvariants& m)
{
    for (const auto& e : m.exceptional)
        if (e.q < 2 || e.p <= 0 || e.p >= e.q) return false;
    return true;
}

/// e = -(b + sum p_i/q_i)
inline Rational euler_number(const SeifertInvariants& m)
{
    Rational sum(m.b);
    for (const auto& e : m.exceptional) sum += Rational(e.p, e.q);
    return -sum;
}

/// chi(B_U) - sum (1 - 1/q_i). Pairs with q = 1 contribute nothing, so the
/// value is the same before and after normalization.
inline Rational orbifold_euler_characteristic(const SeifertInvariants& m)
{
    Rational chi(m.base.euler_characteristic());
    for (const auto& e : m.exceptional) chi -= Rational(1) - Rational(1, e.q);
    return chi;
}

/// Number of order-2 exceptional fibers of the normalized descriptor.
inline Integer order_two_count(const SeifertInvariants& m)
{
    Integer n = 0;
    for (const auto& e : normalize(m).exceptional)
        if (e.q == 2) ++n;
    return n;
}

/// Sign trichotomy on chi_orb; callers decide when it applies.
inline GeometryType geometry_from_chi(const Rational& chi_orb)
{
    if (chi_orb > 0) return GeometryType::S2xR;
    if (chi_orb == 0) return GeometryType::E3;
    return GeometryType::H2xR;
}

} // namespace seifert
