#pragma once

// Noncommutative quadratic polynomials in the entries of two coloured 2x2
// generator matrices T_u = [[a_u, b_u], [c_u, d_u]] and T_v, the RTT
// residual of a 4x4 operator, and exact span-membership checks against the
// known commutation-relation lists.

#include "ybalg/matrix.hpp"

#include <array>
#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace ybalg {

enum class Letter { a, b, c, d };
enum class Tag { u, v };

struct Generator {
    Tag tag;
    Letter letter;

    /// 0..7, tag-major: a_u b_u c_u d_u a_v b_v c_v d_v.
    int index() const { return static_cast<int>(tag) * 4 + static_cast<int>(letter); }
    Generator swapped() const { return {tag == Tag::u ? Tag::v : Tag::u, letter}; }
    std::string str() const;

    friend auto operator<=>(const Generator&, const Generator&) = default;
};

Generator gen(Letter l, Tag t);

using Word = std::vector<Generator>;

/// Finite sum of coefficient * word. Zero coefficients are never stored.
class NCPoly {
public:
    NCPoly() = default;
    NCPoly(const Rational& c, Word w) { add(w, c); }

    void add(const Word& w, const Rational& c);
    Rational coefficient(const Word& w) const;
    const std::map<Word, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t max_degree() const;

    /// u <-> v on every generator. Coefficients are untouched.
    NCPoly swap_tags() const;

    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    NCPoly& operator*=(const Rational& c);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(NCPoly a, const Rational& c) { return a *= c; }
    friend NCPoly operator*(const Rational& c, NCPoly a) { return a *= c; }
    /// Concatenation product.
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    friend bool operator==(const NCPoly&, const NCPoly&) = default;

    /// e.g. "5 a_u a_v - 5 a_v a_u + 4 c_u c_v"; "0" when empty.
    std::string str() const;

private:
    std::map<Word, Rational> terms_;
};

NCPoly monomial(Generator g);
/// xy - yx
NCPoly commutator(Generator x, Generator y);
/// xy + yx
NCPoly anticommutator(Generator x, Generator y);

struct RelationParams {
    Rational u, v, p = 1, q = 1, sigma = 0;
};

enum class RelationList {
    /// The twelve relations for the Thm-1 family.
    claimed,
    /// Nine p = q relations followed by the two that carry over unchanged.
    pq_limit,
};

/// Instantiated relations. `members` records which entries of the full list
/// are present so the set can be regenerated at exchanged colours.
struct RelationSet {
    RelationList list = RelationList::claimed;
    RelationParams params;
    std::vector<std::size_t> members;  // 0-based positions in the full list
    std::vector<std::string> labels;
    std::vector<NCPoly> relations;

    std::size_t size() const { return relations.size(); }
};

RelationSet claimed_relations(const Rational& u, const Rational& v, const Rational& p, const Rational& q,
                              const Rational& sigma);
RelationSet pq_limit_relations(const Rational& sigma, const Rational& u, const Rational& v);

/// Keeps the listed positions of the full list.
RelationSet subset(const RelationSet& rels, std::span<const std::size_t> positions);

/// The same relations with u and v exchanged in the coefficients and the
/// generator tags swapped.
RelationSet exchanged(const RelationSet& rels);

/// rels followed by exchanged(rels).
RelationSet with_exchange(const RelationSet& rels);

/// Entries of R (T_u (x) 1)(1 (x) T_v) - (1 (x) T_v)(T_u (x) 1) R, row-major
/// over the basis 11, 1x, x1, xx. Generators for the first leg get tag
/// `first`, those for the second leg `second`. R must be 4x4 and exact.
std::array<NCPoly, 16> rtt_residual(const Matrix& r, Tag first = Tag::u, Tag second = Tag::v);

struct Membership {
    bool member = false;
    /// entry = sum_i coefficients[i] * relations[i] when member.
    std::vector<Rational> coefficients;
    /// Normal form of the entry modulo the relation span; zero iff member.
    NCPoly residue;
};

struct SpanReport {
    std::vector<Membership> entries;
    std::size_t entries_rank = 0;
    std::size_t relations_rank = 0;
    std::size_t joint_rank = 0;

    bool all_members() const;
    std::size_t member_count() const;
    /// Relation span contained in the entry span.
    bool relations_in_entries() const { return joint_rank == entries_rank; }
};

/// Exact Gaussian elimination over the word coordinates.
SpanReport span_membership(std::span<const NCPoly> entries, const RelationSet& rels);

/// Rank of a family of polynomials over the word coordinates.
std::size_t span_rank(std::span<const NCPoly> polys);

/// True iff every exchanged relation lies in the span of the originals.
bool uv_symmetry_check(const RelationSet& rels);

}  // namespace ybalg
