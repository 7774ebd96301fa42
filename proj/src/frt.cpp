#include "ybalg/frt.hpp"

#include "ybalg/error.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace ybalg {

std::string Generator::str() const {
    static constexpr char letters[] = {'a', 'b', 'c', 'd'};
    std::string s(1, letters[static_cast<int>(letter)]);
    s += tag == Tag::u ? "_u" : "_v";
    return s;
}

Generator gen(Letter l, Tag t) { return {t, l}; }

void NCPoly::add(const Word& w, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Rational NCPoly::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::size_t NCPoly::max_degree() const {
    std::size_t d = 0;
    for (const auto& [w, c] : terms_) d = std::max(d, w.size());
    return d;
}

NCPoly NCPoly::swap_tags() const {
    NCPoly out;
    for (const auto& [w, c] : terms_) {
        Word s;
        s.reserve(w.size());
        for (const auto& g : w) s.push_back(g.swapped());
        out.add(s, c);
    }
    return out;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

NCPoly& NCPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, x] : terms_) x *= c;
    return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly out;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add(w, ca * cb);
        }
    return out;
}

std::string NCPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1 || w.empty()) os << mag.get_str() << (w.empty() ? "" : " ");
        for (std::size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << w[i].str();
    }
    return os.str();
}

NCPoly monomial(Generator g) { return NCPoly(1, Word{g}); }

NCPoly commutator(Generator x, Generator y) { return NCPoly(1, {x, y}) - NCPoly(1, {y, x}); }

NCPoly anticommutator(Generator x, Generator y) { return NCPoly(1, {x, y}) + NCPoly(1, {y, x}); }

namespace {

using enum Letter;

// Quadratic monomial helper: w(c, x, y) = c * x y.
NCPoly w(const Rational& c, Generator x, Generator y) { return NCPoly(c, {x, y}); }

struct Gens {
    Generator au{Tag::u, a}, bu{Tag::u, b}, cu{Tag::u, c}, du{Tag::u, d};
    Generator av{Tag::v, a}, bv{Tag::v, b}, cv{Tag::v, c}, dv{Tag::v, d};
};

std::vector<NCPoly> claimed_list(const RelationParams& k) {
    const Gens g;
    const Rational& u = k.u;
    const Rational& v = k.v;
    const Rational& p = k.p;
    const Rational& q = k.q;
    const Rational diff = u - v;
    const Rational lead = q * u - p * v;   // qu - pv
    const Rational trail = q * v - p * u;  // qv - pu
    const Rational qp = q - p;
    const Rational sig = k.sigma * (q + p) * diff;

    std::vector<NCPoly> r;
    r.push_back(p * diff * commutator(g.au, g.dv) - w(qp * u, g.cv, g.bu) + w(qp * v, g.cu, g.bv));
    r.push_back(w(p * diff, g.au, g.cv) - w(lead, g.cv, g.au) + w(qp * v, g.cu, g.av));
    r.push_back(w(lead, g.au, g.bv) - w(p * diff, g.bv, g.au) - w(qp * u, g.av, g.bu) + w(sig, g.cu, g.dv));
    r.push_back(w(p * diff, g.bv, g.cu) - w(q * diff, g.cu, g.bv) - w(qp * u, g.au, g.dv) + w(qp * u, g.av, g.du));
    r.push_back(w(trail, g.cu, g.dv) - w(p * diff, g.dv, g.cu) - w(qp * u, g.cv, g.du));
    r.push_back(w(p * diff, g.bu, g.dv) - w(trail, g.dv, g.bu) + w(qp * v, g.du, g.bv) - w(sig, g.cv, g.au));
    r.push_back(lead * commutator(g.au, g.av) + w(sig, g.cu, g.cv));
    r.push_back(w(lead, g.bu, g.bv) - w(trail, g.bv, g.bu) - w(sig, g.av, g.au) + w(sig, g.du, g.dv));
    r.push_back(w(trail, g.cu, g.cv) - w(lead, g.cv, g.cu));
    r.push_back(commutator(g.du, g.dv) + commutator(g.au, g.av));
    r.push_back(commutator(g.au, g.dv) - commutator(g.av, g.du));
    r.push_back(w(q * v, g.cu, g.bv) - w(q * u, g.cv, g.bu) - w(p * v, g.bv, g.cu) + w(p * u, g.bu, g.cv));
    return r;
}

std::vector<NCPoly> pq_limit_list(const RelationParams& k) {
    const Gens g;
    const Rational two_sigma = 2 * k.sigma;
    std::vector<NCPoly> r;
    r.push_back(commutator(g.au, g.dv));
    r.push_back(commutator(g.au, g.cv));
    r.push_back(commutator(g.bv, g.cu));
    r.push_back(anticommutator(g.cu, g.dv));
    r.push_back(anticommutator(g.cu, g.cv));
    r.push_back(commutator(g.au, g.bv) + w(two_sigma, g.cu, g.dv));
    r.push_back(anticommutator(g.bu, g.dv) - w(two_sigma, g.cv, g.au));
    r.push_back(commutator(g.au, g.av) + w(two_sigma, g.cu, g.cv));
    r.push_back(anticommutator(g.bu, g.bv) - w(two_sigma, g.av, g.au) + w(two_sigma, g.du, g.dv));
    // The two relations shared with the general list.
    r.push_back(commutator(g.du, g.dv) + commutator(g.au, g.av));
    r.push_back(commutator(g.au, g.dv) - commutator(g.av, g.du));
    return r;
}

std::vector<std::string> list_labels(RelationList list) {
    std::vector<std::string> out;
    if (list == RelationList::claimed) {
        for (int i = 1; i <= 12; ++i) out.push_back("rel" + std::to_string(i));
    } else {
        for (int i = 1; i <= 9; ++i) out.push_back("lim" + std::to_string(i));
        out.push_back("rel10");
        out.push_back("rel11");
    }
    return out;
}

std::vector<NCPoly> full_list(RelationList list, const RelationParams& k) {
    return list == RelationList::claimed ? claimed_list(k) : pq_limit_list(k);
}

RelationSet build(RelationList list, const RelationParams& k) {
    RelationSet s;
    s.list = list;
    s.params = k;
    s.relations = full_list(list, k);
    s.labels = list_labels(list);
    for (std::size_t i = 0; i < s.relations.size(); ++i) s.members.push_back(i);
    return s;
}

// Row-echelon basis of a span with, for every basis row, its expression in
// the input family.
class Echelon {
public:
    explicit Echelon(std::size_t family_size) : family_size_(family_size) {}

    // Returns true if p was independent of the rows so far.
    bool insert(const NCPoly& p, std::size_t family_index) {
        std::vector<Rational> combo(family_size_);
        if (family_index < family_size_) combo[family_index] = 1;
        NCPoly rest = reduce(p, combo, true);
        if (rest.is_zero()) return false;
        const Word pivot = rest.terms().begin()->first;
        const Rational lead = rest.terms().begin()->second;
        rest *= 1 / lead;
        for (auto& x : combo) x /= lead;
        // Keep the basis fully reduced: no row touches another row's pivot.
        for (auto& [other, row] : rows_) {
            const Rational c = row.poly.coefficient(pivot);
            if (c == 0) continue;
            row.poly -= rest * c;
            for (std::size_t i = 0; i < combo.size(); ++i) row.combo[i] -= c * combo[i];
        }
        rows_.emplace(pivot, Row{std::move(rest), std::move(combo)});
        return true;
    }

    // Reduces p modulo the span. combo accumulates the subtracted multiples
    // (negated when `into_row` so that the result expresses p' = p - ...).
    NCPoly reduce(NCPoly p, std::vector<Rational>& combo, bool into_row) const {
        for (const auto& [pivot, row] : rows_) {
            const Rational c = p.coefficient(pivot);
            if (c == 0) continue;
            p -= row.poly * c;
            for (std::size_t i = 0; i < combo.size(); ++i)
                if (row.combo[i] != 0) combo[i] += (into_row ? -c : c) * row.combo[i];
        }
        return p;
    }

    std::size_t rank() const { return rows_.size(); }

private:
    struct Row {
        NCPoly poly;
        std::vector<Rational> combo;
    };
    std::size_t family_size_;
    std::map<Word, Row> rows_;
};

}  // namespace

RelationSet claimed_relations(const Rational& u, const Rational& v, const Rational& p, const Rational& q,
                              const Rational& sigma) {
    return build(RelationList::claimed, {u, v, p, q, sigma});
}

RelationSet pq_limit_relations(const Rational& sigma, const Rational& u, const Rational& v) {
    return build(RelationList::pq_limit, {u, v, 1, 1, sigma});
}

RelationSet subset(const RelationSet& rels, std::span<const std::size_t> positions) {
    RelationSet out;
    out.list = rels.list;
    out.params = rels.params;
    for (std::size_t pos : positions) {
        auto it = std::find(rels.members.begin(), rels.members.end(), pos);
        if (it == rels.members.end()) throw InvalidInput("relation position not in set");
        const auto k = static_cast<std::size_t>(it - rels.members.begin());
        out.members.push_back(pos);
        out.labels.push_back(rels.labels[k]);
        out.relations.push_back(rels.relations[k]);
    }
    return out;
}

RelationSet exchanged(const RelationSet& rels) {
    RelationParams k = rels.params;
    std::swap(k.u, k.v);
    const auto full = full_list(rels.list, k);
    const auto labels = list_labels(rels.list);
    RelationSet out;
    out.list = rels.list;
    out.params = k;
    for (std::size_t pos : rels.members) {
        out.members.push_back(pos);
        out.labels.push_back(labels[pos] + "'");
        out.relations.push_back(full[pos].swap_tags());
    }
    return out;
}

RelationSet with_exchange(const RelationSet& rels) {
    RelationSet out = rels;
    const RelationSet ex = exchanged(rels);
    out.labels.insert(out.labels.end(), ex.labels.begin(), ex.labels.end());
    out.relations.insert(out.relations.end(), ex.relations.begin(), ex.relations.end());
    // members only tracks the unprimed half; exchanged() of this set is not meaningful.
    return out;
}

std::array<NCPoly, 16> rtt_residual(const Matrix& r, Tag first, Tag second) {
    if (r.rows() != 4 || r.cols() != 4) throw DimensionMismatch("rtt residual needs a 4x4 matrix");
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (!r(i, j).is_exact()) throw InvalidInput("rtt residual needs exact entries");

    auto t = [](Tag tag, std::size_t row, std::size_t col) {
        return Generator{tag, static_cast<Letter>(row * 2 + col)};
    };
    std::array<NCPoly, 16> out;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t k = 0; k < 4; ++k) {
            NCPoly& e = out[i * 4 + k];
            const std::size_t i1 = i / 2, i2 = i % 2, k1 = k / 2, k2 = k % 2;
            for (std::size_t j = 0; j < 4; ++j) {
                const std::size_t j1 = j / 2, j2 = j % 2;
                // (T1 T2)[j][k] = T_first[j1][k1] T_second[j2][k2]
                e.add({t(first, j1, k1), t(second, j2, k2)}, r(i, j).rational());
                // (T2 T1)[i][j] = T_second[i2][j2] T_first[i1][j1]
                e.add({t(second, i2, j2), t(first, i1, j1)}, -r(j, k).rational());
            }
        }
    return out;
}

bool SpanReport::all_members() const {
    return std::all_of(entries.begin(), entries.end(), [](const Membership& m) { return m.member; });
}

std::size_t SpanReport::member_count() const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [](const Membership& m) { return m.member; }));
}

std::size_t span_rank(std::span<const NCPoly> polys) {
    Echelon e(0);
    for (const auto& p : polys) e.insert(p, 0);
    return e.rank();
}

SpanReport span_membership(std::span<const NCPoly> entries, const RelationSet& rels) {
    const std::size_t k = rels.relations.size();
    Echelon basis(k);
    for (std::size_t i = 0; i < k; ++i) basis.insert(rels.relations[i], i);

    SpanReport report;
    report.relations_rank = basis.rank();
    report.entries_rank = span_rank(entries);
    for (const auto& entry : entries) {
        Membership m;
        m.coefficients.assign(k, Rational(0));
        m.residue = basis.reduce(entry, m.coefficients, false);
        m.member = m.residue.is_zero();
        if (!m.member) m.coefficients.clear();
        report.entries.push_back(std::move(m));
    }
    std::vector<NCPoly> joint(rels.relations.begin(), rels.relations.end());
    joint.insert(joint.end(), entries.begin(), entries.end());
    report.joint_rank = span_rank(joint);
    return report;
}

bool uv_symmetry_check(const RelationSet& rels) {
    const RelationSet ex = exchanged(rels);
    return span_membership(ex.relations, rels).all_members();
}

}  // namespace ybalg
