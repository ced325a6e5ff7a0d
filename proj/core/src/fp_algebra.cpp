#include "ringlab/fp_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "ringlab/construct.hpp"

namespace ringlab {

namespace {

bool word_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b; // graded, then lex
}

} // namespace

WordCombo combo_normalize(WordCombo combo, uint32_t p) {
    std::sort(combo.begin(), combo.end(),
              [](const Term& x, const Term& y) { return word_less(x.word, y.word); });
    WordCombo out;
    for (auto& t : combo) {
        uint32_t c = t.coeff % p;
        if (!out.empty() && out.back().word == t.word) {
            out.back().coeff = (out.back().coeff + c) % p;
        } else {
            out.push_back({std::move(t.word), c});
        }
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.coeff == 0; }),
              out.end());
    return out;
}

WordCombo combo_add(const WordCombo& a, const WordCombo& b, uint32_t p) {
    WordCombo c = a;
    c.insert(c.end(), b.begin(), b.end());
    return combo_normalize(std::move(c), p);
}

WordCombo combo_smul(uint32_t c, const WordCombo& a, uint32_t p) {
    WordCombo out = a;
    for (auto& t : out) t.coeff = uint32_t((uint64_t(t.coeff) * c) % p);
    return combo_normalize(std::move(out), p);
}

WordCombo combo_mul(const WordCombo& a, const WordCombo& b, uint32_t p) {
    WordCombo out;
    out.reserve(a.size() * b.size());
    for (const Term& x : a)
        for (const Term& y : b) {
            Word w = x.word;
            w.insert(w.end(), y.word.begin(), y.word.end());
            out.push_back({std::move(w), uint32_t((uint64_t(x.coeff) * y.coeff) % p)});
        }
    return combo_normalize(std::move(out), p);
}

bool combo_is_zero(const WordCombo& a) { return a.empty(); }

// ---------- shared PresentedAlgebra machinery ----------

AlgValue PresentedAlgebra::add(const AlgValue& a, const AlgValue& b) const {
    return {combo_add(a.combo, b.combo, p()), a.exact && b.exact};
}

AlgValue PresentedAlgebra::smul(uint32_t c, const AlgValue& a) const {
    return {combo_smul(c, a.combo, p()), a.exact};
}

AlgValue PresentedAlgebra::one() const {
    if (!unital()) throw Error(ErrorCode::RequiresIdentity, "algebra has no unit");
    return {{Term{{}, 1}}, true};
}

namespace {

// Tokenizes words against generator names by greedy longest match.
struct ComboParser {
    const std::vector<std::string>& gens;
    uint32_t p;
    bool unital;
    const std::string& text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    std::optional<uint32_t> match_gen() {
        size_t best_len = 0;
        uint32_t best = 0;
        for (uint32_t g = 0; g < gens.size(); ++g) {
            const std::string& name = gens[g];
            if (name.size() > best_len && text.compare(pos, name.size(), name) == 0) {
                best_len = name.size();
                best = g;
            }
        }
        if (best_len == 0) return std::nullopt;
        pos += best_len;
        return best;
    }

    uint64_t number() {
        size_t start = pos;
        while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw Error(ErrorCode::ParseError, "expected a number");
        return std::stoull(text.substr(start, pos - start));
    }

    WordCombo parse() {
        WordCombo combo;
        skip_ws();
        bool negative = false;
        if (pos < text.size() && text[pos] == '-') {
            negative = true;
            ++pos;
        }
        for (;;) {
            Term t = term();
            if (negative) t.coeff = uint32_t((uint64_t(t.coeff) * (p - 1)) % p);
            combo.push_back(std::move(t));
            skip_ws();
            if (pos >= text.size()) break;
            if (text[pos] == '+') {
                negative = false;
                ++pos;
            } else if (text[pos] == '-') {
                negative = true;
                ++pos;
            } else {
                throw Error(ErrorCode::ParseError,
                            "unexpected character '" + std::string(1, text[pos]) + "' in element");
            }
        }
        return combo_normalize(std::move(combo), p);
    }

    Term term() {
        skip_ws();
        uint32_t coeff = 1;
        bool saw_number = false;
        if (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) {
            coeff = uint32_t(number() % p);
            saw_number = true;
        }
        Word word;
        for (;;) {
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                continue;
            }
            skip_ws();
            auto g = match_gen();
            if (!g) break;
            uint32_t exp = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                exp = uint32_t(number());
            }
            for (uint32_t i = 0; i < exp; ++i) word.push_back(*g);
        }
        if (word.empty() && !saw_number)
            throw Error(ErrorCode::ParseError, "empty term in element text");
        if (word.empty() && !unital)
            throw Error(ErrorCode::ParseError, "constant term in a non-unital algebra");
        return {std::move(word), coeff};
    }
};

} // namespace

AlgValue PresentedAlgebra::parse(const std::string& text) const {
    std::string trimmed;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed == "0") return {};
    ComboParser parser{pres_.gens, p(), unital(), text, 0};
    return {parser.parse(), true};
}

std::string PresentedAlgebra::render(const AlgValue& v) const {
    if (v.combo.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : v.combo) {
        if (!first) os << " + ";
        first = false;
        if (t.word.empty()) {
            os << t.coeff;
            continue;
        }
        if (t.coeff != 1) os << t.coeff << "*";
        size_t i = 0;
        bool started = false;
        while (i < t.word.size()) {
            size_t j = i;
            while (j < t.word.size() && t.word[j] == t.word[i]) ++j;
            if (started) os << "*";
            os << pres_.gens[t.word[i]];
            if (j - i > 1) os << "^" << (j - i);
            started = true;
            i = j;
        }
    }
    return os.str();
}

// ---------- PatternAlgebra ----------

PatternAlgebra::PatternAlgebra(Presentation pres) : PresentedAlgebra(std::move(pres)) {
    if (pres_.truncate || pres_.working_bound)
        throw Error(ErrorCode::BadTables, "pattern mode takes no truncation");
    for (const Relation& rel : pres_.relations) {
        if (rel.squared)
            throw Error(ErrorCode::NonMonomialRelation, "squared families need a length bound");
        Pattern pat;
        bool pending_gap = false;
        uint32_t pending_min = 0;
        for (const TemplateItem& item : rel.items) {
            if (item.is_gap) {
                if (pat.pieces.empty())
                    throw Error(ErrorCode::NonMonomialRelation,
                                "pattern gaps must sit between literal pieces");
                pending_gap = true;
                pending_min = std::max(pending_min, item.min_gap);
                continue;
            }
            if (item.fixed.size() != 1 || item.fixed[0].coeff % pres_.p != 1 ||
                item.fixed[0].word.empty())
                throw Error(ErrorCode::NonMonomialRelation,
                            "pattern-mode relations must be single words");
            if (pending_gap) {
                pat.gaps.push_back(pending_min);
                pat.pieces.push_back(item.fixed[0].word);
                pending_gap = false;
                pending_min = 0;
            } else if (pat.pieces.empty()) {
                pat.pieces.push_back(item.fixed[0].word);
            } else {
                // adjacent literals fuse into one piece
                Word& back = pat.pieces.back();
                back.insert(back.end(), item.fixed[0].word.begin(), item.fixed[0].word.end());
            }
        }
        if (pending_gap)
            throw Error(ErrorCode::NonMonomialRelation, "pattern may not end with a gap");
        if (pat.pieces.empty()) throw Error(ErrorCode::NonMonomialRelation, "empty pattern");
        uint32_t total = 0;
        for (const Word& piece : pat.pieces) total += uint32_t(piece.size());
        max_piece_total_ = std::max(max_piece_total_, total);
        max_piece_count_ = std::max(max_piece_count_, uint32_t(pat.pieces.size()));
        patterns_.push_back(std::move(pat));
    }
}

namespace {
int64_t find_factor(const Word& w, const Word& piece, size_t from) {
    if (piece.empty()) return int64_t(from);
    if (piece.size() > w.size()) return -1;
    for (size_t s = from; s + piece.size() <= w.size(); ++s) {
        bool ok = true;
        for (size_t i = 0; i < piece.size() && ok; ++i) ok = w[s + i] == piece[i];
        if (ok) return int64_t(s);
    }
    return -1;
}
} // namespace

bool PatternAlgebra::word_in_ideal(const Word& w) const {
    for (const Pattern& pat : patterns_) {
        size_t at = 0;
        bool ok = true;
        for (size_t i = 0; i < pat.pieces.size(); ++i) {
            int64_t pos = find_factor(w, pat.pieces[i], at);
            if (pos < 0) {
                ok = false;
                break;
            }
            at = size_t(pos) + pat.pieces[i].size();
            if (i + 1 < pat.pieces.size()) at += pat.gaps[i];
        }
        if (ok) return true;
    }
    return false;
}

AlgValue PatternAlgebra::reduce(const AlgValue& a) const {
    WordCombo out;
    for (const Term& t : a.combo)
        if (!word_in_ideal(t.word)) out.push_back(t);
    return {combo_normalize(std::move(out), p()), a.exact};
}

AlgValue PatternAlgebra::mul(const AlgValue& a, const AlgValue& b) const {
    return reduce({combo_mul(a.combo, b.combo, p()), a.exact && b.exact});
}

MembershipAnswer PatternAlgebra::in_ideal(const AlgValue& a) const {
    return {reduce(a).combo.empty(), a.exact};
}

AlgNilpotency PatternAlgebra::nilpotency(const AlgValue& a, uint32_t power_bound) const {
    AlgValue v = reduce(a);
    if (v.combo.empty()) return {NilStatus::Nilpotent, 1, true, "zero element"};
    if (unital() && v.combo.front().word.empty())
        return {NilStatus::NotNilpotent, std::nullopt, true,
                "nonzero scalar part maps onto the base field"};
    if (v.combo.size() == 1) {
        // periodic-word rule: every short factor of w^infinity already occurs
        // within a bounded power, so a bounded scan is exhaustive
        const Word& w = v.combo.front().word;
        uint32_t q = uint32_t(max_piece_total_ / w.size()) + 2;
        uint32_t cap = max_piece_count_ * (q + 1) + 2;
        Word power;
        for (uint32_t k = 1; k <= cap; ++k) {
            power.insert(power.end(), w.begin(), w.end());
            if (word_in_ideal(power))
                return {NilStatus::Nilpotent, k, true, "power matched a pattern"};
        }
        return {NilStatus::NotNilpotent, std::nullopt, true,
                "no power of the periodic word meets a pattern"};
    }
    AlgValue cur = v;
    AlgebraLimits guards;
    for (uint32_t k = 2; k <= power_bound; ++k) {
        cur = mul(cur, v);
        if (cur.combo.empty()) return {NilStatus::Nilpotent, k, true, "power vanished"};
        if (cur.combo.size() > guards.term_cap)
            return {NilStatus::Unknown, std::nullopt, false,
                    "term growth exceeded the budget at power " + std::to_string(k)};
    }
    return {NilStatus::Unknown, std::nullopt, false,
            "no power up to " + std::to_string(power_bound) + " vanished"};
}

FiniteRing PatternAlgebra::realize(const SizeLimits& limits) const {
    // normal words form the basis; every factor of a normal word is normal
    uint32_t cap_dim = 0;
    {
        uint64_t v = 1;
        while (v <= limits.max_order / p()) {
            v *= p();
            ++cap_dim;
        }
    }
    std::vector<Word> basis;
    if (unital()) basis.push_back({});
    std::vector<Word> frontier = {Word{}};
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (const Word& w : frontier)
            for (uint32_t g = 0; g < pres_.gens.size(); ++g) {
                Word e = w;
                e.push_back(g);
                if (!word_in_ideal(e)) {
                    basis.push_back(e);
                    next.push_back(std::move(e));
                }
            }
        if (basis.size() > cap_dim)
            throw Error(ErrorCode::SizeCap, "normal-word basis exceeds the realizable dimension");
        frontier = std::move(next);
    }
    const uint32_t dim = uint32_t(basis.size());
    std::map<Word, uint32_t> index;
    for (uint32_t i = 0; i < dim; ++i) index[basis[i]] = i;
    std::vector<std::vector<int64_t>> prod(dim, std::vector<int64_t>(dim, -1));
    for (uint32_t i = 0; i < dim; ++i)
        for (uint32_t j = 0; j < dim; ++j) {
            Word w = basis[i];
            w.insert(w.end(), basis[j].begin(), basis[j].end());
            if (!word_in_ideal(w)) prod[i][j] = index.at(w);
        }
    uint64_t order64 = 1;
    for (uint32_t i = 0; i < dim; ++i) order64 *= p();
    limits.check_order(order64);
    const uint32_t order = uint32_t(order64);
    std::vector<uint32_t> add(size_t(order) * order), mul_t(size_t(order) * order);
    auto digits = [&](uint32_t x) {
        std::vector<uint32_t> d(dim);
        for (uint32_t i = 0; i < dim; ++i) {
            d[i] = x % p();
            x /= p();
        }
        return d;
    };
    auto encode = [&](const std::vector<uint32_t>& d) {
        uint64_t v = 0;
        for (size_t i = d.size(); i-- > 0;) v = v * p() + d[i];
        return uint32_t(v);
    };
    for (uint32_t a = 0; a < order; ++a) {
        auto da = digits(a);
        for (uint32_t b = 0; b < order; ++b) {
            auto db = digits(b);
            std::vector<uint32_t> s(dim), m(dim, 0);
            for (uint32_t i = 0; i < dim; ++i) s[i] = (da[i] + db[i]) % p();
            for (uint32_t i = 0; i < dim; ++i) {
                if (!da[i]) continue;
                for (uint32_t j = 0; j < dim; ++j) {
                    if (!db[j] || prod[i][j] < 0) continue;
                    size_t k = size_t(prod[i][j]);
                    m[k] = uint32_t((m[k] + uint64_t(da[i]) * db[j]) % p());
                }
            }
            add[size_t(a) * order + b] = encode(s);
            mul_t[size_t(a) * order + b] = encode(m);
        }
    }
    std::optional<uint32_t> one;
    if (unital()) {
        std::vector<uint32_t> d(dim, 0);
        d[0] = 1;
        one = encode(d);
    }
    return FiniteRing::validate(order, std::move(add), std::move(mul_t), one, label(), limits);
}

// ---------- TruncatedAlgebra ----------

TruncatedAlgebra::TruncatedAlgebra(Presentation pres, const AlgebraLimits& limits)
    : PresentedAlgebra(std::move(pres)), space_(pres_.p, 0) {
    if (!pres_.truncate && !pres_.working_bound)
        throw Error(ErrorCode::BadTables, "truncated mode needs truncate= or bound=");
    if (pres_.truncate && pres_.working_bound)
        throw Error(ErrorCode::BadTables, "give either truncate= or bound=, not both");
    intrinsic_ = pres_.truncate.has_value();
    length_bound_ = intrinsic_ ? *pres_.truncate : *pres_.working_bound;
    if (length_bound_ < 1) throw Error(ErrorCode::BadTables, "length bound must be positive");

    const uint32_t g = uint32_t(pres_.gens.size());
    const uint32_t L = length_bound_;
    offsets_.assign(L + 1, 0);
    uint64_t acc = unital() ? 1 : 0;
    uint64_t len_count = 1;
    for (uint32_t len = 1; len < L; ++len) {
        offsets_[len] = acc;
        len_count *= g;
        acc += len_count;
        if (acc > limits.dimension_cap)
            throw Error(ErrorCode::DimensionCap, "word space dimension exceeds the cap of " +
                                                     std::to_string(limits.dimension_cap));
    }
    offsets_[L] = acc;
    universe_ = size_t(acc);
    space_ = FpRowSpace(p(), universe_);

    // exactness bookkeeping for working-bound mode: word-instantiated rows
    // stay inside the ideal only for homogeneous families, and span the whole
    // degree slice only for families that are multilinear in their parameters
    bool homogeneous = true;
    bool squares_in_window = false;
    for (const Relation& rel : pres_.relations) {
        uint32_t min_total = 0;
        for (const TemplateItem& item : rel.items) {
            if (item.is_gap) {
                min_total += item.min_gap;
                continue;
            }
            if (item.fixed.empty()) continue;
            uint32_t m = UINT32_MAX;
            size_t len = item.fixed[0].word.size();
            for (const Term& t : item.fixed) {
                if (t.word.size() != len) homogeneous = false;
                m = std::min(m, uint32_t(t.word.size()));
            }
            min_total += m;
        }
        // a squared family whose shortest instance cannot fit below the bound
        // contributes nothing to the slice and does not spoil exactness
        if (rel.squared && 2 * min_total <= L - 1) squares_in_window = true;
    }
    positive_exact_ = intrinsic_ || homogeneous;
    slice_exact_ = intrinsic_ || (homogeneous && !squares_in_window);

    std::vector<std::vector<Word>> word_cache(L);
    for (uint32_t len = 0; len < L; ++len) {
        std::vector<Word> out;
        if (len == 0) {
            out.push_back({});
        } else {
            Word w(len, 0);
            for (;;) {
                out.push_back(w);
                int64_t i = int64_t(len) - 1;
                while (i >= 0 && w[size_t(i)] == g - 1) w[size_t(i--)] = 0;
                if (i < 0) break;
                ++w[size_t(i)];
            }
        }
        word_cache[len] = std::move(out);
    }

    auto densify_row = [&](const WordCombo& c) {
        std::vector<std::pair<uint32_t, uint32_t>> sparse;
        for (const Term& t : c) {
            if (t.word.size() >= L) continue; // outside the window
            if (t.word.empty() && !unital())
                throw Error(ErrorCode::BadTables, "constant relation in a non-unital algebra");
            sparse.emplace_back(uint32_t(word_index(t.word)), t.coeff);
        }
        return sparse;
    };

    for (const Relation& rel : pres_.relations) {
        std::vector<uint32_t> rem_min(rel.items.size() + 1, 0);
        for (size_t i = rel.items.size(); i-- > 0;) {
            uint32_t m;
            if (rel.items[i].is_gap) {
                m = rel.items[i].min_gap;
            } else {
                m = UINT32_MAX;
                for (const Term& t : rel.items[i].fixed) m = std::min(m, uint32_t(t.word.size()));
                if (rel.items[i].fixed.empty()) m = 0;
            }
            rem_min[i] = rem_min[i + 1] + m;
        }
        const uint32_t inst_budget = rel.squared ? (L - 1) / 2 : (L - 1);
        const bool absorbed = !rel.squared && rel.items.size() >= 2 && rel.items.front().is_gap &&
                              rel.items.back().is_gap;

        std::vector<WordCombo> instances;
        std::function<void(size_t, uint32_t, WordCombo)> build = [&](size_t i, uint32_t used,
                                                                     WordCombo acc) {
            if (used + rem_min[i] > inst_budget) return;
            if (acc.empty()) return;
            if (i == rel.items.size()) {
                instances.push_back(std::move(acc));
                return;
            }
            const TemplateItem& item = rel.items[i];
            if (item.is_gap) {
                for (uint32_t len = item.min_gap;
                     used + len + rem_min[i + 1] <= inst_budget && len < L; ++len) {
                    for (const Word& w : word_cache[len]) {
                        WordCombo ext = combo_mul(acc, {Term{w, 1}}, p());
                        build(i + 1, used + len, std::move(ext));
                    }
                }
            } else {
                uint32_t min_len = rem_min[i] - rem_min[i + 1];
                build(i + 1, used + min_len, combo_mul(acc, item.fixed, p()));
            }
        };
        build(0, 0, WordCombo{Term{{}, 1}});

        for (const WordCombo& inst0 : instances) {
            WordCombo inst = rel.squared ? combo_mul(inst0, inst0, p()) : inst0;
            if (inst.empty()) continue;
            uint32_t min_deg = UINT32_MAX;
            for (const Term& t : inst) min_deg = std::min(min_deg, uint32_t(t.word.size()));
            if (absorbed) {
                space_.insert(densify_row(inst));
                continue;
            }
            if (min_deg > L - 1) continue;
            const uint32_t pad = L - 1 - min_deg;
            for (uint32_t lu = 0; lu <= pad; ++lu)
                for (const Word& u : word_cache[lu]) {
                    WordCombo left = combo_mul({Term{u, 1}}, inst, p());
                    for (uint32_t lv = 0; lv + lu <= pad; ++lv)
                        for (const Word& v : word_cache[lv]) {
                            WordCombo row = combo_mul(left, {Term{v, 1}}, p());
                            space_.insert(densify_row(row));
                        }
                }
        }
    }
    space_.canonicalize();
    if (unital()) {
        auto piv = space_.pivots();
        if (!piv.empty() && piv.front() == 0)
            throw Error(ErrorCode::InconsistentPresentation, "1 lies in the ideal");
    }
}

uint64_t TruncatedAlgebra::word_index(const Word& w) const {
    if (w.empty()) {
        if (!unital()) throw Error(ErrorCode::BadTables, "empty word in a non-unital algebra");
        return 0;
    }
    const uint32_t g = uint32_t(pres_.gens.size());
    uint64_t v = 0;
    for (uint32_t c : w) v = v * g + c;
    return offsets_[w.size()] + v;
}

Word TruncatedAlgebra::word_of_index(uint64_t idx) const {
    if (unital() && idx == 0) return {};
    const uint32_t g = uint32_t(pres_.gens.size());
    uint32_t len = 1;
    while (len + 1 <= length_bound_ && offsets_[len + 1] <= idx) ++len;
    uint64_t v = idx - offsets_[len];
    Word w(len);
    for (uint32_t i = len; i-- > 0;) {
        w[i] = uint32_t(v % g);
        v /= g;
    }
    return w;
}

std::vector<std::pair<uint32_t, uint32_t>> TruncatedAlgebra::densify(const WordCombo& c,
                                                                     bool* truncated) const {
    std::vector<std::pair<uint32_t, uint32_t>> sparse;
    for (const Term& t : c) {
        if (t.word.size() >= length_bound_) {
            if (truncated) *truncated = true;
            continue;
        }
        sparse.emplace_back(uint32_t(word_index(t.word)), t.coeff);
    }
    return sparse;
}

AlgValue TruncatedAlgebra::mul(const AlgValue& a, const AlgValue& b) const {
    WordCombo raw = combo_mul(a.combo, b.combo, p());
    bool truncated = false;
    WordCombo kept;
    for (Term& t : raw) {
        if (t.word.size() >= length_bound_)
            truncated = true;
        else
            kept.push_back(std::move(t));
    }
    bool exact = a.exact && b.exact && (intrinsic_ || !truncated);
    return reduce({std::move(kept), exact});
}

AlgValue TruncatedAlgebra::reduce(const AlgValue& a) const {
    bool truncated = false;
    auto sparse = densify(a.combo, &truncated);
    std::vector<uint32_t> dense(universe_, 0);
    for (auto [i, c] : sparse) dense[i] = uint32_t((dense[i] + c) % p());
    space_.reduce(dense);
    WordCombo out;
    for (size_t i = 0; i < universe_; ++i)
        if (dense[i]) out.push_back({word_of_index(i), dense[i]});
    bool exact = a.exact && (intrinsic_ || !truncated);
    return {combo_normalize(std::move(out), p()), exact};
}

MembershipAnswer TruncatedAlgebra::in_ideal(const AlgValue& a) const {
    AlgValue r = reduce(a);
    bool in = r.combo.empty();
    bool exact = r.exact && (in ? positive_exact_ : slice_exact_);
    return {in, exact};
}

AlgNilpotency TruncatedAlgebra::nilpotency(const AlgValue& a, uint32_t power_bound) const {
    AlgValue v = reduce(a);
    if (v.combo.empty())
        return {NilStatus::Nilpotent, 1, v.exact && positive_exact_, "zero element"};
    if (unital() && v.combo.front().word.empty())
        return {NilStatus::NotNilpotent, std::nullopt, true,
                "nonzero scalar part maps onto the base field"};
    uint32_t bound = intrinsic_ ? std::max(power_bound, length_bound_ + 1) : power_bound;
    AlgValue cur = v;
    for (uint32_t k = 2; k <= bound; ++k) {
        cur = mul(cur, v);
        if (!cur.exact && !intrinsic_)
            return {NilStatus::Unknown, std::nullopt, false,
                    "powers leave the working window before vanishing (checked to power " +
                        std::to_string(k - 1) + ")"};
        if (cur.combo.empty()) {
            bool exact = positive_exact_ && v.exact;
            return {NilStatus::Nilpotent, k, exact, "power vanished"};
        }
    }
    return {NilStatus::Unknown, std::nullopt, false,
            "no power up to " + std::to_string(bound) + " vanished"};
}

FiniteRing TruncatedAlgebra::realize(const SizeLimits& limits) const {
    if (!intrinsic_)
        throw Error(ErrorCode::BadTables,
                    "an algebra with only a working bound cannot be realized exactly");
    std::vector<uint32_t> pivs = space_.pivots();
    std::vector<bool> is_pivot(universe_, false);
    for (uint32_t piv : pivs) is_pivot[piv] = true;
    std::vector<uint32_t> basis;
    for (uint32_t i = 0; i < universe_; ++i)
        if (!is_pivot[i]) basis.push_back(i);
    const uint32_t dim = uint32_t(basis.size());
    uint64_t order64 = 1;
    for (uint32_t i = 0; i < dim; ++i) {
        if (order64 > limits.max_order / p())
            throw Error(ErrorCode::SizeCap, "realized order exceeds cap");
        order64 *= p();
    }
    limits.check_order(order64);
    const uint32_t order = uint32_t(order64);
    std::vector<uint32_t> pos(universe_, UINT32_MAX);
    for (uint32_t i = 0; i < dim; ++i) pos[basis[i]] = i;

    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> prod(size_t(dim) * dim);
    for (uint32_t i = 0; i < dim; ++i)
        for (uint32_t j = 0; j < dim; ++j) {
            Word w = word_of_index(basis[i]);
            Word w2 = word_of_index(basis[j]);
            w.insert(w.end(), w2.begin(), w2.end());
            if (w.size() >= length_bound_) continue;
            std::vector<uint32_t> dense(universe_, 0);
            dense[word_index(w)] = 1;
            space_.reduce(dense);
            for (uint32_t k = 0; k < universe_; ++k)
                if (dense[k]) prod[size_t(i) * dim + j].emplace_back(pos[k], dense[k]);
        }

    std::vector<uint32_t> add(size_t(order) * order), mul_t(size_t(order) * order);
    auto digits = [&](uint32_t x) {
        std::vector<uint32_t> d(dim);
        for (uint32_t i = 0; i < dim; ++i) {
            d[i] = x % p();
            x /= p();
        }
        return d;
    };
    auto encode = [&](const std::vector<uint32_t>& d) {
        uint64_t v = 0;
        for (size_t i = d.size(); i-- > 0;) v = v * p() + d[i];
        return uint32_t(v);
    };
    for (uint32_t a = 0; a < order; ++a) {
        auto da = digits(a);
        for (uint32_t b = 0; b < order; ++b) {
            auto db = digits(b);
            std::vector<uint32_t> s(dim), m(dim, 0);
            for (uint32_t i = 0; i < dim; ++i) s[i] = (da[i] + db[i]) % p();
            for (uint32_t i = 0; i < dim; ++i) {
                if (!da[i]) continue;
                for (uint32_t j = 0; j < dim; ++j) {
                    if (!db[j]) continue;
                    uint64_t c = (uint64_t(da[i]) * db[j]) % p();
                    for (auto [k, ck] : prod[size_t(i) * dim + j])
                        m[k] = uint32_t((m[k] + c * ck) % p());
                }
            }
            add[size_t(a) * order + b] = encode(s);
            mul_t[size_t(a) * order + b] = encode(m);
        }
    }
    std::optional<uint32_t> one;
    if (unital()) {
        std::vector<uint32_t> d(dim, 0);
        d[pos[0]] = 1;
        one = encode(d);
    }
    return FiniteRing::validate(order, std::move(add), std::move(mul_t), one, label(), limits);
}

// ---------- CommutativeMonomialAlgebra ----------

CommutativeMonomialAlgebra::CommutativeMonomialAlgebra(Presentation pres,
                                                       const AlgebraLimits& limits)
    : PresentedAlgebra(std::move(pres)) {
    if (pres_.truncate || pres_.working_bound)
        throw Error(ErrorCode::BadTables, "commutative mode takes no truncation");
    const uint32_t g = uint32_t(pres_.gens.size());
    for (const Relation& rel : pres_.relations) {
        if (rel.squared || rel.items.size() != 1 || rel.items[0].is_gap)
            throw Error(ErrorCode::NonMonomialRelation,
                        "commutative mode supports plain monomial relations only");
        const WordCombo& c = rel.items[0].fixed;
        if (c.size() != 1 || c[0].word.empty())
            throw Error(ErrorCode::NonMonomialRelation,
                        "commutative relations must be single nonconstant monomials");
        rel_monomials_.push_back(exponents_of(c[0].word));
    }
    bounds_.assign(g, 0);
    for (const auto& e : rel_monomials_) {
        uint32_t support = 0, gen = 0;
        for (uint32_t i = 0; i < g; ++i)
            if (e[i]) {
                ++support;
                gen = i;
            }
        if (support == 1 && (bounds_[gen] == 0 || e[gen] < bounds_[gen])) bounds_[gen] = e[gen];
    }
    for (uint32_t i = 0; i < g; ++i)
        if (bounds_[i] == 0)
            throw Error(ErrorCode::DimensionCap,
                        "generator " + pres_.gens[i] +
                            " has no pure power relation; the quotient is infinite-dimensional");
    uint64_t grid = 1;
    for (uint32_t i = 0; i < g; ++i) {
        grid *= bounds_[i];
        if (grid > limits.dimension_cap)
            throw Error(ErrorCode::DimensionCap, "monomial grid exceeds the dimension cap");
    }
    std::vector<uint32_t> e(g, 0);
    for (;;) {
        bool nonzero = std::any_of(e.begin(), e.end(), [](uint32_t x) { return x > 0; });
        if (!monomial_dead(e) && (unital() || nonzero)) basis_.push_back(e);
        uint32_t i = 0;
        while (i < g && e[i] + 1 >= bounds_[i]) e[i++] = 0;
        if (i == g) break;
        ++e[i];
    }
    std::sort(basis_.begin(), basis_.end(), [](const auto& a, const auto& b) {
        uint64_t ta = std::accumulate(a.begin(), a.end(), uint64_t(0));
        uint64_t tb = std::accumulate(b.begin(), b.end(), uint64_t(0));
        if (ta != tb) return ta < tb;
        return a < b;
    });
}

bool CommutativeMonomialAlgebra::monomial_dead(const std::vector<uint32_t>& e) const {
    for (const auto& m : rel_monomials_) {
        bool divides = true;
        for (size_t i = 0; i < e.size() && divides; ++i) divides = m[i] <= e[i];
        if (divides) return true;
    }
    return false;
}

std::vector<uint32_t> CommutativeMonomialAlgebra::exponents_of(const Word& w) const {
    std::vector<uint32_t> e(pres_.gens.size(), 0);
    for (uint32_t c : w) ++e[c];
    return e;
}

Word CommutativeMonomialAlgebra::word_of(const std::vector<uint32_t>& e) const {
    Word w;
    for (uint32_t i = 0; i < e.size(); ++i)
        for (uint32_t k = 0; k < e[i]; ++k) w.push_back(i);
    return w;
}

AlgValue CommutativeMonomialAlgebra::reduce(const AlgValue& a) const {
    WordCombo out;
    for (const Term& t : a.combo) {
        auto e = exponents_of(t.word);
        if (monomial_dead(e)) continue;
        out.push_back({word_of(e), t.coeff});
    }
    return {combo_normalize(std::move(out), p()), a.exact};
}

AlgValue CommutativeMonomialAlgebra::mul(const AlgValue& a, const AlgValue& b) const {
    return reduce({combo_mul(a.combo, b.combo, p()), a.exact && b.exact});
}

MembershipAnswer CommutativeMonomialAlgebra::in_ideal(const AlgValue& a) const {
    return {reduce(a).combo.empty(), a.exact};
}

AlgNilpotency CommutativeMonomialAlgebra::nilpotency(const AlgValue& a,
                                                     uint32_t power_bound) const {
    AlgValue v = reduce(a);
    if (v.combo.empty()) return {NilStatus::Nilpotent, 1, true, "zero element"};
    if (unital() && v.combo.front().word.empty())
        return {NilStatus::NotNilpotent, std::nullopt, true,
                "nonzero scalar part maps onto the base field"};
    uint64_t max_degree = 0;
    for (uint32_t b : bounds_) max_degree += b;
    AlgValue cur = v;
    for (uint32_t k = 2; k <= std::max<uint64_t>(power_bound, max_degree + 2); ++k) {
        cur = mul(cur, v);
        if (cur.combo.empty()) return {NilStatus::Nilpotent, k, true, "power vanished"};
    }
    return {NilStatus::Unknown, std::nullopt, false, "power bound exhausted"};
}

FiniteRing CommutativeMonomialAlgebra::realize(const SizeLimits& limits) const {
    const uint32_t dim = uint32_t(basis_.size());
    uint64_t order64 = 1;
    for (uint32_t i = 0; i < dim; ++i) {
        if (order64 > limits.max_order / p())
            throw Error(ErrorCode::SizeCap, "realized order exceeds cap");
        order64 *= p();
    }
    limits.check_order(order64);
    const uint32_t order = uint32_t(order64);
    std::map<std::vector<uint32_t>, uint32_t> index;
    for (uint32_t i = 0; i < dim; ++i) index[basis_[i]] = i;
    std::vector<std::vector<int64_t>> prod(dim, std::vector<int64_t>(dim, -1));
    for (uint32_t i = 0; i < dim; ++i)
        for (uint32_t j = 0; j < dim; ++j) {
            std::vector<uint32_t> e(pres_.gens.size());
            for (size_t k = 0; k < e.size(); ++k) e[k] = basis_[i][k] + basis_[j][k];
            if (!monomial_dead(e)) {
                auto it = index.find(e);
                if (it != index.end()) prod[i][j] = it->second;
            }
        }
    std::vector<uint32_t> add(size_t(order) * order), mul_t(size_t(order) * order);
    auto digits = [&](uint32_t x) {
        std::vector<uint32_t> d(dim);
        for (uint32_t i = 0; i < dim; ++i) {
            d[i] = x % p();
            x /= p();
        }
        return d;
    };
    auto encode = [&](const std::vector<uint32_t>& d) {
        uint64_t v = 0;
        for (size_t i = d.size(); i-- > 0;) v = v * p() + d[i];
        return uint32_t(v);
    };
    for (uint32_t a = 0; a < order; ++a) {
        auto da = digits(a);
        for (uint32_t b = 0; b < order; ++b) {
            auto db = digits(b);
            std::vector<uint32_t> s(dim), m(dim, 0);
            for (uint32_t i = 0; i < dim; ++i) s[i] = (da[i] + db[i]) % p();
            for (uint32_t i = 0; i < dim; ++i) {
                if (!da[i]) continue;
                for (uint32_t j = 0; j < dim; ++j) {
                    if (!db[j] || prod[i][j] < 0) continue;
                    size_t k = size_t(prod[i][j]);
                    m[k] = uint32_t((m[k] + uint64_t(da[i]) * db[j]) % p());
                }
            }
            add[size_t(a) * order + b] = encode(s);
            mul_t[size_t(a) * order + b] = encode(m);
        }
    }
    std::optional<uint32_t> one;
    if (unital()) {
        std::vector<uint32_t> d(dim, 0);
        d[index.at(std::vector<uint32_t>(pres_.gens.size(), 0))] = 1;
        one = encode(d);
    }
    return FiniteRing::validate(order, std::move(add), std::move(mul_t), one, label(), limits);
}

// ---------- dispatch and text format ----------

std::unique_ptr<PresentedAlgebra> build_algebra(const Presentation& pres,
                                                const AlgebraLimits& limits) {
    if (pres.commutative) return std::make_unique<CommutativeMonomialAlgebra>(pres, limits);
    if (pres.truncate || pres.working_bound)
        return std::make_unique<TruncatedAlgebra>(pres, limits);
    return std::make_unique<PatternAlgebra>(pres);
}

namespace {

std::vector<TemplateItem> parse_pattern_items(const std::vector<std::string>& gens, uint32_t p,
                                              bool unital, const std::string& text) {
    std::vector<TemplateItem> items;
    size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() &&
               (isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '*'))
            ++pos;
    };
    while (skip(), pos < text.size()) {
        if (text[pos] == '%') {
            ++pos;
            uint32_t min = 0;
            if (pos < text.size() && text[pos] == '+') {
                min = 1;
                ++pos;
            }
            items.push_back(TemplateItem::gap(min));
            continue;
        }
        if (text[pos] == '(') {
            size_t depth = 1, start = ++pos;
            while (pos < text.size() && depth) {
                if (text[pos] == '(') ++depth;
                if (text[pos] == ')') --depth;
                ++pos;
            }
            if (depth) throw Error(ErrorCode::ParseError, "unbalanced parentheses in pattern");
            std::string inner = text.substr(start, pos - start - 1);
            ComboParser parser{gens, p, unital, inner, 0};
            items.push_back(TemplateItem::block(parser.parse()));
            continue;
        }
        ComboParser parser{gens, p, unital, text, pos};
        Word w;
        for (;;) {
            auto saved = parser.pos;
            auto g = parser.match_gen();
            if (!g) {
                parser.pos = saved;
                break;
            }
            uint32_t exp = 1;
            if (parser.pos < text.size() && text[parser.pos] == '^') {
                ++parser.pos;
                exp = uint32_t(parser.number());
            }
            for (uint32_t i = 0; i < exp; ++i) w.push_back(*g);
            if (parser.pos < text.size() && text[parser.pos] == '*') ++parser.pos;
        }
        if (w.empty())
            throw Error(ErrorCode::ParseError,
                        "unexpected character in pattern: '" + std::string(1, text[pos]) + "'");
        pos = parser.pos;
        items.push_back(TemplateItem::block({Term{std::move(w), 1}}));
    }
    if (items.empty()) throw Error(ErrorCode::ParseError, "empty pattern line");
    return items;
}

} // namespace

Presentation parse_presentation(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    Presentation pres;
    bool have_header = false;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "algebra") {
            have_header = true;
            std::string tok;
            while (ls >> tok) {
                if (tok.rfind("p=", 0) == 0) {
                    pres.p = uint32_t(std::stoul(tok.substr(2)));
                } else if (tok.rfind("gens=[", 0) == 0) {
                    std::string names = tok.substr(6);
                    if (!names.empty() && names.back() == ']') names.pop_back();
                    std::string name;
                    std::istringstream ns(names);
                    while (std::getline(ns, name, ','))
                        if (!name.empty()) pres.gens.push_back(name);
                } else if (tok == "commutative") {
                    pres.commutative = true;
                } else if (tok == "unital") {
                    pres.unital = true;
                } else if (tok.rfind("truncate=", 0) == 0) {
                    pres.truncate = uint32_t(std::stoul(tok.substr(9)));
                } else if (tok.rfind("bound=", 0) == 0) {
                    pres.working_bound = uint32_t(std::stoul(tok.substr(6)));
                } else if (tok.rfind("label=", 0) == 0) {
                    pres.label = tok.substr(6);
                } else {
                    throw Error(ErrorCode::ParseError, "unknown header token " + tok);
                }
            }
            if (pres.gens.empty())
                throw Error(ErrorCode::ParseError, "presentation needs generators");
            continue;
        }
        if (!have_header) throw Error(ErrorCode::ParseError, "expected 'algebra' header first");
        std::string rest;
        std::getline(ls, rest);
        if (head == "rel") {
            ComboParser parser{pres.gens, pres.p, pres.unital, rest, 0};
            pres.relations.push_back({{TemplateItem::block(parser.parse())}, false});
        } else if (head == "pattern") {
            pres.relations.push_back(
                {parse_pattern_items(pres.gens, pres.p, pres.unital, rest), false});
        } else if (head == "pattern2") {
            pres.relations.push_back(
                {parse_pattern_items(pres.gens, pres.p, pres.unital, rest), true});
        } else {
            throw Error(ErrorCode::ParseError, "unknown line '" + head + "'");
        }
    }
    if (!have_header) throw Error(ErrorCode::ParseError, "missing 'algebra' header");
    if (!is_prime(pres.p)) throw Error(ErrorCode::NotPrime, "presentation modulus must be prime");
    return pres;
}

std::string serialize_presentation(const Presentation& pres) {
    std::ostringstream os;
    os << "algebra p=" << pres.p << " gens=[";
    for (size_t i = 0; i < pres.gens.size(); ++i) {
        if (i) os << ",";
        os << pres.gens[i];
    }
    os << "]";
    if (pres.commutative) os << " commutative";
    if (pres.unital) os << " unital";
    if (pres.truncate) os << " truncate=" << *pres.truncate;
    if (pres.working_bound) os << " bound=" << *pres.working_bound;
    if (!pres.label.empty()) os << " label=" << pres.label;
    os << "\n";
    auto render_combo = [&](const WordCombo& c) {
        std::string out;
        bool first = true;
        for (const Term& t : c) {
            if (!first) out += " + ";
            first = false;
            if (t.coeff != 1) out += std::to_string(t.coeff) + "*";
            if (t.word.empty()) {
                out += "1";
                continue;
            }
            for (size_t i = 0; i < t.word.size(); ++i) {
                if (i) out += "*";
                out += pres.gens[t.word[i]];
            }
        }
        return out.empty() ? std::string("0") : out;
    };
    for (const Relation& rel : pres.relations) {
        if (!rel.squared && rel.items.size() == 1 && !rel.items[0].is_gap) {
            os << "rel " << render_combo(rel.items[0].fixed) << "\n";
            continue;
        }
        os << (rel.squared ? "pattern2 " : "pattern ");
        for (const TemplateItem& item : rel.items) {
            if (item.is_gap) {
                os << (item.min_gap ? "%+" : "%");
            } else if (item.fixed.size() == 1) {
                os << render_combo(item.fixed);
            } else {
                os << "(" << render_combo(item.fixed) << ")";
            }
        }
        os << "\n";
    }
    return os.str();
}

PolyIdentityResult verify_poly_identity(const PresentedAlgebra& alg,
                                        const std::vector<AlgValue>& f,
                                        const std::vector<AlgValue>& g) {
    PolyIdentityResult res;
    res.zero = true;
    if (f.empty() || g.empty()) return res;
    for (size_t k = 0; k + 1 <= f.size() + g.size() - 1; ++k) {
        AlgValue coeff = alg.zero();
        for (size_t i = 0; i < f.size(); ++i) {
            if (k < i || k - i >= g.size()) continue;
            coeff = alg.add(coeff, alg.mul(f[i], g[k - i]));
        }
        MembershipAnswer ans = alg.is_zero(coeff);
        res.exact = res.exact && ans.exact;
        if (!ans.in_ideal) {
            res.zero = false;
            res.nonzero_coefficients.emplace_back(uint32_t(k), alg.reduce(coeff));
        }
    }
    return res;
}

} // namespace ringlab
