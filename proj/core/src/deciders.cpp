#include "ringlab/deciders.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "ringlab/construct.hpp"

namespace ringlab {

const char* prop_name(Prop p) {
    switch (p) {
        case Prop::Reduced: return "reduced";
        case Prop::Commutative: return "commutative";
        case Prop::Reversible: return "reversible";
        case Prop::Abelian: return "abelian";
        case Prop::Semicommutative: return "semicommutative";
        case Prop::WeaklySemicommutative: return "weakly_semicommutative";
        case Prop::Qrpr: return "qrpr";
        case Prop::TwoPrimal: return "two_primal";
        case Prop::Ni: return "ni";
        case Prop::BoundedIndexTwo: return "bounded_index_2";
        case Prop::Armendariz: return "armendariz";
        case Prop::WeakArmendariz: return "weak_armendariz";
        case Prop::IdealArmendariz: return "ideal_armendariz";
        case Prop::WeakIdealArmendariz: return "weak_ideal_armendariz";
        case Prop::StronglyNilIfp: return "strongly_nil_ifp";
    }
    return "?";
}

std::optional<Prop> prop_from_name(const std::string& name) {
    for (Prop p : kAllProps)
        if (name == prop_name(p)) return p;
    return std::nullopt;
}

bool prop_is_bounded(Prop p) {
    switch (p) {
        case Prop::Armendariz:
        case Prop::WeakArmendariz:
        case Prop::IdealArmendariz:
        case Prop::WeakIdealArmendariz:
        case Prop::StronglyNilIfp: return true;
        default: return false;
    }
}

const char* status_name(Status s) {
    switch (s) {
        case Status::Holds: return "holds";
        case Status::Fails: return "fails";
        case Status::Unknown: return "unknown";
    }
    return "?";
}

std::string Witness::render() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::None: return "";
        case Kind::Elements: {
            os << "elements(";
            for (size_t k = 0; k < elements.size(); ++k) {
                if (k) os << ",";
                os << elements[k];
            }
            os << ")";
            break;
        }
        case Kind::Polys: {
            auto tuple = [&](const std::vector<uint32_t>& v) {
                std::string s = "[";
                for (size_t k = 0; k < v.size(); ++k) {
                    if (k) s += ",";
                    s += std::to_string(v[k]);
                }
                return s + "]";
            };
            os << "f=" << tuple(f) << " g=" << tuple(g);
            if (i) os << " i=" << *i;
            if (j) os << " j=" << *j;
            if (r) os << " r=" << *r;
            break;
        }
    }
    if (!note.empty()) os << " (" << note << ")";
    return os.str();
}

DecideContext DecideContext::build(const FiniteRing& ring) {
    DecideContext ctx;
    ctx.ring = &ring;
    ctx.nilpotent = nil_set(ring).mask();
    ctx.prime_radical = ringlab::prime_radical(ring).mask();
    ctx.upper_nil = upper_nilradical(ring).mask();
    const uint32_t n = ring.order();
    ctx.sandwich.assign(size_t(n) * n, 3);
    for (uint32_t a = 0; a < n; ++a)
        for (uint32_t b = 0; b < n; ++b) {
            uint8_t bits = 3;
            for (uint32_t r = 0; r < n && bits; ++r) {
                uint32_t v = ring.mul(ring.mul(a, r), b);
                if (v != ring.zero()) bits &= uint8_t(~1u);
                if (!ctx.nilpotent[v]) bits &= uint8_t(~2u);
            }
            ctx.sandwich[size_t(a) * n + b] = bits;
        }
    return ctx;
}

namespace {

Certificate scan_cert(const std::string& what) {
    return {Certificate::Kind::ExhaustiveScan, what};
}

} // namespace

Verdict decide_elementwise(const FiniteRing& ring, Prop prop, const DecideContext* ctx_in) {
    if (prop_is_bounded(prop))
        throw Error(ErrorCode::BadTables, "polynomial property needs the bounded decider");
    DecideContext local;
    if (!ctx_in) {
        local = DecideContext::build(ring);
        ctx_in = &local;
    }
    const DecideContext& ctx = *ctx_in;
    const uint32_t n = ring.order();
    const uint32_t zero = ring.zero();
    uint64_t work = 0;

    auto fail = [&](std::vector<uint32_t> roles, std::string note) {
        Witness w;
        w.kind = Witness::Kind::Elements;
        w.elements = std::move(roles);
        w.note = std::move(note);
        Verdict v = Verdict::fails(std::move(w), scan_cert("full scan"));
        v.work = work;
        return v;
    };
    auto hold = [&](const char* what) {
        Verdict v = Verdict::holds_exact(scan_cert(what));
        v.work = work;
        return v;
    };

    switch (prop) {
        case Prop::Reduced:
            for (uint32_t a = 0; a < n; ++a) {
                ++work;
                if (a != zero && ring.mul(a, a) == zero)
                    return fail({a}, "a != 0 with a*a = 0");
            }
            return hold("no nonzero square-zero element");
        case Prop::Commutative:
            for (uint32_t a = 0; a < n; ++a)
                for (uint32_t b = 0; b < n; ++b) {
                    ++work;
                    if (ring.mul(a, b) != ring.mul(b, a)) return fail({a, b}, "a*b != b*a");
                }
            return hold("all pairs commute");
        case Prop::Reversible:
            for (uint32_t a = 0; a < n; ++a)
                for (uint32_t b = 0; b < n; ++b) {
                    ++work;
                    if (ring.mul(a, b) == zero && ring.mul(b, a) != zero)
                        return fail({a, b}, "a*b = 0 but b*a != 0");
                }
            return hold("zero products are two-sided");
        case Prop::Abelian:
            for (uint32_t e = 0; e < n; ++e) {
                if (ring.mul(e, e) != e) continue;
                for (uint32_t r = 0; r < n; ++r) {
                    ++work;
                    if (ring.mul(e, r) != ring.mul(r, e))
                        return fail({e, r}, "idempotent e with e*r != r*e");
                }
            }
            return hold("all idempotents are central");
        case Prop::Semicommutative:
            for (uint32_t a = 0; a < n; ++a)
                for (uint32_t b = 0; b < n; ++b) {
                    ++work;
                    if (ring.mul(a, b) != zero) continue;
                    if (ctx.sandwich[size_t(a) * n + b] & 1) continue;
                    for (uint32_t r = 0; r < n; ++r)
                        if (ring.mul(ring.mul(a, r), b) != zero)
                            return fail({a, b, r}, "a*b = 0 but a*r*b != 0");
                }
            return hold("zero products absorb inserted factors");
        case Prop::WeaklySemicommutative:
            for (uint32_t a = 0; a < n; ++a)
                for (uint32_t b = 0; b < n; ++b) {
                    ++work;
                    if (ring.mul(a, b) != zero) continue;
                    if (ctx.sandwich[size_t(a) * n + b] & 2) continue;
                    for (uint32_t r = 0; r < n; ++r)
                        if (!ctx.nilpotent[ring.mul(ring.mul(a, r), b)])
                            return fail({a, b, r}, "a*b = 0 but a*r*b is not nilpotent");
                }
            return hold("inserted factors stay nilpotent");
        case Prop::Qrpr:
            for (uint32_t a = 0; a < n; ++a)
                for (uint32_t b = 0; b < n; ++b) {
                    ++work;
                    if (ring.mul(a, b) == zero && !ctx.prime_radical[ring.mul(b, a)])
                        return fail({a, b}, "a*b = 0 but b*a is outside the prime radical");
                }
            return hold("reversed zero products land in the prime radical");
        case Prop::TwoPrimal:
            for (uint32_t a = 0; a < n; ++a) {
                ++work;
                if (ctx.nilpotent[a] && !ctx.prime_radical[a])
                    return fail({a}, "nilpotent element outside the prime radical");
            }
            return hold("prime radical equals the nilpotent set");
        case Prop::Ni:
            for (uint32_t a = 0; a < n; ++a) {
                ++work;
                if (ctx.nilpotent[a] && !ctx.upper_nil[a])
                    return fail({a}, "nilpotent element outside the upper nilradical");
            }
            return hold("upper nilradical equals the nilpotent set");
        case Prop::BoundedIndexTwo:
            for (uint32_t a = 0; a < n; ++a) {
                ++work;
                if (ctx.nilpotent[a] && ring.mul(a, a) != zero)
                    return fail({a}, "nilpotent element with a*a != 0");
            }
            return hold("every nilpotent squares to zero");
        default: break;
    }
    throw Error(ErrorCode::BadTables, "unhandled property");
}

BoundedPolynomial make_poly(const FiniteRing& ring, std::vector<uint32_t> coeffs) {
    while (!coeffs.empty() && coeffs.back() == ring.zero()) coeffs.pop_back();
    return {&ring, std::move(coeffs)};
}

ScanOutcome zero_product_pairs(
    const FiniteRing& ring, uint32_t max_degree, uint64_t budget,
    const std::function<bool(const BoundedPolynomial&, const BoundedPolynomial&)>& visit,
    uint64_t* work_out) {
    const uint32_t n = ring.order();
    const uint32_t zero = ring.zero();
    uint64_t work = 0;
    ScanOutcome outcome = ScanOutcome::Complete;
    auto charge = [&](uint64_t units) {
        work += units;
        if (work > budget) {
            outcome = ScanOutcome::BudgetExceeded;
            return false;
        }
        return true;
    };

    std::vector<uint32_t> fc, gc, partial;
    auto visit_pair = [&](const std::vector<uint32_t>& f, const std::vector<uint32_t>& g) {
        BoundedPolynomial pf{&ring, f}, pg{&ring, g};
        if (!visit(pf, pg)) {
            outcome = ScanOutcome::Stopped;
            return false;
        }
        return true;
    };

    // degree cells (deg f, deg g) in lexicographic order; -1 is the zero
    // polynomial. Within a cell, f runs in coefficient-lex order and g is
    // extended depth-first with prefix pruning on determined coefficients.
    for (int32_t df = -1; df <= int32_t(max_degree); ++df) {
        for (int32_t dg = -1; dg <= int32_t(max_degree); ++dg) {
            if (df < 0 || dg < 0) {
                // one side is zero: the other ranges over every polynomial of
                // its exact degree
                int32_t d = std::max(df, dg);
                if (d < 0) {
                    if (!visit_pair({}, {})) {
                        if (work_out) *work_out = work;
                        return outcome;
                    }
                    continue;
                }
                std::vector<uint32_t> t(size_t(d) + 1, 0);
                for (;;) {
                    if (!charge(1)) {
                        if (work_out) *work_out = work;
                        return outcome;
                    }
                    if (t[size_t(d)] != zero) {
                        bool ok = df < 0 ? visit_pair({}, t) : visit_pair(t, {});
                        if (!ok) {
                            if (work_out) *work_out = work;
                            return outcome;
                        }
                    }
                    int32_t i = d;
                    while (i >= 0 && t[size_t(i)] == n - 1) t[size_t(i--)] = 0;
                    if (i < 0) break;
                    ++t[size_t(i)];
                }
                continue;
            }

            std::function<bool(int32_t)> dfs_g = [&](int32_t k) -> bool {
                if (k > dg) {
                    for (int32_t m = dg; m <= df + dg; ++m)
                        if (partial[size_t(m)] != zero) return true;
                    return visit_pair(fc, gc);
                }
                for (uint32_t b = 0; b < n; ++b) {
                    if (k == dg && b == zero) continue;
                    gc[size_t(k)] = b;
                    if (!charge(uint64_t(df) + 1)) return false;
                    for (int32_t m = k; m <= k + df; ++m)
                        partial[size_t(m)] =
                            ring.add(partial[size_t(m)], ring.mul(fc[size_t(m - k)], b));
                    bool keep = (k < dg && partial[size_t(k)] != zero) || dfs_g(k + 1);
                    for (int32_t m = k; m <= k + df; ++m)
                        partial[size_t(m)] =
                            ring.sub(partial[size_t(m)], ring.mul(fc[size_t(m - k)], b));
                    if (!keep) return false;
                }
                return true;
            };

            fc.assign(size_t(df) + 1, 0);
            for (;;) {
                if (!charge(1)) {
                    if (work_out) *work_out = work;
                    return outcome;
                }
                if (fc[size_t(df)] != zero) {
                    gc.assign(size_t(dg) + 1, 0);
                    partial.assign(size_t(df + dg) + 1, zero);
                    if (!dfs_g(0)) {
                        if (work_out) *work_out = work;
                        return outcome;
                    }
                }
                int32_t i = df;
                while (i >= 0 && fc[size_t(i)] == n - 1) fc[size_t(i--)] = 0;
                if (i < 0) break;
                ++fc[size_t(i)];
            }
        }
    }
    if (work_out) *work_out = work;
    return outcome;
}

Verdict decide_armendariz_family(const FiniteRing& ring, Prop variant, uint32_t max_degree,
                                 uint64_t budget, const DecideContext* ctx_in) {
    if (variant == Prop::WeakIdealArmendariz) {
        // definitional conjunction: Armendariz and weakly semicommutative
        Verdict arm = decide_armendariz_family(ring, Prop::Armendariz, max_degree, budget, ctx_in);
        Verdict wsc = decide_elementwise(ring, Prop::WeaklySemicommutative, ctx_in);
        if (arm.status == Status::Fails) {
            arm.witness.note += " (fails the Armendariz half)";
            return arm;
        }
        if (wsc.status == Status::Fails) {
            wsc.witness.note += " (fails the weakly semicommutative half)";
            return wsc;
        }
        if (arm.status == Status::Unknown) return arm;
        Verdict v = Verdict::holds_at(max_degree,
                                      scan_cert("both conjuncts verified exhaustively"));
        v.work = arm.work + wsc.work;
        return v;
    }
    if (!prop_is_bounded(variant))
        throw Error(ErrorCode::BadTables, "use decide_elementwise for exact properties");

    DecideContext local;
    if (!ctx_in) {
        local = DecideContext::build(ring);
        ctx_in = &local;
    }
    const DecideContext& ctx = *ctx_in;
    const uint32_t n = ring.order();
    const uint32_t zero = ring.zero();

    std::optional<Verdict> found;
    uint64_t work = 0;
    auto on_pair = [&](const BoundedPolynomial& f, const BoundedPolynomial& g) -> bool {
        for (uint32_t i = 0; i < f.coeffs.size(); ++i) {
            uint32_t a = f.coeffs[i];
            if (a == zero) continue;
            for (uint32_t j = 0; j < g.coeffs.size(); ++j) {
                uint32_t b = g.coeffs[j];
                if (b == zero) continue;
                bool ok = true;
                std::optional<uint32_t> probe;
                switch (variant) {
                    case Prop::Armendariz: ok = ring.mul(a, b) == zero; break;
                    case Prop::WeakArmendariz: ok = ctx.nilpotent[ring.mul(a, b)]; break;
                    case Prop::IdealArmendariz:
                        ok = (ctx.sandwich[size_t(a) * n + b] & 1) != 0;
                        if (!ok)
                            for (uint32_t r = 0; r < n; ++r)
                                if (ring.mul(ring.mul(a, r), b) != zero) {
                                    probe = r;
                                    break;
                                }
                        break;
                    case Prop::StronglyNilIfp:
                        ok = (ctx.sandwich[size_t(a) * n + b] & 2) != 0;
                        if (!ok)
                            for (uint32_t r = 0; r < n; ++r)
                                if (!ctx.nilpotent[ring.mul(ring.mul(a, r), b)]) {
                                    probe = r;
                                    break;
                                }
                        break;
                    default: break;
                }
                if (!ok) {
                    Witness w;
                    w.kind = Witness::Kind::Polys;
                    w.f = f.coeffs;
                    w.g = g.coeffs;
                    w.i = i;
                    w.j = j;
                    w.r = probe;
                    found = Verdict::fails(std::move(w),
                                           scan_cert("zero-product pair scan"));
                    return false;
                }
            }
        }
        return true;
    };
    ScanOutcome outcome = zero_product_pairs(ring, max_degree, budget, on_pair, &work);
    if (found) {
        found->work = work;
        return *found;
    }
    if (outcome == ScanOutcome::BudgetExceeded) {
        Verdict v = Verdict::unknown("budget exceeded during the pair scan");
        v.degree_bound = max_degree;
        v.work = work;
        return v;
    }
    Verdict v = Verdict::holds_at(
        max_degree, scan_cert("exhaustive over zero products at degree <= " +
                              std::to_string(max_degree)));
    v.work = work;
    return v;
}

namespace {

// exact non-nilpotency in a presented algebra, using the algebra's own rule
// or a supplied finite-ring image certificate
bool verified_non_nilpotent(const PresentedAlgebra& alg, const AlgValue& value,
                            const AlgebraWitness& w, uint32_t power_bound, std::string* how) {
    AlgNilpotency nil = alg.nilpotency(value, power_bound);
    if (nil.status == NilStatus::NotNilpotent && nil.exact) {
        *how = nil.note;
        return true;
    }
    if (nil.status == NilStatus::Nilpotent && nil.exact) return false;
    if (!w.image_expr) return false;
    // check the generator map kills every relation, then test the image
    FiniteRing target = eval_expr(*w.image_expr);
    const Presentation& pres = alg.presentation();
    if (w.image_of_gens.size() != pres.gens.size()) return false;
    auto eval_word = [&](const Word& word) {
        if (word.empty()) return target.one() ? *target.one() : target.zero();
        uint32_t acc = w.image_of_gens[word[0]];
        for (size_t k = 1; k < word.size(); ++k)
            acc = target.mul(acc, w.image_of_gens[word[k]]);
        return acc;
    };
    auto eval_combo = [&](const WordCombo& combo) {
        uint32_t acc = target.zero();
        for (const Term& t : combo) acc = target.add(acc, target.smul(t.coeff, eval_word(t.word)));
        return acc;
    };
    // the presentation's scalar field must embed: p * 1 = 0 in the target
    if (target.unital() && target.smul(pres.p, *target.one()) != target.zero()) return false;
    // image of the constant-free part: the subring generated by the images
    std::vector<uint32_t> gen_images(w.image_of_gens.begin(), w.image_of_gens.end());
    ElementSubset image_subring = subset_closure(target, gen_images, ClosureMode::Subring);
    auto param_values = image_subring.members();
    for (const Relation& rel : pres.relations) {
        // instantiate every gap over the image subring (gap values of the
        // constant-free algebra land there)
        std::vector<size_t> gap_positions;
        for (size_t k = 0; k < rel.items.size(); ++k)
            if (rel.items[k].is_gap) gap_positions.push_back(k);
        std::vector<uint32_t> assignment(gap_positions.size(), 0);
        bool done = false;
        while (!done) {
            uint32_t acc = target.one() ? *target.one() : target.zero();
            bool first = true;
            size_t gap_idx = 0;
            for (const TemplateItem& item : rel.items) {
                uint32_t v;
                if (item.is_gap)
                    v = param_values[assignment[gap_idx++]];
                else
                    v = eval_combo(item.fixed);
                acc = first && !target.one() ? v : target.mul(acc, v);
                first = false;
            }
            if (rel.squared) acc = target.mul(acc, acc);
            if (acc != target.zero()) return false; // map does not kill the ideal
            // odometer over gap assignments
            size_t k = 0;
            while (k < assignment.size() && assignment[k] + 1 == param_values.size())
                assignment[k++] = 0;
            if (k == assignment.size())
                done = true;
            else
                ++assignment[k];
            if (assignment.empty()) done = true;
        }
    }
    uint32_t img = eval_combo(value.combo);
    if (!is_nilpotent(target, img).nilpotent) {
        *how = "non-nilpotent image in " + target.label();
        return true;
    }
    return false;
}

} // namespace

Verdict decide_on_algebra(const PresentedAlgebra& alg, Prop variant,
                          const std::vector<AlgebraWitness>& witnesses,
                          const AlgebraSearchConfig& config) {
    for (const AlgebraWitness& w : witnesses) {
        std::vector<AlgValue> f, g;
        for (const std::string& s : w.f) f.push_back(alg.parse(s));
        for (const std::string& s : w.g) g.push_back(alg.parse(s));

        auto fails = [&](Witness::Kind, std::string note) {
            Witness wit;
            wit.kind = Witness::Kind::Polys;
            wit.i = w.i;
            wit.j = w.j;
            wit.note = std::move(note);
            Verdict v = Verdict::fails(std::move(wit),
                                       {Certificate::Kind::ExhaustiveScan, "witness replay"});
            return v;
        };

        switch (variant) {
            case Prop::Armendariz:
            case Prop::WeakArmendariz:
            case Prop::StronglyNilIfp:
            case Prop::IdealArmendariz:
            case Prop::WeakIdealArmendariz: {
                auto res = verify_poly_identity(alg, f, g);
                if (!res.zero || !res.exact) continue; // witness does not replay
                if (w.i >= f.size() || w.j >= g.size()) continue;
                AlgValue prod;
                std::string role;
                if (w.r) {
                    prod = alg.mul(alg.mul(f[w.i], alg.parse(*w.r)), g[w.j]);
                    role = "a_i * r * b_j";
                } else {
                    prod = alg.mul(f[w.i], g[w.j]);
                    role = "a_i * b_j";
                }
                if (variant == Prop::Armendariz || variant == Prop::IdealArmendariz ||
                    variant == Prop::WeakIdealArmendariz) {
                    auto ans = alg.is_zero(prod);
                    if (!ans.in_ideal && ans.exact)
                        return fails(Witness::Kind::Polys,
                                     "f*g = 0 but " + role + " = " + alg.render(prod) + " != 0");
                } else {
                    std::string how;
                    if (verified_non_nilpotent(alg, prod, w, config.power_bound, &how))
                        return fails(Witness::Kind::Polys, "f*g = 0 but " + role + " = " +
                                                               alg.render(prod) +
                                                               " is not nilpotent: " + how);
                }
                break;
            }
            case Prop::Semicommutative:
            case Prop::WeaklySemicommutative: {
                if (f.size() != 1 || g.size() != 1 || !w.r) continue;
                auto zero = alg.is_zero(alg.mul(f[0], g[0]));
                if (!zero.in_ideal || !zero.exact) continue;
                AlgValue arb = alg.mul(alg.mul(f[0], alg.parse(*w.r)), g[0]);
                if (variant == Prop::Semicommutative) {
                    auto ans = alg.is_zero(arb);
                    if (!ans.in_ideal && ans.exact)
                        return fails(Witness::Kind::Polys,
                                     "a*b = 0 but a*r*b = " + alg.render(arb) + " != 0");
                } else {
                    std::string how;
                    if (verified_non_nilpotent(alg, arb, w, config.power_bound, &how))
                        return fails(Witness::Kind::Polys, "a*b = 0 but a*r*b = " +
                                                               alg.render(arb) +
                                                               " is not nilpotent: " + how);
                }
                break;
            }
            case Prop::Reversible: {
                if (f.size() != 1 || g.size() != 1) continue;
                auto zero = alg.is_zero(alg.mul(f[0], g[0]));
                if (!zero.in_ideal || !zero.exact) continue;
                auto back = alg.is_zero(alg.mul(g[0], f[0]));
                if (!back.in_ideal && back.exact)
                    return fails(Witness::Kind::Polys, "a*b = 0 but b*a != 0");
                break;
            }
            case Prop::Reduced: {
                if (f.size() != 1) continue;
                auto sq = alg.is_zero(alg.mul(f[0], f[0]));
                auto self = alg.is_zero(f[0]);
                if (sq.in_ideal && sq.exact && !self.in_ideal && self.exact)
                    return fails(Witness::Kind::Polys, "a != 0 with a*a = 0");
                break;
            }
            default: continue;
        }
    }

    // randomized search over sparse low-degree polynomials; it can only add
    // Fails evidence, never Holds
    if (config.random_trials > 0 && prop_is_bounded(variant)) {
        std::mt19937_64 rng(config.seed);
        const auto& gens = alg.presentation().gens;
        auto random_elem = [&]() {
            Word w;
            uint32_t len = 1 + rng() % 2;
            for (uint32_t k = 0; k < len; ++k) w.push_back(uint32_t(rng() % gens.size()));
            return AlgValue{{Term{std::move(w), 1}}, true};
        };
        for (uint64_t t = 0; t < config.random_trials; ++t) {
            std::vector<AlgValue> f, g;
            uint32_t df = 1 + rng() % config.max_degree, dg = 1 + rng() % config.max_degree;
            for (uint32_t k = 0; k <= df; ++k) f.push_back(random_elem());
            for (uint32_t k = 0; k <= dg; ++k) g.push_back(random_elem());
            auto res = verify_poly_identity(alg, f, g);
            if (!res.zero || !res.exact) continue;
            for (uint32_t i = 0; i <= df; ++i)
                for (uint32_t j = 0; j <= dg; ++j) {
                    AlgValue prod = alg.mul(f[i], g[j]);
                    bool violated = false;
                    std::string note;
                    if (variant == Prop::Armendariz) {
                        auto ans = alg.is_zero(prod);
                        violated = !ans.in_ideal && ans.exact;
                        note = "random pair with a_i*b_j != 0";
                    } else if (variant == Prop::WeakArmendariz) {
                        auto nil = alg.nilpotency(prod, config.power_bound);
                        violated = nil.status == NilStatus::NotNilpotent && nil.exact;
                        note = "random pair with non-nilpotent a_i*b_j";
                    }
                    if (violated) {
                        Witness wit;
                        wit.kind = Witness::Kind::Polys;
                        wit.i = i;
                        wit.j = j;
                        wit.note = note;
                        return Verdict::fails(std::move(wit),
                                              {Certificate::Kind::ExhaustiveScan,
                                               "randomized search hit"});
                    }
                }
        }
    }
    return Verdict::unknown("witness verification and search found no violation");
}

} // namespace ringlab
