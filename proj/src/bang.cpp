#include "pcoh/bang.hpp"

#include <algorithm>
#include <utility>

#include "pcoh/errors.hpp"
#include "pcoh/tensor.hpp"

namespace pcoh {
namespace {

Polytope ball_with_vrep(const Pcs& p) {
    if (p.ball().has_vrep()) return p.ball();
    return p.ball().converted();
}

// Sparse polynomial over base-web variables: sorted multiset -> coefficient.
using Poly = std::map<std::vector<int>, Rat>;

std::vector<int> key_with(const std::vector<int>& key, int a) {
    std::vector<int> out = key;
    out.insert(std::upper_bound(out.begin(), out.end(), a), a);
    return out;
}

// Multiply by the linear form sum_a coeff_a x_a; cap < 0 disables the bound.
Poly poly_mul_linear(const Poly& poly, const std::vector<std::pair<int, Rat>>& form, int cap) {
    Poly out;
    for (const auto& [key, c] : poly)
        for (const auto& [a, fa] : form) {
            if (cap >= 0 && static_cast<int>(key.size()) + 1 > cap)
                throw TruncationError("polynomial degree exceeds the truncation bound");
            out[key_with(key, a)] += c * fa;
        }
    return out;
}

// Split a multiset over the tagged-union web of p & q into the two parts,
// un-offsetting the second component.
std::pair<std::vector<int>, std::vector<int>> split_tagged(const std::vector<int>& m, int np) {
    std::vector<int> left, right;
    for (int e : m)
        (e < np ? left : right).push_back(e < np ? e : e - np);
    return {std::move(left), std::move(right)};
}

}  // namespace

BangSpace::BangSpace(Pcs base, int degree, int web_cap)
    : base_(std::move(base)), degree_(degree) {
    if (degree_ < 0) throw PartialityError("bang: negative truncation degree");
    int n = base_.dim();

    multisets_.push_back({});
    std::vector<std::vector<int>> layer{{}};
    for (int k = 1; k <= degree_; ++k) {
        std::vector<std::vector<int>> next;
        for (const auto& m : layer)
            for (int a = m.empty() ? 0 : m.back(); a < n; ++a) {
                next.push_back(m);
                next.back().push_back(a);
                if (static_cast<int>(multisets_.size() + next.size()) > web_cap)
                    throw SizeCapError("bang: multiset web exceeds the size cap");
            }
        multisets_.insert(multisets_.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    for (int i = 0; i < size(); ++i) lookup_[multisets_[i]] = i;

    std::vector<std::string> labels;
    labels.reserve(multisets_.size());
    for (const auto& m : multisets_) {
        std::string lab = "[";
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (j > 0) lab += ",";
            lab += base_.web()->label(m[j]);
        }
        lab += "]";
        labels.push_back(std::move(lab));
    }
    WebPtr web = make_web(std::move(labels));

    // Light ball: promotions of the base generators, plus the promotion of
    // their barycenter so every multiset coordinate is reachable.
    Polytope vb = ball_with_vrep(base_);
    RatVec bar;
    for (const auto& g : vb.vrep()) bar = bar + g;
    if (!vb.vrep().empty()) bar = bar.scaled(rat(1, static_cast<long>(vb.vrep().size())));
    std::vector<RatVec> gens;
    auto promoted = [&](const RatVec& x) {
        RatVec v;
        for (int i = 0; i < size(); ++i) {
            Rat c = monomial(x, i);
            if (c != 0) v.set(i, c);
        }
        return v;
    };
    for (const auto& g : vb.vrep()) gens.push_back(promoted(g));
    gens.push_back(promoted(bar));
    object_ = Pcs::from_ball(Polytope::from_vrep(web, std::move(gens)));
}

int BangSpace::index_of(const std::vector<int>& sorted_elems) const {
    auto it = lookup_.find(sorted_elems);
    return it == lookup_.end() ? -1 : it->second;
}

Rat BangSpace::monomial(const RatVec& x, int index) const {
    Rat acc = 1;
    for (int a : multisets_[index]) {
        acc *= x.at(a);
        if (acc == 0) return acc;
    }
    return acc;
}

RatVec promote_vec(const BangSpace& bs, const RatVec& x) {
    if (bs.base().norm(x) > 1) throw BoundError("promote: input norm exceeds 1");
    RatVec out;
    for (int i = 0; i < bs.size(); ++i) {
        Rat c = bs.monomial(x, i);
        if (c != 0) out.set(i, c);
    }
    return out;
}

ConeElem promote(const ConeElem& x, int degree) {
    const auto* pc = dynamic_cast<const PcsCone*>(x.cone.get());
    if (pc == nullptr) throw PartialityError("promote: input must live in a space-backed cone");
    BangSpace bs(pc->space(), degree);
    RatVec v = promote_vec(bs, x.vec);
    return elem(make_pcs_cone(bs.object()), std::move(v));
}

MorphMatrix dereliction(const Pcs& base, int degree) {
    BangSpace bs(base, degree);
    std::vector<RatVec> rows(static_cast<std::size_t>(bs.size()));
    for (int a = 0; a < base.dim(); ++a) {
        int idx = bs.index_of({a});
        if (idx >= 0) rows[static_cast<std::size_t>(idx)] = RatVec::unit(a);
    }
    return MorphMatrix::make(bs.object(), base, std::move(rows));
}

MorphMatrix digging(const Pcs& base, int degree, int outer, int inner) {
    if (outer < 0 || inner < 0) throw PartialityError("digging: negative degree");
    if (degree < outer * inner)
        throw TruncationError("digging: domain degree below outer * inner");
    BangSpace dom(base, degree);
    BangSpace inner_bs(base, inner);
    BangSpace outer_bs(inner_bs.object(), outer);

    std::vector<RatVec> rows(static_cast<std::size_t>(dom.size()));
    for (int mi = 0; mi < outer_bs.size(); ++mi) {
        std::vector<int> flat;
        for (int elem : outer_bs.multiset(mi)) {
            const auto& part = inner_bs.multiset(elem);
            flat.insert(flat.end(), part.begin(), part.end());
        }
        std::sort(flat.begin(), flat.end());
        int src = dom.index_of(flat);
        if (src < 0) throw TruncationError("digging: flattened multiset exceeds the domain degree");
        rows[static_cast<std::size_t>(src)].set(mi, rat(1));
    }
    return MorphMatrix::make(dom.object(), outer_bs.object(), std::move(rows));
}

MorphMatrix truncation_morphism(const Pcs& base, int from_degree, int to_degree) {
    if (to_degree > from_degree)
        throw TruncationError("truncation: target degree above the source degree");
    BangSpace dom(base, from_degree);
    BangSpace cod(base, to_degree);
    std::vector<RatVec> rows(static_cast<std::size_t>(dom.size()));
    for (int i = 0; i < dom.size(); ++i) {
        int j = cod.index_of(dom.multiset(i));
        if (j >= 0) rows[static_cast<std::size_t>(i)] = RatVec::unit(j);
    }
    return MorphMatrix::make(dom.object(), cod.object(), std::move(rows));
}

MorphMatrix bang_functor(const MorphMatrix& f, int degree) {
    BangSpace dom(f.dom(), degree);
    BangSpace cod(f.cod(), degree);

    // Columns of f as sparse linear forms.
    std::vector<std::vector<std::pair<int, Rat>>> col(static_cast<std::size_t>(f.cod().dim()));
    for (int a = 0; a < f.dom().dim(); ++a)
        for (const auto& [b, v] : f.row(a).entries())
            col[static_cast<std::size_t>(b)].push_back({a, v});

    std::vector<RatVec> rows(static_cast<std::size_t>(dom.size()));
    for (int j = 0; j < cod.size(); ++j) {
        Poly poly{{{}, rat(1)}};
        for (int b : cod.multiset(j)) {
            poly = poly_mul_linear(poly, col[static_cast<std::size_t>(b)], degree);
            if (poly.empty()) break;
        }
        for (const auto& [m, c] : poly) {
            int src = dom.index_of(m);
            if (src < 0) throw TruncationError("bang functor: monomial exceeds the degree bound");
            rows[static_cast<std::size_t>(src)].set(j, c);
        }
    }
    // Valid on the true balls since (!f) . x^! = (f.x)^!; the light inner
    // hull of the object cannot certify this, so checks are pointwise in tests.
    return MorphMatrix::make(dom.object(), cod.object(), std::move(rows),
                             MorphMatrix::Check::Skip);
}

MorphMatrix seely_zero(int degree) {
    BangSpace top(pcs_top(), degree);
    return MorphMatrix::make(pcs_one(), top.object(), {RatVec::unit(0)});
}

MorphMatrix seely_zero_inv(int degree) {
    BangSpace top(pcs_top(), degree);
    return MorphMatrix::make(top.object(), pcs_one(), {RatVec::unit(0)});
}

MorphMatrix seely_two(const Pcs& p, const Pcs& q, int degree) {
    BangSpace bp(p, degree);
    BangSpace bq(q, degree);
    BangSpace bpq(with_product({p, q}), degree);
    Pcs dom = tensor_object(bp.object(), bq.object());

    int np = p.dim();
    std::vector<RatVec> rows(static_cast<std::size_t>(dom.dim()));
    for (int i = 0; i < bp.size(); ++i)
        for (int j = 0; j < bq.size(); ++j) {
            std::vector<int> merged = bp.multiset(i);
            for (int e : bq.multiset(j)) merged.push_back(e + np);
            std::sort(merged.begin(), merged.end());
            int idx = bpq.index_of(merged);
            RatVec row;
            if (idx >= 0) row = RatVec::unit(idx);  // overweight pairs map to zero
            rows[static_cast<std::size_t>(pair_index(i, j, bq.size()))] = std::move(row);
        }
    // Valid on the true balls (it sends x^! (x) y^! to (x,y)^!); the light
    // domain hull contains mixed barycenter pairs the codomain hull misses,
    // so generator checking is not applicable.
    return MorphMatrix::make(dom, bpq.object(), std::move(rows), MorphMatrix::Check::Skip);
}

MorphMatrix seely_two_inv(const Pcs& p, const Pcs& q, int degree) {
    BangSpace bp(p, degree);
    BangSpace bq(q, degree);
    BangSpace bpq(with_product({p, q}), degree);
    Pcs cod = tensor_object(bp.object(), bq.object());

    int np = p.dim();
    std::vector<RatVec> rows(static_cast<std::size_t>(bpq.size()));
    for (int mi = 0; mi < bpq.size(); ++mi) {
        auto [left, right] = split_tagged(bpq.multiset(mi), np);
        int i = bp.index_of(left);
        int j = bq.index_of(right);
        if (i < 0 || j < 0)
            throw TruncationError("seely: component multiset exceeds the factor degree");
        rows[static_cast<std::size_t>(mi)] = RatVec::unit(pair_index(i, j, bq.size()));
    }
    return MorphMatrix::make(bpq.object(), cod, std::move(rows));
}

StableFn StableFn::make(BangSpace dom, Pcs cod, std::vector<RatVec> rows,
                        MorphMatrix::Check check) {
    MorphMatrix mat = MorphMatrix::make(dom.object(), std::move(cod), std::move(rows), check);
    return StableFn(std::move(dom), std::move(mat));
}

RatVec StableFn::eval_vec(const RatVec& x) const {
    return mat_.apply_vec(promote_vec(dom_, x));
}

bool StableFn::operator==(const StableFn& other) const {
    return dom_.degree() == other.dom_.degree() && mat_ == other.mat_;
}

ConeElem eval_stable(const StableFn& f, const ConeElem& x) {
    if (!(*x.cone->web() == *f.dom_space().base().web()))
        throw WebMismatchError("eval_stable: input web differs from the domain base web");
    return elem(make_pcs_cone(f.cod()), f.eval_vec(x.vec));
}

StableFn dereliction_stable(const Pcs& base, int degree) {
    BangSpace bs(base, degree);
    MorphMatrix der = dereliction(base, degree);
    return StableFn::make(std::move(bs), base, der.rows(), MorphMatrix::Check::Skip);
}

StableFn kleisli_compose(const StableFn& f, const StableFn& g, int out_degree) {
    if (!(*f.cod().web() == *g.dom_space().base().web()))
        throw WebMismatchError("kleisli: codomain of the first differs from the base of the second");
    if (out_degree < 0) out_degree = f.dom_space().degree() * g.dom_space().degree();

    // The coordinates of f^ as sparse polynomials in the domain variables.
    const BangSpace& fd = f.dom_space();
    int nb = f.cod().dim();
    std::vector<Poly> y(static_cast<std::size_t>(nb));
    for (int m = 0; m < fd.size(); ++m)
        for (const auto& [b, c] : f.matrix().row(m).entries())
            y[static_cast<std::size_t>(b)][fd.multiset(m)] += c;

    BangSpace out_dom(fd.base(), out_degree);
    std::vector<RatVec> rows(static_cast<std::size_t>(out_dom.size()));
    const BangSpace& gd = g.dom_space();
    for (int p = 0; p < gd.size(); ++p) {
        const RatVec& grow = g.matrix().row(p);
        if (grow.is_zero()) continue;
        // y^p as an exact polynomial product
        Poly pow{{{}, rat(1)}};
        for (int b : gd.multiset(p)) {
            Poly next;
            for (const auto& [k1, c1] : pow)
                for (const auto& [k2, c2] : y[static_cast<std::size_t>(b)]) {
                    std::vector<int> k = k1;
                    k.insert(k.end(), k2.begin(), k2.end());
                    std::sort(k.begin(), k.end());
                    if (static_cast<int>(k.size()) > out_degree)
                        throw TruncationError(
                            "kleisli: composite monomial exceeds the output degree");
                    next[std::move(k)] += c1 * c2;
                }
            pow = std::move(next);
            if (pow.empty()) break;
        }
        for (const auto& [m, c] : pow) {
            int idx = out_dom.index_of(m);
            for (const auto& [b, gv] : grow.entries()) {
                RatVec& row = rows[static_cast<std::size_t>(idx)];
                row.set(b, row.at(b) + gv * c);
            }
        }
    }
    return StableFn::make(std::move(out_dom), g.cod(), std::move(rows),
                          MorphMatrix::Check::Skip);
}

Pcs stable_fn_space(const BangSpace& q, const Pcs& r) { return limpl(q.object(), r); }

StableFn stab_lin_exchange(const MorphMatrix& f, const BangSpace& q, const Pcs& r) {
    WebPtr expect = pair_web(*q.web(), *r.web());
    if (!(*f.cod().web() == *expect))
        throw WebMismatchError("exchange: codomain is not the expected function-space web");
    int nr = r.dim();
    std::vector<RatVec> rows(static_cast<std::size_t>(q.size()));
    for (int a = 0; a < f.dom().dim(); ++a)
        for (const auto& [mc, v] : f.row(a).entries()) {
            int m = mc / nr;
            int c = mc % nr;
            rows[static_cast<std::size_t>(m)].set(pair_index(a, c, nr), v);
        }
    return StableFn::make(q, limpl(f.dom(), r), std::move(rows), MorphMatrix::Check::Skip);
}

MorphMatrix stab_lin_exchange_inv(const StableFn& g, const Pcs& p, const Pcs& r) {
    WebPtr expect = pair_web(*p.web(), *r.web());
    if (!(*g.cod().web() == *expect))
        throw WebMismatchError("exchange: codomain is not the expected function-space web");
    int nr = r.dim();
    const BangSpace& q = g.dom_space();
    std::vector<RatVec> rows(static_cast<std::size_t>(p.dim()));
    for (int m = 0; m < q.size(); ++m)
        for (const auto& [ac, v] : g.matrix().row(m).entries()) {
            int a = ac / nr;
            int c = ac % nr;
            rows[static_cast<std::size_t>(a)].set(pair_index(m, c, nr), v);
        }
    return MorphMatrix::make(p, stable_fn_space(q, r), std::move(rows),
                             MorphMatrix::Check::Skip);
}

StabilityReport total_monotonicity_check(const VecFn& f, const Pcs& dom,
                                         const std::vector<std::vector<RatVec>>& tuples) {
    for (std::size_t ti = 0; ti < tuples.size(); ++ti) {
        const auto& tup = tuples[ti];
        RatVec total;
        for (const auto& x : tup) total = total + x;
        if (!dom.member(total))
            throw BoundError("total_monotonicity_check: tuple sum escapes the domain ball");

        int n = static_cast<int>(tup.size());
        RatVec even, odd;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            RatVec s;
            int bits = 0;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) {
                    s = s + tup[static_cast<std::size_t>(i)];
                    ++bits;
                }
            RatVec v = f(s);
            if (bits % 2 == 0)
                even = even + v;
            else
                odd = odd + v;
        }
        // Signs alternate with n - |S|: subsets matching n's parity count
        // positively, so for odd n the roles of the two groups swap.
        bool holds = (n % 2 == 0) ? odd.leq(even) : even.leq(odd);
        if (!holds) {
            StabilityReport rep;
            rep.ok = false;
            rep.tuple_index = static_cast<int>(ti);
            rep.tuple = tup;
            rep.odd_sum = std::move(odd);
            rep.even_sum = std::move(even);
            return rep;
        }
    }
    return StabilityReport{};
}

DualRefutation bang_dual_refute(const BangSpace& bs, const RatVec& w, int grid_denominator) {
    if (!w.is_nonnegative()) throw PartialityError("dual refutation: negative functional entry");
    if (w.max_index() >= bs.size())
        throw WebMismatchError("dual refutation: functional exits the multiset web");
    if (grid_denominator <= 0) throw PartialityError("dual refutation: bad grid denominator");

    int n = bs.base().dim();
    double grid_points = 1;
    for (int i = 0; i < n; ++i) grid_points *= grid_denominator + 1;
    if (grid_points > 200000) throw SizeCapError("dual refutation: grid too large");

    DualRefutation out;
    out.value = 0;
    std::vector<int> odo(static_cast<std::size_t>(n), 0);
    while (true) {
        RatVec u;
        for (int i = 0; i < n; ++i)
            if (odo[static_cast<std::size_t>(i)] > 0)
                u.set(i, rat(odo[static_cast<std::size_t>(i)], grid_denominator));
        if (bs.base().member(u)) {
            Rat val = 0;
            for (const auto& [idx, wv] : w.entries()) val += wv * bs.monomial(u, idx);
            if (val > 1) {
                out.refuted = true;
                out.witness = std::move(u);
                out.value = val;
                return out;
            }
            if (val > out.value) out.value = val;
        }
        int pos = n - 1;
        while (pos >= 0 && odo[static_cast<std::size_t>(pos)] == grid_denominator) {
            odo[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++odo[static_cast<std::size_t>(pos)];
    }
    return out;
}

}  // namespace pcoh
