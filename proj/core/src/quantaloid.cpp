#include "qlab/quantaloid.hpp"

#include <sstream>

#include "qlab/error.hpp"
#include "subsets.hpp"

namespace qlab {

using detail::for_each_subset;

FiniteQuantaloid FiniteQuantaloid::build(std::vector<std::string> object_names,
                                         std::vector<FiniteLattice> homs,
                                         std::vector<int> identities,
                                         const ComposeFn& compose,
                                         const InvolveFn* involve) {
    FiniteQuantaloid k;
    int n = static_cast<int>(object_names.size());
    if (n == 0) throw input_error("a quantaloid needs at least one object");
    if (static_cast<int>(homs.size()) != n * n)
        throw input_error("expected one hom lattice per ordered pair of objects");
    if (static_cast<int>(identities.size()) != n)
        throw input_error("expected one identity arrow per object");
    k.object_names_ = std::move(object_names);
    k.homs_ = std::move(homs);
    k.identities_ = std::move(identities);
    for (int q = 0; q < n; ++q)
        if (k.identities_[q] < 0 || k.identities_[q] >= k.hom(q, q).size())
            throw input_error("identity of '" + k.object_names_[q] +
                              "' is not an arrow of its endo-hom");
    k.comp_.resize(static_cast<size_t>(n) * n * n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            for (int r = 0; r < n; ++r) {
                auto& tab = k.comp_[(p * n + q) * n + r];
                int a = k.hom(p, q).size(), b = k.hom(q, r).size(), c = k.hom(p, r).size();
                tab.resize(static_cast<size_t>(a) * b);
                for (int v = 0; v < b; ++v)
                    for (int u = 0; u < a; ++u) {
                        int w = compose(p, q, r, v, u);
                        if (w < 0 || w >= c)
                            throw input_error("composition table entry out of range");
                        tab[static_cast<size_t>(v) * a + u] = w;
                    }
            }
    if (involve) {
        k.inv_.resize(static_cast<size_t>(n) * n);
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
                auto& tab = k.inv_[p * n + q];
                tab.resize(k.hom(p, q).size());
                for (int u = 0; u < k.hom(p, q).size(); ++u) {
                    int w = (*involve)(p, q, u);
                    if (w < 0 || w >= k.hom(q, p).size())
                        throw input_error("involution table entry out of range");
                    tab[u] = w;
                }
            }
    }
    return k;
}

QArrow FiniteQuantaloid::arrow(int p, int q, int local) const {
    if (p < 0 || p >= objects() || q < 0 || q >= objects())
        throw precondition_error("arrow endpoints out of range");
    if (local < 0 || local >= hom(p, q).size())
        throw precondition_error("arrow index out of range for hom(" + object_names_[p] +
                                 ", " + object_names_[q] + ")");
    return {p, q, local};
}

QArrow FiniteQuantaloid::compose(const QArrow& v, const QArrow& u) const {
    if (u.tgt != v.src)
        throw input_error("arrows are not composable: " + arrow_name(u) + " then " +
                          arrow_name(v));
    return {u.src, v.tgt, table_at(u.src, u.tgt, v.tgt, v.idx, u.idx)};
}

bool FiniteQuantaloid::leq(const QArrow& a, const QArrow& b) const {
    if (a.src != b.src || a.tgt != b.tgt)
        throw input_error("arrows with different endpoints are incomparable");
    return hom(a.src, a.tgt).leq(a.idx, b.idx);
}

QArrow FiniteQuantaloid::join(const QArrow& a, const QArrow& b) const {
    if (a.src != b.src || a.tgt != b.tgt)
        throw input_error("arrows with different endpoints have no join");
    return {a.src, a.tgt, hom(a.src, a.tgt).join(a.idx, b.idx)};
}

QArrow FiniteQuantaloid::bottom(int p, int q) const { return {p, q, hom(p, q).bottom()}; }
QArrow FiniteQuantaloid::top(int p, int q) const { return {p, q, hom(p, q).top()}; }

QArrow FiniteQuantaloid::involve(const QArrow& u) const {
    if (!involutive()) throw precondition_error("quantaloid has no involution");
    return {u.tgt, u.src, inv_[u.src * objects() + u.tgt][u.idx]};
}

QArrow FiniteQuantaloid::lres(const QArrow& w, const QArrow& u) const {
    if (w.src != u.src)
        throw input_error("left residual needs arrows with a common source");
    const auto& h = hom(u.tgt, w.tgt);
    int acc = h.bottom();
    for (int v = 0; v < h.size(); ++v)
        if (hom(w.src, w.tgt).leq(table_at(u.src, u.tgt, w.tgt, v, u.idx), w.idx))
            acc = h.join(acc, v);
    return {u.tgt, w.tgt, acc};
}

QArrow FiniteQuantaloid::rres(const QArrow& v, const QArrow& w) const {
    if (v.tgt != w.tgt)
        throw input_error("right residual needs arrows with a common target");
    const auto& h = hom(w.src, v.src);
    int acc = h.bottom();
    for (int u = 0; u < h.size(); ++u)
        if (hom(w.src, w.tgt).leq(table_at(w.src, v.src, v.tgt, v.idx, u), w.idx))
            acc = h.join(acc, u);
    return {w.src, v.src, acc};
}

std::string FiniteQuantaloid::arrow_name(const QArrow& a) const {
    std::ostringstream os;
    os << hom(a.src, a.tgt).name(a.idx) << ": " << object_names_[a.src] << " -> "
       << object_names_[a.tgt];
    return os.str();
}

ReportList check_quantaloid_axioms(const FiniteQuantaloid& k, int subset_bound) {
    ReportList out;
    int n = k.objects();

    {
        WitnessReport r{"quantaloid.identity",
                        Verdict::pass,
                        "1_q . u = u = u . 1_p for every arrow u: p -> q"};
        for (int p = 0; p < n && r.verdict == Verdict::pass; ++p)
            for (int q = 0; q < n && r.verdict == Verdict::pass; ++q)
                for (int u = 0; u < k.hom(p, q).size(); ++u) {
                    QArrow a{p, q, u};
                    if (!(k.compose(k.identity(q), a) == a) ||
                        !(k.compose(a, k.identity(p)) == a)) {
                        r.verdict = Verdict::fail;
                        r.with("u", k.arrow_name(a));
                        break;
                    }
                }
        out.push_back(std::move(r));
    }

    {
        WitnessReport r{"quantaloid.assoc",
                        Verdict::pass,
                        "(w . v) . u = w . (v . u) for composable arrows"};
        for (int p = 0; p < n && r.verdict == Verdict::pass; ++p)
            for (int q = 0; q < n && r.verdict == Verdict::pass; ++q)
                for (int s = 0; s < n && r.verdict == Verdict::pass; ++s)
                    for (int t = 0; t < n && r.verdict == Verdict::pass; ++t)
                        for (int u = 0; u < k.hom(p, q).size() && r.verdict == Verdict::pass;
                             ++u)
                            for (int v = 0; v < k.hom(q, s).size() &&
                                            r.verdict == Verdict::pass;
                                 ++v)
                                for (int w = 0; w < k.hom(s, t).size(); ++w) {
                                    QArrow au{p, q, u}, av{q, s, v}, aw{s, t, w};
                                    if (!(k.compose(k.compose(aw, av), au) ==
                                          k.compose(aw, k.compose(av, au)))) {
                                        r.verdict = Verdict::fail;
                                        r.with("u", k.arrow_name(au))
                                            .with("v", k.arrow_name(av))
                                            .with("w", k.arrow_name(aw));
                                        break;
                                    }
                                }
        out.push_back(std::move(r));
    }

    {
        WitnessReport r{"quantaloid.sup-preservation",
                        Verdict::pass,
                        "v . (\\/ U) = \\/ (v . u) and (\\/ V) . u = \\/ (v . u)"};
        bool sampled = false;
        for (int p = 0; p < n && r.verdict == Verdict::pass; ++p)
            for (int q = 0; q < n && r.verdict == Verdict::pass; ++q)
                for (int s = 0; s < n && r.verdict == Verdict::pass; ++s) {
                    const auto& hpq = k.hom(p, q);
                    const auto& hqs = k.hom(q, s);
                    const auto& hps = k.hom(p, s);
                    if (hpq.size() > subset_bound || hqs.size() > subset_bound)
                        sampled = true;
                    // v . (\/ U)
                    for (int v = 0; v < hqs.size() && r.verdict == Verdict::pass; ++v) {
                        QArrow av{q, s, v};
                        for_each_subset(hpq.size(), subset_bound, [&](const std::vector<Elem>& us) {
                            if (r.verdict != Verdict::pass) return;
                            QArrow lhs = k.compose(av, {p, q, hpq.join_of(us)});
                            int acc = hps.bottom();
                            for (Elem u : us)
                                acc = hps.join(acc, k.compose(av, {p, q, (int)u}).idx);
                            if (lhs.idx != acc) {
                                r.verdict = Verdict::fail;
                                r.with("v", k.arrow_name(av))
                                    .with("U", detail::subset_string(hpq, us))
                                    .with("v.(\\/U)", hps.name(lhs.idx))
                                    .with("\\/(v.u)", hps.name(acc));
                            }
                        });
                    }
                    // (\/ V) . u
                    for (int u = 0; u < hpq.size() && r.verdict == Verdict::pass; ++u) {
                        QArrow au{p, q, u};
                        for_each_subset(hqs.size(), subset_bound, [&](const std::vector<Elem>& vs) {
                            if (r.verdict != Verdict::pass) return;
                            QArrow lhs = k.compose({q, s, hqs.join_of(vs)}, au);
                            int acc = hps.bottom();
                            for (Elem v : vs)
                                acc = hps.join(acc, k.compose({q, s, (int)v}, au).idx);
                            if (lhs.idx != acc) {
                                r.verdict = Verdict::fail;
                                r.with("u", k.arrow_name(au))
                                    .with("V", detail::subset_string(hqs, vs))
                                    .with("(\\/V).u", hps.name(lhs.idx))
                                    .with("\\/(v.u)", hps.name(acc));
                            }
                        });
                    }
                }
        r.note = sampled ? "sampled subsets (hom exceeds exhaustive bound)" : "all subsets";
        out.push_back(std::move(r));
    }

    if (k.involutive()) {
        WitnessReport r{"quantaloid.involution",
                        Verdict::pass,
                        "u°° = u, (u \\/ v)° = u° \\/ v°, (v . u)° = u° . v°, 1_q° = 1_q"};
        for (int q = 0; q < n && r.verdict == Verdict::pass; ++q)
            if (!(k.involve(k.identity(q)) == k.identity(q))) {
                r.verdict = Verdict::fail;
                r.with("object", k.object_name(q));
            }
        for (int p = 0; p < n && r.verdict == Verdict::pass; ++p)
            for (int q = 0; q < n && r.verdict == Verdict::pass; ++q)
                for (int u = 0; u < k.hom(p, q).size() && r.verdict == Verdict::pass; ++u) {
                    QArrow au{p, q, u};
                    if (!(k.involve(k.involve(au)) == au)) {
                        r.verdict = Verdict::fail;
                        r.with("u", k.arrow_name(au));
                        break;
                    }
                    for (int v = 0; v < k.hom(p, q).size(); ++v) {
                        QArrow av{p, q, v};
                        if (!(k.involve(k.join(au, av)) ==
                              k.join(k.involve(au), k.involve(av)))) {
                            r.verdict = Verdict::fail;
                            r.with("u", k.arrow_name(au)).with("v", k.arrow_name(av));
                            break;
                        }
                    }
                }
        for (int p = 0; p < n && r.verdict == Verdict::pass; ++p)
            for (int q = 0; q < n && r.verdict == Verdict::pass; ++q)
                for (int s = 0; s < n && r.verdict == Verdict::pass; ++s)
                    for (int u = 0; u < k.hom(p, q).size() && r.verdict == Verdict::pass; ++u)
                        for (int v = 0; v < k.hom(q, s).size(); ++v) {
                            QArrow au{p, q, u}, av{q, s, v};
                            if (!(k.involve(k.compose(av, au)) ==
                                  k.compose(k.involve(au), k.involve(av)))) {
                                r.verdict = Verdict::fail;
                                r.with("u", k.arrow_name(au)).with("v", k.arrow_name(av));
                                break;
                            }
                        }
        out.push_back(std::move(r));
    }

    {
        WitnessReport r{"quantaloid.residuals",
                        Verdict::pass,
                        "v . u <= w  iff  v <= w / u  iff  u <= v \\ w"};
        for (int p = 0; p < n && r.verdict == Verdict::pass; ++p)
            for (int q = 0; q < n && r.verdict == Verdict::pass; ++q)
                for (int s = 0; s < n && r.verdict == Verdict::pass; ++s)
                    for (int u = 0; u < k.hom(p, q).size() && r.verdict == Verdict::pass; ++u)
                        for (int v = 0; v < k.hom(q, s).size() && r.verdict == Verdict::pass;
                             ++v)
                            for (int w = 0; w < k.hom(p, s).size(); ++w) {
                                QArrow au{p, q, u}, av{q, s, v}, aw{p, s, w};
                                bool below = k.leq(k.compose(av, au), aw);
                                bool via_l = k.leq(av, k.lres(aw, au));
                                bool via_r = k.leq(au, k.rres(av, aw));
                                if (below != via_l || below != via_r) {
                                    r.verdict = Verdict::fail;
                                    r.with("u", k.arrow_name(au))
                                        .with("v", k.arrow_name(av))
                                        .with("w", k.arrow_name(aw));
                                    break;
                                }
                            }
        out.push_back(std::move(r));
    }

    return out;
}

std::optional<QArrow> right_adjoint_of(const FiniteQuantaloid& k, const QArrow& u) {
    QArrow cand = k.rres(u, k.identity(u.tgt));  // largest t with u . t <= 1_tgt
    auto is_adjoint = [&](const QArrow& t) {
        return k.leq(k.identity(u.src), k.compose(t, u)) &&
               k.leq(k.compose(u, t), k.identity(u.tgt));
    };
    bool cand_ok = is_adjoint(cand);
    // exhaustive cross-check over hom(tgt, src)
    const auto& h = k.hom(u.tgt, u.src);
    std::optional<QArrow> found;
    for (int t = 0; t < h.size(); ++t) {
        QArrow at{u.tgt, u.src, t};
        if (is_adjoint(at)) {
            if (found && !(*found == at))
                throw internal_check_error("two distinct right adjoints for " +
                                           k.arrow_name(u));
            found = at;
        }
    }
    if (cand_ok != found.has_value() || (cand_ok && !(cand == *found)))
        throw internal_check_error("residual candidate and exhaustive scan disagree on the "
                                   "right adjoint of " +
                                   k.arrow_name(u));
    if (!cand_ok) return std::nullopt;
    return cand;
}

WitnessReport map_calculation_check(const FiniteQuantaloid& k, const QArrow& u) {
    auto adj = right_adjoint_of(k, u);
    if (!adj)
        throw precondition_error("map calculation applies to left adjoints only; " +
                                 k.arrow_name(u) + " has no right adjoint");
    QArrow ustar = *adj;
    WitnessReport r{"quantaloid.map-calculation",
                    Verdict::pass,
                    "for a left adjoint u: v . u = v / u* and u* . w = u \\ w"};
    r.with("u", k.arrow_name(u)).with("u*", k.arrow_name(ustar));
    int n = k.objects();
    for (int t = 0; t < n && r.verdict == Verdict::pass; ++t) {
        for (int v = 0; v < k.hom(u.tgt, t).size(); ++v) {
            QArrow av{u.tgt, t, v};
            if (!(k.compose(av, u) == k.lres(av, ustar))) {
                r.verdict = Verdict::fail;
                r.with("v", k.arrow_name(av));
                break;
            }
        }
        for (int w = 0; w < k.hom(t, u.tgt).size(); ++w) {
            QArrow aw{t, u.tgt, w};
            if (!(k.compose(ustar, aw) == k.rres(u, aw))) {
                r.verdict = Verdict::fail;
                r.with("w", k.arrow_name(aw));
                break;
            }
        }
    }
    return r;
}

FiniteQuantaloid one_object_quantaloid(const Quantale& q) {
    std::vector<FiniteLattice> homs{q.lattice()};
    FiniteQuantaloid::ComposeFn comp = [&q](int, int, int, int v, int u) {
        return q.tensor(v, u);
    };
    FiniteQuantaloid::InvolveFn inv = [](int, int, int u) { return u; };
    return FiniteQuantaloid::build({"*"}, std::move(homs), {q.unit()}, comp, &inv);
}

}  // namespace qlab
