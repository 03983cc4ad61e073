#include "qlab/topos.hpp"

#include <algorithm>

#include "qlab/error.hpp"
#include "qlab/sqleq.hpp"

namespace qlab {
namespace {

// Position of element e inside a sorted carrier list, -1 if absent.
int pos_of(const std::vector<Elem>& carrier, Elem e) {
    auto it = std::lower_bound(carrier.begin(), carrier.end(), e);
    if (it != carrier.end() && *it == e) return static_cast<int>(it - carrier.begin());
    return -1;
}

bool probe_worthy(const QSet& x, std::uint64_t budget) {
    if (!is_separated(x.category()) || !is_symmetric(x.category())) return false;
    try {
        return is_cauchy_complete(x, budget);
    } catch (const precondition_error&) {
        return false;
    }
}

// The span Q-set Z = {z_p, z_q} with self-extents p and q and cross hom
// p <sqcap> q.
QSet span_qset(std::shared_ptr<const DQ> dq, Elem p, Elem q, Elem r0) {
    const Quantale& base = dq->base();
    std::string nm = "span(" + base.elem_name(p) + "," + base.elem_name(q) + ")";
    return QSet::create(std::move(dq), std::move(nm), {"zp", "zq"}, {p, r0, r0, q});
}

}  // namespace

std::vector<QSet> default_probes(std::shared_ptr<const DQ> dq, std::uint64_t budget) {
    const Quantale& base = dq->base();
    std::vector<QSet> out;
    auto keep = [&](QSet&& cand) {
        if (!probe_worthy(cand, budget)) return;
        for (const auto& have : out)
            if (qset_isomorphic(have, cand)) return;
        out.push_back(std::move(cand));
    };
    for (Elem r = 0; r < base.size(); ++r) keep(qset_cq(dq, r));
    keep(qset_meet(dq));
    for (Elem e = 0; e < base.size(); ++e) keep(qset_point(dq, e));
    for (Elem a = 0; a < base.size(); ++a)
        for (Elem b = 0; b < base.size(); ++b)
            for (Elem c = 0; c < base.size(); ++c) {
                if (!base.leq(c, base.meet(a, b))) continue;
                try {
                    keep(QSet::create(dq, "probe", {"u", "v"}, {a, c, c, b}));
                } catch (const input_error&) {
                    // not a Q-set; skip
                }
            }
    return out;
}

WitnessReport cc_subobjects_check(std::shared_ptr<const DQ> dq, Elem q,
                                  std::uint64_t budget) {
    const Quantale& base = dq->base();
    WitnessReport r{"topos.cc-subobjects", Verdict::pass,
                    "Cauchy complete sub-Q-sets of (C_q, /\\) are exactly the C_p with "
                    "p refinement-below q"};
    r.with("q", base.elem_name(q));
    auto sq = SqleqPoset::build(base);
    std::vector<Elem> cq = sq.C(q);
    r.with("|C_q|", std::to_string(cq.size()));
    if (cq.size() > 20) {
        r.verdict = Verdict::warn;
        r.note = "subset space too large; skipped";
        return r;
    }
    std::vector<std::vector<Elem>> expected;
    for (Elem p = 0; p < base.size(); ++p)
        if (sq.sqleq(p, q)) expected.push_back(sq.C(p));
    std::sort(expected.begin(), expected.end());
    std::vector<std::vector<Elem>> found;
    bool skipped = false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cq.size()); ++mask) {
        std::vector<Elem> s;
        for (size_t i = 0; i < cq.size(); ++i)
            if ((mask >> i) & 1) s.push_back(cq[i]);
        QSet sub = qset_sub_meet(dq, s, "S");
        try {
            if (is_cauchy_complete(sub, budget)) found.push_back(s);
        } catch (const precondition_error&) {
            skipped = true;
        }
    }
    std::sort(found.begin(), found.end());
    if (skipped) {
        r.verdict = Verdict::warn;
        r.note = "some subsets exceeded the singleton budget; partial check";
    }
    if (found != expected) {
        r.verdict = Verdict::fail;
        std::vector<std::vector<Elem>> extra, missing;
        std::set_difference(found.begin(), found.end(), expected.begin(), expected.end(),
                            std::back_inserter(extra));
        std::set_difference(expected.begin(), expected.end(), found.begin(), found.end(),
                            std::back_inserter(missing));
        auto render = [&](const std::vector<Elem>& s) {
            std::string t = "{";
            for (size_t i = 0; i < s.size(); ++i) {
                if (i) t += ",";
                t += base.elem_name(s[i]);
            }
            return t + "}";
        };
        if (!extra.empty()) r.with("unexpected", render(extra.front()));
        if (!missing.empty()) r.with("missing", render(missing.front()));
        return r;
    }
    r.with("count", std::to_string(found.size()));
    // Lemma content: each complete subset is a refinement downset with a top.
    for (const auto& s : found) {
        Elem top = -1;
        for (Elem m : s) {
            bool is_top = true;
            for (Elem t : s)
                if (!sq.sqleq(t, m)) {
                    is_top = false;
                    break;
                }
            if (is_top) top = m;
        }
        if (top < 0 || sq.C(top) != s) {
            r.verdict = Verdict::fail;
            r.with("subset-without-top", std::to_string(s.size()));
            break;
        }
    }
    return r;
}

WitnessReport pullback_check(std::shared_ptr<const DQ> dq, Elem p, Elem q,
                             const std::vector<QSet>& probes, std::uint64_t budget) {
    const Quantale& base = dq->base();
    WitnessReport r{"topos.pullback", Verdict::pass,
                    "(C_{p<sqcap>q}, /\\) with the inclusions is the pullback of "
                    "(C_p, /\\) -> (Q, /\\) <- (C_q, /\\)"};
    auto sq = SqleqPoset::build(base);
    Elem r0 = sq.sqcap(std::vector<Elem>{p, q}).value;
    r.with("p", base.elem_name(p))
        .with("q", base.elem_name(q))
        .with("p<sqcap>q", base.elem_name(r0));
    std::vector<Elem> cp = sq.C(p), cq = sq.C(q), cr = sq.C(r0);
    std::vector<Elem> inter;
    std::set_intersection(cp.begin(), cp.end(), cq.begin(), cq.end(),
                          std::back_inserter(inter));
    if (inter != cr) {
        r.verdict = Verdict::fail;
        r.note = "C_p n C_q differs from C_{p<sqcap>q}";
        return r;
    }
    QSet a = qset_cq(dq, p), b = qset_cq(dq, q), pb = qset_cq(dq, r0), t = qset_meet(dq);
    auto positions = [](const std::vector<Elem>& inside, const std::vector<Elem>& of) {
        std::vector<int> m;
        m.reserve(of.size());
        for (Elem e : of) m.push_back(pos_of(inside, e));
        return m;
    };
    std::vector<int> ia = positions(cp, cr), ib = positions(cq, cr);
    std::vector<int> ja(cp.size()), jb(cq.size());
    for (size_t i = 0; i < cp.size(); ++i) ja[i] = cp[i];
    for (size_t i = 0; i < cq.size(); ++i) jb[i] = cq[i];
    if (!is_functor(pb.category(), a.category(), ia) ||
        !is_functor(pb.category(), b.category(), ib) ||
        !is_functor(a.category(), t.category(), ja) ||
        !is_functor(b.category(), t.category(), jb))
        throw internal_check_error("inclusions between meet-style Q-sets are not functors");
    for (size_t i = 0; i < cr.size(); ++i)
        if (ja[ia[i]] != jb[ib[i]])
            throw internal_check_error("pullback square does not commute");
    int cones = 0;
    bool all_probed = true;
    for (const auto& w : probes) {
        auto fs = all_functors(w.category(), a.category(), budget);
        auto gs = all_functors(w.category(), b.category(), budget);
        if (!fs || !gs) {
            all_probed = false;
            continue;
        }
        for (const auto& f : *fs)
            for (const auto& g : *gs) {
                bool cone = true;
                for (int i = 0; i < w.size(); ++i)
                    if (ja[f[i]] != jb[g[i]]) {
                        cone = false;
                        break;
                    }
                if (!cone) continue;
                ++cones;
                std::vector<int> h(w.size());
                bool lands = true;
                for (int i = 0; i < w.size() && lands; ++i) {
                    h[i] = pos_of(cr, cp[f[i]]);
                    if (h[i] < 0) lands = false;
                }
                if (!lands || !is_functor(w.category(), pb.category(), h) ||
                    [&] {
                        for (int i = 0; i < w.size(); ++i)
                            if (ia[h[i]] != f[i] || ib[h[i]] != g[i]) return true;
                        return false;
                    }()) {
                    r.verdict = Verdict::fail;
                    r.with("probe", w.name());
                    return r;
                }
            }
    }
    r.with("cones", std::to_string(cones));
    if (!all_probed) r.note = "some probes exceeded the functor budget";
    return r;
}

WitnessReport pushout_check(std::shared_ptr<const DQ> dq, Elem p, Elem q,
                            const std::vector<QSet>& probes, std::uint64_t budget) {
    const Quantale& base = dq->base();
    WitnessReport r{"topos.pushout", Verdict::pass,
                    "the completion of the span {z_p, z_q} is the pushout of "
                    "(C_p, /\\) <- (C_{p<sqcap>q}, /\\) -> (C_q, /\\)"};
    auto sq = SqleqPoset::build(base);
    Elem r0 = sq.sqcap(std::vector<Elem>{p, q}).value;
    r.with("p", base.elem_name(p))
        .with("q", base.elem_name(q))
        .with("p<sqcap>q", base.elem_name(r0));
    QSet z = span_qset(dq, p, q, r0);
    Completion cz = cauchy_completion(z, budget);
    r.with("|Z^|", std::to_string(cz.carrier.size()));

    QSet a = qset_cq(dq, p), b = qset_cq(dq, q), pz = qset_cq(dq, r0);
    std::vector<Elem> cp = sq.C(p), cq = sq.C(q), cr = sq.C(r0);
    // Legs: complete the point inclusions {p} -> Z and {q} -> Z; the
    // completion of {p} is index-aligned with C_p.
    QSet ptp = qset_point(dq, p), ptq = qset_point(dq, q);
    Completion cptp = cauchy_completion(ptp, budget), cptq = cauchy_completion(ptq, budget);
    if (cptp.carrier.size() != cp.size() || cptq.carrier.size() != cq.size())
        throw internal_check_error("completion of a point is not aligned with the "
                                   "relative idempotents");
    for (size_t i = 0; i < cp.size(); ++i)
        if (cptp.carrier[i].values != std::vector<Elem>{cp[i]})
            throw internal_check_error("completion of a point is not aligned with the "
                                       "relative idempotents");
    std::vector<int> leg_p = hat_functor(ptp, z, {0}, cptp, cz);
    std::vector<int> leg_q = hat_functor(ptq, z, {1}, cptq, cz);
    for (size_t i = 0; i < cr.size(); ++i) {
        int via_p = leg_p[pos_of(cp, cr[i])];
        int via_q = leg_q[pos_of(cq, cr[i])];
        if (via_p != via_q) {
            r.verdict = Verdict::fail;
            r.note = "inner square does not commute";
            r.with("at", base.elem_name(cr[i]));
            return r;
        }
    }
    if (!is_functor(a.category(), cz.hat.category(), leg_p) ||
        !is_functor(b.category(), cz.hat.category(), leg_q))
        throw internal_check_error("pushout legs are not functors");

    int cocones = 0;
    bool all_probed = true;
    for (const auto& w : probes) {
        auto fs = all_functors(a.category(), w.category(), budget);
        auto gs = all_functors(b.category(), w.category(), budget);
        auto hs = all_functors(cz.hat.category(), w.category(), budget);
        if (!fs || !gs || !hs) {
            all_probed = false;
            continue;
        }
        for (const auto& f : *fs)
            for (const auto& g : *gs) {
                bool cocone = true;
                for (size_t i = 0; i < cr.size() && cocone; ++i)
                    if (f[pos_of(cp, cr[i])] != g[pos_of(cq, cr[i])]) cocone = false;
                if (!cocone) continue;
                ++cocones;
                int mediators = 0;
                for (const auto& h : *hs) {
                    bool match = true;
                    for (size_t i = 0; i < cp.size() && match; ++i)
                        if (h[leg_p[i]] != f[i]) match = false;
                    for (size_t i = 0; i < cq.size() && match; ++i)
                        if (h[leg_q[i]] != g[i]) match = false;
                    if (match) ++mediators;
                }
                if (mediators != 1) {
                    r.verdict = Verdict::fail;
                    r.with("probe", w.name())
                        .with("mediators", std::to_string(mediators));
                    return r;
                }
            }
    }
    r.with("cocones", std::to_string(cocones));
    if (!all_probed) r.note = "some probes exceeded the functor budget";
    return r;
}

WitnessReport embedding_check(std::shared_ptr<const DQ> dq, Elem p, Elem q) {
    const Quantale& base = dq->base();
    WitnessReport r{"topos.embedding", Verdict::pass,
                    "the span embeds fully faithfully into (Q, /\\) exactly when the "
                    "refined meet equals the lattice meet"};
    auto sq = SqleqPoset::build(base);
    Elem r0 = sq.sqcap(std::vector<Elem>{p, q}).value;
    Elem mt = base.meet(p, q);
    QSet z = span_qset(dq, p, q, r0);
    QSet t = qset_meet(dq);
    std::vector<int> e{p, q};
    if (!is_functor(z.category(), t.category(), e))
        throw internal_check_error("the canonical span embedding is not a functor");
    bool ff = is_fully_faithful(z.category(), t.category(), e);
    bool meets_agree = (r0 == mt);
    r.with("p", base.elem_name(p))
        .with("q", base.elem_name(q))
        .with("p<sqcap>q", base.elem_name(r0))
        .with("p/\\q", base.elem_name(mt))
        .with("fully-faithful", ff ? "yes" : "no");
    if (ff != meets_agree) r.verdict = Verdict::fail;
    return r;
}

ReportList frame_equivalence_check(const Quantale& q) {
    ReportList out;
    auto sq = SqleqPoset::build(q);
    bool tensor_is_meet = true;
    Elem wp = 0, wq = 0;
    for (Elem a = 0; a < q.size() && tensor_is_meet; ++a)
        for (Elem b = 0; b < q.size(); ++b)
            if (q.tensor(a, b) != q.meet(a, b)) {
                tensor_is_meet = false;
                wp = a;
                wq = b;
                break;
            }
    {
        WitnessReport r{"topos.frame-tensor", Verdict::pass,
                        "reading (a): the tensor coincides with the binary meet"};
        r.with("holds", tensor_is_meet ? "yes" : "no");
        if (!tensor_is_meet)
            r.with("p", q.elem_name(wp))
                .with("q", q.elem_name(wq))
                .with("p&q", q.elem_name(q.tensor(wp, wq)))
                .with("p/\\q", q.elem_name(q.meet(wp, wq)));
        out.push_back(std::move(r));
    }
    bool all_refine_top = true;
    {
        WitnessReport r{"topos.frame-refinement", Verdict::pass,
                        "reading (b): every q is relatively idempotent below the top"};
        Elem we = 0;
        for (Elem e = 0; e < q.size(); ++e)
            if (!sq.sqleq(e, q.top())) {
                all_refine_top = false;
                we = e;
                break;
            }
        r.with("holds", all_refine_top ? "yes" : "no");
        if (!all_refine_top) r.with("q", q.elem_name(we));
        out.push_back(std::move(r));
    }
    bool meets_agree = true;
    {
        WitnessReport r{"topos.frame-meets", Verdict::pass,
                        "reading (c): refined meets agree with lattice meets everywhere"};
        for (Elem a = 0; a < q.size() && meets_agree; ++a)
            for (Elem b = 0; b < q.size(); ++b) {
                Elem r0 = sq.sqcap(std::vector<Elem>{a, b}).value;
                if (r0 != q.meet(a, b)) {
                    meets_agree = false;
                    r.with("p", q.elem_name(a))
                        .with("q", q.elem_name(b))
                        .with("p<sqcap>q", q.elem_name(r0))
                        .with("p/\\q", q.elem_name(q.meet(a, b)));
                    break;
                }
            }
        r.with("holds", meets_agree ? "yes" : "no");
        out.push_back(std::move(r));
    }
    {
        WitnessReport r{"topos.frame-equivalence", Verdict::pass,
                        "tensor = meet, refinement below top, and agreeing meets are "
                        "equivalent"};
        r.with("tensor=meet", tensor_is_meet ? "yes" : "no")
            .with("refinement", all_refine_top ? "yes" : "no")
            .with("meets", meets_agree ? "yes" : "no");
        if (tensor_is_meet != all_refine_top || all_refine_top != meets_agree)
            r.verdict = Verdict::fail;
        out.push_back(std::move(r));
    }
    return out;
}

ReportList topos_witness(std::shared_ptr<const DQ> dq, std::uint64_t budget) {
    const Quantale& base = dq->base();
    ReportList out;
    if (base.is_frame()) {
        WitnessReport r{"topos.witness", Verdict::pass,
                        "the tensor is the binary meet: no obstruction"};
        r.with("quantale", base.name());
        out.push_back(std::move(r));
        return out;
    }
    // Least non-idempotent element: minimal under the order, first by index.
    Elem bad = -1;
    for (Elem e = 0; e < base.size(); ++e) {
        if (base.tensor(e, e) == e) continue;
        bool minimal = true;
        for (Elem f = 0; f < base.size(); ++f)
            if (f != e && base.tensor(f, f) != f && base.leq(f, e) && f != e) {
                minimal = false;
                break;
            }
        if (minimal) {
            bad = e;
            break;
        }
    }
    Elem top = base.top();
    {
        WitnessReport r{"topos.witness.non-idempotent", Verdict::pass,
                        "a least non-idempotent element exists"};
        r.with("q", base.elem_name(bad))
            .with("q&q", base.elem_name(base.tensor(bad, bad)));
        out.push_back(std::move(r));
    }
    {
        WitnessReport r{"topos.witness.defect", Verdict::pass,
                        "q & (T -> q) = q fails at the witness"};
        Elem res = base.residual(top, bad);
        r.with("q", base.elem_name(bad))
            .with("T->q", base.elem_name(res))
            .with("q&(T->q)", base.elem_name(base.tensor(bad, res)));
        out.push_back(std::move(r));
    }
    auto sq = SqleqPoset::build(base);
    Elem r0 = sq.sqcap(std::vector<Elem>{bad, top}).value;
    {
        WitnessReport r{"topos.witness.meets", Verdict::pass,
                        "the refined meet and the lattice meet disagree at (q, T)"};
        r.with("q<sqcap>T", base.elem_name(r0))
            .with("q/\\T", base.elem_name(base.meet(bad, top)));
        if (r0 == base.meet(bad, top)) r.verdict = Verdict::fail;
        out.push_back(std::move(r));
    }
    {
        WitnessReport sub = cc_subobjects_check(dq, top, budget);
        sub.check = "topos.witness.subobjects";
        out.push_back(std::move(sub));
    }
    {
        WitnessReport r{"topos.witness.missing-subobject", Verdict::pass,
                        "no Cauchy complete sub-Q-set of (C_T, /\\) has join q"};
        std::vector<Elem> ct = sq.C(top);
        bool found = false;
        if (ct.size() <= 20) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ct.size()); ++mask) {
                std::vector<Elem> s;
                for (size_t i = 0; i < ct.size(); ++i)
                    if ((mask >> i) & 1) s.push_back(ct[i]);
                if (base.lattice().join_of(s) != bad) continue;
                try {
                    if (is_cauchy_complete(qset_sub_meet(dq, s, "S"), budget)) {
                        found = true;
                        break;
                    }
                } catch (const precondition_error&) {
                }
            }
        }
        r.with("q", base.elem_name(bad));
        if (found) r.verdict = Verdict::fail;
        out.push_back(std::move(r));
    }
    {
        auto probes = default_probes(dq, budget);
        WitnessReport push = pushout_check(dq, bad, top, probes, budget);
        push.check = "topos.witness.pushout";
        out.push_back(std::move(push));
    }
    {
        WitnessReport emb = embedding_check(dq, bad, top);
        emb.check = "topos.witness.embedding";
        if (emb.verdict == Verdict::pass && r0 == base.meet(bad, top))
            emb.verdict = Verdict::fail;  // witness must exhibit a genuine failure
        out.push_back(std::move(emb));
    }
    return out;
}

}  // namespace qlab
