#include "qlab/dq.hpp"

#include "qlab/error.hpp"

namespace qlab {

std::shared_ptr<const DQ> DQ::build(const Quantale& q) {
    if (!q.divisible())
        throw precondition_error("the downset quantaloid requires a divisible tensor (" +
                                 q.name() + " is not divisible)");
    auto dq = std::shared_ptr<DQ>(new DQ(q));
    int n = q.size();
    dq->carrier_.resize(static_cast<size_t>(n) * n);
    dq->local_.assign(static_cast<size_t>(n) * n, std::vector<int>(n, -1));
    std::vector<FiniteLattice> homs(static_cast<size_t>(n) * n);
    const auto& lat = q.lattice();
    for (Elem p = 0; p < n; ++p)
        for (Elem r = 0; r < n; ++r) {
            auto& car = dq->carrier_[p * n + r];
            car = lat.downset(q.meet(p, r));
            auto& loc = dq->local_[p * n + r];
            std::vector<std::string> names;
            names.reserve(car.size());
            for (size_t i = 0; i < car.size(); ++i) {
                loc[car[i]] = static_cast<int>(i);
                names.push_back(q.elem_name(car[i]));
            }
            int m = static_cast<int>(car.size());
            std::vector<std::uint8_t> leq(static_cast<size_t>(m) * m);
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b)
                    leq[a * m + b] = q.leq(car[a], car[b]) ? 1 : 0;
            homs[p * n + r] = FiniteLattice::from_relation(std::move(names), std::move(leq));
        }

    std::vector<int> identities(n);
    for (Elem e = 0; e < n; ++e) identities[e] = dq->local_[e * n + e][e];

    std::vector<std::string> object_names = lat.names();
    auto compose = [&](int p, int mid, int r, int v, int u) {
        Elem gu = dq->carrier_[p * n + mid][u];
        Elem gv = dq->carrier_[mid * n + r][v];
        return dq->local_[p * n + r][circ(q, mid, gv, gu)];
    };
    FiniteQuantaloid::InvolveFn involve = [&, n](int p, int r, int u) {
        return dq->local_[r * n + p][dq->carrier_[p * n + r][u]];
    };
    dq->k_ = std::make_shared<const FiniteQuantaloid>(FiniteQuantaloid::build(
        std::move(object_names), std::move(homs), std::move(identities), compose, &involve));

    auto reports = check_quantaloid_axioms(*dq->k_);
    if (!passed(reports))
        throw internal_check_error(
            "downset quantaloid violates the quantaloid axioms for divisible " + q.name() +
            ": " + worst_line(reports));
    return dq;
}

QArrow DQ::arrow(Elem p, Elem q, Elem u) const {
    q_.lattice().check(p);
    q_.lattice().check(q);
    q_.lattice().check(u);
    int loc = local_of(p, q, u);
    if (loc < 0)
        throw input_error("no arrow " + q_.elem_name(u) + ": " + q_.elem_name(p) + " -> " +
                          q_.elem_name(q) + " (element is not below the meet of the endpoints)");
    return {p, q, loc};
}

Elem DQ::value(const QArrow& a) const { return carrier_[a.src * q_.size() + a.tgt][a.idx]; }

int DQ::local_of(Elem p, Elem q, Elem u) const { return local_[p * q_.size() + q][u]; }

Elem DQ::elem_of(int p, int q, int local) const {
    return carrier_[p * q_.size() + q][local];
}

ReportList check_dq_structure(const DQ& dq) {
    ReportList out;
    const Quantale& q = dq.base();
    const FiniteQuantaloid& k = dq.quantaloid();
    int n = q.size();

    {
        WitnessReport r{"dq.homs", Verdict::pass,
                        "hom(p, q) = { u | u <= p /\\ q } with the order of the base"};
        for (Elem p = 0; p < n && r.verdict == Verdict::pass; ++p)
            for (Elem t = 0; t < n && r.verdict == Verdict::pass; ++t) {
                for (Elem u = 0; u < n; ++u) {
                    bool inside = dq.local_of(p, t, u) >= 0;
                    bool below = q.leq(u, q.meet(p, t));
                    if (inside != below) {
                        r.verdict = Verdict::fail;
                        r.with("p", q.elem_name(p))
                            .with("q", q.elem_name(t))
                            .with("u", q.elem_name(u));
                        break;
                    }
                }
            }
        out.push_back(std::move(r));
    }

    {
        WitnessReport r{"dq.identity", Verdict::pass, "the identity on q is q itself"};
        for (Elem e = 0; e < n; ++e)
            if (dq.value(k.identity(e)) != e) {
                r.verdict = Verdict::fail;
                r.with("q", q.elem_name(e));
                break;
            }
        out.push_back(std::move(r));
    }

    {
        WitnessReport r{"dq.compose", Verdict::pass,
                        "v . u = v & (q -> u) = (q -> v) & u across the middle object q"};
        for (Elem p = 0; p < n && r.verdict == Verdict::pass; ++p)
            for (Elem m = 0; m < n && r.verdict == Verdict::pass; ++m)
                for (Elem t = 0; t < n && r.verdict == Verdict::pass; ++t)
                    for (Elem u = 0; u < n && r.verdict == Verdict::pass; ++u) {
                        if (dq.local_of(p, m, u) < 0) continue;
                        for (Elem v = 0; v < n; ++v) {
                            if (dq.local_of(m, t, v) < 0) continue;
                            Elem got = dq.value(k.compose(dq.arrow(m, t, v), dq.arrow(p, m, u)));
                            Elem f1 = q.tensor(v, q.residual(m, u));
                            Elem f2 = q.tensor(q.residual(m, v), u);
                            if (got != f1 || got != f2) {
                                r.verdict = Verdict::fail;
                                r.with("u", k.arrow_name(dq.arrow(p, m, u)))
                                    .with("v", k.arrow_name(dq.arrow(m, t, v)))
                                    .with("v.u", q.elem_name(got))
                                    .with("v&(q->u)", q.elem_name(f1))
                                    .with("(q->v)&u", q.elem_name(f2));
                                break;
                            }
                        }
                    }
        out.push_back(std::move(r));
    }

    {
        WitnessReport r{"dq.involution", Verdict::pass,
                        "hom(p, q) -> hom(q, p) keeps the underlying element"};
        for (Elem p = 0; p < n && r.verdict == Verdict::pass; ++p)
            for (Elem t = 0; t < n && r.verdict == Verdict::pass; ++t)
                for (Elem u = 0; u < n; ++u) {
                    if (dq.local_of(p, t, u) < 0) continue;
                    QArrow a = dq.arrow(p, t, u);
                    QArrow b = k.involve(a);
                    if (b.src != t || b.tgt != p || dq.value(b) != u) {
                        r.verdict = Verdict::fail;
                        r.with("u", k.arrow_name(a));
                        break;
                    }
                }
        out.push_back(std::move(r));
    }

    {
        WitnessReport r{"dq.endo-hom", Verdict::pass,
                        "hom(q, q) with composition over q is the downset quantale at q"};
        for (Elem e = 0; e < n && r.verdict == Verdict::pass; ++e) {
            Quantale down = downset_quantale(q, e);
            const auto& h = k.hom(e, e);
            if (h.size() != down.size()) {
                r.verdict = Verdict::fail;
                r.with("q", q.elem_name(e));
                break;
            }
            for (int a = 0; a < h.size() && r.verdict == Verdict::pass; ++a)
                for (int b = 0; b < h.size(); ++b) {
                    QArrow c = k.compose(QArrow{e, e, a}, QArrow{e, e, b});
                    if (down.tensor(a, b) != c.idx ||
                        down.leq(a, b) != h.leq(a, b)) {
                        r.verdict = Verdict::fail;
                        r.with("q", q.elem_name(e))
                            .with("u", h.name(b))
                            .with("v", h.name(a));
                        break;
                    }
                }
            if (down.unit() != k.identity(e).idx) {
                r.verdict = Verdict::fail;
                r.with("q", q.elem_name(e));
            }
        }
        out.push_back(std::move(r));
    }

    return out;
}

}  // namespace qlab
