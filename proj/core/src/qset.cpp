#include "qlab/qset.hpp"

#include <algorithm>
#include <sstream>

#include "qlab/error.hpp"
#include "qlab/sqleq.hpp"

namespace qlab {
namespace {

// Odometer over value tuples with per-position candidate lists; calls visit
// with the current tuple.  Returns false (without visiting) when the space
// exceeds the budget.
template <class F>
bool for_each_tuple(const std::vector<std::vector<Elem>>& candidates, std::uint64_t budget,
                    F&& visit) {
    std::uint64_t total = 1;
    for (const auto& c : candidates) {
        if (c.empty()) return true;  // empty space: nothing to visit
        if (total > budget / c.size()) return false;
        total *= c.size();
    }
    std::vector<size_t> pos(candidates.size(), 0);
    std::vector<Elem> tuple(candidates.size());
    for (;;) {
        for (size_t i = 0; i < candidates.size(); ++i) tuple[i] = candidates[i][pos[i]];
        visit(static_cast<const std::vector<Elem>&>(tuple));
        size_t i = 0;
        for (; i < pos.size(); ++i) {
            if (++pos[i] < candidates[i].size()) break;
            pos[i] = 0;
        }
        if (i == pos.size()) return true;
    }
}

}  // namespace

ReportList check_qset_axioms(const Quantale& q, const std::vector<std::string>& elem_names,
                             const std::vector<Elem>& alpha) {
    ReportList out;
    size_t n = elem_names.size();
    {
        WitnessReport r{"qset.table", Verdict::pass,
                        "alpha is an n x n matrix of quantale elements"};
        if (alpha.size() != n * n) {
            r.verdict = Verdict::fail;
            r.with("expected", std::to_string(n * n)).with("got", std::to_string(alpha.size()));
        } else {
            for (Elem e : alpha)
                if (e < 0 || e >= q.size()) {
                    r.verdict = Verdict::fail;
                    r.with("entry", std::to_string(e));
                    break;
                }
        }
        bool ok = r.verdict == Verdict::pass;
        out.push_back(std::move(r));
        if (!ok) return out;
    }
    auto a = [&](size_t x, size_t y) { return alpha[x * n + y]; };
    {
        WitnessReport r{"qset.s1", Verdict::pass,
                        "alpha(x, y) <= alpha(x, x) /\\ alpha(y, y)"};
        for (size_t x = 0; x < n && r.verdict == Verdict::pass; ++x)
            for (size_t y = 0; y < n; ++y)
                if (!q.leq(a(x, y), q.meet(a(x, x), a(y, y)))) {
                    r.verdict = Verdict::fail;
                    r.with("x", elem_names[x])
                        .with("y", elem_names[y])
                        .with("alpha(x,y)", q.elem_name(a(x, y)))
                        .with("alpha(x,x)", q.elem_name(a(x, x)))
                        .with("alpha(y,y)", q.elem_name(a(y, y)));
                    break;
                }
        out.push_back(std::move(r));
    }
    {
        WitnessReport r{"qset.s2", Verdict::pass, "alpha(x, y) = alpha(y, x)"};
        for (size_t x = 0; x < n && r.verdict == Verdict::pass; ++x)
            for (size_t y = 0; y < n; ++y)
                if (a(x, y) != a(y, x)) {
                    r.verdict = Verdict::fail;
                    r.with("x", elem_names[x])
                        .with("y", elem_names[y])
                        .with("alpha(x,y)", q.elem_name(a(x, y)))
                        .with("alpha(y,x)", q.elem_name(a(y, x)));
                    break;
                }
        out.push_back(std::move(r));
    }
    {
        WitnessReport r{"qset.s3", Verdict::pass,
                        "alpha(y, z) & (alpha(y, y) -> alpha(x, y)) <= alpha(x, z)"};
        for (size_t x = 0; x < n && r.verdict == Verdict::pass; ++x)
            for (size_t y = 0; y < n && r.verdict == Verdict::pass; ++y)
                for (size_t z = 0; z < n; ++z) {
                    Elem lhs = q.tensor(a(y, z), q.residual(a(y, y), a(x, y)));
                    if (!q.leq(lhs, a(x, z))) {
                        r.verdict = Verdict::fail;
                        r.with("x", elem_names[x])
                            .with("y", elem_names[y])
                            .with("z", elem_names[z])
                            .with("lhs", q.elem_name(lhs))
                            .with("alpha(x,z)", q.elem_name(a(x, z)));
                        break;
                    }
                }
        out.push_back(std::move(r));
    }
    return out;
}

QSet QSet::create(std::shared_ptr<const DQ> dq, std::string name,
                  std::vector<std::string> elem_names, std::vector<Elem> alpha) {
    if (!dq) throw precondition_error("Q-set needs a base quantaloid");
    auto reports = check_qset_axioms(dq->base(), elem_names, alpha);
    if (!passed(reports))
        throw input_error("'" + name + "' is not a Q-set: " + worst_line(reports));
    QSet x;
    x.dq_ = std::move(dq);
    x.name_ = std::move(name);
    x.elem_names_ = std::move(elem_names);
    x.alpha_ = std::move(alpha);
    int n = x.size();
    std::vector<int> types(n);
    std::vector<int> hom(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) types[i] = x.alpha(i, i);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            hom[static_cast<size_t>(i) * n + j] =
                x.dq_->local_of(types[i], types[j], x.alpha(i, j));
    x.cat_ = make_qcategory(x.dq_->quantaloid_ptr(), x.name_, x.elem_names_,
                            std::move(types), std::move(hom));
    return x;
}

QSet bind_qset_file(const QSetFile& file, std::shared_ptr<const DQ> dq) {
    const Quantale& q = dq->base();
    if (file.quantale_name != q.name())
        throw input_error("Q-set '" + file.name + "' is declared over '" +
                          file.quantale_name + "', not '" + q.name() + "'");
    std::vector<Elem> alpha;
    alpha.reserve(file.entries.size());
    for (const auto& s : file.entries) {
        Elem e = q.lattice().index_of(s);
        if (e < 0)
            throw input_error("Q-set '" + file.name + "': unknown quantale element '" + s +
                              "'");
        alpha.push_back(e);
    }
    return QSet::create(std::move(dq), file.name, file.elems, std::move(alpha));
}

std::string serialize_qset(const QSet& x) {
    std::ostringstream os;
    os << "qset " << x.name() << " over " << x.base().name() << "\n";
    os << "elements:";
    for (int i = 0; i < x.size(); ++i) os << ' ' << x.elem_name(i);
    os << "\n";
    os << "hom:\n";
    for (int i = 0; i < x.size(); ++i) {
        os << " ";
        for (int j = 0; j < x.size(); ++j) os << ' ' << x.base().elem_name(x.alpha(i, j));
        os << "\n";
    }
    return os.str();
}

QSet qset_point(std::shared_ptr<const DQ> dq, Elem q) {
    const Quantale& base = dq->base();
    base.lattice().check(q);
    std::string nm = "{" + base.elem_name(q) + "}";
    std::vector<std::string> names{base.elem_name(q)};
    return QSet::create(std::move(dq), std::move(nm), std::move(names), {q});
}

QSet qset_cq(std::shared_ptr<const DQ> dq, Elem q) {
    const Quantale& base = dq->base();
    base.lattice().check(q);
    auto sq = SqleqPoset::build(base);
    std::vector<Elem> carrier = sq.C(q);
    std::string nm = "C(" + base.elem_name(q) + ")";
    return qset_sub_meet(std::move(dq), std::move(carrier), std::move(nm));
}

QSet qset_meet(std::shared_ptr<const DQ> dq) {
    std::vector<Elem> carrier(dq->base().size());
    for (Elem e = 0; e < dq->base().size(); ++e) carrier[e] = e;
    return qset_sub_meet(std::move(dq), std::move(carrier), "(Q,/\\)");
}

QSet qset_sub_meet(std::shared_ptr<const DQ> dq, std::vector<Elem> carrier,
                   std::string name) {
    const Quantale& q = dq->base();
    std::vector<std::string> names;
    names.reserve(carrier.size());
    for (Elem e : carrier) {
        q.lattice().check(e);
        names.push_back(q.elem_name(e));
    }
    size_t n = carrier.size();
    std::vector<Elem> alpha(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) alpha[i * n + j] = q.meet(carrier[i], carrier[j]);
    return QSet::create(std::move(dq), std::move(name), std::move(names), std::move(alpha));
}

std::string singleton_name(const QSet& x, const Singleton& s) {
    std::string out = "(";
    for (size_t i = 0; i < s.values.size(); ++i) {
        if (i) out += ",";
        out += x.base().elem_name(s.values[i]);
    }
    out += ")";
    return out;
}

bool is_singleton(const QSet& x, const std::vector<Elem>& values) {
    const Quantale& q = x.base();
    int n = x.size();
    if (values.size() != static_cast<size_t>(n))
        throw precondition_error("singleton candidate has the wrong length");
    for (int i = 0; i < n; ++i)
        if (!q.leq(values[i], x.alpha(i, i))) return false;  // ss1
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Elem lhs = q.tensor(values[i], q.residual(x.alpha(i, i), x.alpha(i, j)));
            if (!q.leq(lhs, values[j])) return false;  // ss2
        }
    Elem extent = q.lattice().join_of(values);
    Elem reach = q.bottom();
    for (int i = 0; i < n; ++i)
        reach = q.join(reach, q.tensor(values[i], q.residual(x.alpha(i, i), values[i])));
    if (!q.leq(extent, reach)) return false;  // ss3
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Elem lhs = q.tensor(values[i], q.residual(extent, values[j]));
            if (!q.leq(lhs, x.alpha(i, j))) return false;  // ss4
        }
    return true;
}

std::vector<Singleton> singletons_by_conditions(const QSet& x, std::uint64_t budget) {
    const Quantale& q = x.base();
    std::vector<std::vector<Elem>> candidates(x.size());
    for (int i = 0; i < x.size(); ++i) candidates[i] = q.lattice().downset(x.alpha(i, i));
    std::vector<Singleton> out;
    bool done = for_each_tuple(candidates, budget, [&](const std::vector<Elem>& values) {
        if (is_singleton(x, values))
            out.push_back({q.lattice().join_of(values), values});
    });
    if (!done)
        throw precondition_error("singleton candidate space of '" + x.name() +
                                 "' exceeds the enumeration budget");
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Singleton> singletons_by_adjoint(const QSet& x, std::uint64_t budget) {
    const Quantale& q = x.base();
    const QCategory& cx = x.category();
    std::vector<Singleton> out;
    for (Elem e = 0; e < q.size(); ++e) {
        QSet pt = qset_point(x.dq_ptr(), e);
        const QCategory& cp = pt.category();
        std::vector<std::vector<Elem>> candidates(x.size());
        for (int i = 0; i < x.size(); ++i)
            candidates[i] = q.lattice().downset(q.meet(e, x.alpha(i, i)));
        bool done = for_each_tuple(candidates, budget, [&](const std::vector<Elem>& values) {
            Dist mu(values.size());
            for (size_t i = 0; i < values.size(); ++i) {
                int loc = x.dq().local_of(e, x.alpha((int)i, (int)i), values[i]);
                mu[i] = loc;
            }
            if (!is_distributor(cp, cx, mu)) return;
            if (!right_adjoint_dist(cp, cx, mu, /*exhaustive_budget=*/0)) return;
            Elem extent = q.lattice().join_of(values);
            if (extent != e)
                throw internal_check_error(
                    "left adjoint from a one-element Q-set whose extent differs from its "
                    "type, on '" +
                    x.name() + "'");
            out.push_back({e, values});
        });
        if (!done)
            throw precondition_error("singleton candidate space of '" + x.name() +
                                     "' exceeds the enumeration budget");
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Singleton> enumerate_singletons(const QSet& x, std::uint64_t budget) {
    auto a = singletons_by_conditions(x, budget);
    auto b = singletons_by_adjoint(x, budget);
    if (a != b)
        throw internal_check_error(
            "singleton characterizations disagree on '" + x.name() +
            "': direct conditions vs left-adjoint distributors");
    // mu* = mu: the right adjoint of each singleton keeps the same values.
    const QCategory& cx = x.category();
    for (const auto& s : a) {
        QSet pt = qset_point(x.dq_ptr(), s.extent);
        const QCategory& cp = pt.category();
        Dist mu(s.values.size());
        for (size_t i = 0; i < s.values.size(); ++i)
            mu[i] = x.dq().local_of(s.extent, x.alpha((int)i, (int)i), s.values[i]);
        auto adj = right_adjoint_dist(cp, cx, mu, /*exhaustive_budget=*/0);
        if (!adj) throw internal_check_error("singleton lost its right adjoint");
        for (size_t i = 0; i < s.values.size(); ++i) {
            Elem v = x.dq().elem_of(x.alpha((int)i, (int)i), s.extent, (*adj)[i]);
            if (v != s.values[i])
                throw internal_check_error("the right adjoint of a singleton changed its "
                                           "values, on '" +
                                           x.name() + "'");
        }
    }
    return a;
}

WitnessReport singleton_duality_check(const QSet& x, std::uint64_t budget) {
    WitnessReport r{"singleton.duality", Verdict::pass,
                    "maps satisfying ss1..ss4 = left adjoints from one-element Q-sets"};
    r.with("qset", x.name());
    auto a = singletons_by_conditions(x, budget);
    auto b = singletons_by_adjoint(x, budget);
    r.with("count", std::to_string(a.size()));
    if (a != b) {
        r.verdict = Verdict::fail;
        std::vector<Singleton> only_a, only_b;
        std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(only_a));
        std::set_difference(b.begin(), b.end(), a.begin(), a.end(),
                            std::back_inserter(only_b));
        if (!only_a.empty()) r.with("only-direct", singleton_name(x, only_a.front()));
        if (!only_b.empty()) r.with("only-adjoint", singleton_name(x, only_b.front()));
    }
    return r;
}

std::optional<int> represent(const QSet& x, const Singleton& s) {
    for (int a = 0; a < x.size(); ++a) {
        if (x.alpha(a, a) != s.extent) continue;
        bool same = true;
        for (int y = 0; y < x.size(); ++y)
            if (x.alpha(a, y) != s.values[y]) {
                same = false;
                break;
            }
        if (same) return a;
    }
    return std::nullopt;
}

bool is_cauchy_complete(const QSet& x, std::uint64_t budget) {
    for (const auto& s : enumerate_singletons(x, budget))
        if (!represent(x, s)) return false;
    return true;
}

}  // namespace qlab
