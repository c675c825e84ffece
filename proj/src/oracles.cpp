/*
 *  Copyright (C) 2026  The ordlp authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 *
 */

#include "ordlp/oracles.hpp"

#include "ordlp/semantics.hpp"
#include "ordlp/transforms.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ordlp {

std::string to_string(Criterion c) {
    switch (c) {
    case Criterion::Static: return "dst-static";
    case Criterion::Dynamic: return "dst-dynamic";
    case Criterion::WZL: return "wzl";
    case Criterion::BEEnum: return "be-enum";
    case Criterion::BEOriginal: return "be-original";
    }
    return "?";
}

std::optional<Criterion> parse_criterion(std::string_view s) {
    for (Criterion c : {Criterion::Static, Criterion::Dynamic, Criterion::WZL, Criterion::BEEnum,
                        Criterion::BEOriginal})
        if (to_string(c) == s) return c;
    return std::nullopt;
}

namespace {

using Matrix = std::vector<std::vector<char>>;

bool within(const std::vector<Literal>& lits, const std::set<Literal>& s) {
    return std::all_of(lits.begin(), lits.end(), [&](const Literal& l) { return s.count(l) > 0; });
}

bool within(const std::vector<Literal>& lits, const LiteralSet& x) {
    return std::all_of(lits.begin(), lits.end(), [&](const Literal& l) { return x.contains(l); });
}

bool meets(const std::vector<Literal>& lits, const std::set<Literal>& s) {
    return std::any_of(lits.begin(), lits.end(), [&](const Literal& l) { return s.count(l) > 0; });
}

bool head_in(const Rule& r, const std::set<Literal>& s) { return r.head && s.count(*r.head); }

void require_answer_set(const Program& p, const LiteralSet& x) {
    if (x.is_inconsistent()) throw ValidationError("candidate must be a consistent set of literals");
    if (!is_answer_set(p, x)) throw NotAnswerSetError("candidate " + to_string(x) + " is not an answer set");
}

// less[i][j]: rule i is less preferred than rule j.
Matrix static_less(const Program& p, const PreferenceOrder& order) {
    Matrix less(p.size(), std::vector<char>(p.size(), 0));
    for (auto [i, j] : rule_order(p, order)) less[i][j] = 1;
    return less;
}

Matrix dynamic_less(const Program& p, const LiteralSet& x) {
    Matrix less(p.size(), std::vector<char>(p.size(), 0));
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!p[i].name) continue;
        for (std::size_t j = 0; j < p.size(); ++j)
            if (p[j].name && x.contains(Literal::pos(Atom::prec(*p[i].name, *p[j].name)))) less[i][j] = 1;
    }
    return less;
}

std::vector<char> membership(std::size_t n, const std::vector<std::size_t>& idx) {
    std::vector<char> out(n, 0);
    for (std::size_t i : idx) out[i] = 1;
    return out;
}

// Whether rule i may be placed next, given the placed rules and the heads of the
// placed generating rules.
struct Placement {
    const Program& p;
    const LiteralSet& x;
    const Matrix& less;
    const std::vector<char>& gr;
    Criterion criterion;
    bool derivation;

    bool operator()(std::size_t i, const std::vector<char>& placed, const std::set<Literal>& heads) const {
        const Rule& r = p[i];
        if (criterion == Criterion::Dynamic) {
            for (std::size_t j = 0; j < p.size(); ++j) {
                if (!less[i][j]) continue;
                if (!placed[j]) return false;
                if (derivation && !heads.count(Literal::pos(Atom::prec(*r.name, *p[j].name)))) return false;
            }
            if (gr[i]) return within(r.pbody, heads);
            return !within(r.pbody, x) || meets(r.nbody, heads);
        }
        if (criterion == Criterion::Static && !within(r.pbody, heads)) return false;
        if (criterion == Criterion::WZL && !within(r.pbody, heads) && !head_in(r, heads)) return false;
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (!less[i][j]) continue;
            if (gr[j]) {
                if (!placed[j]) return false;
                continue;
            }
            const Rule& q = p[j];
            bool excused = !within(q.pbody, x) || meets(q.nbody, heads);
            if (criterion == Criterion::WZL) excused = excused || head_in(q, heads);
            if (criterion == Criterion::BEEnum) excused = excused || (q.head && x.contains(*q.head));
            if (!excused) return false;
        }
        return true;
    }
};

std::optional<EnumerationWitness> greedy(const Placement& fits, const std::vector<std::size_t>& items,
                                         const std::vector<std::size_t>& priority) {
    const std::size_t n = fits.p.size();
    std::vector<char> wanted = membership(n, items);
    std::vector<std::size_t> scan;
    std::vector<char> listed(n, 0);
    for (std::size_t i : priority)
        if (i < n && wanted[i] && !listed[i]) {
            scan.push_back(i);
            listed[i] = 1;
        }
    for (std::size_t i : items)
        if (!listed[i]) scan.push_back(i);

    std::vector<char> placed(n, 0);
    std::set<Literal> heads;
    EnumerationWitness w{{}, fits.criterion};
    while (w.ordering.size() < items.size()) {
        auto next = std::find_if(scan.begin(), scan.end(),
                                 [&](std::size_t i) { return !placed[i] && fits(i, placed, heads); });
        if (next == scan.end()) return std::nullopt;
        placed[*next] = 1;
        if (fits.gr[*next] && fits.p[*next].head) heads.insert(*fits.p[*next].head);
        w.ordering.push_back(*next);
    }
    return w;
}

std::optional<EnumerationWitness> check_gr_enumeration(const Program& p, const PreferenceOrder& order,
                                                       const LiteralSet& x, const EnumerationOptions& opts,
                                                       Criterion c) {
    require_answer_set(p, x);
    Matrix less = static_less(p, order);
    std::vector<std::size_t> gr_idx = generating_rule_indices(p, x);
    std::vector<char> gr = membership(p.size(), gr_idx);
    Placement fits{p, x, less, gr, c, true};
    return greedy(fits, gr_idx, opts.priority);
}

} // namespace

std::vector<std::pair<std::size_t, std::size_t>> rule_order(const Program& p, const PreferenceOrder& order) {
    PreferenceOrder strict = strictify(order);
    std::map<Term, std::size_t> index;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i].name) index.emplace(*p[i].name, i);
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& [lo, hi] : strict.pairs) {
        auto a = index.find(lo);
        auto b = index.find(hi);
        if (a != index.end() && b != index.end()) out.emplace_back(a->second, b->second);
    }
    return out;
}

std::optional<EnumerationWitness> check_static_preserving(const Program& p, const PreferenceOrder& order,
                                                          const LiteralSet& x, const EnumerationOptions& opts) {
    return check_gr_enumeration(p, order, x, opts, Criterion::Static);
}

std::optional<EnumerationWitness> check_wzl_preserving(const Program& p, const PreferenceOrder& order,
                                                       const LiteralSet& x, const EnumerationOptions& opts) {
    return check_gr_enumeration(p, order, x, opts, Criterion::WZL);
}

std::optional<EnumerationWitness> check_be_preserving(const Program& p, const PreferenceOrder& order,
                                                      const LiteralSet& x, const EnumerationOptions& opts) {
    return check_gr_enumeration(p, order, x, opts, Criterion::BEEnum);
}

std::optional<EnumerationWitness> check_dynamic_preserving(const OrderedProgram& p, const LiteralSet& x,
                                                           const EnumerationOptions& opts) {
    Program ta = ta_closure(p).rules;
    require_answer_set(ta, x);
    Matrix less = dynamic_less(ta, x);
    for (std::size_t i = 0; i < ta.size(); ++i)
        if (less[i][i]) throw ValidationError("preferences in the candidate are not irreflexive");
    std::vector<char> gr = membership(ta.size(), generating_rule_indices(ta, x));
    std::vector<std::size_t> all(ta.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    Placement fits{ta, x, less, gr, Criterion::Dynamic, opts.require_preference_derivation};
    return greedy(fits, all, opts.priority);
}

bool verify_witness(const Program& p, const PreferenceOrder& order, const LiteralSet& x,
                    const EnumerationWitness& w, bool require_preference_derivation) {
    if (x.is_inconsistent() || !is_answer_set(p, x)) return false;
    const Criterion c = w.criterion;
    if (c == Criterion::BEOriginal) return false;
    const bool dynamic = c == Criterion::Dynamic;
    Matrix less = dynamic ? dynamic_less(p, x) : static_less(p, order);
    std::vector<std::size_t> gr_idx = generating_rule_indices(p, x);
    std::vector<char> gr = membership(p.size(), gr_idx);

    // The witness must enumerate exactly GR (or every rule, dynamically).
    std::vector<std::size_t> expected = gr_idx;
    if (dynamic) {
        expected.resize(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) expected[i] = i;
    }
    std::vector<std::size_t> sorted = w.ordering;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != expected) return false;

    std::vector<std::ptrdiff_t> pos(p.size(), -1);
    for (std::size_t k = 0; k < w.ordering.size(); ++k) pos[w.ordering[k]] = static_cast<std::ptrdiff_t>(k);

    for (std::size_t k = 0; k < w.ordering.size(); ++k) {
        const std::size_t i = w.ordering[k];
        const Rule& r = p[i];
        std::set<Literal> before;
        for (std::size_t m = 0; m < k; ++m)
            if (gr[w.ordering[m]] && p[w.ordering[m]].head) before.insert(*p[w.ordering[m]].head);

        if (dynamic) {
            for (std::size_t j = 0; j < p.size(); ++j) {
                if (!less[i][j]) continue;
                if (pos[j] >= static_cast<std::ptrdiff_t>(k)) return false;
                if (!require_preference_derivation) continue;
                Literal want = Literal::pos(Atom::prec(*r.name, *p[j].name));
                bool derived = false;
                for (std::size_t m = 0; m < k; ++m)
                    if (gr[w.ordering[m]] && p[w.ordering[m]].head == want) derived = true;
                if (!derived) return false;
            }
            if (gr[i]) {
                if (!within(r.pbody, before)) return false;
            } else if (within(r.pbody, x) && !meets(r.nbody, before)) {
                return false;
            }
            continue;
        }

        if (c == Criterion::Static && !within(r.pbody, before)) return false;
        if (c == Criterion::WZL && !within(r.pbody, before) && !head_in(r, before)) return false;
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (!less[i][j]) continue;
            if (gr[j]) {
                if (pos[j] >= static_cast<std::ptrdiff_t>(k)) return false;
                continue;
            }
            const Rule& q = p[j];
            bool a = !within(q.pbody, x);
            bool b = meets(q.nbody, before);
            bool cc = false;
            if (c == Criterion::WZL) cc = head_in(q, before);
            if (c == Criterion::BEEnum) cc = q.head && x.contains(*q.head);
            if (!(a || b || cc)) return false;
        }
    }
    return true;
}

bool TotalOrder::less(std::size_t a, std::size_t b) const {
    auto pa = std::find(ascending.begin(), ascending.end(), a);
    auto pb = std::find(ascending.begin(), ascending.end(), b);
    return pa < pb;
}

void for_each_extension(const PreferenceOrder& order, const Program& universe,
                        const std::function<bool(const TotalOrder&)>& visit, std::size_t guard) {
    const std::size_t n = universe.size();
    // below[j]: rules that must come before j in ascending order.
    std::vector<std::vector<std::size_t>> below(n);
    for (auto [lo, hi] : rule_order(universe, order)) below[hi].push_back(lo);

    std::vector<char> used(n, 0);
    TotalOrder cur;
    std::size_t produced = 0;
    bool stop = false;
    std::function<void()> rec = [&]() {
        if (stop) return;
        if (cur.ascending.size() == n) {
            if (++produced > guard)
                throw ResourceLimitError("more than " + std::to_string(guard) + " linear extensions");
            if (!visit(cur)) stop = true;
            return;
        }
        for (std::size_t i = 0; i < n && !stop; ++i) {
            if (used[i]) continue;
            if (!std::all_of(below[i].begin(), below[i].end(), [&](std::size_t b) { return used[b]; })) continue;
            used[i] = 1;
            cur.ascending.push_back(i);
            rec();
            cur.ascending.pop_back();
            used[i] = 0;
        }
    };
    rec();
}

std::vector<TotalOrder> total_extensions(const PreferenceOrder& order, const Program& universe,
                                         std::size_t guard) {
    std::vector<TotalOrder> out;
    for_each_extension(order, universe, [&](const TotalOrder& t) {
        out.push_back(t);
        return true;
    }, guard);
    return out;
}

LiteralSet be_C_operator(const Program& rules, const LiteralSet& x, bool second_case) {
    std::set<Literal> cur;
    for (const auto& r : rules) {
        if (!r.pbody.empty()) throw ValidationError("C operator needs prerequisite-free rules");
        if (!r.head) continue;
        if (meets(r.nbody, cur)) continue;
        if (second_case && x.contains(*r.head) && defeated(r, x)) continue;
        cur.insert(*r.head);
    }
    return LiteralSet(std::move(cur));
}

Program be_reduce(const Program& p, const TotalOrder& total, const LiteralSet& x) {
    Program out;
    std::set<Rule> seen;
    for (auto it = total.ascending.rbegin(); it != total.ascending.rend(); ++it) {
        const Rule& r = p[*it];
        if (!r.head || !within(r.pbody, x)) continue;
        Rule q;
        q.head = r.head;
        q.nbody = r.nbody;
        q.normalize();
        std::sort(q.nbody.begin(), q.nbody.end());
        if (seen.insert(q).second) out.push_back(std::move(q));
    }
    return out;
}

bool be_preferred_total(const Program& p, const TotalOrder& total, const LiteralSet& x) {
    if (x.is_inconsistent() || !is_answer_set(p, x)) return false;
    return be_C_operator(be_reduce(p, total, x), x) == x;
}

bool be_preferred(const Program& p, const PreferenceOrder& order, const LiteralSet& x, std::size_t guard) {
    if (x.is_inconsistent() || !is_answer_set(p, x)) return false;
    bool found = false;
    for_each_extension(order, p, [&](const TotalOrder& t) {
        found = be_C_operator(be_reduce(p, t, x), x) == x;
        return !found;
    }, guard);
    return found;
}

bool be_characterisation(const Program& p, const TotalOrder& total, const LiteralSet& x) {
    std::vector<std::size_t> rank(p.size(), 0);
    for (std::size_t k = 0; k < total.ascending.size(); ++k) rank[total.ascending[k]] = k;
    std::vector<std::size_t> gr = generating_rule_indices(p, x);
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Rule& r = p[i];
        if (!r.head || !within(r.pbody, x) || x.contains(*r.head)) continue;
        bool defeated_above = std::any_of(gr.begin(), gr.end(), [&](std::size_t j) {
            const Rule& q = p[j];
            return rank[i] < rank[j] && q.head &&
                   std::find(r.nbody.begin(), r.nbody.end(), *q.head) != r.nbody.end();
        });
        if (!defeated_above) return false;
    }
    return true;
}

} // namespace ordlp
