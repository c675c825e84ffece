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

#include "ordlp/semantics.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace ordlp {

namespace {

bool subset_of(const std::vector<Literal>& lits, const std::set<Literal>& x) {
    return std::all_of(lits.begin(), lits.end(), [&](const Literal& l) { return x.count(l) > 0; });
}

// Raw least closure under the headed rules of b; may contain complementary pairs.
std::set<Literal> raw_closure(const BasicProgram& b) {
    std::set<Literal> out;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : b) {
            if (!r.head || out.count(*r.head)) continue;
            if (subset_of(r.pbody, out)) {
                out.insert(*r.head);
                changed = true;
            }
        }
    }
    return out;
}

void sort_canonical(std::vector<LiteralSet>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

BasicProgram reduct(const Program& p, const LiteralSet& x) {
    BasicProgram out;
    for (const auto& r : p) {
        if (defeated(r, x)) continue;
        Rule q = r;
        q.nbody.clear();
        out.push_back(std::move(q));
    }
    return out;
}

LiteralSet th_closure(const BasicProgram& b) {
    for (const auto& r : b)
        if (!r.nbody.empty()) throw ValidationError("th_closure: program is not basic");
    return LiteralSet(raw_closure(b));
}

DerivationTrace tp_trace(const BasicProgram& b) {
    for (const auto& r : b)
        if (!r.nbody.empty()) throw ValidationError("tp_trace: program is not basic");
    DerivationTrace trace;
    std::set<Literal> cur;
    for (;;) {
        std::set<Literal> next;
        for (const auto& r : b)
            if (r.head && subset_of(r.pbody, cur)) next.insert(*r.head);
        LiteralSet stage(next);
        if (!trace.stages.empty() && (next == cur || trace.stages.back().is_inconsistent())) break;
        trace.stages.push_back(stage);
        if (stage.is_inconsistent()) break;
        cur = std::move(next);
    }
    return trace;
}

std::optional<std::size_t> stage_of(const DerivationTrace& trace, const Literal& l) {
    for (std::size_t i = 0; i < trace.stages.size(); ++i)
        if (trace.stages[i].contains(l)) return i + 1;
    return std::nullopt;
}

bool is_answer_set(const Program& p, const LiteralSet& x) {
    if (x.is_inconsistent()) {
        BasicProgram b;
        for (const auto& r : p)
            if (r.head && r.nbody.empty()) b.push_back(r);
        return !is_consistent(raw_closure(b));
    }
    BasicProgram b = reduct(p, x);
    if (th_closure(b) != x) return false;
    for (const auto& r : b)
        if (!r.head && subset_of(r.pbody, x.literals())) return false;
    return true;
}

std::vector<Literal> head_literals(const Program& p) {
    std::vector<Literal> out;
    std::set<Literal> seen;
    for (const auto& r : p)
        if (r.head && seen.insert(*r.head).second) out.push_back(*r.head);
    return out;
}

std::vector<LiteralSet> answer_sets_bruteforce(const Program& p, std::size_t bound) {
    std::vector<Literal> heads = head_literals(p);
    if (heads.size() > bound || heads.size() >= 63)
        throw ResourceLimitError("brute force over " + std::to_string(heads.size()) +
                                 " head literals exceeds bound " + std::to_string(bound));
    std::vector<LiteralSet> out;
    const std::uint64_t n = std::uint64_t{1} << heads.size();
    for (std::uint64_t mask = 0; mask < n; ++mask) {
        std::set<Literal> s;
        for (std::size_t i = 0; i < heads.size(); ++i)
            if (mask >> i & 1) s.insert(heads[i]);
        if (!is_consistent(s)) continue;
        LiteralSet x(std::move(s));
        if (is_answer_set(p, x)) out.push_back(std::move(x));
    }
    if (is_answer_set(p, LiteralSet::inconsistent())) out.push_back(LiteralSet::inconsistent());
    sort_canonical(out);
    return out;
}

namespace {

// Integer-indexed program with counter-based closure.
class Engine {
public:
    explicit Engine(const Program& p) {
        for (const auto& r : p) {
            CRule c;
            c.head = r.head ? id(*r.head) : -1;
            for (const auto& l : r.pbody) c.pos.push_back(id(l));
            for (const auto& l : r.nbody) c.neg.push_back(id(l));
            std::sort(c.pos.begin(), c.pos.end());
            c.pos.erase(std::unique(c.pos.begin(), c.pos.end()), c.pos.end());
            rules_.push_back(std::move(c));
        }
        const int n = static_cast<int>(lits_.size());
        watch_.assign(n, {});
        for (std::size_t i = 0; i < rules_.size(); ++i)
            for (int l : rules_[i].pos) watch_[l].push_back(static_cast<int>(i));
        compl_.assign(n, -1);
        for (int i = 0; i < n; ++i) {
            auto it = ids_.find(complement(lits_[i]));
            if (it != ids_.end()) compl_[i] = it->second;
        }
        std::vector<int> count(n, 0);
        for (const auto& r : rules_)
            for (int l : r.neg) ++count[l];
        for (int i = 0; i < n; ++i)
            if (count[i] > 0) branch_.push_back(i);
        std::stable_sort(branch_.begin(), branch_.end(), [&](int a, int b) {
            if (count[a] != count[b]) return count[a] > count[b];
            return lits_[a] < lits_[b];
        });
    }

    std::vector<LiteralSet> solve(std::size_t max_models) {
        max_models_ = max_models;
        std::vector<signed char> val(lits_.size(), -1);
        search(val);
        return std::move(found_);
    }

    const Program* source = nullptr;

private:
    struct CRule {
        int head;
        std::vector<int> pos;
        std::vector<int> neg;
    };

    int id(const Literal& l) {
        auto [it, fresh] = ids_.emplace(l, static_cast<int>(lits_.size()));
        if (fresh) lits_.push_back(l);
        return it->second;
    }

    // Closure of the rules accepted by `enabled`.
    template <class Enabled>
    std::vector<char> closure(Enabled enabled) const {
        std::vector<char> in(lits_.size(), 0);
        std::vector<int> missing(rules_.size());
        std::vector<int> queue;
        for (std::size_t i = 0; i < rules_.size(); ++i) {
            const auto& r = rules_[i];
            if (r.head < 0 || !enabled(r)) {
                missing[i] = -1;
                continue;
            }
            missing[i] = static_cast<int>(r.pos.size());
            if (missing[i] == 0 && !in[r.head]) {
                in[r.head] = 1;
                queue.push_back(r.head);
            }
        }
        while (!queue.empty()) {
            int l = queue.back();
            queue.pop_back();
            for (int ri : watch_[l]) {
                if (missing[ri] <= 0) continue;
                if (--missing[ri] == 0) {
                    int h = rules_[ri].head;
                    if (!in[h]) {
                        in[h] = 1;
                        queue.push_back(h);
                    }
                }
            }
        }
        return in;
    }

    bool propagate(std::vector<signed char>& val) const {
        for (;;) {
            auto all_false = [&](const CRule& r) {
                return std::all_of(r.neg.begin(), r.neg.end(), [&](int l) { return val[l] == 0; });
            };
            auto none_true = [&](const CRule& r) {
                return std::none_of(r.neg.begin(), r.neg.end(), [&](int l) { return val[l] == 1; });
            };
            std::vector<char> lower = closure(all_false);
            for (std::size_t i = 0; i < lits_.size(); ++i)
                if (lower[i] && compl_[i] >= 0 && lower[compl_[i]]) return false;
            for (const auto& r : rules_) {
                if (r.head >= 0 || !all_false(r)) continue;
                if (std::all_of(r.pos.begin(), r.pos.end(), [&](int l) { return lower[l]; })) return false;
            }
            std::vector<char> upper = closure(none_true);
            bool changed = false;
            for (int b : branch_) {
                if (lower[b]) {
                    if (val[b] == 0) return false;
                    if (val[b] < 0) {
                        val[b] = 1;
                        changed = true;
                    }
                }
                if (!upper[b]) {
                    if (val[b] == 1) return false;
                    if (val[b] < 0) {
                        val[b] = 0;
                        changed = true;
                    }
                }
            }
            if (!changed) return true;
        }
    }

    void search(std::vector<signed char>& val) {
        if (max_models_ && found_.size() >= max_models_) return;
        if (!propagate(val)) return;
        auto open = std::find_if(branch_.begin(), branch_.end(), [&](int b) { return val[b] < 0; });
        if (open == branch_.end()) {
            emit(val);
            return;
        }
        for (signed char v : {1, 0}) {
            std::vector<signed char> next = val;
            next[*open] = v;
            search(next);
        }
    }

    void emit(const std::vector<signed char>& val) {
        std::vector<char> in = closure([&](const CRule& r) {
            return std::none_of(r.neg.begin(), r.neg.end(), [&](int l) { return val[l] == 1; });
        });
        std::set<Literal> s;
        for (std::size_t i = 0; i < lits_.size(); ++i)
            if (in[i]) s.insert(lits_[i]);
        if (!is_consistent(s)) return;
        LiteralSet x(std::move(s));
        if (is_answer_set(*source, x)) found_.push_back(std::move(x));
    }

    std::map<Literal, int> ids_;
    std::vector<Literal> lits_;
    std::vector<CRule> rules_;
    std::vector<std::vector<int>> watch_;
    std::vector<int> compl_;
    std::vector<int> branch_;
    std::vector<LiteralSet> found_;
    std::size_t max_models_ = 0;
};

} // namespace

std::vector<LiteralSet> answer_sets_search(const Program& p, const SearchOptions& opts) {
    std::vector<LiteralSet> out;
    if (is_answer_set(p, LiteralSet::inconsistent())) {
        out.push_back(LiteralSet::inconsistent());
    } else {
        Engine e(p);
        e.source = &p;
        out = e.solve(opts.max_models);
    }
    sort_canonical(out);
    if (opts.max_models && out.size() > opts.max_models) out.resize(opts.max_models);
    return out;
}

std::vector<std::size_t> generating_rule_indices(const Program& p, const LiteralSet& x) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto& r = p[i];
        bool applicable = std::all_of(r.pbody.begin(), r.pbody.end(), [&](const Literal& l) { return x.contains(l); });
        if (applicable && !defeated(r, x)) out.push_back(i);
    }
    return out;
}

Program generating_rules(const Program& p, const LiteralSet& x) {
    Program out;
    for (std::size_t i : generating_rule_indices(p, x)) out.push_back(p[i]);
    return out;
}

} // namespace ordlp
