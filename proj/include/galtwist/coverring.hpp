// SPDX-License-Identifier: Apache-2.0
//
// Normal-form rewriting modulo a stratified system of cover relations
// head^e = rhs, the relation ideal of a Kummer tower. Heads are pairwise
// distinct, exponents are >= 2, and every rhs variable sits at a strictly
// lower stratification level than its head, so the system is triangular
// with monic pure-power leading terms. For such systems exponent-division
// rewriting (head^a -> rhs^(a div e) * head^(a mod e)) is confluent and
// terminating, and the normal form decides membership in the ideal
// generated by { head^e - rhs }.
#pragma once

#include "galtwist/multipoly.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace galtwist {

template <class K>
struct CoverRelation {
    VarName head;
    int exponent = 0;  // >= 2
    MultiPoly<K> rhs;
};

template <class K>
class CoverRelationSystem {
public:
    CoverRelationSystem() = default;
    CoverRelationSystem(std::vector<CoverRelation<K>> relations, std::map<VarName, int> levels)
        : relations_(std::move(relations)), levels_(std::move(levels)) {
        for (std::size_t k = 0; k < relations_.size(); ++k) {
            const auto& rel = relations_[k];
            if (rel.exponent < 2) throw std::invalid_argument("cover relation exponent must be >= 2");
            if (!by_head_.emplace(rel.head, k).second)
                throw std::invalid_argument("duplicate cover relation head: " + rel.head.str());
            auto lh = levels_.find(rel.head);
            if (lh == levels_.end())
                throw std::invalid_argument("no stratification level for head " + rel.head.str());
            for (const VarName& v : rel.rhs.variables()) {
                auto lv = levels_.find(v);
                if (lv == levels_.end())
                    throw std::invalid_argument("no stratification level for rhs variable " + v.str());
                if (lv->second >= lh->second)
                    throw std::invalid_argument("rhs variable " + v.str() +
                                                " not below head " + rel.head.str());
            }
        }
    }

    const std::vector<CoverRelation<K>>& relations() const { return relations_; }
    const std::map<VarName, int>& levels() const { return levels_; }

    const CoverRelation<K>* find(const VarName& v) const {
        auto it = by_head_.find(v);
        return it == by_head_.end() ? nullptr : &relations_[it->second];
    }

    int level_of(const VarName& v) const {
        auto it = levels_.find(v);
        return it == levels_.end() ? 0 : it->second;
    }

private:
    std::vector<CoverRelation<K>> relations_;
    std::map<VarName, int> levels_;
    std::map<VarName, std::size_t> by_head_;  // index into relations_
};

/// One reducible position: a term of p (identified by its monomial) whose
/// exponent of `head` is at least the relation exponent.
struct Redex {
    Monomial monomial;
    VarName head;
};

template <class K>
std::vector<Redex> collect_redexes(const MultiPoly<K>& p, const CoverRelationSystem<K>& system) {
    std::vector<Redex> out;
    for (const auto& [m, c] : p.terms())
        for (const auto& [v, e] : m)
            if (const auto* rel = system.find(v); rel && e >= rel->exponent)
                out.push_back(Redex{m, v});
    return out;
}

/// Rewrites a single redex: c * rest * head^a  ->  c * rest * rhs^(a/e) * head^(a%e).
template <class K>
MultiPoly<K> reduce_at(const MultiPoly<K>& p, const CoverRelationSystem<K>& system,
                       const Redex& redex) {
    auto it = p.terms().find(redex.monomial);
    if (it == p.terms().end()) throw std::invalid_argument("reduce_at: stale redex");
    const auto* rel = system.find(redex.head);
    if (!rel) throw std::invalid_argument("reduce_at: no relation for head");
    int a = it->first.at(redex.head);
    if (a < rel->exponent) throw std::invalid_argument("reduce_at: exponent below relation");

    Monomial rest = it->first;
    rest.erase(redex.head);
    if (a % rel->exponent != 0) rest[redex.head] = a % rel->exponent;

    MultiPoly<K> replacement =
        MultiPoly<K>::term(rest, it->second) * rel->rhs.pow(a / rel->exponent);
    return p - MultiPoly<K>::term(it->first, it->second) + replacement;
}

/// Unique representative of p modulo the relation ideal: every head variable
/// ends with exponent strictly below its relation exponent. The chooser picks
/// which redex fires next; the normal form does not depend on the choice.
template <class K>
MultiPoly<K> normal_form(
    const MultiPoly<K>& p, const CoverRelationSystem<K>& system,
    const std::function<std::size_t(std::size_t)>& choose = {}) {
    MultiPoly<K> cur = p;
    while (true) {
        auto redexes = collect_redexes(cur, system);
        if (redexes.empty()) return cur;
        std::size_t pick = choose ? choose(redexes.size()) % redexes.size() : 0;
        cur = reduce_at(cur, system, redexes[pick]);
    }
}

template <class K>
bool is_zero_mod(const MultiPoly<K>& p, const CoverRelationSystem<K>& system) {
    return normal_form(p, system).is_zero();
}

}  // namespace galtwist
