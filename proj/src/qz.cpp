#include "brpinch/qz.hpp"

#include <algorithm>

#include "brpinch/errors.hpp"

namespace brpinch::qz {

// ---------------------------------------------------------------- Cardinal

Cardinal Cardinal::finite(Int n) {
    if (n < 1) throw Error(Errc::invalid_argument, "group order must be positive");
    return Cardinal(K::fin, n);
}

Int Cardinal::value() const {
    if (k_ != K::fin) throw Error(Errc::invalid_argument, "order is not finite");
    return v_;
}

Cardinal operator*(const Cardinal& a, const Cardinal& b) {
    if (a.is_infinite() || b.is_infinite()) return Cardinal::infinite();
    if (a.is_unknown() || b.is_unknown()) return Cardinal::unknown();
    return Cardinal::finite(checked_mul(a.value(), b.value()));
}

std::string Cardinal::str() const {
    if (is_infinite()) return "infinite";
    if (is_unknown()) return "unknown";
    return std::to_string(v_);
}

// ----------------------------------------------------------- QmodZSubgroup

QmodZSubgroup QmodZSubgroup::cyclic(Int order) {
    if (order < 1) throw Error(Errc::invalid_argument, "subgroup order must be a positive integer");
    return QmodZSubgroup(Kind::known_cyclic, order, {});
}

QmodZSubgroup QmodZSubgroup::unknown_bounded(Int exponent_divides, std::string note) {
    if (exponent_divides < 1)
        throw Error(Errc::invalid_argument, "exponent bound must be a positive integer");
    if (exponent_divides == 1) return cyclic(1);  // bound forces triviality
    return QmodZSubgroup(Kind::unknown_bounded, exponent_divides, std::move(note));
}

Int QmodZSubgroup::order() const {
    if (kind_ != Kind::known_cyclic)
        throw Error(Errc::invalid_argument, "order requested for a subgroup that is not known exactly");
    return order_;
}

std::optional<Int> QmodZSubgroup::exponent_bound() const {
    if (kind_ == Kind::full) return std::nullopt;
    return order_;
}

std::string QmodZSubgroup::display() const {
    switch (kind_) {
        case Kind::full: return "Q/Z";
        case Kind::known_cyclic:
            if (order_ == 1) return "0";
            return "(1/" + std::to_string(order_) + ")Z/Z";
        case Kind::unknown_bounded: return "unknown, exponent | " + std::to_string(order_);
    }
    return {};
}

QmodZSubgroup cyclic(Int n) {
    return QmodZSubgroup::cyclic(n);
}

QmodZSubgroup intersect(const QmodZSubgroup& a, const QmodZSubgroup& b) {
    if (a.is_full()) return b;
    if (b.is_full()) return a;
    Int g = gcd_of(*a.exponent_bound(), *b.exponent_bound());
    if (a.is_known() && b.is_known()) return QmodZSubgroup::cyclic(g);
    // Order of the intersection divides both bounds; gcd 1 forces triviality.
    std::string note = a.is_known() ? b.note() : a.note();
    return QmodZSubgroup::unknown_bounded(g, std::move(note));
}

QmodZSubgroup join(const QmodZSubgroup& a, const QmodZSubgroup& b) {
    if (a.is_full() || b.is_full()) return QmodZSubgroup::full();
    Int l = lcm_of(*a.exponent_bound(), *b.exponent_bound());
    if (a.is_known() && b.is_known()) return QmodZSubgroup::cyclic(l);
    // A known part whose partner is bounded by a divisor of its order
    // already contains the partner, so the join is exact.
    if (a.is_known() && a.order() % *b.exponent_bound() == 0) return a;
    if (b.is_known() && b.order() % *a.exponent_bound() == 0) return b;
    return QmodZSubgroup::unknown_bounded(l);
}

QmodZSubgroup torsion(const QmodZSubgroup& g, Int m) {
    if (m < 1) throw Error(Errc::invalid_argument, "torsion level must be a positive integer");
    switch (g.kind()) {
        case QmodZSubgroup::Kind::full: return QmodZSubgroup::cyclic(m);
        case QmodZSubgroup::Kind::known_cyclic: return QmodZSubgroup::cyclic(gcd_of(g.order(), m));
        case QmodZSubgroup::Kind::unknown_bounded:
            return QmodZSubgroup::unknown_bounded(gcd_of(*g.exponent_bound(), m), g.note());
    }
    return QmodZSubgroup::cyclic(1);
}

QmodZSubgroup quotient_subgroup(const QmodZSubgroup& whole, const QmodZSubgroup& sub) {
    if (whole.is_full()) {
        if (sub.is_full()) return QmodZSubgroup::cyclic(1);
        return QmodZSubgroup::full();  // Q/Z by a finite-exponent subgroup
    }
    if (sub.is_full())
        throw Error(Errc::inconsistent_configuration, "Q/Z cannot embed in a finite-exponent group");
    if (whole.is_known()) {
        if (sub.is_known()) {
            if (whole.order() % sub.order() != 0)
                throw Error(Errc::inconsistent_configuration,
                            "subgroup order " + std::to_string(sub.order()) +
                                " does not divide " + std::to_string(whole.order()));
            return QmodZSubgroup::cyclic(whole.order() / sub.order());
        }
        return QmodZSubgroup::unknown_bounded(
            whole.order(), "cyclic quotient of a group of order " + std::to_string(whole.order()) +
                               " by a subgroup of undetermined order");
    }
    return QmodZSubgroup::unknown_bounded(*whole.exponent_bound());
}

// ----------------------------------------------------------------- AbGroup

namespace {

// One full gcd/lcm compare-exchange pass produces the invariant-factor
// chain: after position i is finished it divides every later entry, and the
// per-prime valuation multiset is preserved throughout.
void make_chain(std::vector<Int>& v) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            if (v[j] % v[i] == 0) continue;
            Int g = gcd_of(v[i], v[j]);
            Int l = lcm_of(v[i], v[j]);
            v[i] = g;
            v[j] = l;
        }
    }
    std::erase(v, Int{1});
}

int sum_rank(const AbGroup& g) {
    switch (g.kind()) {
        case AbGroup::Kind::full_qmodz: return 0;
        case AbGroup::Kind::symbolic_br: return 1;
        case AbGroup::Kind::extension: return 2;
        case AbGroup::Kind::unknown: return 3;
        default: return 4;  // known last
    }
}

}  // namespace

AbGroup AbGroup::trivial() {
    return AbGroup();
}

AbGroup AbGroup::known(std::vector<Int> invariant_factors) {
    for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
        if (invariant_factors[i] < 2)
            throw Error(Errc::invalid_argument, "invariant factors must be >= 2");
        if (i > 0 && invariant_factors[i] % invariant_factors[i - 1] != 0)
            throw Error(Errc::invalid_argument, "invariant factors must form a divisibility chain");
    }
    AbGroup g;
    g.kind_ = Kind::known;
    Int order = 1;
    for (Int d : invariant_factors) order = checked_mul(order, d);
    g.order_ = Cardinal::finite(order);
    g.exponent_ = invariant_factors.empty() ? 1 : invariant_factors.back();
    g.factors_ = std::move(invariant_factors);
    return g;
}

AbGroup AbGroup::of_cyclic_orders(std::vector<Int> orders) {
    for (Int n : orders)
        if (n < 1) throw Error(Errc::invalid_argument, "cyclic orders must be positive");
    make_chain(orders);
    return known(std::move(orders));
}

AbGroup AbGroup::full_qmodz() {
    AbGroup g;
    g.kind_ = Kind::full_qmodz;
    g.order_ = Cardinal::infinite();
    g.exponent_ = std::nullopt;
    return g;
}

AbGroup AbGroup::symbolic_brauer(std::string field_label) {
    AbGroup g;
    g.kind_ = Kind::symbolic_br;
    g.field_label_ = std::move(field_label);
    g.order_ = Cardinal::unknown();
    g.exponent_ = std::nullopt;
    return g;
}

AbGroup AbGroup::unknown(std::optional<Int> exponent_divides, std::string note, std::optional<Int> order) {
    if (exponent_divides && *exponent_divides < 1)
        throw Error(Errc::invalid_argument, "exponent bound must be positive");
    if (order && *order < 1) throw Error(Errc::invalid_argument, "order must be positive");
    if ((exponent_divides && *exponent_divides == 1) || (order && *order == 1)) return trivial();
    AbGroup g;
    g.kind_ = Kind::unknown;
    g.note_ = std::move(note);
    g.order_ = order ? Cardinal::finite(*order) : Cardinal::unknown();
    g.exponent_ = exponent_divides;
    return g;
}

std::string AbGroup::display() const {
    switch (kind_) {
        case Kind::known: {
            if (factors_.empty()) return "0";
            std::string s;
            for (std::size_t i = 0; i < factors_.size(); ++i) {
                if (i) s += " + ";
                s += "Z/" + std::to_string(factors_[i]);
            }
            return s;
        }
        case Kind::full_qmodz: return "Q/Z";
        case Kind::symbolic_br: return "Br(" + field_label_ + ")";
        case Kind::unknown: {
            std::string s = "unknown";
            if (order_.is_finite()) s += ", order " + std::to_string(order_.value());
            if (exponent_) s += ", exponent | " + std::to_string(*exponent_);
            return s;
        }
        case Kind::extension: {
            std::string s = "ext(" + parts_[0].display() + " ; " + parts_[1].display() + ")";
            if (!order_.is_unknown()) s += " order " + order_.str();
            return s;
        }
        case Kind::direct_sum: {
            std::string s;
            for (std::size_t i = 0; i < parts_.size(); ++i) {
                if (i) s += " (+) ";
                s += parts_[i].display();
            }
            return s;
        }
    }
    return {};
}

bool AbGroup::operator==(const AbGroup& o) const {
    if (kind_ != o.kind_ || factors_ != o.factors_ || field_label_ != o.field_label_ ||
        order_ != o.order_ || exponent_ != o.exponent_)
        return false;
    if (parts_.size() != o.parts_.size()) return false;
    for (std::size_t i = 0; i < parts_.size(); ++i)
        if (!(parts_[i] == o.parts_[i])) return false;
    return true;
}

AbGroup to_group(const QmodZSubgroup& g) {
    switch (g.kind()) {
        case QmodZSubgroup::Kind::full: return AbGroup::full_qmodz();
        case QmodZSubgroup::Kind::known_cyclic:
            return g.order() == 1 ? AbGroup::trivial() : AbGroup::known({g.order()});
        case QmodZSubgroup::Kind::unknown_bounded:
            return AbGroup::unknown(*g.exponent_bound(), g.note());
    }
    return AbGroup::trivial();
}

namespace {

void flatten_into(const AbGroup& g, std::vector<Int>& cyclic_orders, std::vector<AbGroup>& rest) {
    switch (g.kind()) {
        case AbGroup::Kind::known:
            for (Int d : g.invariant_factors()) cyclic_orders.push_back(d);
            return;
        case AbGroup::Kind::direct_sum:
            for (const AbGroup& s : g.summands()) flatten_into(s, cyclic_orders, rest);
            return;
        default:
            rest.push_back(g);
            return;
    }
}

}  // namespace

AbGroup product(std::span<const AbGroup> groups) {
    std::vector<Int> cyclic_orders;
    std::vector<AbGroup> rest;
    for (const AbGroup& g : groups) flatten_into(g, cyclic_orders, rest);

    AbGroup merged = AbGroup::of_cyclic_orders(std::move(cyclic_orders));
    if (!merged.is_trivial()) rest.push_back(merged);

    if (rest.empty()) return AbGroup::trivial();
    if (rest.size() == 1) return rest.front();

    std::stable_sort(rest.begin(), rest.end(), [](const AbGroup& a, const AbGroup& b) {
        int ra = sum_rank(a), rb = sum_rank(b);
        if (ra != rb) return ra < rb;
        return a.display() < b.display();
    });

    AbGroup g;
    g.kind_ = AbGroup::Kind::direct_sum;
    Cardinal order = Cardinal::finite(1);
    std::optional<Int> exp = 1;
    for (const AbGroup& s : rest) {
        order = order * s.order();
        if (exp && s.exponent_bound())
            exp = lcm_of(*exp, *s.exponent_bound());
        else
            exp = std::nullopt;
    }
    g.order_ = order;
    g.exponent_ = exp;
    g.parts_ = std::move(rest);
    return g;
}

AbGroup product(std::initializer_list<AbGroup> groups) {
    return product(std::span<const AbGroup>(groups.begin(), groups.size()));
}

AbGroup extension(const AbGroup& sub, const AbGroup& quot) {
    if (quot.is_trivial()) return sub;
    if (sub.is_trivial()) return quot;
    AbGroup g;
    g.kind_ = AbGroup::Kind::extension;
    g.order_ = sub.order() * quot.order();
    if (sub.exponent_bound() && quot.exponent_bound())
        g.exponent_ = checked_mul(*sub.exponent_bound(), *quot.exponent_bound());
    else
        g.exponent_ = std::nullopt;
    g.parts_ = {sub, quot};
    return g;
}

AbGroup coker_of_injection(const QmodZSubgroup& sub, const AbGroup& ambient) {
    if (sub.is_full()) {
        if (ambient.kind() == AbGroup::Kind::full_qmodz) return AbGroup::trivial();
        throw Error(Errc::inconsistent_configuration, "Q/Z cannot inject into " + ambient.display());
    }
    if (!sub.is_known()) {
        return AbGroup::unknown(ambient.exponent_bound(),
                                "cokernel of an injection with undetermined source", std::nullopt);
    }
    Int m = sub.order();
    if (m == 1) return ambient;

    // A cyclic group of order m embeds only if m divides the exponent.
    if (ambient.exponent_bound() && *ambient.exponent_bound() % m != 0)
        throw Error(Errc::inconsistent_configuration,
                    "no subgroup of order " + std::to_string(m) + " inside " + ambient.display());

    switch (ambient.kind()) {
        case AbGroup::Kind::full_qmodz:
            return AbGroup::full_qmodz();
        case AbGroup::Kind::known: {
            Int n = ambient.order().value();
            if (n % m != 0)
                throw Error(Errc::inconsistent_configuration,
                            "subgroup order " + std::to_string(m) + " does not divide " + std::to_string(n));
            if (ambient.invariant_factors().size() <= 1) {
                Int q = n / m;
                return q == 1 ? AbGroup::trivial() : AbGroup::known({q});
            }
            if (m == n) return AbGroup::trivial();
            return AbGroup::unknown(*ambient.exponent_bound(),
                                    "quotient of " + ambient.display() +
                                        " by a cyclic subgroup of order " + std::to_string(m) +
                                        "; structure undetermined",
                                    n / m);
        }
        default: {
            std::optional<Int> order;
            if (ambient.order().is_finite()) {
                Int n = ambient.order().value();
                if (n % m != 0)
                    throw Error(Errc::inconsistent_configuration,
                                "subgroup order " + std::to_string(m) + " does not divide " +
                                    std::to_string(n));
                order = n / m;
            }
            if (ambient.order().is_infinite() && !order) {
                return AbGroup::unknown(ambient.exponent_bound(),
                                        "quotient of an infinite group by a cyclic subgroup of order " +
                                            std::to_string(m));
            }
            return AbGroup::unknown(ambient.exponent_bound(),
                                    "quotient of " + ambient.display() + " by a cyclic subgroup of order " +
                                        std::to_string(m),
                                    order);
        }
    }
}

}  // namespace brpinch::qz
