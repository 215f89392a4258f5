#pragma once

// Exact arithmetic for finite subgroups of Q/Z and for finite abelian
// groups kept in invariant-factor form. Every finite subgroup of Q/Z is
// cyclic and is determined by its order, so subgroups are stored as a
// single integer; group descriptors that cannot be pinned down exactly
// carry order/exponent bookkeeping instead of a guessed structure.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "brpinch/ints.hpp"

namespace brpinch::qz {

/// Order of a group that may be infinite or not determined by the data.
class Cardinal {
public:
    static Cardinal finite(Int n);
    static Cardinal infinite() { return Cardinal(K::inf, 0); }
    static Cardinal unknown() { return Cardinal(K::unk, 0); }

    bool is_finite() const { return k_ == K::fin; }
    bool is_infinite() const { return k_ == K::inf; }
    bool is_unknown() const { return k_ == K::unk; }
    Int value() const;  // finite only

    friend Cardinal operator*(const Cardinal& a, const Cardinal& b);
    bool operator==(const Cardinal&) const = default;

    std::string str() const;  // "6" | "infinite" | "unknown"

private:
    enum class K : unsigned char { fin, inf, unk };
    Cardinal(K k, Int v) : k_(k), v_(v) {}
    K k_ = K::fin;
    Int v_ = 1;
};

/// A subgroup of Q/Z: the cyclic group (1/n)Z/Z of a known order, all of
/// Q/Z, or an undetermined subgroup with an exponent-divisibility bound.
/// An exponent bound of 1 forces the trivial group and is normalized to
/// the known case on construction.
class QmodZSubgroup {
public:
    enum class Kind : unsigned char { known_cyclic, full, unknown_bounded };

    static QmodZSubgroup cyclic(Int order);
    static QmodZSubgroup full() { return QmodZSubgroup(Kind::full, 0, {}); }
    static QmodZSubgroup unknown_bounded(Int exponent_divides, std::string note = {});

    Kind kind() const { return kind_; }
    bool is_known() const { return kind_ == Kind::known_cyclic; }
    bool is_full() const { return kind_ == Kind::full; }
    bool is_trivial() const { return kind_ == Kind::known_cyclic && order_ == 1; }

    Int order() const;  // known_cyclic only
    /// known: the order; unknown: the bound; full: nullopt.
    std::optional<Int> exponent_bound() const;
    const std::string& note() const { return note_; }

    std::string display() const;

    /// Structural equality; notes are commentary and do not participate.
    bool operator==(const QmodZSubgroup& o) const {
        return kind_ == o.kind_ && order_ == o.order_;
    }

private:
    QmodZSubgroup(Kind k, Int v, std::string note) : kind_(k), order_(v), note_(std::move(note)) {}
    Kind kind_;
    Int order_;  // order (known) or exponent bound (unknown)
    std::string note_;
};

QmodZSubgroup cyclic(Int n);
QmodZSubgroup intersect(const QmodZSubgroup& a, const QmodZSubgroup& b);
QmodZSubgroup join(const QmodZSubgroup& a, const QmodZSubgroup& b);
/// Elements of g of order dividing m.
QmodZSubgroup torsion(const QmodZSubgroup& g, Int m);
/// whole / sub for nested subgroups of Q/Z; always cyclic when whole is finite.
QmodZSubgroup quotient_subgroup(const QmodZSubgroup& whole, const QmodZSubgroup& sub);

/// A finite (or symbolically described) abelian group.
///
///   known       invariant factors d1 | d2 | ... | dr (empty = trivial)
///   extension   0 -> sub -> G -> quot -> 0 with order/exponent bookkeeping;
///               never silently split
///   direct_sum  summands that cannot all be merged into one known group
///   symbolic_br Br of a field with no evaluation rule
///   full_qmodz  Q/Z
///   unknown     order and/or exponent bound only
class AbGroup {
public:
    enum class Kind : unsigned char { known, extension, direct_sum, symbolic_br, full_qmodz, unknown };

    AbGroup() = default;  // the trivial group
    static AbGroup trivial();
    /// Requires a divisibility-chained list with every factor >= 2.
    static AbGroup known(std::vector<Int> invariant_factors);
    /// Canonicalizes an arbitrary multiset of cyclic orders.
    static AbGroup of_cyclic_orders(std::vector<Int> orders);
    static AbGroup full_qmodz();
    static AbGroup symbolic_brauer(std::string field_label);
    static AbGroup unknown(std::optional<Int> exponent_divides, std::string note = {},
                           std::optional<Int> order = {});

    Kind kind() const { return kind_; }
    bool is_trivial() const { return kind_ == Kind::known && factors_.empty(); }
    bool is_known() const { return kind_ == Kind::known; }

    const std::vector<Int>& invariant_factors() const { return factors_; }
    const AbGroup& sub() const { return parts_[0]; }   // extension
    const AbGroup& quot() const { return parts_[1]; }  // extension
    std::span<const AbGroup> summands() const { return parts_; }
    const std::string& field_label() const { return field_label_; }

    Cardinal order() const { return order_; }
    std::optional<Int> exponent_bound() const { return exponent_; }
    const std::string& note() const { return note_; }

    std::string display() const;

    bool operator==(const AbGroup& o) const;  // structural, ignores notes

private:
    friend AbGroup extension(const AbGroup&, const AbGroup&);
    friend AbGroup product(std::span<const AbGroup>);

    Kind kind_ = Kind::known;
    std::vector<Int> factors_;
    std::vector<AbGroup> parts_;
    std::string field_label_;
    std::string note_;
    Cardinal order_ = Cardinal::finite(1);
    std::optional<Int> exponent_ = 1;
};

AbGroup to_group(const QmodZSubgroup& g);

/// Direct product in canonical form: known summands merge into a single
/// invariant-factor chain; symbolic and unknown summands are preserved and
/// sorted so that equal descriptors are syntactically equal.
AbGroup product(std::span<const AbGroup> groups);
AbGroup product(std::initializer_list<AbGroup> groups);

/// Extension of quot by sub. Degenerate layers collapse; otherwise the
/// result records order and exponent bookkeeping and nothing more.
AbGroup extension(const AbGroup& sub, const AbGroup& quot);

/// Cokernel of an injection of a cyclic subgroup into ambient. Exact when
/// the ambient group is cyclic or the injection is trivial/full; otherwise
/// order and exponent data only.
AbGroup coker_of_injection(const QmodZSubgroup& sub, const AbGroup& ambient);

}  // namespace brpinch::qz
