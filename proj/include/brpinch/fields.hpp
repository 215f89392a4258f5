#pragma once

// Symbolic model of base fields and finite extensions. Fields carry no
// element arithmetic: every evaluation rule in this project reads only the
// field kind and extension degrees.

#include <string>

#include "brpinch/ints.hpp"
#include "brpinch/qz.hpp"

namespace brpinch::fields {

class FieldSpec {
public:
    enum class Kind : unsigned char {
        padic_local,          // finite extension of Q_p
        local_function,       // finite extension of F_p((t))
        finite_field,
        real_closed,
        separably_closed,
        algebraically_closed,
        abstract_perfect,     // perfect, no evaluation rule for Br
        abstract,             // no structure assumed beyond the char exponent
    };

    static FieldSpec padic(Int p);
    static FieldSpec local_function(Int p);
    static FieldSpec finite(Int p);
    static FieldSpec real_closed() { return FieldSpec(Kind::real_closed, 1); }
    static FieldSpec separably_closed() { return FieldSpec(Kind::separably_closed, 1); }
    static FieldSpec algebraically_closed() { return FieldSpec(Kind::algebraically_closed, 1); }
    static FieldSpec abstract_perfect(Int char_exponent);
    static FieldSpec abstract(Int char_exponent);

    Kind kind() const { return kind_; }
    /// Residue characteristic / characteristic / characteristic exponent,
    /// depending on the kind; 1 encodes characteristic zero.
    Int p() const { return p_; }
    Int char_exponent() const;
    bool is_local() const { return kind_ == Kind::padic_local || kind_ == Kind::local_function; }
    bool is_perfect() const;
    /// Kinds whose Brauer group is trivial by evaluation rule.
    bool has_trivial_brauer() const;

    std::string display() const;

    bool operator==(const FieldSpec&) const = default;

private:
    FieldSpec(Kind k, Int p) : kind_(k), p_(p) {}
    Kind kind_;
    Int p_;
};

/// A finite field extension, stored through its degree data only.
/// Invariants checked at construction:
///   totalDegree = separableDegree * inseparableDegree,
///   inseparableDegree a power of the base characteristic exponent,
///   inseparableDegree 1 over perfect bases,
///   totalDegree <= 2 over a real closed base.
class ExtensionSpec {
public:
    ExtensionSpec(FieldSpec base, Int total_degree, Int separable_degree);

    const FieldSpec& base() const { return base_; }
    Int total_degree() const { return total_; }
    Int separable_degree() const { return sep_; }
    Int inseparable_degree() const { return insep_; }
    bool purely_inseparable() const { return sep_ == 1; }

    bool operator==(const ExtensionSpec&) const = default;

private:
    FieldSpec base_;
    Int total_;
    Int sep_;
    Int insep_;
};

/// Symbolic descriptor of the extension field itself, used as the base of
/// the next floor of extensions (fibers over a pinch point).
FieldSpec residue_field(const ExtensionSpec& e);

qz::AbGroup brauer_group(const FieldSpec& f);
qz::QmodZSubgroup relative_brauer(const ExtensionSpec& e);
/// m-torsion of Br(f), with the vanishing rule for p-torsion over perfect
/// fields of characteristic p.
qz::QmodZSubgroup brauer_torsion(const FieldSpec& f, Int m);
/// Relative H^3 of the extension; exact over local, finite, closed and real
/// closed bases, an exponent bound elsewhere.
qz::QmodZSubgroup relative_h3(const ExtensionSpec& e);

}  // namespace brpinch::fields
