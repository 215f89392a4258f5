#include "brpinch/fields.hpp"

#include "brpinch/errors.hpp"

namespace brpinch::fields {

namespace {

void require_prime(Int p, const char* what) {
    if (!is_prime(p))
        throw Error(Errc::invalid_argument, std::string(what) + " must be prime, got " + std::to_string(p));
}

}  // namespace

FieldSpec FieldSpec::padic(Int p) {
    require_prime(p, "residue characteristic");
    return FieldSpec(Kind::padic_local, p);
}

FieldSpec FieldSpec::local_function(Int p) {
    require_prime(p, "characteristic");
    return FieldSpec(Kind::local_function, p);
}

FieldSpec FieldSpec::finite(Int p) {
    require_prime(p, "characteristic");
    return FieldSpec(Kind::finite_field, p);
}

FieldSpec FieldSpec::abstract_perfect(Int char_exponent) {
    if (char_exponent != 1) require_prime(char_exponent, "characteristic exponent");
    return FieldSpec(Kind::abstract_perfect, char_exponent);
}

FieldSpec FieldSpec::abstract(Int char_exponent) {
    if (char_exponent != 1) require_prime(char_exponent, "characteristic exponent");
    return FieldSpec(Kind::abstract, char_exponent);
}

Int FieldSpec::char_exponent() const {
    switch (kind_) {
        case Kind::padic_local:
        case Kind::real_closed:
        case Kind::separably_closed:
        case Kind::algebraically_closed:
            return 1;
        case Kind::local_function:
        case Kind::finite_field:
        case Kind::abstract_perfect:
        case Kind::abstract:
            return p_;
    }
    return 1;
}

bool FieldSpec::is_perfect() const {
    switch (kind_) {
        case Kind::finite_field:
        case Kind::real_closed:
        case Kind::separably_closed:
        case Kind::algebraically_closed:
        case Kind::abstract_perfect:
            return true;
        default:
            return char_exponent() == 1;
    }
}

bool FieldSpec::has_trivial_brauer() const {
    switch (kind_) {
        case Kind::finite_field:
        case Kind::separably_closed:
        case Kind::algebraically_closed:
            return true;
        default:
            return false;
    }
}

std::string FieldSpec::display() const {
    switch (kind_) {
        case Kind::padic_local: return "p-adic p=" + std::to_string(p_);
        case Kind::local_function: return "local-function p=" + std::to_string(p_);
        case Kind::finite_field: return "finite p=" + std::to_string(p_);
        case Kind::real_closed: return "real-closed";
        case Kind::separably_closed: return "separably-closed";
        case Kind::algebraically_closed: return "algebraically-closed";
        case Kind::abstract_perfect: return "abstract-perfect p=" + std::to_string(p_);
        case Kind::abstract: return "abstract p=" + std::to_string(p_);
    }
    return {};
}

ExtensionSpec::ExtensionSpec(FieldSpec base, Int total_degree, Int separable_degree)
    : base_(base), total_(total_degree), sep_(separable_degree), insep_(0) {
    if (total_ < 1 || sep_ < 1)
        throw Error(Errc::invalid_argument, "extension degrees must be positive");
    if (total_ % sep_ != 0)
        throw Error(Errc::invalid_argument, "separable degree " + std::to_string(sep_) +
                                                " does not divide total degree " + std::to_string(total_));
    insep_ = total_ / sep_;
    Int p = base_.char_exponent();
    if (!is_power_of(insep_, p))
        throw Error(Errc::invalid_argument,
                    "inseparable degree " + std::to_string(insep_) +
                        " is not a power of the characteristic exponent " + std::to_string(p));
    if (base_.is_perfect() && insep_ != 1)
        throw Error(Errc::invalid_argument, "a perfect base field admits no inseparable extensions");
    if (base_.kind() == FieldSpec::Kind::real_closed && total_ > 2)
        throw Error(Errc::invalid_argument,
                    "a real closed field has no extension of degree " + std::to_string(total_));
}

FieldSpec residue_field(const ExtensionSpec& e) {
    const FieldSpec& k = e.base();
    switch (k.kind()) {
        case FieldSpec::Kind::padic_local:
        case FieldSpec::Kind::local_function:
        case FieldSpec::Kind::finite_field:
            return k;  // finite extensions stay in the same class
        case FieldSpec::Kind::real_closed:
            return e.total_degree() == 2 ? FieldSpec::algebraically_closed() : k;
        case FieldSpec::Kind::separably_closed:
        case FieldSpec::Kind::algebraically_closed:
            return k;
        case FieldSpec::Kind::abstract_perfect:
            return k;  // finite extensions of perfect fields are perfect
        case FieldSpec::Kind::abstract:
            return k;
    }
    return k;
}

qz::AbGroup brauer_group(const FieldSpec& f) {
    switch (f.kind()) {
        case FieldSpec::Kind::padic_local:
        case FieldSpec::Kind::local_function:
            return qz::AbGroup::full_qmodz();  // invariant map
        case FieldSpec::Kind::finite_field:
        case FieldSpec::Kind::separably_closed:
        case FieldSpec::Kind::algebraically_closed:
            return qz::AbGroup::trivial();
        case FieldSpec::Kind::real_closed:
            return qz::AbGroup::known({2});
        case FieldSpec::Kind::abstract_perfect:
        case FieldSpec::Kind::abstract:
            return qz::AbGroup::symbolic_brauer(f.display());
    }
    return qz::AbGroup::trivial();
}

qz::QmodZSubgroup relative_brauer(const ExtensionSpec& e) {
    const FieldSpec& k = e.base();
    Int n = e.total_degree();
    if (n == 1) return qz::cyclic(1);
    if (k.is_local()) return qz::cyclic(n);  // order equals the degree
    if (k.has_trivial_brauer()) return qz::cyclic(1);
    if (k.kind() == FieldSpec::Kind::real_closed) return qz::cyclic(2);
    // Abstract bases: annihilated by the degree, nothing more is known.
    std::string note;
    if (e.purely_inseparable())
        note = "equals the " + std::to_string(n) + "-torsion of Br(" + k.display() + ")";
    return qz::QmodZSubgroup::unknown_bounded(n, std::move(note));
}

qz::QmodZSubgroup brauer_torsion(const FieldSpec& f, Int m) {
    if (m < 1) throw Error(Errc::invalid_argument, "torsion level must be positive");
    Int p = f.char_exponent();
    if (f.is_perfect() && p > 1) m = prime_to_part(m, p);  // no p-torsion over perfect fields
    switch (f.kind()) {
        case FieldSpec::Kind::padic_local:
        case FieldSpec::Kind::local_function:
            return qz::cyclic(m);
        case FieldSpec::Kind::finite_field:
        case FieldSpec::Kind::separably_closed:
        case FieldSpec::Kind::algebraically_closed:
            return qz::cyclic(1);
        case FieldSpec::Kind::real_closed:
            return qz::cyclic(gcd_of(Int{2}, m));
        case FieldSpec::Kind::abstract_perfect:
        case FieldSpec::Kind::abstract:
            return qz::QmodZSubgroup::unknown_bounded(m, m == 1 ? "" : std::to_string(m) + "-torsion of Br(" + f.display() + ")");
    }
    return qz::cyclic(1);
}

qz::QmodZSubgroup relative_h3(const ExtensionSpec& e) {
    const FieldSpec& k = e.base();
    if (e.total_degree() == 1) return qz::cyclic(1);
    switch (k.kind()) {
        case FieldSpec::Kind::padic_local:
        case FieldSpec::Kind::local_function:   // cohomological dimension 2
        case FieldSpec::Kind::finite_field:
        case FieldSpec::Kind::separably_closed:
        case FieldSpec::Kind::algebraically_closed:
        case FieldSpec::Kind::real_closed:      // periodic cohomology of the order-2 group
            return qz::cyclic(1);
        default:
            return qz::QmodZSubgroup::unknown_bounded(e.total_degree());
    }
}

}  // namespace brpinch::fields
