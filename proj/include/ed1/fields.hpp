#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ed1/errors.hpp"
#include "ed1/intpoly.hpp"

namespace ed1 {

// ---------------------------------------------------------------------------
// Symbolic field descriptions
// ---------------------------------------------------------------------------

enum class FieldKind {
    Rational,
    Cyclotomic,                  // Q(zeta_m)
    RealCyclotomic,              // Q(zeta_m + zeta_m^{-1})
    FiniteField,                 // F_{p^k}
    RationalFunctionOverFinite,  // F_{p^k}(t)
    AlgClosure,                  // algebraic closure of Q or F_p
};

/// A described base field K with decidable membership predicates.
class FieldSpec {
public:
    static FieldSpec rational();
    static FieldSpec cyclotomic(int64_t m);
    static FieldSpec real_cyclotomic(int64_t m);
    static FieldSpec finite(int64_t p, int64_t k);
    static FieldSpec rational_function_over_finite(int64_t p, int64_t k);
    static FieldSpec alg_closure(int64_t characteristic);

    FieldKind kind() const { return kind_; }
    int64_t m() const { return m_; }
    int64_t p() const { return p_; }
    int64_t k() const { return k_; }

    int64_t characteristic() const;
    /// True iff a primitive n-th root of unity lies in the field.
    bool contains_zeta(int64_t n) const;
    /// True iff zeta_n + zeta_n^{-1} lies in the field; requires char | n to fail.
    bool contains_zeta_plus(int64_t n) const;  // throws CharDividesN
    bool fp_degree_at_least(int64_t r) const;  // throws NotPositiveCharacteristic
    bool contains_fq(int64_t q) const;         // throws NonPrimePower
    bool cardinality_at_least(int64_t c) const;

    std::string to_string() const;
    bool operator==(const FieldSpec& o) const;

private:
    FieldKind kind_ = FieldKind::Rational;
    int64_t m_ = 0;  // cyclotomic index
    int64_t p_ = 0;  // characteristic parameter (0 allowed for AlgClosure)
    int64_t k_ = 1;  // extension degree for finite kinds
};

// ---------------------------------------------------------------------------
// Concrete realization fields and their elements
// ---------------------------------------------------------------------------

enum class ConcreteKind { PrimeField, ExtField, Rationals, NumberField };

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Elem {
public:
    Elem() = default;

    const FieldPtr& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Elem operator+(const Elem& o) const;
    Elem operator-(const Elem& o) const;
    Elem operator-() const;
    Elem operator*(const Elem& o) const;
    Elem operator/(const Elem& o) const;  // throws on division by zero
    Elem inverse() const;
    Elem pow(int64_t e) const;  // negative exponents allowed for units
    bool operator==(const Elem& o) const;
    bool operator!=(const Elem& o) const { return !(*this == o); }

    /// Canonical text form: "v" for prime fields, "n" or "n/d" for Q,
    /// "[c0,c1,...]" for extension and number fields.
    std::string to_string() const;
    /// Canonical byte key for hashing; equal elements have equal keys.
    std::string key() const;

    const std::vector<int64_t>& fin_coeffs() const { return std::get<0>(rep_); }
    const std::vector<mpq_class>& rat_coeffs() const { return std::get<1>(rep_); }

private:
    friend class Field;
    FieldPtr field_;
    std::variant<std::vector<int64_t>, std::vector<mpq_class>> rep_;
};

/// An exact-arithmetic field: F_p, F_p[x]/(modulus), Q, or Q[x]/(minpoly).
/// Immutable; shared by its elements.
class Field : public std::enable_shared_from_this<Field> {
public:
    static FieldPtr prime(int64_t p);
    /// Canonical extension field: lexicographically smallest monic
    /// irreducible modulus of degree k (coefficients compared low-to-high).
    static FieldPtr ext(int64_t p, int64_t k);
    static FieldPtr ext_with_modulus(int64_t p, std::vector<int64_t> modulus);
    static FieldPtr rationals();
    static FieldPtr number_field(IntPoly minpoly);

    ConcreteKind kind() const { return kind_; }
    int64_t characteristic() const { return p_; }
    int64_t degree() const { return deg_; }                 // [field : prime subfield] (1 for Q)
    std::optional<int64_t> size() const;                    // p^deg for finite kinds
    const std::vector<int64_t>& modulus() const { return fmod_; }  // ExtField
    const IntPoly& min_poly() const { return minpoly_; }           // NumberField

    Elem zero() const;
    Elem one() const;
    Elem from_int(int64_t v) const;
    Elem from_coeffs(std::vector<int64_t> coeffs) const;      // finite kinds
    Elem from_rationals(std::vector<mpq_class> coeffs) const;  // char-0 kinds
    /// Residue class of x in F_p[x]/(modulus) or Q[x]/(minpoly).
    Elem generator() const;

    /// Finite fields enumerate canonically: element_at(i) has base-p digit
    /// vector of i, low-to-high.
    int64_t element_count() const;  // throws for infinite fields
    Elem element_at(int64_t i) const;
    int64_t element_index(const Elem& e) const;  // inverse of element_at

    /// Smallest generator of the multiplicative group under the canonical
    /// element order (finite fields only; memoized).
    Elem primitive_root() const;
    /// Canonical primitive n-th root of unity; throws MissingRoots if absent.
    Elem primitive_nth_root(int64_t n) const;
    /// Canonical element with minimal polynomial eta_min_poly(n) mod char;
    /// first root in canonical element order for finite fields.
    Elem canonical_eta(int64_t n) const;  // throws MissingRoots

    bool operator==(const Field& o) const;
    std::string describe() const;

private:
    Field() = default;
    Elem make_fin(std::vector<int64_t> c) const;
    Elem make_rat(std::vector<mpq_class> c) const;

    ConcreteKind kind_ = ConcreteKind::Rationals;
    int64_t p_ = 0;    // characteristic
    int64_t deg_ = 1;  // extension degree over prime subfield (or 1)
    std::vector<int64_t> fmod_;  // monic modulus over F_p, size deg_+1 (ExtField)
    IntPoly minpoly_;            // monic irreducible over Q (NumberField)
    // Provenance tags used for canonical root lookups.
    int64_t cyclo_order_ = 0;  // minpoly_ == cyclotomic_poly(cyclo_order_)
    int64_t eta_order_ = 0;    // minpoly_ == eta_min_poly(eta_order_)
    mutable std::optional<Elem> prim_root_cache_;

    friend FieldPtr build_realization(const struct RealizationRequirements&);
};

/// Smallest k >= 1 with e^k == 1; throws NotAUnitOfFiniteOrder when e is 0 or
/// has infinite order (detected by the cap 2*deg^2 in number fields).
int64_t mult_order(const Elem& e);

// ---------------------------------------------------------------------------
// Realization builder
// ---------------------------------------------------------------------------

struct RealizationRequirements {
    int64_t characteristic = 0;
    std::vector<int64_t> zetas;  // primitive n-th roots needed
    std::vector<int64_t> etas;   // zeta_n + zeta_n^{-1} needed
    int64_t fp_degree_min = 0;   // positive characteristic only
    int64_t contains_q = 0;      // 0 = no constraint; else F_q must embed
    int64_t min_cardinality = 1;
};

/// Smallest concrete field of the required characteristic satisfying every
/// requirement.  Throws InconsistentRequirements.
FieldPtr build_realization(const RealizationRequirements& req);

}  // namespace ed1
