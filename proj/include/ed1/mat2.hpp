#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ed1/fields.hpp"

namespace ed1 {

/// 2x2 matrix over a concrete field, exact arithmetic.
struct Mat2 {
    Elem a, b, c, d;

    Mat2() = default;
    Mat2(Elem a_, Elem b_, Elem c_, Elem d_);
    static Mat2 identity(const FieldPtr& f);
    static Mat2 from_ints(const FieldPtr& f, int64_t a, int64_t b, int64_t c, int64_t d);

    const FieldPtr& field() const { return a.field(); }

    Mat2 operator*(const Mat2& o) const;
    Mat2 inverse() const;  // throws SingularMatrix
    Mat2 pow(int64_t e) const;
    Elem det() const;
    Elem trace() const;
    bool operator==(const Mat2& o) const;
    bool operator!=(const Mat2& o) const { return !(*this == o); }

    /// True iff b = c = 0 and a = d (kernel test for the Moebius action).
    bool is_scalar() const;

    std::string key() const;
    /// Matrix literal "a,b,c,d" (row-major, canonical entry notation).
    std::string to_string() const;
};

/// Element of PGL2: a matrix up to scalars.  Equality and hashing use the
/// representative scaled so its first nonzero entry (a,b,c,d order) is 1.
struct PglElem {
    Mat2 rep;

    explicit PglElem(Mat2 m);
    Mat2 normalized() const;
    bool operator==(const PglElem& o) const;
    std::string key() const;
};

/// Smallest k >= 1 with m^k scalar; throws OrderExceedsCap past the cap.
int64_t pgl_order(const Mat2& m, int64_t cap);

/// trace(m)^2 / det(m); invariant under scaling, equals
/// zeta_n + zeta_n^{-1} + 2 for an element of projective order n prime to
/// the characteristic.
Elem projective_trace_invariant(const Mat2& m);

/// Point of the projective line over a finite field, convention t = x/y.
struct ProjPoint {
    Elem x, y;  // normalized: y = 1, or (1, 0) for the point at infinity

    static ProjPoint infinity(const FieldPtr& f);
    static ProjPoint affine(const Elem& t);
    static ProjPoint of(const Elem& x, const Elem& y);  // not both zero
    static std::vector<ProjPoint> all(const FieldPtr& f);  // q+1 points

    bool operator==(const ProjPoint& o) const;
    std::string to_string() const;
};

/// M * (x : y) = (a x + b y : c x + d y).
ProjPoint moebius_apply(const Mat2& m, const ProjPoint& pt);

/// Canonical representatives of every element of PGL2(F_q).
std::vector<Mat2> all_pgl2_elements(const FieldPtr& f);

}  // namespace ed1
