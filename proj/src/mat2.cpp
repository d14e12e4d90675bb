#include "ed1/mat2.hpp"

#include <stdexcept>

namespace ed1 {

Mat2::Mat2(Elem a_, Elem b_, Elem c_, Elem d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

Mat2 Mat2::identity(const FieldPtr& f) { return {f->one(), f->zero(), f->zero(), f->one()}; }

Mat2 Mat2::from_ints(const FieldPtr& f, int64_t a, int64_t b, int64_t c, int64_t d) {
    return {f->from_int(a), f->from_int(b), f->from_int(c), f->from_int(d)};
}

Mat2 Mat2::operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Elem Mat2::det() const { return a * d - b * c; }
Elem Mat2::trace() const { return a + d; }

Mat2 Mat2::inverse() const {
    Elem dt = det();
    if (dt.is_zero()) throw Error(Errc::SingularMatrix, "determinant is zero");
    Elem inv = dt.inverse();
    return {d * inv, (-b) * inv, (-c) * inv, a * inv};
}

Mat2 Mat2::pow(int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    Mat2 acc = identity(field());
    Mat2 base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Mat2::operator==(const Mat2& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
}

bool Mat2::is_scalar() const { return b.is_zero() && c.is_zero() && a == d; }

std::string Mat2::key() const {
    return a.key() + "," + b.key() + "," + c.key() + "," + d.key();
}

std::string Mat2::to_string() const {
    return a.to_string() + "," + b.to_string() + "," + c.to_string() + "," + d.to_string();
}

PglElem::PglElem(Mat2 m) : rep(std::move(m)) {
    if (rep.det().is_zero()) throw Error(Errc::SingularMatrix, "PGL element must be invertible");
}

Mat2 PglElem::normalized() const {
    const Elem* entries[4] = {&rep.a, &rep.b, &rep.c, &rep.d};
    for (const Elem* e : entries) {
        if (!e->is_zero()) {
            Elem s = e->inverse();
            return {rep.a * s, rep.b * s, rep.c * s, rep.d * s};
        }
    }
    throw Error(Errc::SingularMatrix, "zero matrix");
}

bool PglElem::operator==(const PglElem& o) const { return normalized() == o.normalized(); }

std::string PglElem::key() const { return normalized().key(); }

int64_t pgl_order(const Mat2& m, int64_t cap) {
    if (m.det().is_zero()) throw Error(Errc::SingularMatrix, "pgl_order of singular matrix");
    Mat2 acc = m;
    for (int64_t k = 1; k <= cap; ++k) {
        if (acc.is_scalar()) return k;
        acc = acc * m;
    }
    throw Error(Errc::OrderExceedsCap, "projective order exceeds " + std::to_string(cap));
}

Elem projective_trace_invariant(const Mat2& m) {
    Elem dt = m.det();
    if (dt.is_zero()) throw Error(Errc::SingularMatrix, "trace invariant of singular matrix");
    Elem t = m.trace();
    return t * t / dt;
}

ProjPoint ProjPoint::infinity(const FieldPtr& f) { return {f->one(), f->zero()}; }

ProjPoint ProjPoint::affine(const Elem& t) { return {t, t.field()->one()}; }

ProjPoint ProjPoint::of(const Elem& x, const Elem& y) {
    if (y.is_zero()) {
        if (x.is_zero()) throw std::invalid_argument("ProjPoint: (0 : 0)");
        return infinity(x.field());
    }
    return {x / y, y.field()->one()};
}

std::vector<ProjPoint> ProjPoint::all(const FieldPtr& f) {
    std::vector<ProjPoint> pts;
    int64_t q = f->element_count();
    pts.reserve(static_cast<size_t>(q) + 1);
    for (int64_t i = 0; i < q; ++i) pts.push_back(affine(f->element_at(i)));
    pts.push_back(infinity(f));
    return pts;
}

bool ProjPoint::operator==(const ProjPoint& o) const { return x == o.x && y == o.y; }

std::string ProjPoint::to_string() const {
    return "(" + x.to_string() + ":" + y.to_string() + ")";
}

ProjPoint moebius_apply(const Mat2& m, const ProjPoint& pt) {
    return ProjPoint::of(m.a * pt.x + m.b * pt.y, m.c * pt.x + m.d * pt.y);
}

std::vector<Mat2> all_pgl2_elements(const FieldPtr& f) {
    // Canonical representatives: first nonzero entry equals 1.
    std::vector<Mat2> out;
    int64_t q = f->element_count();
    Elem one = f->one(), zero = f->zero();
    // a = 1: b, c, d free with det != 0
    for (int64_t bi = 0; bi < q; ++bi)
        for (int64_t ci = 0; ci < q; ++ci)
            for (int64_t di = 0; di < q; ++di) {
                Mat2 m{one, f->element_at(bi), f->element_at(ci), f->element_at(di)};
                if (!m.det().is_zero()) out.push_back(m);
            }
    // a = 0, b = 1: c != 0 (det = -bc), d free
    for (int64_t ci = 1; ci < q; ++ci)
        for (int64_t di = 0; di < q; ++di) {
            Mat2 m{zero, one, f->element_at(ci), f->element_at(di)};
            if (!m.det().is_zero()) out.push_back(m);
        }
    return out;
}

}  // namespace ed1
