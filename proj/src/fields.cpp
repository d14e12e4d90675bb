#include "ed1/fields.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace ed1 {

namespace {

// --- F_p[x] helpers (coefficients low-to-high, reduced into [0,p)) ---------

void fp_trim(std::vector<int64_t>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int64_t fp_inv_scalar(int64_t a, int64_t p) {
    int64_t t = 0, newt = 1, r = p, newr = a % p;
    if (newr < 0) newr += p;
    while (newr != 0) {
        int64_t q = r / newr;
        int64_t t2 = t - q * newt;
        t = newt;
        newt = t2;
        int64_t r2 = r - q * newr;
        r = newr;
        newr = r2;
    }
    if (r != 1) throw std::domain_error("fp_inv_scalar: not invertible");
    return ((t % p) + p) % p;
}

std::vector<int64_t> fp_mul(const std::vector<int64_t>& a, const std::vector<int64_t>& b,
                            int64_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<int64_t> c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    fp_trim(c);
    return c;
}

// Remainder of a modulo m (m need not be monic).
std::vector<int64_t> fp_rem(std::vector<int64_t> a, const std::vector<int64_t>& m, int64_t p) {
    fp_trim(a);
    int64_t dm = static_cast<int64_t>(m.size()) - 1;
    int64_t lead_inv = fp_inv_scalar(m.back(), p);
    while (static_cast<int64_t>(a.size()) - 1 >= dm) {
        int64_t da = static_cast<int64_t>(a.size()) - 1;
        int64_t f = a.back() * lead_inv % p;
        for (int64_t j = 0; j <= dm; ++j) {
            auto& t = a[static_cast<size_t>(da - dm + j)];
            t = ((t - f * m[static_cast<size_t>(j)]) % p + p) % p;
        }
        fp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

std::vector<int64_t> fp_inv_mod(const std::vector<int64_t>& a, const std::vector<int64_t>& m,
                                int64_t p) {
    // Extended Euclid: find u with u*a == 1 (mod m).
    std::vector<int64_t> r0 = m, r1 = fp_rem(a, m, p);
    std::vector<int64_t> t0, t1 = {1};
    if (r1.empty()) throw std::domain_error("division by zero");
    while (!r1.empty()) {
        // divide r0 by r1
        std::vector<int64_t> q;
        std::vector<int64_t> rem = r0;
        int64_t d1 = static_cast<int64_t>(r1.size()) - 1;
        int64_t lead_inv = fp_inv_scalar(r1.back(), p);
        q.assign(std::max<size_t>(rem.size() > r1.size() ? rem.size() - r1.size() + 1 : 1, 1), 0);
        while (static_cast<int64_t>(rem.size()) - 1 >= d1 && !rem.empty()) {
            int64_t dr = static_cast<int64_t>(rem.size()) - 1;
            int64_t f = rem.back() * lead_inv % p;
            q[static_cast<size_t>(dr - d1)] = f;
            for (int64_t j = 0; j <= d1; ++j) {
                auto& t = rem[static_cast<size_t>(dr - d1 + j)];
                t = ((t - f * r1[static_cast<size_t>(j)]) % p + p) % p;
            }
            fp_trim(rem);
        }
        // (r0, r1) <- (r1, rem); (t0, t1) <- (t1, t0 - q*t1)
        std::vector<int64_t> qt = fp_mul(q, t1, p);
        std::vector<int64_t> t2(std::max(t0.size(), qt.size()), 0);
        for (size_t i = 0; i < t0.size(); ++i) t2[i] = t0[i];
        for (size_t i = 0; i < qt.size(); ++i) t2[i] = ((t2[i] - qt[i]) % p + p) % p;
        fp_trim(t2);
        r0 = r1;
        r1 = rem;
        t0 = t1;
        t1 = t2;
    }
    if (r0.size() != 1) throw std::domain_error("fp_inv_mod: gcd not constant");
    int64_t scale = fp_inv_scalar(r0[0], p);
    for (auto& c : t0) c = c * scale % p;
    fp_trim(t0);
    return fp_rem(t0, m, p);
}

bool fp_is_irreducible(const std::vector<int64_t>& poly, int64_t p) {
    int64_t d = static_cast<int64_t>(poly.size()) - 1;
    if (d <= 0) return false;
    if (d == 1) return true;
    // Trial division by every monic polynomial of degree 1..d/2.
    for (int64_t deg = 1; deg <= d / 2; ++deg) {
        int64_t count = pow_i64(p, deg);
        for (int64_t v = 0; v < count; ++v) {
            std::vector<int64_t> divisor(static_cast<size_t>(deg) + 1, 0);
            int64_t t = v;
            for (int64_t i = 0; i < deg; ++i) {
                divisor[static_cast<size_t>(i)] = t % p;
                t /= p;
            }
            divisor[static_cast<size_t>(deg)] = 1;
            if (fp_rem(poly, divisor, p).empty()) return false;
        }
    }
    return true;
}

// Lexicographically smallest monic irreducible of degree k over F_p, with
// coefficient tuples (c0,...,c_{k-1}) compared low-to-high.
std::vector<int64_t> canonical_irreducible(int64_t p, int64_t k) {
    int64_t count = pow_i64(p, k);
    for (int64_t v = 0; v < count; ++v) {
        std::vector<int64_t> poly(static_cast<size_t>(k) + 1, 0);
        int64_t t = v;
        for (int64_t i = k - 1; i >= 0; --i) {  // c0 is the most significant digit
            poly[static_cast<size_t>(i)] = t % p;
            t /= p;
        }
        poly[static_cast<size_t>(k)] = 1;
        if (fp_is_irreducible(poly, p)) return poly;
    }
    throw std::logic_error("no irreducible polynomial found");
}

// --- Q[x] helpers for number fields ---------------------------------------

void q_trim(std::vector<mpq_class>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<mpq_class> q_mul(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<mpq_class> c(a.size() + b.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    q_trim(c);
    return c;
}

std::vector<mpq_class> q_rem(std::vector<mpq_class> a, const std::vector<mpq_class>& m) {
    q_trim(a);
    int64_t dm = static_cast<int64_t>(m.size()) - 1;
    mpq_class lead_inv = 1 / m.back();
    while (static_cast<int64_t>(a.size()) - 1 >= dm && !a.empty()) {
        int64_t da = static_cast<int64_t>(a.size()) - 1;
        mpq_class f = a.back() * lead_inv;
        for (int64_t j = 0; j <= dm; ++j)
            a[static_cast<size_t>(da - dm + j)] -= f * m[static_cast<size_t>(j)];
        q_trim(a);
    }
    return a;
}

std::vector<mpq_class> q_inv_mod(const std::vector<mpq_class>& a,
                                 const std::vector<mpq_class>& m) {
    std::vector<mpq_class> r0 = m, r1 = q_rem(a, m);
    std::vector<mpq_class> t0, t1 = {mpq_class(1)};
    if (r1.empty()) throw std::domain_error("division by zero");
    while (!r1.empty()) {
        std::vector<mpq_class> rem = r0;
        int64_t d1 = static_cast<int64_t>(r1.size()) - 1;
        mpq_class lead_inv = 1 / r1.back();
        std::vector<mpq_class> q(
            rem.size() > r1.size() ? rem.size() - r1.size() + 1 : 1, mpq_class(0));
        while (static_cast<int64_t>(rem.size()) - 1 >= d1 && !rem.empty()) {
            int64_t dr = static_cast<int64_t>(rem.size()) - 1;
            mpq_class f = rem.back() * lead_inv;
            q[static_cast<size_t>(dr - d1)] = f;
            for (int64_t j = 0; j <= d1; ++j)
                rem[static_cast<size_t>(dr - d1 + j)] -= f * r1[static_cast<size_t>(j)];
            q_trim(rem);
        }
        std::vector<mpq_class> qt = q_mul(q, t1);
        std::vector<mpq_class> t2(std::max(t0.size(), qt.size()), mpq_class(0));
        for (size_t i = 0; i < t0.size(); ++i) t2[i] = t0[i];
        for (size_t i = 0; i < qt.size(); ++i) t2[i] -= qt[i];
        q_trim(t2);
        r0 = r1;
        r1 = rem;
        t0 = t1;
        t1 = t2;
    }
    if (r0.size() != 1) throw std::domain_error("q_inv_mod: gcd not constant");
    mpq_class scale = 1 / r0[0];
    for (auto& c : t0) c *= scale;
    q_trim(t0);
    return q_rem(t0, m);
}

int64_t normalized_conductor(int64_t m) { return m % 2 == 0 ? m : 2 * m; }

// Orbit criterion over Gal(Q(zeta_L)/Q) = (Z/L)^x: eta_n is fixed by the
// subgroup H iff every a in H has a == +-1 (mod n).
bool eta_in_cyclotomic(int64_t n, int64_t m_tilde, bool real_subfield) {
    int64_t L = lcm_i64(n, m_tilde);
    for (int64_t a = 1; a < L; ++a) {
        if (gcd_i64(a, L) != 1) continue;
        int64_t am = a % m_tilde;
        bool fixes_base = real_subfield ? (am == 1 % m_tilde || am == (m_tilde - 1) % m_tilde)
                                        : (am == 1 % m_tilde);
        if (!fixes_base) continue;
        int64_t an = a % n;
        if (!(an == 1 % n || an == (n - 1) % n)) return false;
    }
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldSpec
// ---------------------------------------------------------------------------

FieldSpec FieldSpec::rational() {
    FieldSpec s;
    s.kind_ = FieldKind::Rational;
    return s;
}

FieldSpec FieldSpec::cyclotomic(int64_t m) {
    if (m < 1) throw std::invalid_argument("cyclotomic: m >= 1 required");
    FieldSpec s;
    s.kind_ = FieldKind::Cyclotomic;
    s.m_ = m;
    return s;
}

FieldSpec FieldSpec::real_cyclotomic(int64_t m) {
    if (m < 1) throw std::invalid_argument("real_cyclotomic: m >= 1 required");
    FieldSpec s;
    s.kind_ = FieldKind::RealCyclotomic;
    s.m_ = m;
    return s;
}

FieldSpec FieldSpec::finite(int64_t p, int64_t k) {
    if (!is_prime(p) || k < 1) throw std::invalid_argument("finite: prime p, k >= 1 required");
    FieldSpec s;
    s.kind_ = FieldKind::FiniteField;
    s.p_ = p;
    s.k_ = k;
    return s;
}

FieldSpec FieldSpec::rational_function_over_finite(int64_t p, int64_t k) {
    FieldSpec s = finite(p, k);
    s.kind_ = FieldKind::RationalFunctionOverFinite;
    return s;
}

FieldSpec FieldSpec::alg_closure(int64_t characteristic) {
    if (characteristic != 0 && !is_prime(characteristic))
        throw std::invalid_argument("alg_closure: characteristic 0 or prime required");
    FieldSpec s;
    s.kind_ = FieldKind::AlgClosure;
    s.p_ = characteristic;
    return s;
}

int64_t FieldSpec::characteristic() const {
    switch (kind_) {
        case FieldKind::Rational:
        case FieldKind::Cyclotomic:
        case FieldKind::RealCyclotomic: return 0;
        case FieldKind::FiniteField:
        case FieldKind::RationalFunctionOverFinite:
        case FieldKind::AlgClosure: return p_;
    }
    return 0;
}

bool FieldSpec::contains_zeta(int64_t n) const {
    if (n < 1) throw std::invalid_argument("contains_zeta: n >= 1 required");
    if (n == 1) return true;
    int64_t c = characteristic();
    if (c != 0 && n % c == 0) return false;  // no primitive n-th root in char | n
    switch (kind_) {
        case FieldKind::Rational: return n <= 2;
        case FieldKind::Cyclotomic: return normalized_conductor(m_) % n == 0;
        case FieldKind::RealCyclotomic: return n <= 2;
        case FieldKind::FiniteField:
        case FieldKind::RationalFunctionOverFinite: {
            // roots of unity live in the constant field F_{p^k}
            int64_t ord = mul_order_mod(p_ % n, n);
            return k_ % ord == 0;
        }
        case FieldKind::AlgClosure: return true;
    }
    return false;
}

bool FieldSpec::contains_zeta_plus(int64_t n) const {
    if (n < 1) throw std::invalid_argument("contains_zeta_plus: n >= 1 required");
    int64_t c = characteristic();
    if (c != 0 && n % c == 0)
        throw Error(Errc::CharDividesN, "characteristic divides n = " + std::to_string(n));
    switch (kind_) {
        case FieldKind::Rational: return eta_in_cyclotomic(n, 2, false);
        case FieldKind::Cyclotomic: return eta_in_cyclotomic(n, normalized_conductor(m_), false);
        case FieldKind::RealCyclotomic:
            return eta_in_cyclotomic(n, normalized_conductor(m_), true);
        case FieldKind::FiniteField:
        case FieldKind::RationalFunctionOverFinite: {
            if (n <= 2) return true;
            // eta_n in F_q  <=>  q == +-1 (mod n)
            int64_t q_mod = 1;
            for (int64_t i = 0; i < k_; ++i) q_mod = q_mod * (p_ % n) % n;
            return q_mod == 1 % n || q_mod == (n - 1) % n;
        }
        case FieldKind::AlgClosure: return true;
    }
    return false;
}

bool FieldSpec::fp_degree_at_least(int64_t r) const {
    if (r < 1) throw std::invalid_argument("fp_degree_at_least: r >= 1 required");
    if (characteristic() == 0)
        throw Error(Errc::NotPositiveCharacteristic, "field has characteristic 0");
    switch (kind_) {
        case FieldKind::FiniteField: return k_ >= r;
        case FieldKind::RationalFunctionOverFinite:
        case FieldKind::AlgClosure: return true;  // infinite degree
        default: return false;                    // unreachable
    }
}

bool FieldSpec::contains_fq(int64_t q) const {
    int64_t qp = 0, qk = 0;
    if (!factor_prime_power(q, qp, qk))
        throw Error(Errc::NonPrimePower, std::to_string(q) + " is not a prime power");
    if (characteristic() != qp) return false;
    switch (kind_) {
        case FieldKind::FiniteField:
        case FieldKind::RationalFunctionOverFinite: return k_ % qk == 0;
        case FieldKind::AlgClosure: return true;
        default: return false;
    }
}

bool FieldSpec::cardinality_at_least(int64_t c) const {
    if (c < 1) throw std::invalid_argument("cardinality_at_least: c >= 1 required");
    if (kind_ != FieldKind::FiniteField) return true;
    int64_t size = 1;
    for (int64_t i = 0; i < k_; ++i) {
        size *= p_;
        if (size >= c) return true;
    }
    return size >= c;
}

std::string FieldSpec::to_string() const {
    switch (kind_) {
        case FieldKind::Rational: return "Q";
        case FieldKind::Cyclotomic: return "Q(zeta:" + std::to_string(m_) + ")";
        case FieldKind::RealCyclotomic: return "Q(eta:" + std::to_string(m_) + ")";
        case FieldKind::FiniteField: return "F:" + std::to_string(pow_i64(p_, k_));
        case FieldKind::RationalFunctionOverFinite:
            return "F:" + std::to_string(pow_i64(p_, k_)) + "(t)";
        case FieldKind::AlgClosure: return "closure:" + std::to_string(p_);
    }
    return "?";
}

bool FieldSpec::operator==(const FieldSpec& o) const {
    return kind_ == o.kind_ && m_ == o.m_ && p_ == o.p_ && k_ == o.k_;
}

// ---------------------------------------------------------------------------
// Field construction
// ---------------------------------------------------------------------------

FieldPtr Field::prime(int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("Field::prime requires a prime");
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = ConcreteKind::PrimeField;
    f->p_ = p;
    f->deg_ = 1;
    return f;
}

FieldPtr Field::ext(int64_t p, int64_t k) {
    if (k == 1) return prime(p);
    static std::map<std::pair<int64_t, int64_t>, std::vector<int64_t>> modulus_cache;
    static std::mutex mu;
    std::vector<int64_t> mod;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = modulus_cache.find({p, k});
        if (it != modulus_cache.end()) {
            mod = it->second;
        } else {
            mod = canonical_irreducible(p, k);
            modulus_cache.emplace(std::make_pair(p, k), mod);
        }
    }
    return ext_with_modulus(p, std::move(mod));
}

FieldPtr Field::ext_with_modulus(int64_t p, std::vector<int64_t> modulus) {
    if (!is_prime(p)) throw std::invalid_argument("ext_with_modulus requires a prime");
    for (auto& c : modulus) c = ((c % p) + p) % p;
    fp_trim(modulus);
    if (modulus.size() < 2 || modulus.back() != 1)
        throw std::invalid_argument("ext_with_modulus requires a monic modulus of degree >= 1");
    if (!fp_is_irreducible(modulus, p))
        throw std::invalid_argument("ext_with_modulus: modulus is reducible");
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = ConcreteKind::ExtField;
    f->p_ = p;
    f->deg_ = static_cast<int64_t>(modulus.size()) - 1;
    f->fmod_ = std::move(modulus);
    return f;
}

FieldPtr Field::rationals() {
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = ConcreteKind::Rationals;
    f->p_ = 0;
    f->deg_ = 1;
    return f;
}

FieldPtr Field::number_field(IntPoly minpoly) {
    if (minpoly.degree() < 1 || !minpoly.is_monic())
        throw std::invalid_argument("number_field requires a monic polynomial of degree >= 1");
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = ConcreteKind::NumberField;
    f->p_ = 0;
    f->deg_ = minpoly.degree();
    f->minpoly_ = std::move(minpoly);
    return f;
}

std::optional<int64_t> Field::size() const {
    if (p_ == 0) return std::nullopt;
    return pow_i64(p_, deg_);
}

Elem Field::make_fin(std::vector<int64_t> c) const {
    Elem e;
    e.field_ = shared_from_this();
    c.resize(static_cast<size_t>(deg_), 0);
    e.rep_ = std::move(c);
    return e;
}

Elem Field::make_rat(std::vector<mpq_class> c) const {
    Elem e;
    e.field_ = shared_from_this();
    c.resize(static_cast<size_t>(deg_), mpq_class(0));
    e.rep_ = std::move(c);
    return e;
}

Elem Field::zero() const { return from_int(0); }
Elem Field::one() const { return from_int(1); }

Elem Field::from_int(int64_t v) const {
    if (p_ > 0) {
        std::vector<int64_t> c(static_cast<size_t>(deg_), 0);
        c[0] = ((v % p_) + p_) % p_;
        return make_fin(std::move(c));
    }
    std::vector<mpq_class> c(static_cast<size_t>(deg_), mpq_class(0));
    c[0] = v;
    return make_rat(std::move(c));
}

Elem Field::from_coeffs(std::vector<int64_t> coeffs) const {
    if (p_ == 0) {
        std::vector<mpq_class> c;
        c.reserve(coeffs.size());
        for (int64_t v : coeffs) c.emplace_back(v);
        return from_rationals(std::move(c));
    }
    if (static_cast<int64_t>(coeffs.size()) > deg_)
        throw std::invalid_argument("from_coeffs: too many coefficients");
    for (auto& c : coeffs) c = ((c % p_) + p_) % p_;
    return make_fin(std::move(coeffs));
}

Elem Field::from_rationals(std::vector<mpq_class> coeffs) const {
    if (p_ != 0) throw std::invalid_argument("from_rationals: finite field");
    if (static_cast<int64_t>(coeffs.size()) > deg_)
        throw std::invalid_argument("from_rationals: too many coefficients");
    for (auto& c : coeffs) c.canonicalize();
    return make_rat(std::move(coeffs));
}

Elem Field::generator() const {
    if (deg_ < 2) throw std::logic_error("generator: field has no extension generator");
    if (p_ > 0) {
        std::vector<int64_t> c(static_cast<size_t>(deg_), 0);
        c[1] = 1;
        return make_fin(std::move(c));
    }
    std::vector<mpq_class> c(static_cast<size_t>(deg_), mpq_class(0));
    c[1] = 1;
    return make_rat(std::move(c));
}

int64_t Field::element_count() const {
    auto s = size();
    if (!s) throw std::logic_error("element_count: infinite field");
    return *s;
}

Elem Field::element_at(int64_t i) const {
    int64_t q = element_count();
    if (i < 0 || i >= q) throw std::out_of_range("element_at");
    // Canonical order: coefficient tuples compared low-to-high, with c0 the
    // most significant digit.
    std::vector<int64_t> c(static_cast<size_t>(deg_), 0);
    for (int64_t j = deg_ - 1; j >= 0; --j) {
        c[static_cast<size_t>(j)] = i % p_;
        i /= p_;
    }
    return make_fin(std::move(c));
}

Elem Field::primitive_root() const {
    if (p_ == 0) throw std::logic_error("primitive_root: infinite field");
    if (prim_root_cache_) return *prim_root_cache_;
    int64_t q = element_count();
    int64_t group = q - 1;
    auto primes = prime_factors(group);
    for (int64_t i = 1; i < q; ++i) {
        Elem e = element_at(i);
        if (e.is_zero()) continue;
        bool primitive = true;
        for (int64_t ell : primes) {
            if (e.pow(group / ell).is_one()) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            prim_root_cache_ = e;
            return e;
        }
    }
    throw std::logic_error("primitive_root: none found");
}

Elem Field::primitive_nth_root(int64_t n) const {
    if (n < 1) throw std::invalid_argument("primitive_nth_root: n >= 1");
    if (n == 1) return one();
    if (p_ > 0) {
        if (n % p_ == 0)
            throw Error(Errc::MissingRoots, "characteristic divides " + std::to_string(n));
        int64_t q = element_count();
        if ((q - 1) % n != 0)
            throw Error(Errc::MissingRoots,
                        "no primitive root of order " + std::to_string(n) + " in " + describe());
        return primitive_root().pow((q - 1) / n);
    }
    if (n == 2) return from_int(-1);
    if (kind_ == ConcreteKind::NumberField && cyclo_order_ % n == 0)
        return generator().pow(cyclo_order_ / n);
    throw Error(Errc::MissingRoots, "no zeta_" + std::to_string(n) + " in " + describe());
}

Elem Field::canonical_eta(int64_t n) const {
    if (n < 1) throw std::invalid_argument("canonical_eta: n >= 1");
    if (p_ > 0) {
        if (n % p_ == 0)
            throw Error(Errc::MissingRoots, "characteristic divides " + std::to_string(n));
        // First root of eta_min_poly(n) mod p in canonical element order.
        std::vector<int64_t> poly = eta_min_poly(n).mod_p(p_);
        int64_t q = element_count();
        for (int64_t i = 0; i < q; ++i) {
            Elem x = element_at(i);
            Elem acc = zero();
            for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + from_int(*it);
            if (acc.is_zero()) return x;
        }
        throw Error(Errc::MissingRoots, "no eta_" + std::to_string(n) + " in " + describe());
    }
    switch (n) {
        case 1: return from_int(2);
        case 2: return from_int(-2);
        case 3: return from_int(-1);
        case 4: return from_int(0);
        case 6: return from_int(1);
        default: break;
    }
    if (kind_ == ConcreteKind::NumberField) {
        if (eta_order_ == n) return generator();
        if (cyclo_order_ > 0 && cyclo_order_ % n == 0) {
            Elem z = generator().pow(cyclo_order_ / n);
            return z + z.inverse();
        }
    }
    throw Error(Errc::MissingRoots, "no eta_" + std::to_string(n) + " in " + describe());
}

bool Field::operator==(const Field& o) const {
    return kind_ == o.kind_ && p_ == o.p_ && deg_ == o.deg_ && fmod_ == o.fmod_ &&
           minpoly_ == o.minpoly_;
}

std::string Field::describe() const {
    switch (kind_) {
        case ConcreteKind::PrimeField: return "F" + std::to_string(p_);
        case ConcreteKind::ExtField:
            return "F" + std::to_string(pow_i64(p_, deg_));
        case ConcreteKind::Rationals: return "Q";
        case ConcreteKind::NumberField: return "Q[x]/(" + minpoly_.to_string() + ")";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Elem arithmetic
// ---------------------------------------------------------------------------

namespace {
void require_same_field(const Elem& a, const Elem& b) {
    if (!a.field() || !b.field()) throw std::logic_error("uninitialized element");
    if (a.field().get() != b.field().get() && !(*a.field() == *b.field()))
        throw std::invalid_argument("elements from different fields");
}
}  // namespace

bool Elem::is_zero() const {
    if (rep_.index() == 0) {
        for (int64_t c : std::get<0>(rep_))
            if (c != 0) return false;
        return true;
    }
    for (const auto& c : std::get<1>(rep_))
        if (c != 0) return false;
    return true;
}

bool Elem::is_one() const { return *this == field_->one(); }

Elem Elem::operator+(const Elem& o) const {
    require_same_field(*this, o);
    if (rep_.index() == 0) {
        int64_t p = field_->characteristic();
        std::vector<int64_t> c = std::get<0>(rep_);
        const auto& oc = std::get<0>(o.rep_);
        for (size_t i = 0; i < c.size(); ++i) c[i] = (c[i] + oc[i]) % p;
        Elem e;
        e.field_ = field_;
        e.rep_ = std::move(c);
        return e;
    }
    std::vector<mpq_class> c = std::get<1>(rep_);
    const auto& oc = std::get<1>(o.rep_);
    for (size_t i = 0; i < c.size(); ++i) c[i] += oc[i];
    Elem e;
    e.field_ = field_;
    e.rep_ = std::move(c);
    return e;
}

Elem Elem::operator-() const {
    if (rep_.index() == 0) {
        int64_t p = field_->characteristic();
        std::vector<int64_t> c = std::get<0>(rep_);
        for (auto& v : c) v = (p - v) % p;
        Elem e;
        e.field_ = field_;
        e.rep_ = std::move(c);
        return e;
    }
    std::vector<mpq_class> c = std::get<1>(rep_);
    for (auto& v : c) v = -v;
    Elem e;
    e.field_ = field_;
    e.rep_ = std::move(c);
    return e;
}

Elem Elem::operator-(const Elem& o) const { return *this + (-o); }

Elem Elem::operator*(const Elem& o) const {
    require_same_field(*this, o);
    const Field& f = *field_;
    Elem e;
    e.field_ = field_;
    if (rep_.index() == 0) {
        int64_t p = f.characteristic();
        std::vector<int64_t> prod = fp_mul(std::get<0>(rep_), std::get<0>(o.rep_), p);
        if (f.kind() == ConcreteKind::ExtField) prod = fp_rem(std::move(prod), f.modulus(), p);
        prod.resize(static_cast<size_t>(f.degree()), 0);
        e.rep_ = std::move(prod);
        return e;
    }
    std::vector<mpq_class> prod = q_mul(std::get<1>(rep_), std::get<1>(o.rep_));
    if (f.kind() == ConcreteKind::NumberField) {
        std::vector<mpq_class> m;
        for (const auto& c : f.min_poly().coeffs()) m.emplace_back(c);
        prod = q_rem(std::move(prod), m);
    }
    prod.resize(static_cast<size_t>(f.degree()), mpq_class(0));
    e.rep_ = std::move(prod);
    return e;
}

Elem Elem::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    const Field& f = *field_;
    Elem e;
    e.field_ = field_;
    if (rep_.index() == 0) {
        int64_t p = f.characteristic();
        if (f.kind() == ConcreteKind::PrimeField) {
            std::vector<int64_t> c = {fp_inv_scalar(std::get<0>(rep_)[0], p)};
            c.resize(1, 0);
            e.rep_ = std::move(c);
            return e;
        }
        std::vector<int64_t> inv = fp_inv_mod(std::get<0>(rep_), f.modulus(), p);
        inv.resize(static_cast<size_t>(f.degree()), 0);
        e.rep_ = std::move(inv);
        return e;
    }
    if (f.kind() == ConcreteKind::Rationals) {
        std::vector<mpq_class> c = {1 / std::get<1>(rep_)[0]};
        e.rep_ = std::move(c);
        return e;
    }
    std::vector<mpq_class> m;
    for (const auto& c : f.min_poly().coeffs()) m.emplace_back(c);
    std::vector<mpq_class> inv = q_inv_mod(std::get<1>(rep_), m);
    inv.resize(static_cast<size_t>(f.degree()), mpq_class(0));
    e.rep_ = std::move(inv);
    return e;
}

Elem Elem::operator/(const Elem& o) const { return *this * o.inverse(); }

Elem Elem::pow(int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    Elem base = *this;
    Elem acc = field_->one();
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Elem::operator==(const Elem& o) const {
    require_same_field(*this, o);
    return rep_ == o.rep_;
}

std::string Elem::to_string() const {
    const Field& f = *field_;
    std::ostringstream os;
    if (rep_.index() == 0) {
        const auto& c = std::get<0>(rep_);
        if (f.kind() == ConcreteKind::PrimeField) return std::to_string(c[0]);
        os << "[";
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) os << ",";
            os << c[i];
        }
        os << "]";
        return os.str();
    }
    const auto& c = std::get<1>(rep_);
    if (f.kind() == ConcreteKind::Rationals) return c[0].get_str();
    os << "[";
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) os << ",";
        os << c[i].get_str();
    }
    os << "]";
    return os.str();
}

std::string Elem::key() const { return to_string(); }

int64_t mult_order(const Elem& e) {
    if (!e.field()) throw std::logic_error("mult_order: uninitialized");
    if (e.is_zero()) throw Error(Errc::NotAUnitOfFiniteOrder, "zero element");
    const Field& f = *e.field();
    if (f.characteristic() > 0) {
        int64_t group = f.element_count() - 1;
        int64_t ord = group;
        for (int64_t ell : prime_factors(group)) {
            while (ord % ell == 0 && e.pow(ord / ell).is_one()) ord /= ell;
        }
        return ord;
    }
    int64_t cap = 2 * f.degree() * f.degree() + 2;
    Elem acc = e;
    for (int64_t k = 1; k <= cap; ++k) {
        if (acc.is_one()) return k;
        acc = acc * e;
    }
    throw Error(Errc::NotAUnitOfFiniteOrder,
                "no finite order within cap " + std::to_string(cap));
}

// ---------------------------------------------------------------------------
// build_realization
// ---------------------------------------------------------------------------

FieldPtr build_realization(const RealizationRequirements& req) {
    int64_t p = req.characteristic;
    if (p != 0 && !is_prime(p))
        throw Error(Errc::InconsistentRequirements, "characteristic must be 0 or prime");
    for (int64_t n : req.zetas)
        if (n < 1 || (p > 0 && n % p == 0 && n > 1))
            throw Error(Errc::InconsistentRequirements,
                        "zeta_" + std::to_string(n) + " impossible in characteristic " +
                            std::to_string(p));
    for (int64_t n : req.etas)
        if (n < 1 || (p > 0 && n % p == 0 && n > 1))
            throw Error(Errc::InconsistentRequirements,
                        "eta_" + std::to_string(n) + " impossible in characteristic " +
                            std::to_string(p));

    if (p > 0) {
        int64_t k0 = 1;
        for (int64_t n : req.zetas)
            if (n > 1) k0 = lcm_i64(k0, mul_order_mod(p % n, n));
        for (int64_t n : req.etas) {
            if (n <= 2) continue;
            // degree of eta_n over F_p: least d with p^d == +-1 (mod n)
            int64_t x = p % n, d = 1;
            while (!(x == 1 % n || x == (n - 1) % n)) {
                x = x * (p % n) % n;
                ++d;
            }
            k0 = lcm_i64(k0, d);
        }
        if (req.contains_q > 0) {
            int64_t qp = 0, qk = 0;
            if (!factor_prime_power(req.contains_q, qp, qk) || qp != p)
                throw Error(Errc::InconsistentRequirements,
                            "F_" + std::to_string(req.contains_q) + " has the wrong characteristic");
            k0 = lcm_i64(k0, qk);
        }
        int64_t k = k0;
        auto card = [&](int64_t kk) {
            int64_t s = 1;
            for (int64_t i = 0; i < kk; ++i) {
                s *= p;
                if (s >= req.min_cardinality) return s;
            }
            return s;
        };
        while (k < req.fp_degree_min || card(k) < req.min_cardinality) k += k0;
        return k == 1 ? Field::prime(p) : Field::ext(p, k);
    }

    if (req.fp_degree_min > 0 || req.contains_q > 0)
        throw Error(Errc::InconsistentRequirements,
                    "finite-characteristic requirement over characteristic 0");
    std::vector<int64_t> zetas, etas;
    for (int64_t n : req.zetas)
        if (n > 2) zetas.push_back(n);
    for (int64_t n : req.etas)
        if (n != 1 && n != 2 && n != 3 && n != 4 && n != 6) etas.push_back(n);
    if (zetas.empty() && etas.empty()) return Field::rationals();
    if (zetas.empty()) {
        std::sort(etas.begin(), etas.end());
        etas.erase(std::unique(etas.begin(), etas.end()), etas.end());
        if (etas.size() == 1) {
            auto f = std::const_pointer_cast<Field>(Field::number_field(eta_min_poly(etas[0])));
            f->eta_order_ = etas[0];
            return f;
        }
    }
    int64_t N = 1;
    for (int64_t n : zetas) N = lcm_i64(N, n);
    for (int64_t n : etas) N = lcm_i64(N, n);
    auto f = std::const_pointer_cast<Field>(Field::number_field(cyclotomic_poly(N)));
    f->cyclo_order_ = N;
    return f;
}

}  // namespace ed1
