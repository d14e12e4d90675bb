#include "ed1/intpoly.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "ed1/errors.hpp"

namespace ed1 {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::from_ints(std::initializer_list<long> coeffs) {
    std::vector<mpz_class> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    return IntPoly(std::move(c));
}

IntPoly IntPoly::x_power_minus_one(int64_t n) {
    std::vector<mpz_class> c(static_cast<size_t>(n) + 1, mpz_class(0));
    c[0] = -1;
    c[static_cast<size_t>(n)] = 1;
    return IntPoly(std::move(c));
}

const mpz_class& IntPoly::coeff(int64_t i) const {
    static const mpz_class zero(0);
    if (i < 0 || i >= static_cast<int64_t>(coeffs_.size())) return zero;
    return coeffs_[static_cast<size_t>(i)];
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<mpz_class> c(std::max(coeffs_.size(), o.coeffs_.size()), mpz_class(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<mpz_class> c(std::max(coeffs_.size(), o.coeffs_.size()), mpz_class(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<mpz_class> c(coeffs_.size() + o.coeffs_.size() - 1, mpz_class(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::div_exact(const IntPoly& divisor) const {
    if (divisor.is_zero() || !divisor.is_monic())
        throw std::invalid_argument("div_exact requires a monic divisor");
    std::vector<mpz_class> rem = coeffs_;
    int64_t dd = divisor.degree();
    if (degree() < dd) {
        if (!is_zero()) throw std::invalid_argument("div_exact: degree too small");
        return IntPoly();
    }
    std::vector<mpz_class> quot(static_cast<size_t>(degree() - dd) + 1, mpz_class(0));
    for (int64_t i = degree(); i >= dd; --i) {
        mpz_class lead = rem[static_cast<size_t>(i)];
        if (lead == 0) continue;
        quot[static_cast<size_t>(i - dd)] = lead;
        for (int64_t j = 0; j <= dd; ++j)
            rem[static_cast<size_t>(i - dd + j)] -= lead * divisor.coeffs_[static_cast<size_t>(j)];
    }
    for (const auto& r : rem)
        if (r != 0) throw std::invalid_argument("div_exact: nonzero remainder");
    return IntPoly(std::move(quot));
}

bool IntPoly::divides(const IntPoly& dividend) const {
    if (is_zero()) return dividend.is_zero();
    if (!is_monic()) throw std::invalid_argument("divides requires a monic divisor");
    if (dividend.is_zero()) return true;
    if (dividend.degree() < degree()) return false;
    std::vector<mpz_class> rem = dividend.coeffs_;
    int64_t dd = degree();
    for (int64_t i = dividend.degree(); i >= dd; --i) {
        mpz_class lead = rem[static_cast<size_t>(i)];
        if (lead == 0) continue;
        for (int64_t j = 0; j <= dd; ++j)
            rem[static_cast<size_t>(i - dd + j)] -= lead * coeffs_[static_cast<size_t>(j)];
    }
    for (const auto& r : rem)
        if (r != 0) return false;
    return true;
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<int64_t> IntPoly::mod_p(int64_t p) const {
    std::vector<int64_t> out(coeffs_.size());
    mpz_class m(p);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        mpz_class r = coeffs_[i] % m;
        if (r < 0) r += m;
        out[i] = static_cast<int64_t>(r.get_si());
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int64_t i = degree(); i >= 0; --i) {
        const mpz_class& c = coeffs_[static_cast<size_t>(i)];
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) {
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

int64_t euler_phi(int64_t n) {
    int64_t result = n;
    int64_t m = n;
    for (int64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool factor_prime_power(int64_t q, int64_t& p, int64_t& k) {
    if (q < 2) return false;
    int64_t m = q;
    for (int64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            p = d;
            k = 0;
            while (m % d == 0) {
                m /= d;
                ++k;
            }
            return m == 1;
        }
    }
    p = q;
    k = 1;
    return true;
}

int64_t gcd_i64(int64_t a, int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

int64_t lcm_i64(int64_t a, int64_t b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_i64(a, b) * b;
}

int64_t pow_i64(int64_t base, int64_t exp) {
    int64_t r = 1;
    for (int64_t i = 0; i < exp; ++i) {
        if (r > (int64_t{1} << 62) / std::max<int64_t>(base, 1))
            throw std::overflow_error("pow_i64 overflow");
        r *= base;
    }
    return r;
}

std::vector<int64_t> prime_factors(int64_t n) {
    std::vector<int64_t> out;
    for (int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

int64_t mul_order_mod(int64_t a, int64_t mod) {
    if (mod <= 0 || gcd_i64(a, mod) != 1) throw std::invalid_argument("mul_order_mod: gcd != 1");
    if (mod == 1) return 1;
    a %= mod;
    if (a < 0) a += mod;
    int64_t x = a % mod, ord = 1;
    while (x != 1) {
        x = x * a % mod;
        ++ord;
        if (ord > mod) throw std::logic_error("mul_order_mod diverged");
    }
    return ord;
}

const IntPoly& cyclotomic_poly(int64_t n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_poly: n >= 1 required");
    static std::map<int64_t, IntPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    IntPoly value = IntPoly::x_power_minus_one(n);
    for (int64_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        // Recurse without re-locking: compute divisors bottom-up, so the
        // cache already holds every proper divisor by construction.
        auto sub = cache.find(d);
        IntPoly phi_d;
        if (sub != cache.end()) {
            phi_d = sub->second;
        } else {
            IntPoly v = IntPoly::x_power_minus_one(d);
            for (int64_t e = 1; e < d; ++e)
                if (d % e == 0) v = v.div_exact(cache.at(e));
            cache.emplace(d, v);
            phi_d = v;
        }
        value = value.div_exact(phi_d);
    }
    return cache.emplace(n, std::move(value)).first->second;
}

const IntPoly& eta_min_poly(int64_t n) {
    if (n < 1) throw std::invalid_argument("eta_min_poly: n >= 1 required");
    static std::map<int64_t, IntPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    IntPoly value;
    if (n == 1) {
        value = IntPoly::from_ints({-2, 1});  // x - 2
    } else if (n == 2) {
        value = IntPoly::from_ints({2, 1});  // x + 2
    } else {
        // Phi_n is palindromic of even degree 2d for n >= 3.  With
        // y = x + 1/x and p_k defined by x^k + x^{-k} = p_k(y), the identity
        // Phi_n(x) / x^d = c_d + sum_{k=1}^{d} c_{d+k} p_k(y) yields the
        // monic degree-d annihilator of 2cos(2pi/n).
        const IntPoly& phi = cyclotomic_poly(n);
        int64_t d = phi.degree() / 2;
        IntPoly pk_prev = IntPoly::from_ints({2});     // p_0 = 2
        IntPoly pk = IntPoly::from_ints({0, 1});       // p_1 = y
        IntPoly y = IntPoly::from_ints({0, 1});
        IntPoly acc = IntPoly({std::vector<mpz_class>{phi.coeff(d)}});
        for (int64_t k = 1; k <= d; ++k) {
            if (k > 1) {
                IntPoly next = y * pk - pk_prev;
                pk_prev = pk;
                pk = next;
            }
            acc = acc + IntPoly({std::vector<mpz_class>{phi.coeff(d + k)}}) * pk;
        }
        value = acc;
    }
    return cache.emplace(n, std::move(value)).first->second;
}

}  // namespace ed1
