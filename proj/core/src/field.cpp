#include "lch/field.hpp"

#include <map>
#include <mutex>
#include <string>

#include "lch/errors.hpp"

namespace lch {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::optional<std::uint32_t> prime_of_prime_power(std::uint64_t q)
{
    if (q < 2)
        return std::nullopt;
    std::uint64_t p = 2;
    while (p * p <= q && q % p != 0)
        ++p;
    if (q % p != 0)
        p = q;  // q itself is prime
    std::uint64_t r = q;
    while (r % p == 0)
        r /= p;
    if (r != 1)
        return std::nullopt;
    return static_cast<std::uint32_t>(p);
}

std::shared_ptr<const FiniteField> FiniteField::get(std::uint64_t q)
{
    if (!prime_of_prime_power(q) || q > kMaxOrder)
        throw StructuralError("field order " + std::to_string(q) + " is not a supported prime power");
    static std::mutex mutex;
    static std::map<std::uint64_t, std::shared_ptr<const FiniteField>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[q];
    if (!slot)
        slot = std::make_shared<const FiniteField>(static_cast<std::uint32_t>(q));
    return slot;
}

namespace {

std::vector<std::uint32_t> to_digits(std::uint32_t v, std::uint32_t p, unsigned n)
{
    std::vector<std::uint32_t> d(n);
    for (unsigned i = 0; i < n; ++i) {
        d[i] = v % p;
        v /= p;
    }
    return d;
}

std::uint32_t from_digits(const std::vector<std::uint32_t>& d, std::uint32_t p)
{
    std::uint32_t v = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it)
        v = v * p + *it;
    return v;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t q) : q_(q)
{
    p_ = *prime_of_prime_power(q);
    n_ = 0;
    for (std::uint32_t r = q; r > 1; r /= p_)
        ++n_;
    if (n_ == 1)
        return;

    // Search the monic polynomials x^n + f(x) for one where x generates F_q^*.
    for (std::uint32_t tail = 0; tail < q_; ++tail) {
        auto f = to_digits(tail, p_, n_);
        if (f[0] == 0)
            continue;
        std::vector<FieldElem> exp(q_ - 1);
        std::vector<std::uint32_t> log(q_, 0);
        std::vector<bool> seen(q_, false);
        auto cur = to_digits(1, p_, n_);
        bool primitive = true;
        for (std::uint32_t e = 0; e + 1 < q_; ++e) {
            std::uint32_t v = from_digits(cur, p_);
            if (seen[v]) {
                primitive = false;
                break;
            }
            seen[v] = true;
            exp[e] = v;
            log[v] = e;
            // cur *= x modulo x^n + f
            std::uint32_t top = cur[n_ - 1];
            for (unsigned i = n_ - 1; i > 0; --i)
                cur[i] = cur[i - 1];
            cur[0] = 0;
            for (unsigned i = 0; i < n_; ++i)
                cur[i] = (cur[i] + (p_ - (top * f[i]) % p_)) % p_;
        }
        if (primitive && from_digits(cur, p_) == 1) {
            exp_ = std::move(exp);
            log_ = std::move(log);
            return;
        }
    }
    throw StructuralError("no primitive polynomial found for F_" + std::to_string(q));
}

FieldElem FiniteField::poly_add(FieldElem a, FieldElem b, bool subtract) const
{
    FieldElem out = 0;
    FieldElem scale = 1;
    for (unsigned i = 0; i < n_; ++i) {
        std::uint32_t da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        std::uint32_t d = subtract ? (da + p_ - db) % p_ : (da + db) % p_;
        out += d * scale;
        scale *= p_;
    }
    return out;
}

FieldElem FiniteField::add(FieldElem a, FieldElem b) const
{
    if (n_ == 1)
        return static_cast<FieldElem>((std::uint64_t{a} + b) % q_);
    return poly_add(a, b, false);
}

FieldElem FiniteField::sub(FieldElem a, FieldElem b) const
{
    if (n_ == 1)
        return static_cast<FieldElem>((std::uint64_t{a} + q_ - b) % q_);
    return poly_add(a, b, true);
}

FieldElem FiniteField::neg(FieldElem a) const { return sub(0, a); }

FieldElem FiniteField::mul(FieldElem a, FieldElem b) const
{
    if (n_ == 1)
        return static_cast<FieldElem>((std::uint64_t{a} * b) % q_);
    if (a == 0 || b == 0)
        return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

FieldElem FiniteField::inv(FieldElem a) const
{
    if (a == 0)
        throw InvalidPointError("zero has no inverse in F_" + std::to_string(q_));
    if (n_ == 1)
        return pow(a, static_cast<long long>(q_) - 2);
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FieldElem FiniteField::pow(FieldElem a, long long e) const
{
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    FieldElem result = 1;
    FieldElem base = a;
    while (e > 0) {
        if (e & 1)
            result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

FieldElem FiniteField::from_integer(const mpz_class& z) const
{
    mpz_class r = z % p_;
    if (r < 0)
        r += p_;
    return static_cast<FieldElem>(r.get_ui());
}

FieldElem FiniteField::from_integer(long long z) const
{
    long long r = z % static_cast<long long>(p_);
    if (r < 0)
        r += p_;
    return static_cast<FieldElem>(r);
}

std::vector<FieldElem> FiniteField::elements() const
{
    std::vector<FieldElem> out(q_);
    for (std::uint32_t i = 0; i < q_; ++i)
        out[i] = i;
    return out;
}

std::vector<FieldElem> FiniteField::units() const
{
    std::vector<FieldElem> out;
    out.reserve(q_ - 1);
    for (std::uint32_t i = 1; i < q_; ++i)
        out.push_back(i);
    return out;
}

}  // namespace lch
