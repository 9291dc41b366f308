#include "sl3/field.hpp"

#include "sl3/errors.hpp"

namespace sl3 {

Rational Rational::parse(const std::string& s) {
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rational(q);
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(mpq_class(1 / q_));
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::atomic<std::uint32_t> Fp::modulus_{10007};

static bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void Fp::set_modulus(std::uint32_t p) {
    if (!is_prime(p) || p >= (1u << 31)) throw std::invalid_argument("modulus must be a prime below 2^31");
    modulus_.store(p, std::memory_order_relaxed);
}

Fp::Fp(long v) {
    long p = static_cast<long>(modulus());
    long r = v % p;
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
}

Fp Fp::parse(const std::string& s) {
    Rational q = Rational::parse(s);
    mpz_class num = q.value().get_num(), den = q.value().get_den();
    mpz_class p = modulus();
    mpz_class n = num % p, d = den % p;
    if (n < 0) n += p;
    if (d == 0) throw ParseError("denominator divisible by p in '" + s + "'");
    return Fp(n.get_si()) / Fp(d.get_si());
}

Fp Fp::inverse() const {
    if (v_ == 0) throw std::domain_error("inverse of zero");
    std::uint64_t result = 1, base = v_, e = modulus() - 2;
    while (e) {
        if (e & 1) result = result * base % modulus();
        base = base * base % modulus();
        e >>= 1;
    }
    return raw(result);
}

}  // namespace sl3
